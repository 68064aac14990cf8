#include "seclab/conjectures.hpp"

#include <sstream>

#include "seclab/errors.hpp"

namespace seclab {

bool SecantConjectureReport::all_pass() const {
  for (const auto& c : checks) {
    if (c.applicable && !c.pass) return false;
  }
  return true;
}

namespace {

std::int64_t choose(int n, int k) {
  if (k < 0 || n < k) return 0;
  std::int64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace

std::optional<std::int64_t> expected_secant_degree(int g, int d, int k) {
  if (k == 0) return d;
  if (k == 1) return choose(d - 1, 2) - g;
  return std::nullopt;
}

SecantConjectureReport check_secant_conjectures(const Ideal& curve, int g, int d, int k, const BettiOptions& opts) {
  if (g < 0 || d < 1 || k < 0) throw InvalidArgument("need g >= 0, d >= 1, k >= 0");
  SecantConjectureReport rep;
  rep.g = g;
  rep.d = d;
  rep.k = k;
  rep.in_range = d >= 2 * g + 2 * k + 1;
  rep.piece = secant_degree_piece(curve, k, opts.parallel);
  if (rep.piece->empty()) throw DegenerateInput("Sigma_k fills the ambient space; no equations in degree k+2");

  // for k >= 2 certification rests on dimension and ACM alone
  rep.certification = certify_generation(*rep.piece, 2 * k + 1, expected_secant_degree(g, d, k), opts);
  if (!rep.certification.certified) {
    throw CertificationFailure("prolongation ideal not certified as I(Sigma_" + std::to_string(k) +
                               "); try the elimination route\n" + format_certification(rep.certification));
  }
  const BettiTable& T = rep.certification.betti;
  rep.regularity = regularity_report(T, Ideal(rep.piece->ring(), rep.piece->polys()));

  auto add = [&](std::string name, bool applicable, bool pass, std::string detail) {
    rep.checks.push_back({std::move(name), applicable, pass, std::move(detail)});
  };

  // k = 0 is the curve itself: 2 for the rational normal curve, else 3.
  int want_reg = k == 0 ? (g == 0 ? 2 : 3) : (g == 0 ? 2 * k + 1 : 2 * k + 3);
  add("regularity", true, rep.regularity.reg_ideal == want_reg,
      "reg(I) = " + std::to_string(rep.regularity.reg_ideal) + ", predicted " + std::to_string(want_reg));
  // the (k+2)-minors of a Hankel matrix have a linear resolution
  add("eagon-northcott", g == 0 && k >= 1, rep.regularity.reg_ideal == k + 2,
      "reg(I) = " + std::to_string(rep.regularity.reg_ideal) + ", linear resolution gives " + std::to_string(k + 2));
  add("acm", true, rep.regularity.acm,
      "pd = " + std::to_string(rep.regularity.projective_dimension) + ", codim = " +
          std::to_string(rep.regularity.codimension));

  bool gen = T.at(1, k + 2) > 0;
  for (const auto& [key, v] : T.entries()) {
    if (key.first == 1 && key.second != k + 2) gen = false;
  }
  add("generated-in-degree-k+2", true, gen, std::to_string(T.at(1, k + 2)) + " generators of degree " + std::to_string(k + 2));

  int p = d - 2 * g - 2 * k - 1;
  {
    bool ok = true;
    for (int i = 1; i <= p; ++i) {
      if (T.at(i, i + k + 1) == 0) ok = false;
      for (const auto& [key, v] : T.entries()) {
        if (key.first == i && key.second != i + k + 1) ok = false;
      }
    }
    add("linear-syzygies", p >= 1, ok, "through step p = " + std::to_string(p));
  }

  int last = T.regularity();
  int nonzero = 0;
  for (const auto& [key, v] : T.entries()) {
    if (key.second - key.first == last) ++nonzero;
  }
  add("last-row-count", g > 0, nonzero == g,
      std::to_string(nonzero) + " nonzero entries in row " + std::to_string(last) + ", g = " + std::to_string(g));

  int c = rep.regularity.codimension;
  std::int64_t corner = T.at(c, c + 2 * k + 2), want = choose(g + k, k + 1);
  add("corner", true, corner == want,
      "beta_{" + std::to_string(c) + "," + std::to_string(c + 2 * k + 2) + "} = " + std::to_string(corner) +
          ", C(g+k,k+1) = " + std::to_string(want));
  return rep;
}

std::string format_conjecture_report(const SecantConjectureReport& r) {
  std::ostringstream out;
  out << "curve g=" << r.g << " d=" << r.d << " k=" << r.k;
  if (!r.in_range) out << " (outside d >= 2g+2k+1)";
  out << '\n' << format_certification(r.certification);
  out << "reg(S/I) " << r.regularity.reg_module << "\nreg(I) " << r.regularity.reg_ideal << '\n';
  for (const auto& c : r.checks) {
    out << "check " << c.name << ' ' << (!c.applicable ? "N/A" : c.pass ? "PASS" : "FAIL") << "  " << c.detail << '\n';
  }
  return out.str();
}

}  // namespace seclab
