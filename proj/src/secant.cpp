#include "seclab/secant.hpp"

#include <exception>
#include <sstream>

#include "seclab/errors.hpp"

namespace seclab {

std::string to_string(JoinVariant v) { return v == JoinVariant::RuledJoin ? "ruled-join" : "with-x-block"; }

JoinVariant parse_join_variant(std::string_view s) {
  if (s == "ruled-join" || s == "ruled-join-coordinate-change") return JoinVariant::RuledJoin;
  if (s == "with-x-block") return JoinVariant::WithXBlock;
  throw InvalidArgument("unknown join variant '" + std::string(s) + "'");
}

namespace {

void check_x_ring(const Ideal& I) {
  if (!I.ring()->standard_graded()) throw InvalidArgument("secant constructions need a standard graded ring");
  if (!I.is_homogeneous()) throw InvalidArgument("secant constructions need a homogeneous ideal");
}

VariableBlock copy_block(int copy, int n) {
  VariableBlock b;
  b.name = "y" + std::to_string(copy);
  for (int j = 0; j < n; ++j) b.vars.push_back("y_{" + std::to_string(copy) + "," + std::to_string(j) + "}");
  return b;
}

// I(y_copy) where the copy's variables start at `offset` in R.
std::vector<Polynomial> copy_of(const Ideal& I, const Ring& R, int offset) {
  const int n = I.ring()->nvars();
  std::vector<int> map(n);
  for (int j = 0; j < n; ++j) map[j] = offset + j;
  std::vector<Polynomial> out;
  for (const auto& f : I.generators()) out.push_back(f.rename(R, map));
  return out;
}

}  // namespace

JoinIdeal join_ideal(const Ideal& I, int k, JoinVariant variant) {
  if (k < 1) throw InvalidArgument("secant level k must be at least 1");
  check_x_ring(I);
  const Ring& X = I.ring();
  const int n = X->nvars();
  const int copies = k + 1;
  const int blocks = copies + (variant == JoinVariant::WithXBlock ? 1 : 0);
  if (blocks * n > kMaxVars) {
    throw ResourceLimitExceeded("join ring needs " + std::to_string(blocks * n) + " variables (limit " +
                                std::to_string(kMaxVars) + ")");
  }

  JoinIdeal out;
  out.variant = variant;
  out.k = k;
  std::vector<VariableBlock> bl;
  if (variant == JoinVariant::WithXBlock) {
    VariableBlock xb;
    xb.name = "x";
    for (int j = 0; j < n; ++j) xb.vars.push_back(X->var_name(j));
    bl.push_back(std::move(xb));
  }
  for (int c = 1; c <= copies; ++c) bl.push_back(copy_block(c, n));
  Ring R = make_ring(std::move(bl), X->prime());
  const int base = variant == JoinVariant::WithXBlock ? n : 0;  // first y variable
  auto yvar = [&](int copy, int j) { return Polynomial::variable(R, base + (copy - 1) * n + j); };

  std::vector<Polynomial> gens;
  if (variant == JoinVariant::RuledJoin) {
    for (int c = 1; c <= k; ++c) {
      auto g = copy_of(I, R, (c - 1) * n);
      gens.insert(gens.end(), g.begin(), g.end());
    }
    std::vector<Polynomial> shifted;
    for (int j = 0; j < n; ++j) {
      Polynomial y = yvar(copies, j);
      for (int c = 1; c <= k; ++c) y -= yvar(c, j);
      shifted.push_back(y);
    }
    for (const auto& f : I.generators()) gens.push_back(f.substitute(shifted));
    for (int c = 0; c < k; ++c) out.eliminate.push_back(c);
    out.kept_block = k;
  } else {
    for (int c = 1; c <= copies; ++c) {
      auto g = copy_of(I, R, base + (c - 1) * n);
      gens.insert(gens.end(), g.begin(), g.end());
    }
    for (int j = 0; j < n; ++j) {
      Polynomial s = -Polynomial::variable(R, j);
      for (int c = 1; c <= copies; ++c) s += yvar(c, j);
      gens.push_back(s);
    }
    for (int c = 1; c <= copies; ++c) out.eliminate.push_back(c);
    out.kept_block = 0;
  }
  out.ideal = Ideal(R, std::move(gens));
  return out;
}

Ideal secant_ideal_elimination(const Ideal& I, int k, JoinVariant variant, const GroebnerOptions& opts) {
  JoinIdeal J = join_ideal(I, k, variant);
  Ideal E = eliminate(J.ideal, J.eliminate, opts);
  const Ring& X = I.ring();
  std::vector<int> map(X->nvars());
  for (int j = 0; j < X->nvars(); ++j) map[j] = j;
  std::vector<Polynomial> gens;
  for (const auto& g : E.generators()) gens.push_back(g.rename(X, map));
  return Ideal(X, std::move(gens));
}

Ideal secant_ideal_checked(const Ideal& I, int k, const GroebnerOptions& opts) {
  Ideal a = secant_ideal_elimination(I, k, JoinVariant::RuledJoin, opts);
  Ideal b = secant_ideal_elimination(I, k, JoinVariant::WithXBlock, opts);
  if (opts.degree_limit) {
    for (int d = 0; d <= *opts.degree_limit; ++d) {
      if (!(graded_piece(a, d) == graded_piece(b, d))) {
        throw CertificationFailure("join variants disagree in degree " + std::to_string(d));
      }
    }
  } else if (!(a == b)) {
    throw CertificationFailure("join variants produce different secant ideals");
  }
  return a;
}

FormSpace prolong(const FormSpace& V, bool parallel) {
  const Ring& R = V.ring();
  if (!R->standard_graded()) throw InvalidArgument("prolongation needs a standard graded ring");
  const int d = V.degree();
  if (V.empty()) return FormSpace(R, d + 1);
  const int n = R->nvars();
  auto basis = V.polys();
  auto up = monomial_basis(R, d + 1);

  std::vector<FormSpace> W(n, FormSpace(R, d + 1));
  std::exception_ptr err;
#pragma omp parallel for schedule(dynamic, 1) if (parallel)
  for (int i = 0; i < n; ++i) {
    try {
      std::vector<Polynomial> forms;
      forms.reserve(basis.size() + up->size());
      for (const auto& v : basis) forms.push_back(v.integrate(i));
      for (const auto& m : up->monomials()) {
        if (m[i] == 0) forms.push_back(Polynomial::monomial(R, m));
      }
      W[i] = FormSpace::span(R, d + 1, forms);
    } catch (...) {
#pragma omp critical(seclab_prolong_error)
      if (!err) err = std::current_exception();
    }
  }
  if (err) std::rethrow_exception(err);

  FormSpace acc = W[0];
  for (int i = 1; i < n && !acc.empty(); ++i) acc = acc.intersect(W[i]);
  return acc;
}

FormSpace secant_degree_piece(const Ideal& I, int k, bool parallel) {
  if (k < 0) throw InvalidArgument("secant level must be non-negative");
  const Ring& R = I.ring();
  if (!R->standard_graded()) throw InvalidArgument("prolongation needs a standard graded ring");
  if (I.is_zero()) throw InvalidArgument("the ideal has no quadrics");
  for (const auto& g : I.generators()) {
    if (!g.is_weighted_homogeneous() || g.weighted_degree() != 2) {
      throw InvalidArgument("secant_degree_piece needs an ideal generated by quadrics");
    }
  }
  FormSpace V = FormSpace::span(R, 2, I.generators());
  for (int s = 0; s < k; ++s) V = prolong(V, parallel);
  return V;
}

CertificationReport certify_generation(const FormSpace& P, std::optional<int> expected_dim,
                                       std::optional<std::int64_t> expected_degree, const BettiOptions& opts) {
  if (P.empty()) throw DegenerateInput("cannot certify an empty space of forms");
  Ideal J(P.ring(), P.polys());
  HilbertData h = hilbert_data(J, 0);
  CertificationReport r;
  r.dim = h.projective_dim();
  r.degree = h.degree;
  r.codimension = P.ring()->nvars() - h.krull_dim;
  r.betti = betti_table(J, opts);
  r.projective_dimension = r.betti.projective_dimension();
  r.acm = r.betti.complete && r.projective_dimension == r.codimension;
  r.expected_dim = expected_dim;
  r.expected_degree = expected_degree;
  r.certified = r.acm && (!expected_dim || *expected_dim == r.dim) && (!expected_degree || *expected_degree == r.degree);
  return r;
}

std::string format_certification(const CertificationReport& r) {
  std::ostringstream out;
  out << "dim " << r.dim;
  if (r.expected_dim) out << " (expected " << *r.expected_dim << ")";
  out << "\ndegree " << r.degree;
  if (r.expected_degree) out << " (expected " << *r.expected_degree << ")";
  out << "\nprojective-dimension " << r.projective_dimension << "\ncodimension " << r.codimension << "\nacm "
      << (r.acm ? "yes" : "no") << "\nstatus " << (r.certified ? "CERTIFIED" : "NOT-CERTIFIED") << '\n';
  return out.str();
}

}  // namespace seclab
