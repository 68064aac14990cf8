#include "seclab/hilbert.hpp"

#include <algorithm>

#include "seclab/errors.hpp"

namespace seclab {

void trim(IntPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

IntPoly poly_mul(const IntPoly& a, const IntPoly& b) {
  if (a.empty() || b.empty()) return {};
  IntPoly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!a[i]) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  trim(r);
  return r;
}

IntPoly poly_add(const IntPoly& a, const IntPoly& b) {
  IntPoly r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] += b[i];
  trim(r);
  return r;
}

IntPoly one_minus_t_pow(int k) {
  IntPoly r{1};
  for (int i = 0; i < k; ++i) r = poly_mul(r, {1, -1});
  return r;
}

namespace {

std::vector<Monomial> minimalize(std::vector<Monomial> g) {
  std::sort(g.begin(), g.end(), [](const Monomial& a, const Monomial& b) { return a.degree() < b.degree(); });
  std::vector<Monomial> out;
  for (const auto& m : g) {
    bool redundant = false;
    for (const auto& k : out) {
      if (k.divides(m)) {
        redundant = true;
        break;
      }
    }
    if (!redundant) out.push_back(m);
  }
  return out;
}

// Pivot recursion N(J) = N(J + <p>) + t^deg(p) N(J : p), p a variable power.
IntPoly numerator_rec(std::vector<Monomial> g, int nvars) {
  g = minimalize(std::move(g));
  if (g.empty()) return {1};
  for (const auto& m : g) {
    if (m.is_one()) return {};
  }
  // base case: pairwise coprime generators give prod (1 - t^deg)
  std::uint32_t seen = 0;
  bool coprime = true;
  for (const auto& m : g) {
    if (seen & m.support()) {
      coprime = false;
      break;
    }
    seen |= m.support();
  }
  if (coprime) {
    IntPoly r{1};
    for (const auto& m : g) {
      IntPoly f(m.degree() + 1, 0);
      f[0] = 1;
      f[m.degree()] = -1;
      r = poly_mul(r, f);
    }
    return r;
  }
  // pivot on the variable shared by most non-coprime generators
  std::vector<int> count(nvars, 0);
  for (const auto& m : g) {
    if (m.support() & (m.support() - 1)) {
      for (int i = 0; i < nvars; ++i) count[i] += m[i] > 0;
    }
  }
  int var = static_cast<int>(std::max_element(count.begin(), count.end()) - count.begin());
  // median exponent over mixed generators; minimality keeps x^e out of J
  std::vector<int> exps;
  for (const auto& m : g) {
    if (m[var] && (m.support() & (m.support() - 1))) exps.push_back(m[var]);
  }
  std::sort(exps.begin(), exps.end());
  int e = exps[exps.size() / 2];
  Monomial p = Monomial::variable(var, e);

  std::vector<Monomial> plus = g;
  plus.push_back(p);
  std::vector<Monomial> colon;
  colon.reserve(g.size());
  for (const auto& m : g) colon.push_back(m / m.gcd(p));
  IntPoly a = numerator_rec(std::move(plus), nvars);
  IntPoly b = numerator_rec(std::move(colon), nvars);
  IntPoly shifted(e, 0);
  shifted.insert(shifted.end(), b.begin(), b.end());
  return poly_add(a, shifted);
}

std::int64_t binom(std::int64_t n, std::int64_t k) {
  if (k < 0 || n < k) return 0;
  k = std::min(k, n - k);
  std::int64_t r = 1;
  for (std::int64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace

IntPoly hilbert_numerator(std::span<const Monomial> gens, int nvars) {
  return numerator_rec(std::vector<Monomial>(gens.begin(), gens.end()), nvars);
}

std::int64_t HilbertData::hilbert_function(int d) const {
  if (d < 0) return 0;
  std::int64_t v = 0;
  for (std::size_t k = 0; k < reduced.size(); ++k) {
    int dk = d - static_cast<int>(k);
    if (dk < 0) break;
    if (krull_dim == 0) {
      if (dk == 0) v += reduced[k];
    } else {
      v += reduced[k] * binom(dk + krull_dim - 1, krull_dim - 1);
    }
  }
  return v;
}

int HilbertData::regularity_index() const {
  // h(d) agrees with the polynomial once d >= deg(reduced) - krull_dim + 1
  return std::max(0, static_cast<int>(reduced.size()) - krull_dim);
}

HilbertData hilbert_from_numerator(IntPoly numerator, int nvars, int bound) {
  HilbertData h;
  h.nvars = nvars;
  trim(numerator);
  h.numerator = numerator;
  IntPoly r = numerator;
  int dim = nvars;
  // divide by (1 - t) while r(1) = 0
  while (dim > 0 && !r.empty()) {
    std::int64_t at1 = 0;
    for (auto c : r) at1 += c;
    if (at1 != 0) break;
    IntPoly q(r.size() - 1, 0);
    std::int64_t acc = 0;
    for (std::size_t k = 0; k + 1 < r.size(); ++k) {
      acc += r[k];
      q[k] = acc;
    }
    r = std::move(q);
    trim(r);
    --dim;
  }
  h.reduced = r;
  h.krull_dim = r.empty() ? 0 : dim;
  h.degree = 0;
  for (auto c : r) h.degree += c;
  for (int d = 0; d <= bound; ++d) h.values.push_back(h.hilbert_function(d));
  return h;
}

HilbertData hilbert_from_leads(std::span<const Monomial> leads, int nvars, int bound) {
  return hilbert_from_numerator(hilbert_numerator(leads, nvars), nvars, bound);
}

}  // namespace seclab
