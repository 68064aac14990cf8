#pragma once

#include <optional>
#include <span>
#include <vector>

#include "seclab/polynomial.hpp"

namespace seclab {

struct GroebnerOptions {
  /// Homogeneous input only: drop every pair of degree above the limit. The
  /// result is then a Groebner basis of I in all degrees <= limit.
  std::optional<int> degree_limit;
  std::size_t max_basis_size = 200000;
  /// Hard cap on pair degree (sugar) when no degree limit is set.
  int max_degree = 250;
};

/// Reduced Groebner basis for one monomial order. Elements are monic, sorted
/// by increasing leading monomial.
class GroebnerBasis {
 public:
  GroebnerBasis(Ring ring, MonomialOrder ord, std::vector<std::vector<Term>> sorted, std::optional<int> degree_limit);

  const Ring& ring() const { return ring_; }
  const MonomialOrder& order() const { return ord_; }
  std::span<const Polynomial> polys() const { return polys_; }
  std::size_t size() const { return polys_.size(); }
  const std::vector<Monomial>& leading_monomials() const { return leads_; }
  /// Set when computed with a degree limit.
  std::optional<int> degree_limit() const { return degree_limit_; }
  bool is_unit() const { return polys_.size() == 1 && leads_[0].is_one(); }

  /// Full normal form (remainder of division; unique since the basis is reduced).
  Polynomial reduce(const Polynomial& f) const;
  bool contains(const Polynomial& f) const { return reduce(f).is_zero(); }

 private:
  Ring ring_;
  MonomialOrder ord_;
  std::vector<std::vector<Term>> sorted_;  // terms descending in ord_
  std::vector<Polynomial> polys_;
  std::vector<Monomial> leads_;
  std::optional<int> degree_limit_;
};

/// Buchberger's algorithm with the Gebauer-Moeller criteria and the sugar
/// normal selection; throws ResourceLimitExceeded when a budget is hit.
GroebnerBasis compute_groebner_basis(const Ring& ring, std::span<const Polynomial> gens, const MonomialOrder& ord,
                                     const GroebnerOptions& opts = {});

/// Remainder of multivariate division by an arbitrary list (no GB assumed).
Polynomial divide_remainder(const Polynomial& f, std::span<const Polynomial> divisors, const MonomialOrder& ord);

/// S-polynomial of f and g in `ord`.
Polynomial s_polynomial(const Polynomial& f, const Polynomial& g, const MonomialOrder& ord);

}  // namespace seclab
