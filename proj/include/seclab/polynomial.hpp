#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "seclab/ring.hpp"

namespace seclab {

struct Term {
  Monomial m;
  std::uint32_t c;
  friend bool operator==(const Term&, const Term&) = default;
};

/// Sparse polynomial over GF(p). Terms are distinct, nonzero and kept sorted
/// descending in the ring's grevlex order, so equality is term-wise.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(Ring ring) : ring_(std::move(ring)) {}

  /// Sorts, merges equal monomials and drops zero coefficients.
  static Polynomial from_terms(Ring ring, std::vector<Term> terms);
  static Polynomial constant(Ring ring, std::int64_t c);
  static Polynomial variable(Ring ring, int i);
  static Polynomial variable(Ring ring, std::string_view name);
  static Polynomial monomial(Ring ring, const Monomial& m, std::uint32_t c = 1);

  const Ring& ring() const { return ring_; }
  const PrimeField& field() const { return ring_->field(); }
  std::span<const Term> terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].m.is_one()); }

  /// Leading term in the ring's grevlex order. Precondition: nonzero.
  const Term& leading_term() const { return terms_.front(); }
  /// Leading term in an arbitrary order.
  Term leading_term(const MonomialOrder& ord) const;

  int total_degree() const;
  int weighted_degree() const;  ///< max total ring weight of a term
  /// Checks every term has the same multidegree (full grading vector).
  bool is_homogeneous() const;
  /// Homogeneous with respect to the total weight only.
  bool is_weighted_homogeneous() const;
  /// Multidegree of a homogeneous polynomial; throws InvalidArgument otherwise.
  std::vector<int> multidegree() const;
  /// Uses any variable of the given index set?
  bool involves_any(std::uint32_t var_mask) const;
  std::uint32_t support() const;

  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator-() const;
  Polynomial operator*(const Polynomial& o) const;
  Polynomial scaled(std::uint32_t c) const;
  Polynomial times(const Monomial& m, std::uint32_t c = 1) const;
  Polynomial& operator+=(const Polynomial& o) { return *this = *this + o; }
  Polynomial& operator-=(const Polynomial& o) { return *this = *this - o; }
  Polynomial pow(int e) const;

  /// Divide by the leading coefficient (ring order). Zero stays zero.
  Polynomial monic() const;
  /// Divide by the leading coefficient in `ord`.
  Polynomial monic(const MonomialOrder& ord) const;

  Polynomial differentiate(int var) const;
  /// Antiderivative in `var`, c*m -> c/(e+1) * m * x_var. Throws
  /// CharacteristicObstruction when some e + 1 is divisible by p.
  Polynomial integrate(int var) const;

  /// Replace variable i by images[i] (all images share one target ring).
  Polynomial substitute(std::span<const Polynomial> images) const;
  /// Relabel into `target`: variable i goes to target variable var_map[i]
  /// (-1 means the variable must not occur).
  Polynomial rename(const Ring& target, std::span<const int> var_map) const;
  /// Set variable `var` to the scalar value (dehomogenize when value = 1).
  Polynomial specialize(int var, std::uint32_t value) const;

  std::uint32_t evaluate(std::span<const std::uint32_t> point) const;

  friend bool operator==(const Polynomial& a, const Polynomial& b);

 private:
  Polynomial(Ring ring, std::vector<Term> sorted_terms, int) : ring_(std::move(ring)), terms_(std::move(sorted_terms)) {}
  void check_ring(const Polynomial& o) const;

  Ring ring_;
  std::vector<Term> terms_;
};

/// Formal partial derivative with respect to variable `i`.
Polynomial differentiate(const Polynomial& f, int i);
Polynomial integrate(const Polynomial& f, int i);

/// Map every variable to a same-named variable of `target` (throws if absent).
Polynomial transfer(const Polynomial& f, const Ring& target);
std::vector<Polynomial> transfer(std::span<const Polynomial> fs, const Ring& target);

/// Linear forms sum_j matrix[i][j] * x_j, one per row.
std::vector<Polynomial> linear_forms(const Ring& ring, const std::vector<std::vector<std::uint32_t>>& matrix);

}  // namespace seclab
