#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "seclab/field.hpp"

namespace seclab {

/// Hard cap on the number of ring variables; monomials are fixed-size.
inline constexpr int kMaxVars = 32;
/// Exponents are stored in a byte.
inline constexpr int kMaxExponent = 255;

class Monomial {
 public:
  Monomial() = default;
  static Monomial from_exponents(std::span<const int> exps);
  static Monomial variable(int i, int power = 1);

  int operator[](int i) const { return e_[i]; }
  int degree() const { return deg_; }
  /// Bit i is set iff variable i occurs.
  std::uint32_t support() const { return sup_; }
  bool is_one() const { return sup_ == 0; }

  void set(int i, int value);

  bool divides(const Monomial& o) const {
    if ((sup_ & ~o.sup_) != 0) return false;
    for (int i = 0; i < kMaxVars; ++i) {
      if (e_[i] > o.e_[i]) return false;
    }
    return true;
  }
  bool coprime(const Monomial& o) const { return (sup_ & o.sup_) == 0; }

  Monomial operator*(const Monomial& o) const;
  /// Exact quotient; precondition o.divides(*this).
  Monomial operator/(const Monomial& o) const;
  Monomial lcm(const Monomial& o) const;
  Monomial gcd(const Monomial& o) const;

  std::size_t hash() const;

  friend bool operator==(const Monomial& a, const Monomial& b) { return a.e_ == b.e_; }

 private:
  void refresh();

  std::array<std::uint8_t, kMaxVars> e_{};
  std::uint16_t deg_ = 0;
  std::uint32_t sup_ = 0;
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const { return m.hash(); }
};

/// A named group of variables carrying one weight vector for every grading
/// component (single grading: one entry; bigrading: two; ...).
struct VariableBlock {
  std::string name;
  std::vector<std::string> vars;
  std::vector<int> weights{1};
};

class MonomialOrder;

/// Variable blocks, gradings and the coefficient field of a polynomial ring.
/// Immutable; shared between polynomials through `Ring`.
class RingSpec {
 public:
  explicit RingSpec(std::vector<VariableBlock> blocks, std::uint32_t prime = kDefaultPrime);

  const PrimeField& field() const { return field_; }
  std::uint32_t prime() const { return field_.prime(); }
  int nvars() const { return static_cast<int>(names_.size()); }
  const std::string& var_name(int i) const { return names_.at(i); }
  std::optional<int> var_index(std::string_view name) const;
  int var_index_or_throw(std::string_view name) const;

  std::span<const VariableBlock> blocks() const { return blocks_; }
  std::optional<int> block_index(std::string_view name) const;
  /// Variable index range [first, last) of block b.
  std::pair<int, int> block_range(int b) const { return ranges_.at(b); }
  int block_of(int var) const { return block_of_.at(var); }

  int grading_rank() const { return grading_rank_; }
  /// Weight of variable `var` in grading component `c`.
  int weight(int var, int c) const { return blocks_[block_of_[var]].weights[c]; }
  /// Sum of all grading components; every variable has total weight >= 1.
  int total_weight(int var) const { return total_weight_[var]; }
  std::span<const int> total_weights() const { return total_weight_; }
  bool standard_graded() const { return standard_; }

  std::vector<int> multidegree(const Monomial& m) const;
  int weighted_degree(const Monomial& m) const;

  friend bool operator==(const RingSpec& a, const RingSpec& b);

 private:
  std::vector<VariableBlock> blocks_;
  PrimeField field_;
  std::vector<std::string> names_;
  std::vector<std::pair<int, int>> ranges_;
  std::vector<int> block_of_;
  std::vector<int> total_weight_;
  int grading_rank_ = 1;
  bool standard_ = true;
};

using Ring = std::shared_ptr<const RingSpec>;

Ring make_ring(std::vector<VariableBlock> blocks, std::uint32_t prime = kDefaultPrime);
/// Standard graded k[prefix_0, ..., prefix_{n-1}] with one block named `prefix`.
Ring make_standard_ring(const std::string& prefix, int n, std::uint32_t prime = kDefaultPrime);
bool same_ring(const Ring& a, const Ring& b);

/// Monomial orders as a sequence of non-negative weight rows followed by a
/// reverse-lexicographic (grevlex family) or lexicographic tie break.
class MonomialOrder {
 public:
  enum class Kind { Grevlex, Lex, BlockElimination, Weighted };

  /// Degree (by total ring weight) then reverse lex.
  static MonomialOrder grevlex(const RingSpec& ring);
  static MonomialOrder lex(const RingSpec& ring);
  /// Compares the weighted degree in each listed block, in the given order,
  /// then falls back to grevlex. Eliminates the first listed block.
  static MonomialOrder block_elimination(const RingSpec& ring, std::span<const int> blocks);
  /// Eliminates every variable of the listed blocks at once (one weight row).
  static MonomialOrder eliminate_blocks(const RingSpec& ring, std::span<const int> blocks);
  /// Weight vector first, then grevlex.
  static MonomialOrder weighted(const RingSpec& ring, std::vector<int> weights);

  Kind kind() const { return kind_; }
  int nvars() const { return nvars_; }

  /// Returns <0, 0, >0 as a is smaller, equal, larger than b.
  int compare(const Monomial& a, const Monomial& b) const {
    if (unit_first_row_) {
      if (a.degree() != b.degree()) return a.degree() < b.degree() ? -1 : 1;
    }
    for (std::size_t r = unit_first_row_ ? 1 : 0; r < rows_.size(); ++r) {
      int da = 0, db = 0;
      for (const auto& [v, w] : rows_[r]) {
        da += w * a[v];
        db += w * b[v];
      }
      if (da != db) return da < db ? -1 : 1;
    }
    if (revlex_) {
      for (int i = nvars_ - 1; i >= 0; --i) {
        if (a[i] != b[i]) return a[i] < b[i] ? 1 : -1;
      }
    } else {
      for (int i = 0; i < nvars_; ++i) {
        if (a[i] != b[i]) return a[i] > b[i] ? 1 : -1;
      }
    }
    return 0;
  }
  bool greater(const Monomial& a, const Monomial& b) const { return compare(a, b) > 0; }

  /// True when the order is compatible with the total weight (degree first).
  bool degree_compatible() const { return degree_compatible_; }

  friend bool operator==(const MonomialOrder& a, const MonomialOrder& b) {
    return a.kind_ == b.kind_ && a.nvars_ == b.nvars_ && a.rows_ == b.rows_ && a.revlex_ == b.revlex_;
  }

 private:
  using Row = std::vector<std::pair<int, int>>;  // (variable, weight), weight > 0
  MonomialOrder(Kind k, int n, std::vector<Row> rows, bool revlex, bool degree_compatible);

  Kind kind_;
  int nvars_;
  std::vector<Row> rows_;
  bool revlex_;
  bool unit_first_row_ = false;
  bool degree_compatible_;
};

/// Compare two monomials of the same ring with `ord`. Throws RingMismatch
/// when the order was built for a different variable count.
std::strong_ordering compare(const Monomial& m1, const Monomial& m2, const MonomialOrder& ord);

/// All monomials of standard total degree d in n variables, in descending
/// grevlex order.
std::vector<Monomial> monomials_of_degree(int n, int d);
/// All monomials of weighted degree d (weights per variable, all >= 1).
std::vector<Monomial> monomials_of_weighted_degree(std::span<const int> weights, int d);

}  // namespace seclab
