#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "seclab/ideal.hpp"

namespace seclab {

/// Graded Betti numbers beta_{i,j} of S/I. Only nonzero entries are stored.
class BettiTable {
 public:
  BettiTable() = default;
  explicit BettiTable(int nvars) : nvars_(nvars) {}

  int nvars() const { return nvars_; }
  const std::map<std::pair<int, int>, std::int64_t>& entries() const { return entries_; }
  std::int64_t at(int i, int j) const;
  void set(int i, int j, std::int64_t v);

  /// Largest homological index with a nonzero entry.
  int projective_dimension() const;
  /// max j - i over nonzero entries (regularity of S/I).
  int regularity() const;
  /// Column sums, indices 0..projective_dimension().
  std::vector<std::int64_t> totals() const;
  /// beta_{i, i+r}, the entry printed in row r, column i.
  std::int64_t row_entry(int r, int i) const { return at(i, i + r); }

  /// False when some entry inside the requested window was not computed
  /// (resource budget) or the row range is not known to be exhaustive.
  bool complete = true;
  /// Entries (i, j) that were not computed.
  std::vector<std::pair<int, int>> frontier;
  /// Row and column windows the table was computed in.
  int row_bound = -1;
  int col_bound = -1;
  std::string note;

  friend bool operator==(const BettiTable& a, const BettiTable& b) {
    return a.nvars_ == b.nvars_ && a.entries_ == b.entries_;
  }

 private:
  int nvars_ = 0;
  std::map<std::pair<int, int>, std::int64_t> entries_;
};

/// Macaulay2-style diagram: column indices, a `total:` row and one row per
/// degree shift, entries right aligned per column and `.` for zero.
std::string format_betti_text(const BettiTable& t);
nlohmann::json betti_to_json(const BettiTable& t);
BettiTable betti_from_json(const nlohmann::json& j);

struct BettiOptions {
  /// Highest row (j - i) to compute.
  std::optional<int> row_bound;
  /// Highest column (homological index) to compute.
  std::optional<int> col_bound;
  /// Entries whose Koszul matrices exceed this many cells are skipped and
  /// reported in the frontier.
  std::size_t max_matrix_cells = std::size_t{1} << 31;
  /// Seed of the random linear forms of the Artinian reduction.
  std::uint64_t seed = 1;
  /// Cut down by a regular sequence of linear forms first. Off: Koszul
  /// homology of S/I itself (for cross checks).
  bool reduce = true;
  /// Compute the independent entries concurrently.
  bool parallel = true;
  GroebnerOptions groebner;
};

/// Quotient by a regular sequence of linear forms. Betti numbers over the
/// smaller ring agree with those of S/I.
struct ArtinianReduction {
  Ideal reduced;          ///< ideal in the smaller polynomial ring
  int eliminated = 0;     ///< length of the regular sequence found
  int krull_dim = 0;      ///< Krull dimension of S/I
  bool artinian = false;  ///< eliminated == krull_dim
};

ArtinianReduction artinian_reduction(const Ideal& I, std::uint64_t seed, const GroebnerOptions& opts = {});

/// beta_{i,j}(S/I) as the Koszul homology of the reduced quotient. The table
/// is exact in the window; rows are exhaustive when the reduction is
/// Artinian or a row bound is given.
BettiTable betti_table(const Ideal& I, const BettiOptions& opts = {});

struct RegularityReport {
  int reg_module = 0;  ///< reg(S/I)
  int reg_ideal = 0;   ///< reg(I) = reg(S/I) + 1
  int projective_dimension = 0;
  int codimension = 0;
  bool acm = false;
};

/// Needs a complete table unless `accept_bounded` is set.
RegularityReport regularity_report(const BettiTable& t, const Ideal& I, bool accept_bounded = false);

/// Hilbert numerator sum_{i,j} (-1)^i beta_{i,j} t^j of the table.
IntPoly betti_numerator(const BettiTable& t);

}  // namespace seclab
