#pragma once

#include <algorithm>
#include <cstdint>
#include <utility>
#include <vector>

#include "seclab/field.hpp"

namespace seclab {

/// Dense row-major matrix over GF(p).
class DenseMatrix {
 public:
  DenseMatrix() = default;
  DenseMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::uint32_t& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  std::uint32_t at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  std::uint32_t* row(std::size_t r) { return data_.data() + r * cols_; }
  const std::uint32_t* row(std::size_t r) const { return data_.data() + r * cols_; }

  void append_row(const std::vector<std::uint32_t>& r);
  void truncate_rows(std::size_t n) {
    rows_ = std::min(rows_, n);
    data_.resize(rows_ * cols_);
  }
  void swap_rows(std::size_t a, std::size_t b);
  friend bool operator==(const DenseMatrix&, const DenseMatrix&) = default;

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<std::uint32_t> data_;
};

/// Sparse row: strictly increasing column indices with nonzero values.
using SparseRow = std::vector<std::pair<std::uint32_t, std::uint32_t>>;

struct SparseMatrix {
  std::size_t cols = 0;
  std::vector<SparseRow> rows;
};

/// Plain Gaussian elimination, single-threaded. Kept as the reference the
/// parallel kernel is tested and benchmarked against.
std::size_t rank_serial(DenseMatrix m, const PrimeField& f);
/// Same elimination with the row updates of each pivot step spread over
/// OpenMP threads. Bit-identical reduced matrix to the serial version.
std::size_t rank_parallel(DenseMatrix m, const PrimeField& f);
/// Row-by-row elimination against a pivot table; suited to large matrices
/// with few nonzeros per row.
std::size_t rank_sparse(const SparseMatrix& m, const PrimeField& f);

/// Dense/sparse switch: matrices with more entries than this (rows * cols)
/// and fill under 10% go to the sparse eliminator.
inline constexpr std::size_t kSparseThreshold = 1u << 16;

/// Picks dense (parallel) or sparse elimination by size and fill.
std::size_t rank(const SparseMatrix& m, const PrimeField& f, std::size_t sparse_threshold = kSparseThreshold);

DenseMatrix to_dense(const SparseMatrix& m);

/// In-place reduced row echelon form; drops zero rows and returns the pivot
/// columns in increasing order.
std::vector<std::size_t> rref(DenseMatrix& m, const PrimeField& f);

/// Basis of {v : m v = 0} as rows, in reduced echelon form.
DenseMatrix nullspace(const DenseMatrix& m, const PrimeField& f);

/// Inverse of a square matrix; a 0x0 matrix when singular.
DenseMatrix inverse(const DenseMatrix& m, const PrimeField& f);

DenseMatrix multiply(const DenseMatrix& a, const DenseMatrix& b, const PrimeField& f);

}  // namespace seclab
