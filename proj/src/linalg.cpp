#include "seclab/linalg.hpp"

namespace seclab {

void DenseMatrix::append_row(const std::vector<std::uint32_t>& r) {
  if (rows_ == 0 && cols_ == 0) cols_ = r.size();
  if (r.size() != cols_) throw InvalidArgument("row length mismatch");
  data_.insert(data_.end(), r.begin(), r.end());
  ++rows_;
}

void DenseMatrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  std::swap_ranges(row(a), row(a) + cols_, row(b));
}

namespace {

// row_i[c..) -= factor * pivot[c..)
inline void axpy(std::uint32_t* dst, const std::uint32_t* src, std::size_t from, std::size_t to, std::uint32_t factor,
                 std::uint32_t p) {
  std::uint64_t neg = p - factor;
  for (std::size_t c = from; c < to; ++c) {
    if (src[c]) dst[c] = static_cast<std::uint32_t>((dst[c] + neg * src[c]) % p);
  }
}

template <bool Parallel>
std::size_t eliminate(DenseMatrix& m, const PrimeField& f) {
  const std::size_t R = m.rows(), C = m.cols();
  const std::uint32_t p = f.prime();
  std::size_t r = 0;
  for (std::size_t c = 0; c < C && r < R; ++c) {
    std::size_t piv = r;
    while (piv < R && m.at(piv, c) == 0) ++piv;
    if (piv == R) continue;
    m.swap_rows(r, piv);
    std::uint32_t* prow = m.row(r);
    std::uint32_t inv = f.inv(prow[c]);
    for (std::size_t k = c; k < C; ++k) prow[k] = f.mul(prow[k], inv);
    const std::size_t below = R - r - 1;
    if constexpr (Parallel) {
      const bool big = below * (C - c) > 16384;
#pragma omp parallel for schedule(static) if (big)
      for (std::size_t i = r + 1; i < R; ++i) {
        std::uint32_t* ri = m.row(i);
        if (ri[c]) axpy(ri, prow, c, C, ri[c], p);
      }
    } else {
      (void)below;
      for (std::size_t i = r + 1; i < R; ++i) {
        std::uint32_t* ri = m.row(i);
        if (ri[c]) axpy(ri, prow, c, C, ri[c], p);
      }
    }
    ++r;
  }
  return r;
}

}  // namespace

std::size_t rank_serial(DenseMatrix m, const PrimeField& f) { return eliminate<false>(m, f); }

std::size_t rank_parallel(DenseMatrix m, const PrimeField& f) { return eliminate<true>(m, f); }

std::size_t rank_sparse(const SparseMatrix& m, const PrimeField& f) {
  const std::uint32_t p = f.prime();
  // pivots[c] = normalized row whose leading column is c
  std::vector<SparseRow> pivots(m.cols);
  std::vector<char> has(m.cols, 0);
  std::vector<std::uint64_t> acc(m.cols, 0);
  std::size_t rank = 0;
  for (const auto& row : m.rows) {
    if (row.empty()) continue;
    std::size_t lo = m.cols, hi = 0;
    for (auto [c, v] : row) {
      acc[c] = v % p;
      lo = std::min<std::size_t>(lo, c);
      hi = std::max<std::size_t>(hi, c + 1);
    }
    bool placed = false;
    for (std::size_t c = lo; c < hi; ++c) {
      std::uint64_t v = acc[c] % p;
      acc[c] = v;
      if (v == 0) continue;
      if (!has[c]) {
        SparseRow nr;
        std::uint32_t inv = f.inv(static_cast<std::uint32_t>(v));
        for (std::size_t k = c; k < hi; ++k) {
          std::uint32_t w = static_cast<std::uint32_t>(acc[k] % p);
          if (w) nr.emplace_back(static_cast<std::uint32_t>(k), f.mul(w, inv));
          acc[k] = 0;
        }
        pivots[c] = std::move(nr);
        has[c] = 1;
        ++rank;
        placed = true;
        break;
      }
      std::uint64_t neg = p - v;
      for (auto [k, w] : pivots[c]) {
        acc[k] = (acc[k] + neg * w) % p;
        hi = std::max<std::size_t>(hi, k + 1);
      }
    }
    if (!placed) {
      for (std::size_t k = lo; k < hi; ++k) acc[k] = 0;
    }
  }
  return rank;
}

DenseMatrix to_dense(const SparseMatrix& m) {
  DenseMatrix d(m.rows.size(), m.cols);
  for (std::size_t r = 0; r < m.rows.size(); ++r) {
    for (auto [c, v] : m.rows[r]) d.at(r, c) = v;
  }
  return d;
}

std::size_t rank(const SparseMatrix& m, const PrimeField& f, std::size_t sparse_threshold) {
  std::size_t entries = m.rows.size() * m.cols;
  if (entries == 0) return 0;
  std::size_t nnz = 0;
  for (const auto& r : m.rows) nnz += r.size();
  if (entries > sparse_threshold && nnz * 10 < entries) return rank_sparse(m, f);
  return rank_parallel(to_dense(m), f);
}

std::vector<std::size_t> rref(DenseMatrix& m, const PrimeField& f) {
  const std::size_t R = m.rows(), C = m.cols();
  const std::uint32_t p = f.prime();
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < C && r < R; ++c) {
    std::size_t piv = r;
    while (piv < R && m.at(piv, c) == 0) ++piv;
    if (piv == R) continue;
    m.swap_rows(r, piv);
    std::uint32_t* prow = m.row(r);
    std::uint32_t inv = f.inv(prow[c]);
    for (std::size_t k = c; k < C; ++k) prow[k] = f.mul(prow[k], inv);
    for (std::size_t i = 0; i < R; ++i) {
      if (i == r) continue;
      std::uint32_t* ri = m.row(i);
      if (ri[c]) axpy(ri, prow, c, C, ri[c], p);
    }
    pivots.push_back(c);
    ++r;
  }
  m.truncate_rows(r);
  return pivots;
}

DenseMatrix nullspace(const DenseMatrix& m, const PrimeField& f) {
  DenseMatrix a = m;
  auto piv = rref(a, f);
  const std::size_t C = m.cols();
  std::vector<char> is_piv(C, 0);
  for (auto c : piv) is_piv[c] = 1;
  DenseMatrix out(0, C);
  for (std::size_t free = 0; free < C; ++free) {
    if (is_piv[free]) continue;
    std::vector<std::uint32_t> v(C, 0);
    v[free] = 1;
    for (std::size_t i = 0; i < piv.size(); ++i) v[piv[i]] = f.neg(a.at(i, free));
    out.append_row(v);
  }
  rref(out, f);
  return out;
}

DenseMatrix inverse(const DenseMatrix& m, const PrimeField& f) {
  const std::size_t n = m.rows();
  if (m.cols() != n) throw InvalidArgument("inverse of a non-square matrix");
  DenseMatrix aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug.at(i, j) = m.at(i, j);
    aug.at(i, n + i) = 1;
  }
  auto piv = rref(aug, f);
  if (piv.size() < n || piv[n - 1] != n - 1) return DenseMatrix();
  DenseMatrix out(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) out.at(i, j) = aug.at(i, n + j);
  }
  return out;
}

DenseMatrix multiply(const DenseMatrix& a, const DenseMatrix& b, const PrimeField& f) {
  if (a.cols() != b.rows()) throw InvalidArgument("matrix shapes do not compose");
  DenseMatrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      std::uint32_t v = a.at(i, k);
      if (!v) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) out.at(i, j) = f.add(out.at(i, j), f.mul(v, b.at(k, j)));
    }
  }
  return out;
}

}  // namespace seclab
