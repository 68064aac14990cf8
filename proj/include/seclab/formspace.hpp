#pragma once

#include <memory>
#include <span>
#include <unordered_map>
#include <vector>

#include "seclab/linalg.hpp"
#include "seclab/polynomial.hpp"

namespace seclab {

/// Monomials of one (weighted) degree, descending in the ring's grevlex order.
class MonomialBasis {
 public:
  MonomialBasis(const RingSpec& ring, int degree);
  int degree() const { return degree_; }
  std::size_t size() const { return monos_.size(); }
  const Monomial& operator[](std::size_t i) const { return monos_[i]; }
  std::span<const Monomial> monomials() const { return monos_; }
  /// Column of m, or -1 when m has a different degree.
  long index(const Monomial& m) const;

 private:
  int degree_;
  std::vector<Monomial> monos_;
  std::unordered_map<Monomial, std::size_t, MonomialHash> index_;
};

/// A subspace of the degree-d forms, stored as a reduced row echelon matrix
/// over the monomial basis. Two spaces are equal iff their matrices are.
class FormSpace {
 public:
  FormSpace(Ring ring, int degree);

  /// Span of forms; each must be homogeneous of the given weighted degree.
  static FormSpace span(Ring ring, int degree, std::span<const Polynomial> forms);
  /// All forms of the degree.
  static FormSpace full(Ring ring, int degree);
  /// Row space of a matrix whose columns follow `basis()`.
  static FormSpace from_matrix(Ring ring, int degree, DenseMatrix rows);

  const Ring& ring() const { return ring_; }
  int degree() const { return degree_; }
  std::size_t dim() const { return m_.rows(); }
  bool empty() const { return m_.rows() == 0; }
  const MonomialBasis& basis() const { return *basis_; }
  const DenseMatrix& matrix() const { return m_; }
  std::size_t ambient_dim() const { return basis_->size(); }

  /// Basis forms, one per echelon row (monic, distinct leading monomials).
  std::vector<Polynomial> polys() const;
  std::vector<std::uint32_t> coordinates(const Polynomial& f) const;
  bool contains(const Polynomial& f) const;
  bool contains(const FormSpace& o) const;

  FormSpace intersect(const FormSpace& o) const;
  FormSpace sum(const FormSpace& o) const;
  /// Annihilator under the coordinate pairing: {v : <v, row> = 0 for all rows}.
  DenseMatrix complement() const;

  friend bool operator==(const FormSpace& a, const FormSpace& b);

 private:
  FormSpace(Ring ring, int degree, std::shared_ptr<const MonomialBasis> basis, DenseMatrix m);
  void check_compatible(const FormSpace& o) const;

  Ring ring_;
  int degree_;
  std::shared_ptr<const MonomialBasis> basis_;
  DenseMatrix m_;
};

/// Monomial basis of (ring, degree) behind a shared pointer.
std::shared_ptr<const MonomialBasis> monomial_basis(const Ring& ring, int degree);

std::string write_formspace_text(const FormSpace& V);
FormSpace read_formspace_text(std::string_view text);

}  // namespace seclab
