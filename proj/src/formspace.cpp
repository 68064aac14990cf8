#include "seclab/formspace.hpp"

#include <algorithm>

#include "seclab/poly_io.hpp"

namespace seclab {

MonomialBasis::MonomialBasis(const RingSpec& ring, int degree) : degree_(degree) {
  monos_ = monomials_of_weighted_degree(ring.total_weights(), degree);
  const int n = ring.nvars();
  std::sort(monos_.begin(), monos_.end(), [n](const Monomial& a, const Monomial& b) {
    for (int i = n - 1; i >= 0; --i) {
      if (a[i] != b[i]) return a[i] < b[i];
    }
    return false;
  });
  index_.reserve(monos_.size());
  for (std::size_t i = 0; i < monos_.size(); ++i) index_.emplace(monos_[i], i);
}

long MonomialBasis::index(const Monomial& m) const {
  auto it = index_.find(m);
  return it == index_.end() ? -1 : static_cast<long>(it->second);
}

std::shared_ptr<const MonomialBasis> monomial_basis(const Ring& ring, int degree) {
  return std::make_shared<const MonomialBasis>(*ring, degree);
}

FormSpace::FormSpace(Ring ring, int degree)
    : ring_(ring), degree_(degree), basis_(monomial_basis(ring, degree)), m_(0, basis_->size()) {}

FormSpace::FormSpace(Ring ring, int degree, std::shared_ptr<const MonomialBasis> basis, DenseMatrix m)
    : ring_(std::move(ring)), degree_(degree), basis_(std::move(basis)), m_(std::move(m)) {
  rref(m_, ring_->field());
}

FormSpace FormSpace::from_matrix(Ring ring, int degree, DenseMatrix rows) {
  auto b = monomial_basis(ring, degree);
  if (rows.cols() != b->size() && rows.rows() > 0) throw InvalidArgument("matrix width does not match the basis");
  if (rows.rows() == 0) rows = DenseMatrix(0, b->size());
  return FormSpace(std::move(ring), degree, std::move(b), std::move(rows));
}

FormSpace FormSpace::span(Ring ring, int degree, std::span<const Polynomial> forms) {
  auto b = monomial_basis(ring, degree);
  DenseMatrix m(forms.size(), b->size());
  for (std::size_t r = 0; r < forms.size(); ++r) {
    if (!same_ring(forms[r].ring(), ring)) throw RingMismatch();
    for (const auto& t : forms[r].terms()) {
      long c = b->index(t.m);
      if (c < 0) throw InvalidArgument("form is not homogeneous of degree " + std::to_string(degree));
      m.at(r, static_cast<std::size_t>(c)) = t.c;
    }
  }
  return FormSpace(std::move(ring), degree, std::move(b), std::move(m));
}

FormSpace FormSpace::full(Ring ring, int degree) {
  auto b = monomial_basis(ring, degree);
  DenseMatrix m(b->size(), b->size());
  for (std::size_t i = 0; i < b->size(); ++i) m.at(i, i) = 1;
  return FormSpace(std::move(ring), degree, std::move(b), std::move(m));
}

std::vector<Polynomial> FormSpace::polys() const {
  std::vector<Polynomial> out;
  out.reserve(dim());
  for (std::size_t r = 0; r < m_.rows(); ++r) {
    std::vector<Term> t;
    for (std::size_t c = 0; c < m_.cols(); ++c) {
      if (m_.at(r, c)) t.push_back({(*basis_)[c], m_.at(r, c)});
    }
    out.push_back(Polynomial::from_terms(ring_, std::move(t)));
  }
  return out;
}

std::vector<std::uint32_t> FormSpace::coordinates(const Polynomial& f) const {
  if (!same_ring(f.ring(), ring_)) throw RingMismatch();
  std::vector<std::uint32_t> v(basis_->size(), 0);
  for (const auto& t : f.terms()) {
    long c = basis_->index(t.m);
    if (c < 0) throw InvalidArgument("form is not homogeneous of degree " + std::to_string(degree_));
    v[static_cast<std::size_t>(c)] = t.c;
  }
  return v;
}

bool FormSpace::contains(const Polynomial& f) const {
  if (f.is_zero()) return true;
  std::vector<std::uint32_t> v;
  try {
    v = coordinates(f);
  } catch (const InvalidArgument&) {
    return false;
  }
  // reduce by the echelon rows
  const auto& F = ring_->field();
  std::size_t row = 0;
  for (std::size_t c = 0; c < v.size() && row < m_.rows(); ++c) {
    if (m_.at(row, c) == 0) continue;  // not this row's pivot
    if (v[c]) {
      std::uint32_t k = F.neg(v[c]);
      for (std::size_t j = c; j < v.size(); ++j) v[j] = F.add(v[j], F.mul(k, m_.at(row, j)));
    }
    ++row;
  }
  return std::all_of(v.begin(), v.end(), [](std::uint32_t x) { return x == 0; });
}

bool FormSpace::contains(const FormSpace& o) const {
  check_compatible(o);
  return sum(o).dim() == dim();
}

void FormSpace::check_compatible(const FormSpace& o) const {
  if (!same_ring(ring_, o.ring_) || degree_ != o.degree_) throw RingMismatch("form spaces of different ring or degree");
}

DenseMatrix FormSpace::complement() const { return nullspace(m_, ring_->field()); }

FormSpace FormSpace::intersect(const FormSpace& o) const {
  check_compatible(o);
  DenseMatrix na = complement(), nb = o.complement();
  DenseMatrix stacked(na.rows() + nb.rows(), basis_->size());
  for (std::size_t r = 0; r < na.rows(); ++r) std::copy(na.row(r), na.row(r) + na.cols(), stacked.row(r));
  for (std::size_t r = 0; r < nb.rows(); ++r) std::copy(nb.row(r), nb.row(r) + nb.cols(), stacked.row(na.rows() + r));
  return FormSpace(ring_, degree_, basis_, nullspace(stacked, ring_->field()));
}

FormSpace FormSpace::sum(const FormSpace& o) const {
  check_compatible(o);
  DenseMatrix s(m_.rows() + o.m_.rows(), basis_->size());
  for (std::size_t r = 0; r < m_.rows(); ++r) std::copy(m_.row(r), m_.row(r) + m_.cols(), s.row(r));
  for (std::size_t r = 0; r < o.m_.rows(); ++r) std::copy(o.m_.row(r), o.m_.row(r) + o.m_.cols(), s.row(m_.rows() + r));
  return FormSpace(ring_, degree_, basis_, std::move(s));
}

bool operator==(const FormSpace& a, const FormSpace& b) {
  return same_ring(a.ring_, b.ring_) && a.degree_ == b.degree_ && a.m_ == b.m_;
}

std::string write_formspace_text(const FormSpace& V) {
  std::string out = ring_header(*V.ring());
  out += "formspace degree=" + std::to_string(V.degree()) + " dim=" + std::to_string(V.dim()) + "\n";
  for (const auto& f : V.polys()) out += to_string(f) + "\n";
  return out;
}

FormSpace read_formspace_text(std::string_view text) {
  auto list = read_ideal_text(text);
  auto pos = text.find("formspace degree=");
  if (pos == std::string_view::npos) throw ParseError("missing 'formspace degree=' line");
  pos += 17;
  int degree = 0;
  while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') degree = degree * 10 + (text[pos++] - '0');
  auto V = FormSpace::span(list.ring, degree, list.polys);
  if (V.dim() != list.polys.size()) throw ParseError("formspace polynomials are linearly dependent");
  return V;
}

}  // namespace seclab
