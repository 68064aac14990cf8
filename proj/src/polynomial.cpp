#include "seclab/polynomial.hpp"

#include <algorithm>
#include <unordered_map>

namespace seclab {

namespace {

// Degree by total weight, then reverse lex: the ring's canonical term order.
int ring_compare(const RingSpec& r, const Monomial& a, const Monomial& b) {
  int da = r.weighted_degree(a), db = r.weighted_degree(b);
  if (da != db) return da < db ? -1 : 1;
  for (int i = r.nvars() - 1; i >= 0; --i) {
    if (a[i] != b[i]) return a[i] < b[i] ? 1 : -1;
  }
  return 0;
}

void sort_desc(const RingSpec& r, std::vector<Term>& t) {
  std::sort(t.begin(), t.end(), [&r](const Term& x, const Term& y) { return ring_compare(r, x.m, y.m) > 0; });
}

void check_monomial(const RingSpec& r, const Monomial& m) {
  std::uint32_t allowed = r.nvars() >= 32 ? ~0u : ((1u << r.nvars()) - 1);
  if (m.support() & ~allowed) throw RingMismatch("monomial uses a variable outside the ring");
}

}  // namespace

Polynomial Polynomial::from_terms(Ring ring, std::vector<Term> terms) {
  if (!ring) throw InvalidArgument("polynomial needs a ring");
  const auto& f = ring->field();
  for (auto& t : terms) {
    check_monomial(*ring, t.m);
    t.c %= f.prime();
  }
  sort_desc(*ring, terms);
  std::vector<Term> out;
  out.reserve(terms.size());
  for (const auto& t : terms) {
    if (!out.empty() && out.back().m == t.m) {
      out.back().c = f.add(out.back().c, t.c);
    } else {
      if (!out.empty() && out.back().c == 0) out.pop_back();
      out.push_back(t);
    }
  }
  if (!out.empty() && out.back().c == 0) out.pop_back();
  return Polynomial(std::move(ring), std::move(out), 0);
}

Polynomial Polynomial::constant(Ring ring, std::int64_t c) {
  std::uint32_t v = ring->field().from_int(c);
  std::vector<Term> t;
  if (v) t.push_back({Monomial(), v});
  return Polynomial(std::move(ring), std::move(t), 0);
}

Polynomial Polynomial::variable(Ring ring, int i) {
  if (i < 0 || i >= ring->nvars()) throw InvalidArgument("variable index out of range");
  std::vector<Term> t{{Monomial::variable(i), 1}};
  return Polynomial(std::move(ring), std::move(t), 0);
}

Polynomial Polynomial::variable(Ring ring, std::string_view name) {
  int i = ring->var_index_or_throw(name);
  return variable(std::move(ring), i);
}

Polynomial Polynomial::monomial(Ring ring, const Monomial& m, std::uint32_t c) {
  return from_terms(std::move(ring), {{m, c}});
}

Term Polynomial::leading_term(const MonomialOrder& ord) const {
  if (terms_.empty()) throw InvalidArgument("zero polynomial has no leading term");
  const Term* best = &terms_[0];
  for (const auto& t : terms_) {
    if (ord.compare(t.m, best->m) > 0) best = &t;
  }
  return *best;
}

int Polynomial::total_degree() const {
  int d = -1;
  for (const auto& t : terms_) d = std::max(d, t.m.degree());
  return d;
}

int Polynomial::weighted_degree() const { return terms_.empty() ? -1 : ring_->weighted_degree(terms_[0].m); }

bool Polynomial::is_homogeneous() const {
  if (terms_.empty()) return true;
  auto d = ring_->multidegree(terms_[0].m);
  for (std::size_t i = 1; i < terms_.size(); ++i) {
    if (ring_->multidegree(terms_[i].m) != d) return false;
  }
  return true;
}

bool Polynomial::is_weighted_homogeneous() const {
  if (terms_.empty()) return true;
  return ring_->weighted_degree(terms_.front().m) == ring_->weighted_degree(terms_.back().m);
}

std::vector<int> Polynomial::multidegree() const {
  if (terms_.empty()) return std::vector<int>(ring_->grading_rank(), 0);
  if (!is_homogeneous()) throw InvalidArgument("multidegree of a non-homogeneous polynomial");
  return ring_->multidegree(terms_[0].m);
}

std::uint32_t Polynomial::support() const {
  std::uint32_t s = 0;
  for (const auto& t : terms_) s |= t.m.support();
  return s;
}

bool Polynomial::involves_any(std::uint32_t var_mask) const { return (support() & var_mask) != 0; }

void Polynomial::check_ring(const Polynomial& o) const {
  if (!same_ring(ring_, o.ring_)) throw RingMismatch();
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
  check_ring(o);
  const auto& f = ring_->field();
  std::vector<Term> out;
  out.reserve(terms_.size() + o.terms_.size());
  std::size_t i = 0, j = 0;
  while (i < terms_.size() && j < o.terms_.size()) {
    int c = ring_compare(*ring_, terms_[i].m, o.terms_[j].m);
    if (c > 0) {
      out.push_back(terms_[i++]);
    } else if (c < 0) {
      out.push_back(o.terms_[j++]);
    } else {
      std::uint32_t s = f.add(terms_[i].c, o.terms_[j].c);
      if (s) out.push_back({terms_[i].m, s});
      ++i;
      ++j;
    }
  }
  out.insert(out.end(), terms_.begin() + i, terms_.end());
  out.insert(out.end(), o.terms_.begin() + j, o.terms_.end());
  return Polynomial(ring_, std::move(out), 0);
}

Polynomial Polynomial::operator-() const {
  std::vector<Term> out = terms_;
  for (auto& t : out) t.c = ring_->field().neg(t.c);
  return Polynomial(ring_, std::move(out), 0);
}

Polynomial Polynomial::operator-(const Polynomial& o) const { return *this + (-o); }

Polynomial Polynomial::scaled(std::uint32_t c) const {
  c %= ring_->prime();
  if (c == 0) return Polynomial(ring_);
  std::vector<Term> out = terms_;
  for (auto& t : out) t.c = ring_->field().mul(t.c, c);
  return Polynomial(ring_, std::move(out), 0);
}

Polynomial Polynomial::times(const Monomial& m, std::uint32_t c) const {
  c %= ring_->prime();
  if (c == 0) return Polynomial(ring_);
  check_monomial(*ring_, m);
  // multiplication by a monomial preserves the term order
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) out.push_back({t.m * m, ring_->field().mul(t.c, c)});
  return Polynomial(ring_, std::move(out), 0);
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
  check_ring(o);
  if (is_zero() || o.is_zero()) return Polynomial(ring_);
  const auto& f = ring_->field();
  std::unordered_map<Monomial, std::uint32_t, MonomialHash> acc;
  acc.reserve(terms_.size() * o.terms_.size());
  for (const auto& a : terms_) {
    for (const auto& b : o.terms_) {
      auto& slot = acc[a.m * b.m];
      slot = f.add(slot, f.mul(a.c, b.c));
    }
  }
  std::vector<Term> out;
  out.reserve(acc.size());
  for (const auto& [m, c] : acc) {
    if (c) out.push_back({m, c});
  }
  sort_desc(*ring_, out);
  return Polynomial(ring_, std::move(out), 0);
}

Polynomial Polynomial::pow(int e) const {
  if (e < 0) throw InvalidArgument("negative exponent");
  Polynomial r = constant(ring_, 1), b = *this;
  while (e) {
    if (e & 1) r = r * b;
    e >>= 1;
    if (e) b = b * b;
  }
  return r;
}

Polynomial Polynomial::monic() const {
  if (terms_.empty()) return *this;
  return scaled(ring_->field().inv(terms_[0].c));
}

Polynomial Polynomial::monic(const MonomialOrder& ord) const {
  if (terms_.empty()) return *this;
  return scaled(ring_->field().inv(leading_term(ord).c));
}

Polynomial Polynomial::differentiate(int var) const {
  if (var < 0 || var >= ring_->nvars()) throw InvalidArgument("variable index out of range");
  const auto& f = ring_->field();
  std::vector<Term> out;
  for (const auto& t : terms_) {
    int e = t.m[var];
    if (e == 0) continue;
    std::uint32_t c = f.mul(t.c, f.from_int(e));
    if (c == 0) continue;
    Monomial m = t.m;
    m.set(var, e - 1);
    out.push_back({m, c});
  }
  // lowering one exponent can reorder terms across weights, so re-sort
  sort_desc(*ring_, out);
  return Polynomial(ring_, std::move(out), 0);
}

Polynomial Polynomial::integrate(int var) const {
  if (var < 0 || var >= ring_->nvars()) throw InvalidArgument("variable index out of range");
  const auto& f = ring_->field();
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) {
    int e = t.m[var];
    std::uint32_t denom = f.from_int(e + 1);
    if (denom == 0) {
      throw CharacteristicObstruction("cannot integrate x^" + std::to_string(e) + " in characteristic " +
                                      std::to_string(f.prime()));
    }
    Monomial m = t.m;
    m.set(var, e + 1);
    out.push_back({m, f.div(t.c, denom)});
  }
  sort_desc(*ring_, out);
  return Polynomial(ring_, std::move(out), 0);
}

Polynomial Polynomial::substitute(std::span<const Polynomial> images) const {
  if (static_cast<int>(images.size()) != ring_->nvars()) throw InvalidArgument("substitute needs one image per variable");
  if (images.empty()) throw InvalidArgument("substitute into a ring without variables");
  const Ring& target = images[0].ring();
  for (const auto& g : images) {
    if (!same_ring(g.ring(), target)) throw RingMismatch("substitution images live in different rings");
  }
  if (target->prime() != ring_->prime()) throw RingMismatch("substitution changes the characteristic");
  std::vector<std::vector<Polynomial>> powers(images.size());
  auto power = [&](int i, int e) -> const Polynomial& {
    auto& p = powers[i];
    if (p.empty()) p.push_back(constant(target, 1));
    while (static_cast<int>(p.size()) <= e) p.push_back(p.back() * images[i]);
    return p[e];
  };
  // Collect every product term and normalize once; summing one term at a
  // time is quadratic in the size of the result.
  std::vector<Term> acc;
  for (const auto& t : terms_) {
    Polynomial term = constant(target, t.c);
    for (int i = 0; i < ring_->nvars() && !term.is_zero(); ++i) {
      if (t.m[i]) term = term * power(i, t.m[i]);
    }
    acc.insert(acc.end(), term.terms().begin(), term.terms().end());
  }
  return from_terms(target, std::move(acc));
}

Polynomial Polynomial::rename(const Ring& target, std::span<const int> var_map) const {
  if (static_cast<int>(var_map.size()) != ring_->nvars()) throw InvalidArgument("rename map has the wrong length");
  if (target->prime() != ring_->prime()) throw RingMismatch("rename changes the characteristic");
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) {
    Monomial m;
    for (int i = 0; i < ring_->nvars(); ++i) {
      if (!t.m[i]) continue;
      int j = var_map[i];
      if (j < 0 || j >= target->nvars()) throw InvalidArgument("variable '" + ring_->var_name(i) + "' has no image");
      m.set(j, m[j] + t.m[i]);
    }
    out.push_back({m, t.c});
  }
  return from_terms(target, std::move(out));
}

Polynomial Polynomial::specialize(int var, std::uint32_t value) const {
  const auto& f = ring_->field();
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) {
    int e = t.m[var];
    Monomial m = t.m;
    m.set(var, 0);
    out.push_back({m, f.mul(t.c, f.pow(value % f.prime(), e))});
  }
  return from_terms(ring_, std::move(out));
}

std::uint32_t Polynomial::evaluate(std::span<const std::uint32_t> point) const {
  if (static_cast<int>(point.size()) != ring_->nvars()) throw InvalidArgument("evaluation point has the wrong length");
  const auto& f = ring_->field();
  std::uint32_t acc = 0;
  for (const auto& t : terms_) {
    std::uint32_t v = t.c;
    for (int i = 0; i < ring_->nvars() && v; ++i) {
      if (t.m[i]) v = f.mul(v, f.pow(point[i] % f.prime(), t.m[i]));
    }
    acc = f.add(acc, v);
  }
  return acc;
}

bool operator==(const Polynomial& a, const Polynomial& b) {
  if (a.terms_.empty() && b.terms_.empty()) return true;
  return same_ring(a.ring_, b.ring_) && a.terms_ == b.terms_;
}

Polynomial differentiate(const Polynomial& f, int i) { return f.differentiate(i); }
Polynomial integrate(const Polynomial& f, int i) { return f.integrate(i); }

Polynomial transfer(const Polynomial& f, const Ring& target) {
  std::vector<int> map(f.ring()->nvars());
  for (int i = 0; i < f.ring()->nvars(); ++i) {
    auto j = target->var_index(f.ring()->var_name(i));
    map[i] = j ? *j : -1;
  }
  return f.rename(target, map);
}

std::vector<Polynomial> transfer(std::span<const Polynomial> fs, const Ring& target) {
  std::vector<Polynomial> out;
  out.reserve(fs.size());
  for (const auto& f : fs) out.push_back(transfer(f, target));
  return out;
}

std::vector<Polynomial> linear_forms(const Ring& ring, const std::vector<std::vector<std::uint32_t>>& matrix) {
  std::vector<Polynomial> out;
  for (const auto& row : matrix) {
    if (static_cast<int>(row.size()) != ring->nvars()) throw InvalidArgument("linear form row has the wrong length");
    std::vector<Term> t;
    for (int j = 0; j < ring->nvars(); ++j) {
      if (row[j] % ring->prime()) t.push_back({Monomial::variable(j), row[j]});
    }
    out.push_back(Polynomial::from_terms(ring, std::move(t)));
  }
  return out;
}

}  // namespace seclab
