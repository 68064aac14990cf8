#include "seclab/ring.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_set>

namespace seclab {

Monomial Monomial::from_exponents(std::span<const int> exps) {
  if (exps.size() > static_cast<std::size_t>(kMaxVars)) {
    throw InvalidArgument("monomial has more than kMaxVars exponents");
  }
  Monomial m;
  for (std::size_t i = 0; i < exps.size(); ++i) {
    if (exps[i] < 0 || exps[i] > kMaxExponent) {
      throw ResourceLimitExceeded("exponent out of range [0, 255]");
    }
    m.e_[i] = static_cast<std::uint8_t>(exps[i]);
  }
  m.refresh();
  return m;
}

Monomial Monomial::variable(int i, int power) {
  Monomial m;
  m.set(i, power);
  return m;
}

void Monomial::set(int i, int value) {
  if (i < 0 || i >= kMaxVars) throw InvalidArgument("variable index out of range");
  if (value < 0 || value > kMaxExponent) throw ResourceLimitExceeded("exponent out of range [0, 255]");
  e_[i] = static_cast<std::uint8_t>(value);
  refresh();
}

void Monomial::refresh() {
  int d = 0;
  std::uint32_t s = 0;
  for (int i = 0; i < kMaxVars; ++i) {
    d += e_[i];
    if (e_[i]) s |= (1u << i);
  }
  deg_ = static_cast<std::uint16_t>(d);
  sup_ = s;
}

Monomial Monomial::operator*(const Monomial& o) const {
  Monomial r;
  bool overflow = false;
  for (int i = 0; i < kMaxVars; ++i) {
    int v = e_[i] + o.e_[i];
    overflow |= v > kMaxExponent;
    r.e_[i] = static_cast<std::uint8_t>(v);
  }
  if (overflow) throw ResourceLimitExceeded("exponent overflow in monomial product");
  r.deg_ = static_cast<std::uint16_t>(deg_ + o.deg_);
  r.sup_ = sup_ | o.sup_;
  return r;
}

Monomial Monomial::operator/(const Monomial& o) const {
  Monomial r;
  for (int i = 0; i < kMaxVars; ++i) r.e_[i] = static_cast<std::uint8_t>(e_[i] - o.e_[i]);
  r.refresh();
  return r;
}

Monomial Monomial::lcm(const Monomial& o) const {
  Monomial r;
  for (int i = 0; i < kMaxVars; ++i) r.e_[i] = std::max(e_[i], o.e_[i]);
  r.refresh();
  return r;
}

Monomial Monomial::gcd(const Monomial& o) const {
  Monomial r;
  for (int i = 0; i < kMaxVars; ++i) r.e_[i] = std::min(e_[i], o.e_[i]);
  r.refresh();
  return r;
}

std::size_t Monomial::hash() const {
  // FNV-1a over the exponent bytes
  std::uint64_t h = 1469598103934665603ull;
  for (auto b : e_) {
    h ^= b;
    h *= 1099511628211ull;
  }
  return static_cast<std::size_t>(h);
}

// --- RingSpec -------------------------------------------------------------

RingSpec::RingSpec(std::vector<VariableBlock> blocks, std::uint32_t prime)
    : blocks_(std::move(blocks)), field_(prime) {
  if (blocks_.empty()) throw InvalidArgument("ring needs at least one block");
  grading_rank_ = static_cast<int>(blocks_.front().weights.size());
  if (grading_rank_ == 0) throw InvalidArgument("grading needs at least one component");
  std::unordered_set<std::string> seen;
  for (int b = 0; b < static_cast<int>(blocks_.size()); ++b) {
    const auto& blk = blocks_[b];
    if (static_cast<int>(blk.weights.size()) != grading_rank_) {
      throw InvalidArgument("block '" + blk.name + "' has a weight vector of the wrong length");
    }
    int tw = 0;
    for (int w : blk.weights) {
      if (w < 0) throw InvalidArgument("grading weights must be non-negative");
      tw += w;
    }
    if (tw <= 0 && !blk.vars.empty()) {
      throw InvalidArgument("variables of block '" + blk.name + "' need positive total weight");
    }
    int first = static_cast<int>(names_.size());
    for (const auto& v : blk.vars) {
      if (!seen.insert(v).second) throw InvalidArgument("duplicate variable name '" + v + "'");
      names_.push_back(v);
      block_of_.push_back(b);
      total_weight_.push_back(tw);
      if (tw != 1) standard_ = false;
    }
    ranges_.emplace_back(first, static_cast<int>(names_.size()));
  }
  if (names_.size() > static_cast<std::size_t>(kMaxVars)) {
    throw ResourceLimitExceeded("rings are limited to " + std::to_string(kMaxVars) + " variables");
  }
}

std::optional<int> RingSpec::var_index(std::string_view name) const {
  for (int i = 0; i < nvars(); ++i) {
    if (names_[i] == name) return i;
  }
  return std::nullopt;
}

int RingSpec::var_index_or_throw(std::string_view name) const {
  auto i = var_index(name);
  if (!i) throw InvalidArgument("unknown variable '" + std::string(name) + "'");
  return *i;
}

std::optional<int> RingSpec::block_index(std::string_view name) const {
  for (int b = 0; b < static_cast<int>(blocks_.size()); ++b) {
    if (blocks_[b].name == name) return b;
  }
  return std::nullopt;
}

std::vector<int> RingSpec::multidegree(const Monomial& m) const {
  std::vector<int> d(grading_rank_, 0);
  for (int i = 0; i < nvars(); ++i) {
    if (m[i] == 0) continue;
    const auto& w = blocks_[block_of_[i]].weights;
    for (int c = 0; c < grading_rank_; ++c) d[c] += w[c] * m[i];
  }
  return d;
}

int RingSpec::weighted_degree(const Monomial& m) const {
  if (standard_) return m.degree();
  int d = 0;
  for (int i = 0; i < nvars(); ++i) d += total_weight_[i] * m[i];
  return d;
}

bool operator==(const RingSpec& a, const RingSpec& b) {
  if (a.field_ != b.field_ || a.blocks_.size() != b.blocks_.size()) return false;
  for (std::size_t i = 0; i < a.blocks_.size(); ++i) {
    const auto& x = a.blocks_[i];
    const auto& y = b.blocks_[i];
    if (x.name != y.name || x.vars != y.vars || x.weights != y.weights) return false;
  }
  return true;
}

Ring make_ring(std::vector<VariableBlock> blocks, std::uint32_t prime) {
  return std::make_shared<const RingSpec>(std::move(blocks), prime);
}

Ring make_standard_ring(const std::string& prefix, int n, std::uint32_t prime) {
  VariableBlock b{prefix, {}, {1}};
  for (int i = 0; i < n; ++i) b.vars.push_back(prefix + "_" + std::to_string(i));
  return make_ring({std::move(b)}, prime);
}

bool same_ring(const Ring& a, const Ring& b) { return a == b || (a && b && *a == *b); }

// --- MonomialOrder --------------------------------------------------------

MonomialOrder::MonomialOrder(Kind k, int n, std::vector<Row> rows, bool revlex, bool degree_compatible)
    : kind_(k), nvars_(n), rows_(std::move(rows)), revlex_(revlex), degree_compatible_(degree_compatible) {
  if (!rows_.empty() && static_cast<int>(rows_[0].size()) == n) {
    unit_first_row_ = std::all_of(rows_[0].begin(), rows_[0].end(), [](const auto& vw) { return vw.second == 1; });
  }
}

namespace {

std::vector<std::pair<int, int>> total_row(const RingSpec& ring) {
  std::vector<std::pair<int, int>> row;
  for (int i = 0; i < ring.nvars(); ++i) row.emplace_back(i, ring.total_weight(i));
  return row;
}

}  // namespace

MonomialOrder MonomialOrder::grevlex(const RingSpec& ring) {
  return MonomialOrder(Kind::Grevlex, ring.nvars(), {total_row(ring)}, true, true);
}

MonomialOrder MonomialOrder::lex(const RingSpec& ring) {
  return MonomialOrder(Kind::Lex, ring.nvars(), {}, false, false);
}

MonomialOrder MonomialOrder::block_elimination(const RingSpec& ring, std::span<const int> blocks) {
  std::vector<Row> rows;
  for (int b : blocks) {
    auto [lo, hi] = ring.block_range(b);
    Row r;
    for (int v = lo; v < hi; ++v) r.emplace_back(v, ring.total_weight(v));
    rows.push_back(std::move(r));
  }
  rows.push_back(total_row(ring));
  return MonomialOrder(Kind::BlockElimination, ring.nvars(), std::move(rows), true, false);
}

MonomialOrder MonomialOrder::eliminate_blocks(const RingSpec& ring, std::span<const int> blocks) {
  Row r;
  for (int b : blocks) {
    auto [lo, hi] = ring.block_range(b);
    for (int v = lo; v < hi; ++v) r.emplace_back(v, ring.total_weight(v));
  }
  std::sort(r.begin(), r.end());
  return MonomialOrder(Kind::BlockElimination, ring.nvars(), {std::move(r), total_row(ring)}, true, false);
}

MonomialOrder MonomialOrder::weighted(const RingSpec& ring, std::vector<int> weights) {
  if (static_cast<int>(weights.size()) != ring.nvars()) throw InvalidArgument("weight vector length mismatch");
  Row r;
  for (int i = 0; i < ring.nvars(); ++i) {
    if (weights[i] < 0) throw InvalidArgument("order weights must be non-negative");
    if (weights[i] > 0) r.emplace_back(i, weights[i]);
  }
  return MonomialOrder(Kind::Weighted, ring.nvars(), {std::move(r), total_row(ring)}, true, false);
}

std::strong_ordering compare(const Monomial& m1, const Monomial& m2, const MonomialOrder& ord) {
  std::uint32_t allowed = ord.nvars() >= 32 ? ~0u : ((1u << ord.nvars()) - 1);
  if ((m1.support() | m2.support()) & ~allowed) throw RingMismatch("monomial uses variables outside the order's ring");
  int c = ord.compare(m1, m2);
  return c < 0 ? std::strong_ordering::less : c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
}

namespace {

void enumerate(std::span<const int> w, int var, int remaining, Monomial& cur, std::vector<Monomial>& out) {
  int n = static_cast<int>(w.size());
  if (var == n - 1) {
    if (remaining % w[var] == 0) {
      cur.set(var, remaining / w[var]);
      out.push_back(cur);
      cur.set(var, 0);
    }
    return;
  }
  for (int e = remaining / w[var]; e >= 0; --e) {
    cur.set(var, e);
    enumerate(w, var + 1, remaining - e * w[var], cur, out);
  }
  cur.set(var, 0);
}

}  // namespace

std::vector<Monomial> monomials_of_weighted_degree(std::span<const int> weights, int d) {
  std::vector<Monomial> out;
  if (d < 0) return out;
  if (weights.empty()) {
    if (d == 0) out.emplace_back();
    return out;
  }
  Monomial cur;
  enumerate(weights, 0, d, cur, out);
  return out;
}

std::vector<Monomial> monomials_of_degree(int n, int d) {
  std::vector<int> w(n, 1);
  auto out = monomials_of_weighted_degree(w, d);
  // lex-descending enumeration; re-sort to grevlex for a canonical basis order
  std::sort(out.begin(), out.end(), [n](const Monomial& a, const Monomial& b) {
    for (int i = n - 1; i >= 0; --i) {
      if (a[i] != b[i]) return a[i] < b[i];
    }
    return false;
  });
  return out;
}

}  // namespace seclab
