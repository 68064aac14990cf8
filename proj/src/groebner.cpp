#include "seclab/groebner.hpp"

#include <algorithm>
#include <set>

namespace seclab {

namespace {

using TermVec = std::vector<Term>;

TermVec to_sorted(const Polynomial& f, const MonomialOrder& ord) {
  TermVec t(f.terms().begin(), f.terms().end());
  std::sort(t.begin(), t.end(), [&ord](const Term& a, const Term& b) { return ord.compare(a.m, b.m) > 0; });
  return t;
}

// Merge two vectors sorted in the same direction; dir = +1 for descending
// storage, -1 for ascending.
TermVec merge(const TermVec& a, const TermVec& b, const MonomialOrder& ord, const PrimeField& F, int dir) {
  TermVec out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    int c = dir * ord.compare(a[i].m, b[j].m);
    if (c > 0) {
      out.push_back(a[i++]);
    } else if (c < 0) {
      out.push_back(b[j++]);
    } else {
      std::uint32_t s = F.add(a[i].c, b[j].c);
      if (s) out.push_back({a[i].m, s});
      ++i;
      ++j;
    }
  }
  out.insert(out.end(), a.begin() + i, a.end());
  out.insert(out.end(), b.begin() + j, b.end());
  return out;
}

// Geometric buckets; each bucket is kept ascending so the leading term sits
// at the back and pops in O(1).
class GeoBucket {
 public:
  GeoBucket(const MonomialOrder& ord, const PrimeField& F) : ord_(ord), F_(F) {}

  void add(TermVec v) {
    if (v.empty()) return;
    std::size_t k = level(v.size());
    while (true) {
      if (b_.size() <= k) b_.resize(k + 1);
      if (b_[k].empty()) {
        b_[k] = std::move(v);
        return;
      }
      v = merge(b_[k], v, ord_, F_, -1);
      b_[k].clear();
      k = std::max(k, level(v.size()));
      if (v.empty()) return;
    }
  }

  bool pop_lead(Term& out) {
    while (true) {
      int best = -1;
      for (int k = 0; k < static_cast<int>(b_.size()); ++k) {
        if (b_[k].empty()) continue;
        if (best < 0 || ord_.compare(b_[k].back().m, b_[best].back().m) > 0) best = k;
      }
      if (best < 0) return false;
      Monomial m = b_[best].back().m;
      std::uint32_t c = 0;
      for (auto& bk : b_) {
        if (!bk.empty() && bk.back().m == m) {
          c = F_.add(c, bk.back().c);
          bk.pop_back();
        }
      }
      if (c) {
        out = {m, c};
        return true;
      }
    }
  }

 private:
  static std::size_t level(std::size_t n) {
    std::size_t k = 0;
    while ((std::size_t{4} << (2 * k)) < n) ++k;
    return k;
  }

  const MonomialOrder& ord_;
  const PrimeField& F_;
  std::vector<TermVec> b_;
};

struct ReducerSet {
  std::vector<const TermVec*> polys;
  std::vector<Monomial> leads;
  std::vector<std::uint32_t> masks;

  void add(const TermVec* p) {
    polys.push_back(p);
    leads.push_back((*p)[0].m);
    masks.push_back((*p)[0].m.support());
  }

  int find(const Monomial& m) const {
    int best = -1;
    const std::uint32_t ms = m.support();
    for (int i = 0; i < static_cast<int>(polys.size()); ++i) {
      if (masks[i] & ~ms) continue;
      if (!leads[i].divides(m)) continue;
      if (best < 0 || polys[i]->size() < polys[best]->size()) best = i;
    }
    return best;
  }
};

// Remainder of f (descending) by the reducers. With full = false only the
// leading term is made irreducible.
TermVec reduce(const TermVec& f, const ReducerSet& R, const MonomialOrder& ord, const PrimeField& F, bool full) {
  GeoBucket B(ord, F);
  B.add(TermVec(f.rbegin(), f.rend()));
  TermVec rem;
  Term t;
  while (B.pop_lead(t)) {
    int r = R.find(t.m);
    if (r < 0) {
      rem.push_back(t);
      if (!full) {
        while (B.pop_lead(t)) rem.push_back(t);
        break;
      }
      continue;
    }
    const TermVec& g = *R.polys[r];
    Monomial q = t.m / g[0].m;
    std::uint32_t c = F.neg(g[0].c == 1 ? t.c : F.div(t.c, g[0].c));
    TermVec s;
    s.reserve(g.size() - 1);
    for (std::size_t i = g.size(); i-- > 1;) s.push_back({g[i].m * q, F.mul(g[i].c, c)});
    B.add(std::move(s));
  }
  return rem;
}

void make_monic(TermVec& t, const PrimeField& F) {
  if (t.empty() || t[0].c == 1) return;
  std::uint32_t inv = F.inv(t[0].c);
  for (auto& x : t) x.c = F.mul(x.c, inv);
}

TermVec spoly(const TermVec& f, const TermVec& g, const Monomial& lcm, const MonomialOrder& ord,
              const PrimeField& F) {
  Monomial qf = lcm / f[0].m, qg = lcm / g[0].m;
  std::uint32_t cf = g[0].c, cg = F.neg(f[0].c);
  TermVec a, b;
  a.reserve(f.size());
  b.reserve(g.size());
  for (std::size_t i = 1; i < f.size(); ++i) a.push_back({f[i].m * qf, F.mul(f[i].c, cf)});
  for (std::size_t i = 1; i < g.size(); ++i) b.push_back({g[i].m * qg, F.mul(g[i].c, cg)});
  return merge(a, b, ord, F, 1);
}

Polynomial from_sorted(const Ring& ring, const TermVec& t) { return Polynomial::from_terms(ring, t); }

void check_order(const Ring& ring, const MonomialOrder& ord) {
  if (ord.nvars() != ring->nvars()) throw RingMismatch("monomial order built for a different ring");
}

}  // namespace

GroebnerBasis::GroebnerBasis(Ring ring, MonomialOrder ord, std::vector<std::vector<Term>> sorted,
                             std::optional<int> degree_limit)
    : ring_(std::move(ring)), ord_(std::move(ord)), sorted_(std::move(sorted)), degree_limit_(degree_limit) {
  for (const auto& t : sorted_) {
    polys_.push_back(from_sorted(ring_, t));
    leads_.push_back(t[0].m);
  }
}

Polynomial GroebnerBasis::reduce(const Polynomial& f) const {
  if (!same_ring(f.ring(), ring_)) throw RingMismatch();
  ReducerSet R;
  for (const auto& t : sorted_) R.add(&t);
  return from_sorted(ring_, seclab::reduce(to_sorted(f, ord_), R, ord_, ring_->field(), true));
}

GroebnerBasis compute_groebner_basis(const Ring& ring, std::span<const Polynomial> gens, const MonomialOrder& ord,
                                     const GroebnerOptions& opts) {
  check_order(ring, ord);
  const PrimeField& F = ring->field();
  auto wdeg = [&ring](const Monomial& m) { return ring->weighted_degree(m); };

  struct Item {
    int sugar;
    Monomial lcm;
    int i, j;  // j < 0: input generator i
  };
  auto cmp = [&ord](const Item& a, const Item& b) {
    if (a.sugar != b.sugar) return a.sugar < b.sugar;
    int c = ord.compare(a.lcm, b.lcm);
    if (c != 0) return c < 0;
    if (a.j != b.j) return a.j < b.j;
    return a.i < b.i;
  };
  std::set<Item, decltype(cmp)> queue(cmp);

  std::vector<TermVec> inputs;
  for (const auto& g : gens) {
    if (!same_ring(g.ring(), ring)) throw RingMismatch("generator outside the ideal's ring");
    if (g.is_zero()) continue;
    TermVec t = to_sorted(g, ord);
    make_monic(t, F);
    int s = 0;
    for (const auto& x : t) s = std::max(s, wdeg(x.m));
    queue.insert({s, t[0].m, static_cast<int>(inputs.size()), -1});
    inputs.push_back(std::move(t));
  }

  std::vector<TermVec> store;
  std::vector<int> sugar;
  std::vector<Monomial> lead;
  std::vector<int> active;
  bool unit = false;

  while (!queue.empty()) {
    Item it = *queue.begin();
    queue.erase(queue.begin());
    if (opts.degree_limit && it.sugar > *opts.degree_limit) {
      queue.clear();
      break;
    }
    if (!opts.degree_limit && it.sugar > opts.max_degree) {
      throw ResourceLimitExceeded("Groebner basis pair degree " + std::to_string(it.sugar) + " exceeds max degree " +
                                  std::to_string(opts.max_degree));
    }
    TermVec h = it.j < 0 ? inputs[it.i] : spoly(store[it.i], store[it.j], it.lcm, ord, F);
    ReducerSet R;
    for (int a : active) R.add(&store[a]);
    h = reduce(h, R, ord, F, true);
    if (h.empty()) continue;
    make_monic(h, F);
    const int hi = static_cast<int>(store.size());
    const Monomial lh = h[0].m;
    store.push_back(std::move(h));
    sugar.push_back(it.sugar);
    lead.push_back(lh);
    if (lh.is_one()) {
      active.assign(1, hi);
      unit = true;
      break;
    }

    // Gebauer-Moeller update
    struct Cand {
      int g;
      Monomial lcm;
      bool coprime;
    };
    std::vector<Cand> C;
    C.reserve(active.size());
    for (int g : active) C.push_back({g, lh.lcm(lead[g]), lh.coprime(lead[g])});
    std::vector<Cand> D;
    for (std::size_t a = 0; a < C.size(); ++a) {
      bool keep = true;
      if (!C[a].coprime) {
        for (std::size_t b = a + 1; b < C.size() && keep; ++b) keep = !C[b].lcm.divides(C[a].lcm);
        for (std::size_t b = 0; b < D.size() && keep; ++b) keep = !D[b].lcm.divides(C[a].lcm);
      }
      if (keep) D.push_back(C[a]);
    }
    std::erase_if(queue, [&](const Item& p) {
      if (p.j < 0 || !lh.divides(p.lcm)) return false;
      return lead[p.i].lcm(lh) != p.lcm && lead[p.j].lcm(lh) != p.lcm;
    });
    for (const auto& d : D) {
      if (d.coprime) continue;
      int s = std::max(sugar[hi] + wdeg(d.lcm) - wdeg(lh), sugar[d.g] + wdeg(d.lcm) - wdeg(lead[d.g]));
      queue.insert({s, d.lcm, d.g, hi});
    }
    std::erase_if(active, [&](int g) { return lh.divides(lead[g]); });
    active.push_back(hi);
    if (active.size() > opts.max_basis_size) {
      throw ResourceLimitExceeded("Groebner basis exceeds " + std::to_string(opts.max_basis_size) + " elements");
    }
  }

  std::sort(active.begin(), active.end(), [&](int a, int b) { return ord.compare(lead[a], lead[b]) < 0; });
  std::vector<TermVec> out;
  if (unit) {
    out.push_back({Term{Monomial(), 1}});
  } else {
    for (int g : active) {
      ReducerSet R;
      for (int o : active) {
        if (o != g) R.add(&store[o]);
      }
      TermVec r = reduce(store[g], R, ord, F, true);
      make_monic(r, F);
      out.push_back(std::move(r));
    }
  }
  return GroebnerBasis(ring, ord, std::move(out), opts.degree_limit);
}

Polynomial divide_remainder(const Polynomial& f, std::span<const Polynomial> divisors, const MonomialOrder& ord) {
  const Ring& ring = f.ring();
  check_order(ring, ord);
  std::vector<TermVec> sorted;
  for (const auto& d : divisors) {
    if (!same_ring(d.ring(), ring)) throw RingMismatch();
    if (!d.is_zero()) sorted.push_back(to_sorted(d, ord));
  }
  ReducerSet R;
  for (const auto& t : sorted) R.add(&t);
  return from_sorted(ring, reduce(to_sorted(f, ord), R, ord, ring->field(), true));
}

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g, const MonomialOrder& ord) {
  if (!same_ring(f.ring(), g.ring())) throw RingMismatch();
  if (f.is_zero() || g.is_zero()) return Polynomial(f.ring());
  TermVec a = to_sorted(f, ord), b = to_sorted(g, ord);
  return from_sorted(f.ring(), spoly(a, b, a[0].m.lcm(b[0].m), ord, f.ring()->field()));
}

}  // namespace seclab
