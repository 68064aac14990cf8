#include "seclab/ideal.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <random>

#include "seclab/poly_io.hpp"

namespace seclab {

struct Ideal::Cache {
  std::mutex mu;
  std::vector<std::pair<std::pair<MonomialOrder, std::optional<int>>, std::shared_ptr<const GroebnerBasis>>> entries;
};

Ideal::Ideal(Ring ring, std::vector<Polynomial> gens) : ring_(std::move(ring)), cache_(std::make_shared<Cache>()) {
  if (!ring_) throw InvalidArgument("ideal needs a ring");
  for (auto& g : gens) {
    if (!same_ring(g.ring(), ring_)) throw RingMismatch("generator outside the ideal's ring");
    if (!g.is_zero()) gens_.push_back(std::move(g));
  }
}

bool Ideal::is_homogeneous() const {
  return std::all_of(gens_.begin(), gens_.end(), [](const Polynomial& g) { return g.is_weighted_homogeneous(); });
}

bool Ideal::is_multi_homogeneous() const {
  return std::all_of(gens_.begin(), gens_.end(), [](const Polynomial& g) { return g.is_homogeneous(); });
}

int Ideal::max_generator_degree() const {
  int d = -1;
  for (const auto& g : gens_) d = std::max(d, g.weighted_degree());
  return d;
}

std::shared_ptr<const GroebnerBasis> Ideal::groebner(const MonomialOrder& ord, const GroebnerOptions& opts) const {
  if (!cache_) throw InvalidArgument("default-constructed ideal");
  std::lock_guard<std::mutex> lock(cache_->mu);
  for (const auto& [key, gb] : cache_->entries) {
    if (key.first == ord && key.second == opts.degree_limit) return gb;
  }
  auto gb = std::make_shared<const GroebnerBasis>(compute_groebner_basis(ring_, gens_, ord, opts));
  cache_->entries.push_back({{ord, opts.degree_limit}, gb});
  return gb;
}

std::shared_ptr<const GroebnerBasis> Ideal::groebner() const { return groebner(MonomialOrder::grevlex(*ring_)); }

bool Ideal::contains(const Ideal& J) const {
  if (!same_ring(ring_, J.ring())) throw RingMismatch();
  auto gb = groebner();
  return std::all_of(J.generators().begin(), J.generators().end(), [&](const Polynomial& f) { return gb->contains(f); });
}

bool operator==(const Ideal& a, const Ideal& b) {
  if (!same_ring(a.ring(), b.ring())) return false;
  auto ga = a.groebner(), gb = b.groebner();
  if (ga->size() != gb->size()) return false;
  for (std::size_t i = 0; i < ga->size(); ++i) {
    if (!(ga->polys()[i] == gb->polys()[i])) return false;
  }
  return true;
}

std::vector<Polynomial> groebner_basis(const Ideal& I, const MonomialOrder& ord, const GroebnerOptions& opts) {
  auto gb = I.groebner(ord, opts);
  return {gb->polys().begin(), gb->polys().end()};
}

Polynomial normal_form(const Polynomial& f, const Ideal& I, const MonomialOrder& ord) {
  return I.groebner(ord)->reduce(f);
}

Polynomial normal_form(const Polynomial& f, const Ideal& I) { return I.groebner()->reduce(f); }

Ring drop_blocks(const Ring& ring, std::span<const int> blocks) {
  std::vector<VariableBlock> keep;
  for (int b = 0; b < static_cast<int>(ring->blocks().size()); ++b) {
    if (std::find(blocks.begin(), blocks.end(), b) == blocks.end()) keep.push_back(ring->blocks()[b]);
  }
  if (keep.empty()) throw InvalidArgument("cannot eliminate every block");
  return make_ring(std::move(keep), ring->prime());
}

Ideal eliminate(const Ideal& I, std::span<const int> blocks, const GroebnerOptions& opts) {
  const Ring& R = I.ring();
  for (int b : blocks) {
    if (b < 0 || b >= static_cast<int>(R->blocks().size())) throw InvalidArgument("no such block");
  }
  std::uint32_t mask = 0;
  for (int b : blocks) {
    auto [lo, hi] = R->block_range(b);
    for (int v = lo; v < hi; ++v) mask |= 1u << v;
  }
  Ring sub = drop_blocks(R, blocks);
  auto ord = MonomialOrder::eliminate_blocks(*R, blocks);
  auto gb = I.groebner(ord, opts);
  std::vector<Polynomial> out;
  for (const auto& g : gb->polys()) {
    if (!g.involves_any(mask)) out.push_back(transfer(g, sub));
  }
  return Ideal(sub, std::move(out));
}

Ideal eliminate(const Ideal& I, const std::vector<std::string>& block_names, const GroebnerOptions& opts) {
  std::vector<int> idx;
  for (const auto& n : block_names) {
    auto b = I.ring()->block_index(n);
    if (!b) throw InvalidArgument("no block named '" + n + "'");
    idx.push_back(*b);
  }
  return eliminate(I, idx, opts);
}

namespace {

Ideal intersect_two(const Ideal& A, const Ideal& B) {
  const Ring& R = A.ring();
  if (A.is_zero() || B.is_zero()) return Ideal::zero(R);
  std::vector<VariableBlock> blocks(R->blocks().begin(), R->blocks().end());
  std::vector<int> w(R->grading_rank(), 0);
  w[0] = 1;
  blocks.push_back({"__t", {"__t"}, w});
  Ring Rt = make_ring(std::move(blocks), R->prime());
  auto t = Polynomial::variable(Rt, "__t");
  auto one_minus_t = Polynomial::constant(Rt, 1) - t;
  std::vector<Polynomial> gens;
  for (const auto& a : A.generators()) gens.push_back(t * transfer(a, Rt));
  for (const auto& b : B.generators()) gens.push_back(one_minus_t * transfer(b, Rt));
  int tb = static_cast<int>(Rt->blocks().size()) - 1;
  Ideal E = eliminate(Ideal(Rt, std::move(gens)), std::span<const int>(&tb, 1));
  return Ideal(R, transfer(E.generators(), R));
}

void check_same_ring(std::span<const Ideal> ideals) {
  if (ideals.empty()) throw InvalidArgument("intersection of an empty list");
  for (const auto& I : ideals) {
    if (!same_ring(I.ring(), ideals[0].ring())) throw RingMismatch("intersecting ideals of different rings");
  }
}

}  // namespace

Ideal intersect_ideals(std::span<const Ideal> ideals, std::optional<int> degree_limit) {
  check_same_ring(ideals);
  if (degree_limit) return intersect_ideals_graded(ideals, *degree_limit);
  Ideal acc = ideals[0];
  for (std::size_t i = 1; i < ideals.size(); ++i) acc = intersect_two(acc, ideals[i]);
  return acc;
}

Ideal intersect_ideals_graded(std::span<const Ideal> ideals, int degree_limit) {
  check_same_ring(ideals);
  const Ring& R = ideals[0].ring();
  for (const auto& I : ideals) {
    if (!I.is_homogeneous()) throw InvalidArgument("degree-limited intersection needs homogeneous ideals");
  }
  std::vector<Polynomial> gens;
  for (int d = 0; d <= degree_limit; ++d) {
    FormSpace P = graded_piece(ideals[0], d);
    for (std::size_t i = 1; i < ideals.size() && !P.empty(); ++i) P = P.intersect(graded_piece(ideals[i], d));
    for (auto& f : P.polys()) gens.push_back(std::move(f));
  }
  return minimal_generators(Ideal(R, std::move(gens)));
}

Ideal kernel_of_ring_map(std::span<const Polynomial> targets, const Ring& image_ring,
                         std::span<const Polynomial> relations, const GroebnerOptions& opts) {
  if (static_cast<int>(targets.size()) != image_ring->nvars()) {
    throw InvalidArgument("need one target per variable of the image ring");
  }
  if (targets.empty()) throw InvalidArgument("ring map without targets");
  const Ring& T = targets[0].ring();
  for (const auto& f : targets) {
    if (!same_ring(f.ring(), T)) throw RingMismatch("targets live in different rings");
    if (!f.is_weighted_homogeneous()) throw InvalidArgument("ring map targets must be homogeneous");
  }
  for (const auto& f : relations) {
    if (!same_ring(f.ring(), T)) throw RingMismatch("relations live outside the targets' ring");
  }
  if (T->prime() != image_ring->prime()) throw RingMismatch("ring map changes the characteristic");
  const int ns = T->nvars(), ny = image_ring->nvars();
  if (ns + ny > kMaxVars) throw ResourceLimitExceeded("graph ring would exceed the variable limit");

  // graph ring: one block per variable so each carries its own weight
  std::vector<VariableBlock> blocks;
  for (int i = 0; i < ns; ++i) {
    std::string n = "__s" + std::to_string(i);
    blocks.push_back({n, {n}, {T->total_weight(i)}});
  }
  for (int k = 0; k < ny; ++k) {
    int w = targets[k].is_zero() ? 1 : std::max(1, targets[k].weighted_degree());
    std::string n = "__y" + std::to_string(k);
    blocks.push_back({n, {n}, {w}});
  }
  Ring G = make_ring(std::move(blocks), T->prime());
  std::vector<int> src_map(ns);
  for (int i = 0; i < ns; ++i) src_map[i] = i;
  std::vector<Polynomial> gens;
  for (int k = 0; k < ny; ++k) gens.push_back(Polynomial::variable(G, ns + k) - targets[k].rename(G, src_map));
  for (const auto& r : relations) gens.push_back(r.rename(G, src_map));

  std::vector<int> src_blocks(ns);
  for (int i = 0; i < ns; ++i) src_blocks[i] = i;
  Ideal E = eliminate(Ideal(G, std::move(gens)), src_blocks, opts);
  std::vector<int> back(ny);
  for (int k = 0; k < ny; ++k) back[k] = k;
  std::vector<Polynomial> out;
  for (const auto& g : E.generators()) out.push_back(g.rename(image_ring, back));
  return Ideal(image_ring, std::move(out));
}

std::vector<Polynomial> truncate_ideal(int d, const Ideal& I) {
  if (!I.is_homogeneous()) throw InvalidArgument("truncate needs a homogeneous ideal");
  std::vector<Polynomial> out;
  if (I.is_zero() || d < 0) return out;
  auto gb = I.groebner();
  MonomialBasis basis(*I.ring(), d);
  const auto& leads = gb->leading_monomials();
  for (const auto& m : basis.monomials()) {
    bool in = std::any_of(leads.begin(), leads.end(), [&m](const Monomial& l) { return l.divides(m); });
    if (!in) continue;
    auto mono = Polynomial::monomial(I.ring(), m);
    out.push_back(mono - gb->reduce(mono));
  }
  return out;
}

FormSpace graded_piece(const Ideal& I, int d) {
  auto forms = truncate_ideal(d, I);
  return FormSpace::span(I.ring(), d, forms);
}

Ideal minimal_generators(const Ideal& I) {
  if (!I.is_homogeneous()) throw InvalidArgument("minimal generators need a homogeneous ideal");
  std::vector<Polynomial> gens(I.generators().begin(), I.generators().end());
  std::stable_sort(gens.begin(), gens.end(),
                   [](const Polynomial& a, const Polynomial& b) { return a.weighted_degree() < b.weighted_degree(); });
  std::vector<Polynomial> kept;
  auto grevlex = MonomialOrder::grevlex(*I.ring());
  for (std::size_t i = 0; i < gens.size();) {
    int d = gens[i].weighted_degree();
    std::size_t j = i;
    while (j < gens.size() && gens[j].weighted_degree() == d) ++j;
    GroebnerOptions opts;
    opts.degree_limit = d;
    auto gb = compute_groebner_basis(I.ring(), kept, grevlex, opts);
    if (gb.is_unit()) break;
    FormSpace W(I.ring(), d);
    for (std::size_t k = i; k < j; ++k) {
      Polynomial r = gb.reduce(gens[k]);
      if (r.is_zero() || W.contains(r)) continue;
      W = W.sum(FormSpace::span(I.ring(), d, std::span<const Polynomial>(&r, 1)));
      kept.push_back(gens[k]);
    }
    i = j;
  }
  return Ideal(I.ring(), std::move(kept));
}

HilbertData hilbert_data(const Ideal& I, int degree_bound) {
  if (!I.ring()->standard_graded()) throw InvalidArgument("Hilbert data needs a standard graded ring");
  if (!I.is_homogeneous()) throw InvalidArgument("Hilbert data needs a homogeneous ideal");
  auto gb = I.groebner();
  return hilbert_from_leads(gb->leading_monomials(), I.ring()->nvars(), degree_bound);
}

Ideal LinearChange::apply(const Ideal& I) const {
  std::vector<Polynomial> g;
  for (const auto& f : I.generators()) g.push_back(apply(f));
  return Ideal(ring, std::move(g));
}

LinearChange linear_change_from_matrix(const Ring& ring, const DenseMatrix& m) {
  const int n = ring->nvars();
  if (static_cast<int>(m.rows()) != n || static_cast<int>(m.cols()) != n) throw InvalidArgument("matrix size mismatch");
  LinearChange c;
  c.ring = ring;
  c.matrix = m;
  c.inverse = seclab::inverse(m, ring->field());
  if (c.inverse.rows() == 0) throw InvalidArgument("linear change is not invertible");
  auto rows = [n](const DenseMatrix& a) {
    std::vector<std::vector<std::uint32_t>> r(n, std::vector<std::uint32_t>(n));
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) r[i][j] = a.at(i, j);
    }
    return r;
  };
  c.images = linear_forms(ring, rows(c.matrix));
  c.inverse_images = linear_forms(ring, rows(c.inverse));
  return c;
}

LinearChange random_linear_change(const Ring& ring, std::uint64_t seed) {
  if (!ring->standard_graded()) throw InvalidArgument("linear changes need a standard graded ring");
  const int n = ring->nvars();
  const std::uint32_t p = ring->prime();
  std::mt19937_64 rng(seed);
  while (true) {
    DenseMatrix m(n, n);
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) m.at(i, j) = static_cast<std::uint32_t>(rng() % p);
    }
    if (rank_serial(m, ring->field()) == static_cast<std::size_t>(n)) return linear_change_from_matrix(ring, m);
  }
}

Ideal operator+(const Ideal& a, const Ideal& b) {
  if (!same_ring(a.ring(), b.ring())) throw RingMismatch();
  std::vector<Polynomial> g(a.generators().begin(), a.generators().end());
  g.insert(g.end(), b.generators().begin(), b.generators().end());
  return Ideal(a.ring(), std::move(g));
}

Ideal operator*(const Ideal& a, const Ideal& b) {
  if (!same_ring(a.ring(), b.ring())) throw RingMismatch();
  std::vector<Polynomial> g;
  for (const auto& x : a.generators()) {
    for (const auto& y : b.generators()) g.push_back(x * y);
  }
  return Ideal(a.ring(), std::move(g));
}

Ideal power(const Ideal& I, int e) {
  if (e < 0) throw InvalidArgument("negative ideal power");
  Ideal r(I.ring(), {Polynomial::constant(I.ring(), 1)});
  for (int i = 0; i < e; ++i) r = r * I;
  return r;
}

Ideal make_ideal(const Ring& ring, std::initializer_list<const char*> gens) {
  std::vector<Polynomial> g;
  for (const char* s : gens) g.push_back(parse_polynomial(ring, s));
  return Ideal(ring, std::move(g));
}

}  // namespace seclab
