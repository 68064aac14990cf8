#include "seclab/geometry.hpp"

#include <algorithm>
#include <numeric>

#include "seclab/errors.hpp"
#include "seclab/poly_io.hpp"

namespace seclab {

PolyMatrix hankel_matrix(int rows, int cols, std::span<const Polynomial> vars) {
  if (rows < 1 || cols < 1) throw InvalidArgument("Hankel matrix needs positive dimensions");
  if (static_cast<int>(vars.size()) < rows + cols - 1) throw InvalidArgument("not enough variables for the Hankel matrix");
  PolyMatrix m(rows);
  for (int i = 0; i < rows; ++i) {
    for (int j = 0; j < cols; ++j) m[i].push_back(vars[i + j]);
  }
  return m;
}

namespace {

// k-subsets of {0..n-1} in colex order.
std::vector<std::vector<int>> colex_subsets(int n, int k) {
  std::vector<std::vector<int>> out;
  std::vector<int> s(k);
  std::iota(s.begin(), s.end(), 0);
  if (k > n) return out;
  while (true) {
    out.push_back(s);
    // next in lex order
    int i = k - 1;
    while (i >= 0 && s[i] == n - k + i) --i;
    if (i < 0) break;
    ++s[i];
    for (int j = i + 1; j < k; ++j) s[j] = s[j - 1] + 1;
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    return std::lexicographical_compare(a.rbegin(), a.rend(), b.rbegin(), b.rend());
  });
  return out;
}

Polynomial det(const PolyMatrix& m, const std::vector<int>& rows, const std::vector<int>& cols) {
  const std::size_t t = rows.size();
  if (t == 1) return m[rows[0]][cols[0]];
  Polynomial acc(m[0][0].ring());
  std::vector<int> sub_rows(rows.begin() + 1, rows.end());
  for (std::size_t c = 0; c < t; ++c) {
    std::vector<int> sub_cols;
    for (std::size_t j = 0; j < t; ++j) {
      if (j != c) sub_cols.push_back(cols[j]);
    }
    Polynomial term = m[rows[0]][cols[c]] * det(m, sub_rows, sub_cols);
    acc = (c % 2 == 0) ? acc + term : acc - term;
  }
  return acc;
}

}  // namespace

std::vector<Polynomial> minors(int t, const PolyMatrix& m) {
  if (m.empty() || m[0].empty()) throw InvalidArgument("empty matrix");
  const int R = static_cast<int>(m.size()), C = static_cast<int>(m[0].size());
  if (t < 1 || t > std::min(R, C)) throw InvalidArgument("minor size out of range");
  std::vector<Polynomial> out;
  for (const auto& rs : colex_subsets(R, t)) {
    for (const auto& cs : colex_subsets(C, t)) {
      Polynomial f = det(m, rs, cs);
      if (f.is_zero()) continue;
      bool seen = std::any_of(out.begin(), out.end(), [&](const Polynomial& g) { return g == f || g == -f; });
      if (!seen) out.push_back(std::move(f));
    }
  }
  return out;
}

Ideal point_ideal(const Ring& ring, const PointCoords& p) {
  const int n = static_cast<int>(p.size());
  if (n > ring->nvars()) throw InvalidArgument("point has more coordinates than the ring");
  if (std::all_of(p.begin(), p.end(), [](std::uint32_t c) { return c == 0; })) throw InvalidArgument("zero point");
  const auto& F = ring->field();
  std::vector<Polynomial> forms;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      forms.push_back(Polynomial::variable(ring, i).scaled(p[j] % F.prime()) -
                      Polynomial::variable(ring, j).scaled(p[i] % F.prime()));
    }
  }
  forms.erase(std::remove_if(forms.begin(), forms.end(), [](const Polynomial& f) { return f.is_zero(); }), forms.end());
  return Ideal(ring, FormSpace::span(ring, 1, forms).polys());
}

std::string CurveRecipe::name() const {
  switch (kind) {
    case RecipeKind::RationalNormal: return "rnc" + std::to_string(n);
    case RecipeKind::HyperellipticDeterminantal: return "g2d12";
    case RecipeKind::VeronesePlaneQuartic: return "ver-g3d12";
    case RecipeKind::NodalQuintic: return "g2d9";
    case RecipeKind::PointSet: return "points" + std::to_string(points.size());
  }
  return "?";
}

int CurveRecipe::genus() const {
  switch (kind) {
    case RecipeKind::RationalNormal: return 0;
    case RecipeKind::HyperellipticDeterminantal: return 2;
    case RecipeKind::VeronesePlaneQuartic: return 3;
    case RecipeKind::NodalQuintic: return 2;
    case RecipeKind::PointSet: break;
  }
  throw InvalidArgument("a point set has no genus");
}

int CurveRecipe::degree() const {
  switch (kind) {
    case RecipeKind::RationalNormal: return n;
    case RecipeKind::HyperellipticDeterminantal: return 12;
    case RecipeKind::VeronesePlaneQuartic: return 12;
    case RecipeKind::NodalQuintic: return 9;
    case RecipeKind::PointSet: return static_cast<int>(points.size());
  }
  return 0;
}

std::vector<std::string> recipe_names() {
  return {"rnc", "twisted-cubic", "points2", "points5", "g2d9", "g2d12", "ver-g3d12"};
}

CurveRecipe recipe_by_name(const std::string& name, int n, std::uint64_t seed) {
  CurveRecipe r;
  r.seed = seed;
  if (name == "rnc") {
    if (n < 1) throw InvalidArgument("rnc needs a degree n >= 1");
    r.kind = RecipeKind::RationalNormal;
    r.n = n;
  } else if (name == "twisted-cubic") {
    r.kind = RecipeKind::RationalNormal;
    r.n = 3;
  } else if (name == "points2") {
    r.kind = RecipeKind::PointSet;
    r.ambient = 2;
    r.points = {{1, 0, 0}, {0, 1, 0}};
  } else if (name == "points5") {
    r.kind = RecipeKind::PointSet;
    r.ambient = 3;
    r.points = {{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}, {1, 1, 1, 1}};
  } else if (name == "g2d9") {
    r.kind = RecipeKind::NodalQuintic;
  } else if (name == "g2d12") {
    r.kind = RecipeKind::HyperellipticDeterminantal;
  } else if (name == "ver-g3d12") {
    r.kind = RecipeKind::VeronesePlaneQuartic;
  } else {
    throw InvalidArgument("unknown recipe '" + name + "'");
  }
  return r;
}

namespace {

std::vector<Polynomial> variables(const Ring& R) {
  std::vector<Polynomial> v;
  for (int i = 0; i < R->nvars(); ++i) v.push_back(Polynomial::variable(R, i));
  return v;
}

// A minimal generating set; a basis of the span when all generators share a degree.
Ideal tidy(const Ideal& I) {
  if (I.is_zero()) return I;
  int d = I.generators()[0].weighted_degree();
  bool single = std::all_of(I.generators().begin(), I.generators().end(),
                            [d](const Polynomial& f) { return f.weighted_degree() == d; });
  if (single) return Ideal(I.ring(), FormSpace::span(I.ring(), d, I.generators()).polys());
  return minimal_generators(I);
}

Ideal nodal_quintic(const CurveRecipe& r, std::uint32_t prime) {
  Ring S = make_standard_ring("x", 3, prime);
  std::vector<Ideal> nodes = {make_ideal(S, {"x_0", "x_1"}), make_ideal(S, {"x_0", "x_2"}), make_ideal(S, {"x_1", "x_2"}),
                              make_ideal(S, {"x_0-x_1", "x_1-x_2"})};
  for (auto& N : nodes) N = power(N, 2);
  Ideal I = intersect_ideals(nodes);
  auto M = truncate_ideal(5, I);
  Ring R = make_standard_ring("y", static_cast<int>(M.size()), prime);
  Ideal K = kernel_of_ring_map(M, R);
  LinearChange g = random_linear_change(R, r.seed);
  Ideal gK = g.apply(K);

  // add y_8 and eliminate it
  const int m = R->nvars();
  std::vector<std::string> keep;
  for (int i = 0; i + 1 < m; ++i) keep.push_back(R->var_name(i));
  Ring R2 = make_ring({VariableBlock{"y", keep, {1}}, VariableBlock{"e", {R->var_name(m - 1)}, {1}}}, prime);
  auto gens = transfer(gK.generators(), R2);
  gens.push_back(Polynomial::variable(R2, m - 1));
  const int eb = 1;
  Ideal J = eliminate(Ideal(R2, std::move(gens)), std::span<const int>(&eb, 1));

  Ring P7 = make_standard_ring("x", m - 1, prime);
  std::vector<int> map(m - 1);
  std::iota(map.begin(), map.end(), 0);
  std::vector<Polynomial> out;
  for (const auto& f : J.generators()) out.push_back(f.rename(P7, map));
  return minimal_generators(Ideal(P7, std::move(out)));
}

Ideal determinantal_g2d12(std::uint32_t prime) {
  std::vector<std::string> xs, ys;
  for (int i = 0; i < 7; ++i) xs.push_back("x_" + std::to_string(i));
  for (int i = 0; i < 4; ++i) ys.push_back("y_" + std::to_string(i));
  Ring R = make_ring({VariableBlock{"x", xs, {1}}, VariableBlock{"y", ys, {1}}}, prime);
  auto x = [&](int i) { return Polynomial::variable(R, i); };
  auto y = [&](int i) { return Polynomial::variable(R, 7 + i); };
  PolyMatrix m(5);
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) m[i].push_back(x(i + j));
    m[i].push_back(y(i));
  }
  for (int j = 0; j < 4; ++j) m[4].push_back(y(j));
  m[4].push_back(x(1) + x(2) + x(3) + x(4) + x(5));
  return tidy(Ideal(R, minors(2, m)));
}

Ideal veronese_quartic(std::uint32_t prime) {
  Ring P2 = make_standard_ring("x", 3, prime);
  Polynomial F = parse_polynomial(P2, "x_0^4+x_1^4+x_2^4");
  std::vector<Polynomial> cubics;
  for (const auto& m : monomials_of_degree(3, 3)) cubics.push_back(Polynomial::monomial(P2, m));
  Ring P9 = make_standard_ring("x", static_cast<int>(cubics.size()), prime);
  return minimal_generators(kernel_of_ring_map(cubics, P9, std::span<const Polynomial>(&F, 1)));
}

void validate(const Ideal& I, int dim, std::int64_t degree, const std::string& what) {
  HilbertData h = hilbert_data(I, 0);
  if (h.projective_dim() != dim || h.degree != degree) {
    throw DegenerateInput(what + ": expected dimension " + std::to_string(dim) + " and degree " + std::to_string(degree) +
                          ", got " + std::to_string(h.projective_dim()) + " and " + std::to_string(h.degree));
  }
}

}  // namespace

Ideal curve_ideal(const CurveRecipe& r, std::uint32_t prime) {
  Ideal I;
  int dim = 1;
  switch (r.kind) {
    case RecipeKind::RationalNormal: {
      Ring R = make_standard_ring("x", r.n + 1, prime);
      auto v = variables(R);
      if (r.n == 1) {
        I = Ideal::zero(R);
      } else {
        I = Ideal(R, minors(2, hankel_matrix(2, r.n, v)));
      }
      break;
    }
    case RecipeKind::HyperellipticDeterminantal: I = determinantal_g2d12(prime); break;
    case RecipeKind::VeronesePlaneQuartic: I = veronese_quartic(prime); break;
    case RecipeKind::NodalQuintic: I = nodal_quintic(r, prime); break;
    case RecipeKind::PointSet: {
      Ring R = make_standard_ring("x", r.ambient + 1, prime);
      std::vector<Ideal> pts;
      for (const auto& p : r.points) {
        if (static_cast<int>(p.size()) != r.ambient + 1) throw InvalidArgument("point has the wrong number of coordinates");
        pts.push_back(point_ideal(R, p));
      }
      I = tidy(intersect_ideals(pts));
      dim = 0;
      break;
    }
  }
  validate(I, dim, r.degree(), r.name());
  return I;
}

namespace {

struct GraphRings {
  Ring T;      // x variables and t
  Ring image;  // x block (1,0) and y block (0,1)
};

GraphRings graph_rings(const Ring& X, int m) {
  std::vector<std::string> xs;
  bool y_taken = false;
  for (int i = 0; i < X->nvars(); ++i) {
    xs.push_back(X->var_name(i));
    if (xs.back().rfind("y", 0) == 0) y_taken = true;
  }
  auto txs = xs;
  txs.push_back("__t");
  GraphRings g;
  g.T = make_ring({VariableBlock{"x", txs, {1}}}, X->prime());
  std::vector<std::string> ys;
  for (int j = 0; j < m; ++j) ys.push_back((y_taken ? "z_" : "y_") + std::to_string(j));
  g.image = make_ring({VariableBlock{"x", xs, {1, 0}}, VariableBlock{"y", ys, {0, 1}}}, X->prime());
  return g;
}

}  // namespace

BlowupPresentation blowup_ideal(const Ideal& I, std::span<const Polynomial> quadrics,
                                std::span<const Polynomial> targets_mod) {
  const Ring& X = I.ring();
  if (!X->standard_graded()) throw InvalidArgument("blowup needs a standard graded ring");
  if (quadrics.empty()) throw InvalidArgument("blowup needs at least one quadric");
  for (const auto& q : quadrics) {
    if (!same_ring(q.ring(), X)) throw RingMismatch("quadric outside the ideal's ring");
    if (!q.is_homogeneous() || q.total_degree() != 2) throw InvalidArgument("blowup generators must be quadrics");
  }
  const int n = X->nvars();
  GraphRings g = graph_rings(X, static_cast<int>(quadrics.size()));
  std::vector<int> into_T(n);
  std::iota(into_T.begin(), into_T.end(), 0);
  Polynomial t = Polynomial::variable(g.T, n);
  std::vector<Polynomial> targets;
  for (int i = 0; i < n; ++i) targets.push_back(Polynomial::variable(g.T, i));
  for (const auto& q : quadrics) targets.push_back(t * q.rename(g.T, into_T));
  std::vector<Polynomial> rel;
  for (const auto& f : targets_mod) {
    if (!f.is_zero()) rel.push_back(f.rename(g.T, into_T));
  }
  BlowupPresentation B;
  B.ideal = minimal_generators(kernel_of_ring_map(targets, g.image, rel));
  B.source = I;
  B.quadrics.assign(quadrics.begin(), quadrics.end());
  return B;
}

Ideal fiber_over_point(const BlowupPresentation& B, const PointCoords& p, std::optional<int> chart) {
  const Ring& R = B.ideal.ring();
  const int n = B.x_vars();
  if (static_cast<int>(p.size()) != n) throw InvalidArgument("point has the wrong number of coordinates");
  Ideal J = B.ideal + point_ideal(R, p);
  if (!chart) {
    auto gb = J.groebner();
    return Ideal(R, std::vector<Polynomial>(gb->polys().begin(), gb->polys().end()));
  }
  const int c = *chart;
  if (c < 0 || c >= n) throw InvalidArgument("chart variable out of range");
  if (p[c] % R->prime() == 0) throw InvalidArgument("chart variable vanishes at the point");

  std::vector<std::string> xs, ys;
  for (int i = 0; i < n; ++i) {
    if (i != c) xs.push_back(R->var_name(i));
  }
  for (int i = n; i < R->nvars(); ++i) ys.push_back(R->var_name(i));
  std::vector<VariableBlock> blocks;
  if (!xs.empty()) blocks.push_back({"x", xs, {1, 0}});
  blocks.push_back({"y", ys, {0, 1}});
  Ring A = make_ring(std::move(blocks), R->prime());
  std::vector<int> map(R->nvars());
  for (int i = 0; i < R->nvars(); ++i) map[i] = i < c ? i : (i == c ? -1 : i - 1);
  std::vector<Polynomial> gens;
  for (const auto& f : J.generators()) gens.push_back(f.specialize(c, 1).rename(A, map));
  Ideal D(A, std::move(gens));
  auto gb = D.groebner();
  return Ideal(A, std::vector<Polynomial>(gb->polys().begin(), gb->polys().end()));
}

Ideal restrict_secant_to_fiber(const BlowupPresentation& B, std::span<const Polynomial> secant, const PointCoords& p,
                               int chart) {
  bool trivial = std::all_of(secant.begin(), secant.end(), [](const Polynomial& f) { return f.is_zero(); });
  if (trivial) return fiber_over_point(B, p, chart);
  BlowupPresentation strict = blowup_ideal(B.source, B.quadrics, secant);
  return fiber_over_point(strict, p, chart);
}

std::vector<std::int64_t> hilbert_values(const Ideal& I, int bound) { return hilbert_data(I, bound).values; }

ProjectionCheck secant_fiber_projection_check(const Ideal& X, std::span<const Polynomial> secant, const PointCoords& p,
                                              int chart) {
  const Ring& S = X.ring();
  const int n = S->nvars();
  if (static_cast<int>(p.size()) != n) throw InvalidArgument("point has the wrong number of coordinates");
  const auto& F = S->field();
  std::vector<std::uint32_t> pt(p.begin(), p.end());
  for (auto& c : pt) c %= F.prime();
  for (const auto& f : X.generators()) {
    if (f.evaluate(pt) != 0) throw InvalidArgument("point is not on the variety");
  }
  // smooth: Jacobian rank equals the codimension
  DenseMatrix jac(X.size(), n);
  for (std::size_t r = 0; r < X.size(); ++r) {
    for (int i = 0; i < n; ++i) jac.at(r, i) = X.generators()[r].differentiate(i).evaluate(pt);
  }
  int codim = n - hilbert_data(X, 0).krull_dim;
  if (static_cast<int>(rank_serial(jac, F)) != codim) throw InvalidArgument("point is not a smooth point of the variety");

  BlowupPresentation B = blowup_ideal(X, X.generators());
  Ideal fib = restrict_secant_to_fiber(B, secant, p, chart);

  const Ring& G = B.ideal.ring();
  std::vector<std::string> ys;
  for (int i = n; i < G->nvars(); ++i) ys.push_back(G->var_name(i));
  Ring Y = make_ring({VariableBlock{"y", ys, {1}}}, S->prime());

  ProjectionCheck out;
  std::vector<Polynomial> ypart;
  std::uint32_t xmask = 0;
  const Ring& A = fib.ring();
  for (int i = 0; i < A->nvars(); ++i) {
    if (A->block_of(i) == 0 && A->blocks()[0].name == "x") xmask |= 1u << i;
  }
  for (const auto& f : fib.generators()) {
    if (!f.involves_any(xmask)) ypart.push_back(transfer(f, Y));
  }
  out.fiber = Ideal(Y, std::move(ypart));

  // y_j -> dq_j(p) on X
  std::vector<Polynomial> diffs;
  for (const auto& q : B.quadrics) {
    std::vector<Term> t;
    for (int i = 0; i < n; ++i) {
      std::uint32_t c = q.differentiate(i).evaluate(pt);
      if (c) t.push_back({Monomial::variable(i), c});
    }
    diffs.push_back(Polynomial::from_terms(S, std::move(t)));
  }
  out.projection = kernel_of_ring_map(diffs, Y, X.generators());

  const int bound = 6;
  out.hilbert_fiber = hilbert_values(out.fiber, bound);
  out.hilbert_projection = hilbert_values(out.projection, bound);
  out.hilbert_match = out.hilbert_fiber == out.hilbert_projection;
  out.fiber_in_projection = out.projection.contains(out.fiber);
  out.projection_in_fiber = out.fiber.contains(out.projection);
  return out;
}

}  // namespace seclab
