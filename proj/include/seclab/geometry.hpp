#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "seclab/ideal.hpp"

namespace seclab {

using PolyMatrix = std::vector<std::vector<Polynomial>>;

/// Entry (i, j) is vars[i + j].
PolyMatrix hankel_matrix(int rows, int cols, std::span<const Polynomial> vars);
/// All t x t minors, rows and columns chosen in colex order (the order
/// Macaulay2 uses), expanded; zero minors and repeats up to sign dropped.
std::vector<Polynomial> minors(int t, const PolyMatrix& m);

/// Homogeneous coordinates of a point, not all zero.
using PointCoords = std::vector<std::uint32_t>;
/// The linear ideal of a point (2x2 minors of [x; p]). A point with fewer
/// coordinates than the ring lives in the first variables.
Ideal point_ideal(const Ring& ring, const PointCoords& p);

enum class RecipeKind { RationalNormal, HyperellipticDeterminantal, VeronesePlaneQuartic, NodalQuintic, PointSet };

struct CurveRecipe {
  RecipeKind kind = RecipeKind::RationalNormal;
  int n = 3;  ///< RNC degree
  /// Seed of the random coordinate change in the nodal quintic pipeline.
  std::uint64_t seed = kDefaultSeed;
  std::vector<PointCoords> points;  ///< PointSet
  int ambient = 2;                  ///< PointSet: projective dimension

  static constexpr std::uint64_t kDefaultSeed = 20080301;

  std::string name() const;
  /// Genus and degree (curves only).
  int genus() const;
  int degree() const;
};

/// Named recipes: "rnc" (with n), "twisted-cubic", "points2", "points5",
/// "g2d9", "g2d12", "ver-g3d12".
CurveRecipe recipe_by_name(const std::string& name, int n = 0, std::uint64_t seed = CurveRecipe::kDefaultSeed);
std::vector<std::string> recipe_names();

/// Homogeneous ideal of the recipe's variety. Validated against the
/// declared dimension and degree; throws DegenerateInput otherwise.
Ideal curve_ideal(const CurveRecipe& r, std::uint32_t prime = kDefaultPrime);

/// Graph of the rational map given by the quadrics in P^n x P^{m-1}.
struct BlowupPresentation {
  Ideal ideal;  ///< in blocks x (weights 1,0) and y (weights 0,1)
  Ideal source;
  std::vector<Polynomial> quadrics;
  int x_vars() const { return source.ring()->nvars(); }
};

/// Kernel of x_i -> x_i, y_j -> t * q_j, minimalized. `targets_mod` are
/// extra relations in the source ring (the strict transform of V(targets_mod)
/// is then computed instead of the blowup of P^n).
BlowupPresentation blowup_ideal(const Ideal& I, std::span<const Polynomial> quadrics,
                                std::span<const Polynomial> targets_mod = {});

/// I(p) + I(B). With a chart variable, dehomogenized there (variable set to
/// 1 and removed) and returned in the remaining x and y variables.
Ideal fiber_over_point(const BlowupPresentation& B, const PointCoords& p, std::optional<int> chart);

/// Fiber over p of the strict transform of the hypersurface (or variety)
/// cut out by `secant`: the blowup of V(secant) along X, plus I(p),
/// dehomogenized at the chart. A zero secant returns the plain fiber.
Ideal restrict_secant_to_fiber(const BlowupPresentation& B, std::span<const Polynomial> secant, const PointCoords& p,
                               int chart);

struct ProjectionCheck {
  Ideal fiber;       ///< y-part of the exceptional fiber of the secant transform
  Ideal projection;  ///< X projected from its tangent line at p, in the same y
  bool hilbert_match = false;
  bool fiber_in_projection = false;
  bool projection_in_fiber = false;
  std::vector<std::int64_t> hilbert_fiber, hilbert_projection;
  bool ok() const { return hilbert_match && fiber_in_projection && projection_in_fiber; }
};

/// The fiber coordinates y_j correspond to the differentials dq_j(p); the
/// projection from the tangent line is the kernel of y_j -> dq_j(p) on the
/// curve. Throws InvalidArgument when p is not a smooth point of X.
ProjectionCheck secant_fiber_projection_check(const Ideal& X, std::span<const Polynomial> secant, const PointCoords& p,
                                              int chart);

/// Hilbert function of S/I in degrees 0..bound.
std::vector<std::int64_t> hilbert_values(const Ideal& I, int bound);

}  // namespace seclab
