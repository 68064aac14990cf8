#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "seclab/formspace.hpp"
#include "seclab/groebner.hpp"
#include "seclab/hilbert.hpp"

namespace seclab {

/// Generators in a ring plus a reduced Groebner basis cache keyed by order.
/// Copies share the cache; the cache is guarded and safe to use from
/// several threads.
class Ideal {
 public:
  Ideal() = default;
  Ideal(Ring ring, std::vector<Polynomial> gens);
  static Ideal zero(Ring ring) { return Ideal(std::move(ring), {}); }

  const Ring& ring() const { return ring_; }
  std::span<const Polynomial> generators() const { return gens_; }
  std::size_t size() const { return gens_.size(); }
  /// All generators zero (or none).
  bool is_zero() const { return gens_.empty(); }
  /// Homogeneous for the total weight of the ring.
  bool is_homogeneous() const;
  /// Homogeneous for every grading component (bihomogeneous, ...).
  bool is_multi_homogeneous() const;
  int max_generator_degree() const;

  /// Reduced GB, computed once per (order, degree limit) and cached.
  std::shared_ptr<const GroebnerBasis> groebner(const MonomialOrder& ord, const GroebnerOptions& opts = {}) const;
  /// Grevlex basis.
  std::shared_ptr<const GroebnerBasis> groebner() const;

  bool contains(const Polynomial& f) const { return groebner()->contains(f); }
  bool contains(const Ideal& J) const;
  bool is_unit() const { return groebner()->is_unit(); }

 private:
  struct Cache;
  Ring ring_;
  std::vector<Polynomial> gens_;
  std::shared_ptr<Cache> cache_;
};

bool operator==(const Ideal& a, const Ideal& b);

/// Reduced GB polynomials of I for `ord`.
std::vector<Polynomial> groebner_basis(const Ideal& I, const MonomialOrder& ord, const GroebnerOptions& opts = {});
Polynomial normal_form(const Polynomial& f, const Ideal& I, const MonomialOrder& ord);
Polynomial normal_form(const Polynomial& f, const Ideal& I);

/// The ring with the listed blocks removed (same weights, same prime).
Ring drop_blocks(const Ring& ring, std::span<const int> blocks);
/// I intersected with the subring free of the listed blocks, computed from
/// an elimination-order GB; the result lives in drop_blocks(ring, blocks).
Ideal eliminate(const Ideal& I, std::span<const int> blocks, const GroebnerOptions& opts = {});
Ideal eliminate(const Ideal& I, const std::vector<std::string>& block_names, const GroebnerOptions& opts = {});

/// Intersection; primary route t*A + (1-t)*B with t eliminated. With a
/// degree limit (homogeneous input) the result is exact in degrees <= limit
/// and is computed by graded linear algebra instead.
Ideal intersect_ideals(std::span<const Ideal> ideals, std::optional<int> degree_limit = std::nullopt);
/// The degree-limited route on its own, for cross checks.
Ideal intersect_ideals_graded(std::span<const Ideal> ideals, int degree_limit);

/// Ideal of relations among `targets` (all in one ring T, each weighted
/// homogeneous), with variable i of `image_ring` mapped to targets[i].
/// `relations` are extra generators in T (work in T/relations). Any
/// parameter such as the blowup t is simply a variable of T; every T
/// variable is eliminated.
Ideal kernel_of_ring_map(std::span<const Polynomial> targets, const Ring& image_ring,
                         std::span<const Polynomial> relations = {}, const GroebnerOptions& opts = {});

/// Basis of the graded piece I_d, one form per leading monomial of degree d
/// (m - NF(m)), in descending leading-monomial order.
std::vector<Polynomial> truncate_ideal(int d, const Ideal& I);
FormSpace graded_piece(const Ideal& I, int d);

/// A minimal homogeneous generating set drawn from the given generators
/// (degree by degree, dropping those inside the ideal of the others).
Ideal minimal_generators(const Ideal& I);

/// Hilbert data of S/I from the grevlex initial ideal. Standard graded rings only.
HilbertData hilbert_data(const Ideal& I, int degree_bound);

/// Invertible linear substitution x_i -> sum_j a_ij x_j on a standard graded ring.
struct LinearChange {
  Ring ring;
  DenseMatrix matrix;
  DenseMatrix inverse;
  std::vector<Polynomial> images;
  std::vector<Polynomial> inverse_images;

  Polynomial apply(const Polynomial& f) const { return f.substitute(images); }
  Polynomial apply_inverse(const Polynomial& f) const { return f.substitute(inverse_images); }
  Ideal apply(const Ideal& I) const;
};

/// Deterministic in the seed; entries are raw mt19937_64 outputs mod p,
/// resampled until the matrix is invertible.
LinearChange random_linear_change(const Ring& ring, std::uint64_t seed);
LinearChange linear_change_from_matrix(const Ring& ring, const DenseMatrix& m);

/// I + J, same ring.
Ideal operator+(const Ideal& a, const Ideal& b);
/// Product ideal.
Ideal operator*(const Ideal& a, const Ideal& b);
Ideal power(const Ideal& I, int e);
/// Ideal generated by the listed forms, parsed in `ring`.
Ideal make_ideal(const Ring& ring, std::initializer_list<const char*> gens);

}  // namespace seclab
