#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "seclab/ring.hpp"

namespace seclab {

/// Integer polynomial in t, coefficient k at index k.
using IntPoly = std::vector<std::int64_t>;

/// Hilbert series data of S/I for a standard graded S in n variables:
///   HS(t) = numerator(t) / (1-t)^n = reduced(t) / (1-t)^krull_dim.
struct HilbertData {
  int nvars = 0;
  IntPoly numerator;
  IntPoly reduced;
  int krull_dim = 0;
  std::int64_t degree = 0;
  std::vector<std::int64_t> values;  ///< h(0..bound)

  /// Dimension of the projective scheme, -1 for the empty set.
  int projective_dim() const { return krull_dim - 1; }
  std::int64_t hilbert_function(int d) const;
  /// Smallest d0 with h(d) equal to the Hilbert polynomial for all d >= d0.
  int regularity_index() const;
};

/// Numerator of the Hilbert series of S/J for a monomial ideal J given by
/// generators (not necessarily minimal) in n variables.
IntPoly hilbert_numerator(std::span<const Monomial> gens, int nvars);

HilbertData hilbert_from_numerator(IntPoly numerator, int nvars, int bound);
HilbertData hilbert_from_leads(std::span<const Monomial> leads, int nvars, int bound);

IntPoly poly_mul(const IntPoly& a, const IntPoly& b);
IntPoly poly_add(const IntPoly& a, const IntPoly& b);
/// (1-t)^k
IntPoly one_minus_t_pow(int k);
void trim(IntPoly& p);

}  // namespace seclab
