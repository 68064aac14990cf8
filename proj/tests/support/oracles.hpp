#pragma once

// Independent reference computations used only by the tests. None of these
// touch the Groebner engine.

#include "seclab/formspace.hpp"
#include "seclab/ideal.hpp"

namespace seclab::testing {

/// I_d as the span of all monomial multiples m*g with deg(m g) = d.
FormSpace multiples_piece(const Ring& ring, std::span<const Polynomial> gens, int d);

/// dim S_d - dim I_d by rank of the multiples matrix.
std::int64_t hilbert_function_direct(const Ring& ring, std::span<const Polynomial> gens, int d);

/// Degree-d forms free of the variables in `mask`, as a FormSpace.
FormSpace monomial_subspace_free_of(const Ring& ring, int d, std::uint32_t mask);

/// Brute-force minimal Betti numbers of S/I for homogeneous I in a standard
/// graded ring: build the minimal free resolution degree by degree. Returns
/// beta[i][j] for j <= max_degree.
std::vector<std::vector<std::int64_t>> brute_force_betti(const Ideal& I, int max_degree);

/// {f in S_{d+1} : every partial of f lies in V}, solved as one linear system
/// over the full monomial basis.
FormSpace brute_force_prolongation(const FormSpace& V);

}  // namespace seclab::testing
