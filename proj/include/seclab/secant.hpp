#pragma once

#include <optional>
#include <string>

#include "seclab/betti.hpp"
#include "seclab/formspace.hpp"
#include "seclab/ideal.hpp"

namespace seclab {

enum class JoinVariant {
  /// k+1 copies y_1..y_{k+1}, the last translated by -(y_1+...+y_k);
  /// the secant ideal lives on the last block.
  RuledJoin,
  /// k+1 copies plus the x block and the linear forms y_1+...+y_{k+1}-x.
  WithXBlock,
};

std::string to_string(JoinVariant v);
JoinVariant parse_join_variant(std::string_view s);

/// The join ideal and the information needed to eliminate it.
struct JoinIdeal {
  Ideal ideal;
  JoinVariant variant;
  int k = 1;
  /// Blocks to eliminate, in ideal.ring().
  std::vector<int> eliminate;
  /// After elimination, variable i of the surviving block is x_i.
  int kept_block = 0;
};

/// Variables are named y_{i,j} (copy i = 1..k+1, coordinate j); the x block
/// keeps the names of I's ring.
JoinIdeal join_ideal(const Ideal& I, int k, JoinVariant variant);

/// I(Sigma_k) as an ideal of I's ring. With a degree limit the result is
/// exact in degrees <= limit only.
Ideal secant_ideal_elimination(const Ideal& I, int k, JoinVariant variant = JoinVariant::RuledJoin,
                               const GroebnerOptions& opts = {});

/// Both variants; throws CertificationFailure when their reduced Groebner
/// bases differ.
Ideal secant_ideal_checked(const Ideal& I, int k, const GroebnerOptions& opts = {});

/// Forms of degree d+1 all of whose first partials lie in V.
FormSpace prolong(const FormSpace& V, bool parallel = true);

/// I(Sigma_k)_{k+2} by k prolongations of I_2. I must be generated by quadrics.
FormSpace secant_degree_piece(const Ideal& I, int k, bool parallel = true);

struct CertificationReport {
  int dim = 0;  ///< projective dimension of V(P)
  std::int64_t degree = 0;
  int projective_dimension = 0;  ///< of S/<P>
  int codimension = 0;
  bool acm = false;
  std::optional<int> expected_dim;
  std::optional<std::int64_t> expected_degree;
  bool certified = false;
  BettiTable betti;
};

/// pd, dim and degree of S/<P>. Certified when S/<P> is Cohen-Macaulay and
/// the dimension and degree equal the given expectations. This is the
/// usual sufficient test that P generates the secant ideal; nothing more is
/// claimed.
CertificationReport certify_generation(const FormSpace& P, std::optional<int> expected_dim,
                                       std::optional<std::int64_t> expected_degree, const BettiOptions& opts = {});

std::string format_certification(const CertificationReport& r);

}  // namespace seclab
