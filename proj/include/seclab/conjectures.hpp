#pragma once

#include <optional>
#include <string>
#include <vector>

#include "seclab/secant.hpp"

namespace seclab {

struct ConjectureCheck {
  std::string name;
  bool applicable = true;
  bool pass = false;
  std::string detail;
};

struct SecantConjectureReport {
  int g = 0, d = 0, k = 0;
  /// d >= 2g + 2k + 1; the checks are still run when this fails.
  bool in_range = true;
  std::optional<FormSpace> piece;
  CertificationReport certification;
  RegularityReport regularity;
  std::vector<ConjectureCheck> checks;

  bool all_pass() const;
};

/// deg Sigma_k where a closed formula is used: d for the curve itself and
/// C(d-1, 2) - g for the secant line variety; none for k >= 2.
std::optional<std::int64_t> expected_secant_degree(int g, int d, int k);

/// Sigma_k of a curve of genus g and degree d through prolongation, its
/// Betti table, and the evidence for the regularity and table-shape
/// statements: reg(I) = 2k+1 (rational normal) or 2k+3; ACM; generated in
/// degree k+2; for rational normal curves also reg(I) = k+2 (the
/// Eagon-Northcott resolution); linear syzygies through step p = d - 2g - 2k - 1; g nonzero
/// entries in the last row; corner beta_{c, c+2k+2} = C(g+k, k+1). The
/// report records evidence only. Throws CertificationFailure when the
/// prolongation ideal is not certified (use the elimination route then).
SecantConjectureReport check_secant_conjectures(const Ideal& curve, int g, int d, int k, const BettiOptions& opts = {});

std::string format_conjecture_report(const SecantConjectureReport& r);

}  // namespace seclab
