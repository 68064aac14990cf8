#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "seclab/field.hpp"
#include "seclab/geometry.hpp"

namespace seclab {

/// Process exit codes of the command line tool.
enum ExitCode : int {
  kExitOk = 0,
  kExitError = 1,
  kExitUsage = 2,
  kExitResource = 3,  ///< budget exceeded or table incomplete
  kExitCertification = 4,
  kExitDegenerate = 5,
};

/// Options shared by every subcommand.
struct RunConfig {
  std::uint32_t prime = kDefaultPrime;
  std::uint64_t seed = CurveRecipe::kDefaultSeed;
  std::string order = "grevlex";  ///< grevlex | lex, for printed Groebner bases
  std::optional<int> max_degree;
  std::optional<int> rows, cols;
  std::string format = "text";  ///< text | json
  int threads = 0;              ///< 0: OpenMP default
  bool log = false;             ///< phase timings on the error stream
};

/// Run the tool on `args` (without the program name). Everything
/// deterministic goes to `out`; timings and diagnostics go to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace seclab
