// Named verification suite: every analytic statement the library realizes is
// re-checked numerically over seeded random instances.  Shared by the CLI
// `verify` subcommand and the acceptance tests.

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gqm/deformation.hpp"

namespace gqm {

struct CheckResult {
  std::string name;       // statement whose hypothesis/conclusion is checked
  double measured = 0.0;
  double threshold = 0.0;
  bool upper_bound = true;  // pass means measured <= threshold (>= otherwise)
  bool pass = false;
};

struct VerifySettings {
  std::uint64_t seed = 0;
  int instances = 20;
  double hbar = 1.0;
  // When present, the closure and non-degeneracy checks also audit this
  // deformation at seeded sample points of the given Hilbert dimension.
  std::optional<DeformationSpec> user_deformation;
  int user_dim = 2;
};

std::vector<CheckResult> run_verification(const VerifySettings& settings);

}  // namespace gqm
