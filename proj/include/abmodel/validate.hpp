#pragma once

#include <string>
#include <vector>

#include "abmodel/config.hpp"

namespace abmodel {

/// One cross-check of a closed form against its independent numerical route.
struct CheckResult {
  std::string name;
  double value = 0;      ///< independently computed value
  double reference = 0;  ///< closed-form / expected value
  double abs_error = 0;
  double rel_error = 0;
  double tolerance = 0;  ///< relative tolerance the check is held to
  bool passed = false;
};

/// Runs the oracle suite plus the route-identity and round-trip checks on
/// the given configuration. Never throws on a failed tolerance; failures are
/// reported in the results. Configuration errors still throw.
std::vector<CheckResult> run_validation(const RunConfig& cfg);

}  // namespace abmodel
