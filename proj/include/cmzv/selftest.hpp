#pragma once

#include <string>
#include <vector>

#include "cmzv/config.hpp"

namespace cmzv {

enum class SelftestLevel { Quick, Full };

struct CheckResult {
  std::string key;
  bool pass = false;
  std::string detail;
};

// Runs the identity suites (products, derivations, cutoff identities,
// region checks) at the quick (weight <= 4) or full (weight <= 6)
// envelope.  Deterministic for a fixed seed.
std::vector<CheckResult> run_selftest(SelftestLevel level, const Config& cfg);

// Renders the pass/fail matrix; returns the number of failures.
int print_selftest_report(const std::vector<CheckResult>& results,
                          SelftestLevel level, const Config& cfg,
                          std::string& out);

}  // namespace cmzv
