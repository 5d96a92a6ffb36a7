#pragma once

#include <cstddef>
#include <functional>
#include <map>
#include <string>
#include <vector>

namespace resdil {

struct SelftestCase {
  std::string module;
  std::string invariant;
  /// Returns the observed error; the case passes when error <= tolerance.
  std::function<double()> error;
  double tolerance;
};

struct SelftestResult {
  std::string module;
  std::string invariant;
  double error;
  double tolerance;
  bool passed;
  /// Set when the check threw instead of returning.
  std::string exception;
};

struct SelftestReport {
  std::vector<SelftestResult> results;
  /// module -> (passed, total).
  std::map<std::string, std::pair<std::size_t, std::size_t>> per_module;
  bool all_passed() const;
  std::string to_text() const;
};

/// The built-in invariant suite, a few cheap checks per module.
const std::vector<SelftestCase>& selftest_registry();

struct SelftestOptions {
  /// Multiplies every tolerance.
  double tolerance_scale = 1.0;
  /// "module/invariant" whose tolerance is replaced by -1 so it must fail.
  /// Test hook for the reporting path.
  std::string corrupt;
};

SelftestReport run_selftest(const SelftestOptions& options = {});

}  // namespace resdil
