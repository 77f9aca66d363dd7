#pragma once

// Identity batteries run by `dlcalc verify <suite>`.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace dl {

struct CheckResult {
  std::string name;
  bool ok = true;
  long instances = 0;
  std::string detail;  // first counterexample, or a summary
};

struct SuiteResult {
  std::string suite;
  std::vector<CheckResult> checks;
  bool ok() const;
};

struct SuiteBounds {
  std::optional<int> maxidx;
  std::optional<int> maxdeg;
  std::optional<int> cap;
  std::optional<int> n;
};

const std::vector<std::string>& suite_names();
/// Throws Unsupported for an unknown suite name.
SuiteResult run_suite(std::string_view name, const SuiteBounds& bounds = {});

/// Dimensions of A_* in degrees 0..maxdeg, counted from the generator degrees 2^i - 1.
std::vector<int> dual_steenrod_poincare(int maxdeg);
/// Dimensions of a polynomial algebra on variables of the given degrees.
std::vector<int> polynomial_poincare(const std::vector<int>& var_degrees, int maxdeg);

}  // namespace dl
