#pragma once

// The end-to-end acceptance checks, shared by the CLI `suite` command and
// the acceptance test binary.

#include <cstdint>
#include <string>
#include <vector>

namespace k3 {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool passed = false;
  std::string expected;
  std::string computed;
  /// Wall time; kept out of deterministic output.
  double seconds = 0.0;
};

inline constexpr std::uint64_t kDefaultSuiteSeed = 20240601;
inline constexpr int kCriterionCount = 14;

struct SuiteOptions {
  /// The fast suite skips the two exhaustive F2^20 censuses (1 and 2).
  bool full = true;
  std::uint64_t seed = kDefaultSuiteSeed;
};

/// Runs criterion `id` (1 .. 14). Errors are caught and reported as failures.
CriterionResult run_criterion(int id, std::uint64_t seed = kDefaultSuiteSeed);

std::vector<CriterionResult> run_suite(const SuiteOptions& options);

/// "PASS  3  solvability sweep: ..." style line.
std::string format_line(const CriterionResult& r);

}  // namespace k3
