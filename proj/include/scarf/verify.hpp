#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace scarf::verify {

inline constexpr std::uint64_t kDefaultSeed = 20240611;

enum class CaseStatus { pass, fail, skipped };
const char* to_string(CaseStatus s) noexcept;

struct VerificationCase {
  std::string name;
  /// The statement the case checks.
  std::string anchor;
  std::string input;
  std::string expected;
  std::string observed;
  CaseStatus status = CaseStatus::skipped;
  std::string skip_reason;
  double milliseconds = 0.0;
};

struct SuiteReport {
  std::string suite;
  std::uint64_t seed = kDefaultSeed;
  /// Non-positive means unlimited.
  double budget_seconds = 0.0;
  double seconds = 0.0;
  /// Sorted by case name.
  std::vector<VerificationCase> cases;

  std::size_t count(CaseStatus s) const;
  /// No failures. Skips are reported but do not fail the suite.
  bool ok() const { return count(CaseStatus::fail) == 0; }
};

/// worked-examples, edge-ideal-sweep, power-verdicts, forest-oracle,
/// join-induced, closed-forms, scarf-oracle, vertex-removal.
const std::vector<std::string>& suite_names();

/// Runs every case of the suite in a fixed order. Once the budget is spent
/// the remaining cases are recorded as skipped. Throws for an unknown suite.
SuiteReport run_suite(std::string_view suite, double budget_seconds = 0.0, std::uint64_t seed = kDefaultSeed);

std::string report_to_json(const SuiteReport& report);
std::string report_to_text(const SuiteReport& report);

}  // namespace scarf::verify
