#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

/// The end-to-end acceptance criteria, shared by `brokenstick selftest`
/// and the acceptance test binary.
namespace brokenstick::cli::acceptance {

/// Seed for the Monte Carlo criteria unless overridden.
inline constexpr std::uint64_t kAcceptanceSeed = 42;

struct Options {
  bool quick = false; // exact-only criteria
  std::uint64_t seed = kAcceptanceSeed;
};

enum class Status { pass, fail, skipped };

struct CriterionResult {
  int id = 0;
  std::string title;
  Status status = Status::fail;
  std::string detail;
  double seconds = 0.0;
};

/// Runs every criterion in order, printing one line per criterion to `log`.
std::vector<CriterionResult> run_all(const Options &options, std::ostream &log);

bool all_passed(const std::vector<CriterionResult> &results);

} // namespace brokenstick::cli::acceptance
