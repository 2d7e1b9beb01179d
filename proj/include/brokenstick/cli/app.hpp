#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "brokenstick/cli/records.hpp"

namespace brokenstick::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;

inline constexpr std::uint64_t kDefaultSeed = 42;
inline constexpr const char *kSeedEnvVar = "BROKENSTICK_SEED";

/// Seed from BROKENSTICK_SEED when set and parseable, else kDefaultSeed.
std::uint64_t default_seed();

struct RunConfig {
  std::string subcommand;
  Problem problem = Problem::none;
  bool problem_given = false; // table: restrict to one problem
  int k = 3;
  int n = 3;
  int k_max = 3;
  int n_max = 3;
  std::uint64_t trials = 100'000;
  std::uint64_t seed = kDefaultSeed;
  int streams = 8;
  Format format = Format::plain;
  Mode mode = Mode::exact;
  sim::Generator generator = sim::Generator::uniform_cuts;
  bool all_pairs = false;
  bool quick = false;
  std::optional<int> corrupt_beta; // reconcile fault injection
};

/// Runs the command line `args` (without the program name). Data goes to
/// `out`, diagnostics to `err`. Returns 0 on success, 1 when an identity or
/// self-test fails, 2 on invalid arguments.
int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

int cmd_exact(const RunConfig &config, std::ostream &out);
int cmd_table(const RunConfig &config, std::ostream &out);
int cmd_simulate(const RunConfig &config, std::ostream &out);
int cmd_reconcile(const RunConfig &config, std::ostream &out);
int cmd_selftest(const RunConfig &config, std::ostream &out);

} // namespace brokenstick::cli
