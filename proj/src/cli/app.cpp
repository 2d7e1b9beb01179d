#include "brokenstick/cli/app.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <map>
#include <stdexcept>

#include <CLI11.hpp>

#include "brokenstick/cli/acceptance.hpp"
#include "brokenstick/error.hpp"
#include "brokenstick/exact_core.hpp"
#include "brokenstick/reconcile.hpp"

namespace brokenstick::cli {

namespace {

/// Invalid command-line arguments; maps to exit code 2.
class UsageError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

void require_pair(int k, int n) {
  if (k < 3 || k > n) {
    throw UsageError("require 3 <= k <= n, got k=" + std::to_string(k) + " n=" + std::to_string(n));
  }
}

const std::map<std::string, Format> kFormats{
    {"json", Format::json}, {"csv", Format::csv}, {"plain", Format::plain}};
const std::map<std::string, Mode> kModes{
    {"exact", Mode::exact}, {"float", Mode::float_only}, {"both", Mode::both}};
const std::map<std::string, sim::Generator> kGenerators{
    {"uniform", sim::Generator::uniform_cuts}, {"exponential", sim::Generator::exponential}};

std::map<std::string, Problem> problem_map() {
  std::map<std::string, Problem> m;
  for (Problem p : kAllProblems) {
    m.emplace(std::string(to_string(p)), p);
  }
  return m;
}

std::optional<double> z_score(double estimate, double exact, double std_err) {
  if (std_err > 0.0) {
    return std::abs(estimate - exact) / std_err;
  }
  if (estimate == exact) {
    return 0.0;
  }
  return std::numeric_limits<double>::infinity();
}

sim::Event event_for(Problem p) {
  switch (p) {
  case Problem::none:
    return sim::Event::none;
  case Problem::not_all:
    return sim::Event::not_all;
  case Problem::all:
    return sim::Event::all;
  case Problem::random_subset:
    return sim::Event::random_subset;
  case Problem::expected_bad:
    break;
  }
  throw UsageError("expected_bad is not a probability event");
}

struct ReconcileFailure {
  int k = 0;
  int n = 0;
  reconcile::Failure failure;
};

} // namespace

std::uint64_t default_seed() {
  const char *env = std::getenv(kSeedEnvVar);
  if (env == nullptr || *env == '\0') {
    return kDefaultSeed;
  }
  try {
    size_t used = 0;
    const std::string text(env);
    const auto value = std::stoull(text, &used, 0);
    if (used == text.size()) {
      return value;
    }
  } catch (const std::exception &) {
  }
  return kDefaultSeed;
}

int cmd_exact(const RunConfig &config, std::ostream &out) {
  require_pair(config.k, config.n);
  if (config.mode != Mode::exact && config.problem != Problem::none) {
    throw UsageError("--mode float/both is only available for --problem none");
  }
  ResultRecord r;
  r.problem = config.problem;
  r.k = config.k;
  r.n = config.n;
  if (config.mode != Mode::float_only) {
    r.exact = exact_value(config.problem, config.k, config.n);
  }
  if (config.mode != Mode::exact) {
    const auto fp = exact::prob_none_float(config.k, config.n);
    r.float_value = fp.probability;
    r.log_probability = fp.log_probability;
    if (r.exact) {
      // via logs, so it stays meaningful when the exact value underflows
      r.relative_difference = std::abs(std::expm1(fp.log_probability - r.exact->log()));
    }
  }
  write_record(out, r, config.format);
  return kExitOk;
}

int cmd_table(const RunConfig &config, std::ostream &out) {
  if (config.k_max < 3 || config.k_max > config.n_max) {
    throw UsageError("require 3 <= k-max <= n-max");
  }
  std::vector<Problem> problems;
  if (config.problem_given) {
    problems.push_back(config.problem);
  } else {
    problems.assign(std::begin(kAllProblems), std::end(kAllProblems));
  }

  const std::vector<std::string> columns{"problem", "k", "n", "num", "den", "decimal"};
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  if (config.format == Format::csv) {
    out << csv_header(columns) << '\n';
  }
  for (int k = 3; k <= config.k_max; ++k) {
    for (int n = k; n <= config.n_max; ++n) {
      for (Problem p : problems) {
        ResultRecord r;
        r.problem = p;
        r.k = k;
        r.n = n;
        r.exact = exact_value(p, k, n);
        switch (config.format) {
        case Format::csv:
          out << csv_row(r, columns) << '\n';
          break;
        case Format::json:
          rows.push_back(to_json(r));
          break;
        case Format::plain:
          out << plain_line(r) << '\n';
          break;
        }
      }
    }
  }
  if (config.format == Format::json) {
    out << rows.dump() << '\n';
  }
  return kExitOk;
}

int cmd_simulate(const RunConfig &config, std::ostream &out) {
  require_pair(config.k, config.n);
  if (config.trials < 1) {
    throw UsageError("--trials must be at least 1");
  }
  if (config.streams < 1) {
    throw UsageError("--streams must be at least 1");
  }
  ResultRecord r;
  r.problem = config.problem;
  r.k = config.k;
  r.n = config.n;
  r.generator = std::string(sim::to_string(config.generator));
  r.exact = exact_value(config.problem, config.k, config.n);
  const double exact = r.exact->to_double();

  if (config.problem == Problem::expected_bad) {
    if (config.trials < 2) {
      throw UsageError("--trials must be at least 2 for expected_bad");
    }
    const auto m = sim::estimate_mean_bad_subsets(config.k, config.n, config.trials, config.seed,
                                                  config.streams, oracle::kDefaultBudget,
                                                  config.generator);
    r.mean_estimate = m;
    r.z_score = z_score(m.mean, exact, m.std_err);
  } else {
    const auto e = sim::estimate_probability(event_for(config.problem), config.k, config.n,
                                             config.trials, config.seed, config.streams,
                                             config.generator);
    r.estimate = e;
    r.z_score = z_score(e.p_hat, exact, e.std_err);
  }
  write_record(out, r, config.format);
  return kExitOk;
}

int cmd_reconcile(const RunConfig &config, std::ostream &out) {
  std::vector<std::pair<int, int>> cases;
  if (config.all_pairs) {
    if (config.n_max < 3) {
      throw UsageError("--n-max must be at least 3");
    }
    for (int n = 3; n <= config.n_max; ++n) {
      for (int k = 3; k <= n; ++k) {
        cases.emplace_back(k, n);
      }
    }
  } else {
    require_pair(config.k, config.n);
    cases.emplace_back(config.k, config.n);
  }

  long checks = 0;
  std::optional<ReconcileFailure> first;
  for (const auto &[k, n] : cases) {
    exact::BetaVector beta = exact::beta_backward(k, n);
    if (config.corrupt_beta && *config.corrupt_beta >= 1 && *config.corrupt_beta <= n) {
      beta.betas[static_cast<size_t>(*config.corrupt_beta - 1)] += 1;
    }

    ++checks;
    const exact::BetaVector forward = exact::beta_forward(k, n);
    for (int r = 1; r <= n && !first; ++r) {
      if (forward.at(r) != beta.at(r)) {
        first = ReconcileFailure{
            k, n, {"beta_forward_equals_backward", r,
                   forward.at(r).get_str() + " != " + beta.at(r).get_str()}};
      }
    }

    const reconcile::Report report = reconcile::reconcile_report(beta);
    checks += report.checks;
    if (!first && !report.passed()) {
      first = ReconcileFailure{k, n, *report.first_failure()};
    }

    ++checks;
    const ExactRational total = exact::prob_all_exact(k, n) + exact::prob_not_all_exact(k, n);
    if (!first && total != ExactRational(1)) {
      first = ReconcileFailure{k, n, {"all_plus_not_all_equals_one", 0, total.to_string() + " != 1"}};
    }
    if (first) {
      break;
    }
  }

  const auto case_count = static_cast<long>(cases.size());
  if (config.format == Format::json) {
    nlohmann::ordered_json j;
    j["status"] = first ? "fail" : "pass";
    j["cases"] = case_count;
    j["checks"] = checks;
    if (first) {
      j["failure"] = {{"k", first->k},
                      {"n", first->n},
                      {"identity", first->failure.identity},
                      {"index", first->failure.index},
                      {"detail", first->failure.detail}};
    }
    out << j.dump() << '\n';
  } else if (first) {
    out << "reconcile: FAILED k=" << first->k << " n=" << first->n << " identity "
        << first->failure.identity << " index " << first->failure.index << ": "
        << first->failure.detail << '\n';
  } else {
    out << "reconcile: all identities hold (" << case_count << " cases, " << checks
        << " checks)\n";
  }
  return first ? kExitFailure : kExitOk;
}

int cmd_selftest(const RunConfig &config, std::ostream &out) {
  acceptance::Options options;
  options.quick = config.quick;
  options.seed = config.seed;
  const auto results = acceptance::run_all(options, out);
  return acceptance::all_passed(results) ? kExitOk : kExitFailure;
}

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
  RunConfig config;
  config.seed = default_seed();
  std::string problem_name = "none";
  std::string format_name;
  std::string mode_name = "exact";
  std::string generator_name = "uniform";
  int corrupt_beta = 0;

  CLI::App app{"Exact and Monte Carlo broken-stick k-gon probabilities", "brokenstick"};
  app.require_subcommand(1);
  const auto problems = problem_map();

  auto add_problem = [&](CLI::App *sub) {
    return sub->add_option("--problem", problem_name, "none | not_all | all | random_subset | expected_bad")
        ->check(CLI::IsMember(problems));
  };
  auto add_format = [&](CLI::App *sub, const char *fallback) {
    sub->add_option("--format", format_name, std::string("json | csv | plain (default ") + fallback + ")")
        ->check(CLI::IsMember(kFormats));
  };

  auto *exact_cmd = app.add_subcommand("exact", "Exact value of one problem at (k, n)");
  add_problem(exact_cmd);
  exact_cmd->add_option("-k", config.k, "polygon sides")->required();
  exact_cmd->add_option("-n", config.n, "number of pieces")->required();
  add_format(exact_cmd, "plain");
  exact_cmd->add_option("--mode", mode_name, "exact | float | both (float paths: problem none only)")
      ->check(CLI::IsMember(kModes));

  auto *table_cmd = app.add_subcommand("table", "CSV table over 3 <= k <= n");
  auto *table_problem = add_problem(table_cmd);
  table_cmd->add_option("--k-max", config.k_max)->required();
  table_cmd->add_option("--n-max", config.n_max)->required();
  add_format(table_cmd, "csv");

  auto *sim_cmd = app.add_subcommand("simulate", "Monte Carlo estimate with z-score against the exact value");
  add_problem(sim_cmd);
  sim_cmd->add_option("-k", config.k)->required();
  sim_cmd->add_option("-n", config.n)->required();
  sim_cmd->add_option("--trials", config.trials)->capture_default_str();
  sim_cmd->add_option("--seed", config.seed, "master seed (default $BROKENSTICK_SEED or 42)");
  sim_cmd->add_option("--streams", config.streams)->capture_default_str();
  sim_cmd->add_option("--generator", generator_name, "uniform | exponential")
      ->check(CLI::IsMember(kGenerators));
  add_format(sim_cmd, "plain");

  auto *rec_cmd = app.add_subcommand("reconcile", "Check every identity linking the exact formulas");
  rec_cmd->add_option("-k", config.k);
  rec_cmd->add_option("-n", config.n);
  rec_cmd->add_flag("--all", config.all_pairs, "every 3 <= k <= n <= n-max");
  rec_cmd->add_option("--n-max", config.n_max);
  rec_cmd->add_option("--corrupt-beta", corrupt_beta)->group(""); // test hook
  add_format(rec_cmd, "plain");

  auto *self_cmd = app.add_subcommand("selftest", "Run the acceptance criteria");
  self_cmd->add_flag("--quick", config.quick, "exact-only criteria");
  self_cmd->add_option("--seed", config.seed);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp &) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp &) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError &e) {
    err << "brokenstick: " << e.what() << '\n';
    return kExitUsage;
  }

  config.problem = problems.at(problem_name);
  config.problem_given = table_problem->count() > 0;
  config.mode = kModes.at(mode_name);
  config.generator = kGenerators.at(generator_name);
  if (corrupt_beta != 0) {
    config.corrupt_beta = corrupt_beta;
  }

  try {
    if (*exact_cmd) {
      config.subcommand = "exact";
      config.format = format_name.empty() ? Format::plain : kFormats.at(format_name);
      return cmd_exact(config, out);
    }
    if (*table_cmd) {
      config.subcommand = "table";
      config.format = format_name.empty() ? Format::csv : kFormats.at(format_name);
      return cmd_table(config, out);
    }
    if (*sim_cmd) {
      config.subcommand = "simulate";
      config.format = format_name.empty() ? Format::plain : kFormats.at(format_name);
      return cmd_simulate(config, out);
    }
    if (*rec_cmd) {
      config.subcommand = "reconcile";
      config.format = format_name.empty() ? Format::plain : kFormats.at(format_name);
      if (!config.all_pairs && (rec_cmd->count("-k") == 0 || rec_cmd->count("-n") == 0)) {
        throw UsageError("reconcile needs -k and -n, or --all --n-max N");
      }
      if (config.all_pairs && rec_cmd->count("--n-max") == 0) {
        throw UsageError("--all needs --n-max");
      }
      return cmd_reconcile(config, out);
    }
    config.subcommand = "selftest";
    return cmd_selftest(config, out);
  } catch (const UsageError &e) {
    err << "brokenstick: " << e.what() << '\n';
    return kExitUsage;
  } catch (const Error &e) { // domain, budget, zero trials
    err << "brokenstick: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception &e) {
    err << "brokenstick: internal error: " << e.what() << '\n';
    return kExitFailure;
  }
}

} // namespace brokenstick::cli
