#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "brokenstick/rational.hpp"
#include "brokenstick/stick_sim.hpp"

namespace brokenstick::cli {

enum class Problem { none, not_all, all, random_subset, expected_bad };
enum class Format { json, csv, plain };
enum class Mode { exact, float_only, both };

inline constexpr Problem kAllProblems[] = {Problem::none, Problem::not_all, Problem::all,
                                           Problem::random_subset, Problem::expected_bad};

std::string_view to_string(Problem p);
std::optional<Problem> problem_from_string(std::string_view name);

/// The exact value of `p` at (k, n).
ExactRational exact_value(Problem p, int k, int n);

/// Shortest round-trip decimal, '.' separator regardless of locale.
std::string format_double(double x);

/// One computed or simulated quantity. Optional fields are omitted from
/// the output when unset.
struct ResultRecord {
  Problem problem = Problem::none;
  int k = 0;
  int n = 0;
  std::optional<ExactRational> exact;
  std::optional<double> float_value;
  std::optional<double> log_probability;
  std::optional<double> relative_difference;
  std::optional<std::string> generator;
  std::optional<sim::Estimate> estimate;
  std::optional<sim::MeanEstimate> mean_estimate;
  std::optional<double> z_score;
};

nlohmann::ordered_json to_json(const ResultRecord &r);

/// CSV header for the columns a record carries; fixed per record shape.
std::vector<std::string> csv_columns(const ResultRecord &r);
std::string csv_header(const std::vector<std::string> &columns);
std::string csv_row(const ResultRecord &r, const std::vector<std::string> &columns);

std::string plain_line(const ResultRecord &r);

void write_record(std::ostream &out, const ResultRecord &r, Format format);

} // namespace brokenstick::cli
