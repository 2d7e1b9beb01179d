#include "brokenstick/cli/records.hpp"

#include <charconv>
#include <cmath>
#include <sstream>

#include "brokenstick/exact_core.hpp"

namespace brokenstick::cli {

std::string_view to_string(Problem p) {
  switch (p) {
  case Problem::none:
    return "none";
  case Problem::not_all:
    return "not_all";
  case Problem::all:
    return "all";
  case Problem::random_subset:
    return "random_subset";
  case Problem::expected_bad:
    return "expected_bad";
  }
  return "unknown";
}

std::optional<Problem> problem_from_string(std::string_view name) {
  for (Problem p : kAllProblems) {
    if (to_string(p) == name) {
      return p;
    }
  }
  return std::nullopt;
}

ExactRational exact_value(Problem p, int k, int n) {
  switch (p) {
  case Problem::none:
    return exact::prob_none_exact(k, n);
  case Problem::not_all:
    return exact::prob_not_all_exact(k, n);
  case Problem::all:
    return exact::prob_all_exact(k, n);
  case Problem::random_subset:
    return exact::prob_random_subset(k, n);
  case Problem::expected_bad:
    return exact::expected_bad_subsets(k, n);
  }
  return ExactRational(0);
}

std::string format_double(double x) {
  if (std::isnan(x)) {
    return "nan";
  }
  if (std::isinf(x)) {
    return x > 0 ? "inf" : "-inf";
  }
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, res.ptr);
}

namespace {

void put_optional(nlohmann::ordered_json &j, const char *key, const std::optional<double> &v) {
  if (!v) {
    return;
  }
  if (std::isfinite(*v)) {
    j[key] = *v;
  } else {
    j[key] = nullptr;
  }
}

} // namespace

nlohmann::ordered_json to_json(const ResultRecord &r) {
  nlohmann::ordered_json j;
  j["problem"] = std::string(to_string(r.problem));
  j["k"] = r.k;
  j["n"] = r.n;
  if (r.exact) {
    j["num"] = r.exact->numerator_string();
    j["den"] = r.exact->denominator_string();
    j["decimal"] = r.exact->to_decimal();
  }
  put_optional(j, "float", r.float_value);
  put_optional(j, "log_probability", r.log_probability);
  put_optional(j, "relative_difference", r.relative_difference);
  if (r.generator) {
    j["generator"] = *r.generator;
  }
  if (r.estimate) {
    const auto &e = *r.estimate;
    j["trials"] = e.trials;
    j["successes"] = e.successes;
    j["p_hat"] = e.p_hat;
    j["std_err"] = e.std_err;
    j["ci_low"] = e.ci_low;
    j["ci_high"] = e.ci_high;
    j["seed"] = e.seed;
    j["streams"] = e.streams;
  }
  if (r.mean_estimate) {
    const auto &m = *r.mean_estimate;
    j["trials"] = m.trials;
    j["mean"] = m.mean;
    j["std_dev"] = m.std_dev;
    j["std_err"] = m.std_err;
    j["ci_low"] = m.ci_low;
    j["ci_high"] = m.ci_high;
    j["seed"] = m.seed;
    j["streams"] = m.streams;
  }
  put_optional(j, "z_score", r.z_score);
  return j;
}

std::vector<std::string> csv_columns(const ResultRecord &r) {
  std::vector<std::string> columns;
  const auto j = to_json(r);
  for (const auto &item : j.items()) {
    columns.push_back(item.key());
  }
  return columns;
}

std::string csv_header(const std::vector<std::string> &columns) {
  std::string out;
  for (size_t i = 0; i < columns.size(); ++i) {
    out += (i ? "," : "") + columns[i];
  }
  return out;
}

std::string csv_row(const ResultRecord &r, const std::vector<std::string> &columns) {
  const auto j = to_json(r);
  std::string out;
  for (size_t i = 0; i < columns.size(); ++i) {
    if (i) {
      out += ",";
    }
    if (!j.contains(columns[i])) {
      continue;
    }
    const auto &v = j.at(columns[i]);
    if (v.is_string()) {
      out += v.get<std::string>();
    } else if (v.is_number_float()) {
      out += format_double(v.get<double>());
    } else if (!v.is_null()) {
      out += v.dump();
    }
  }
  return out;
}

std::string plain_line(const ResultRecord &r) {
  std::ostringstream s;
  s << to_string(r.problem) << " k=" << r.k << " n=" << r.n;
  if (r.exact) {
    s << " exact=" << r.exact->to_string() << " decimal=" << r.exact->to_decimal();
  }
  if (r.float_value) {
    s << " float=" << format_double(*r.float_value);
  }
  if (r.log_probability) {
    s << " log=" << format_double(*r.log_probability);
  }
  if (r.relative_difference) {
    s << " rel_diff=" << format_double(*r.relative_difference);
  }
  if (r.estimate) {
    const auto &e = *r.estimate;
    s << " generator=" << r.generator.value_or("uniform") << " trials=" << e.trials
      << " successes=" << e.successes << " p_hat=" << format_double(e.p_hat)
      << " std_err=" << format_double(e.std_err) << " ci=[" << format_double(e.ci_low) << ", "
      << format_double(e.ci_high) << "] seed=" << e.seed << " streams=" << e.streams;
  }
  if (r.mean_estimate) {
    const auto &m = *r.mean_estimate;
    s << " generator=" << r.generator.value_or("uniform") << " trials=" << m.trials
      << " mean=" << format_double(m.mean) << " std_dev=" << format_double(m.std_dev)
      << " std_err=" << format_double(m.std_err) << " ci=[" << format_double(m.ci_low) << ", "
      << format_double(m.ci_high) << "] seed=" << m.seed << " streams=" << m.streams;
  }
  if (r.z_score) {
    s << " z=" << format_double(*r.z_score);
  }
  return s.str();
}

void write_record(std::ostream &out, const ResultRecord &r, Format format) {
  switch (format) {
  case Format::json:
    out << to_json(r).dump() << '\n';
    break;
  case Format::csv: {
    const auto columns = csv_columns(r);
    out << csv_header(columns) << '\n' << csv_row(r, columns) << '\n';
    break;
  }
  case Format::plain:
    out << plain_line(r) << '\n';
    break;
  }
}

} // namespace brokenstick::cli
