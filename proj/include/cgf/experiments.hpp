// Copyright 2026 The cgf Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

// Experiment harnesses: the discretization h -> pi^q behind the infinite
// group bound, the Stirling table of the finite optimum, cut emission for a
// simplex tableau row, and the batch verification of the volume optimum.

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <istream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "cgf/criteria.hpp"
#include "cgf/error.hpp"
#include "cgf/finite_function.hpp"
#include "cgf/polytope.hpp"
#include "cgf/pwl.hpp"
#include "cgf/rational.hpp"
#include "cgf/torus_integrals.hpp"
#include "cgf/torus_minimality.hpp"

namespace cgf {

// --- tableau rows and cuts ------------------------------------------------

struct TableauRow {
  Rational rhs_fraction;
  std::vector<std::string> names;
  std::vector<Rational> column_fractions;
};

// Reduces every entry to its fractional part; the right-hand side must not be
// integral (otherwise the row yields no cut).
inline TableauRow make_tableau_row(const Rational& rhs, std::vector<std::string> names,
                                   const std::vector<Rational>& columns) {
  if (names.size() != columns.size()) fail(ErrorCode::kInvalidFunction, "one name per column required");
  TableauRow row{frac(rhs), std::move(names), {}};
  if (row.rhs_fraction == 0) fail(ErrorCode::kZeroElement, "integral right-hand side gives no cut");
  row.column_fractions.reserve(columns.size());
  for (const auto& c : columns) row.column_fractions.push_back(frac(c));
  return row;
}

// A row read off the 1/q grid: right-hand side b/q and columns x_j/q.
inline TableauRow tableau_row_on_grid(std::int64_t q, Residue b, std::vector<std::string> names,
                                      const std::vector<Residue>& columns) {
  std::vector<Rational> fractions;
  fractions.reserve(columns.size());
  for (auto x : columns) fractions.push_back(make_rational(x, q));
  return make_tableau_row(make_rational(b, q), std::move(names), fractions);
}

struct CutCoefficient {
  std::string name;
  Rational coefficient;
};

// sum_j coefficient_j * y_j >= rhs (rhs is always 1).
struct Cut {
  std::vector<CutCoefficient> coefficients;
  Rational rhs = 1;
};

inline Cut emit_cut(const TableauRow& row, const FiniteGroupFunction& pi) {
  const std::int64_t q = pi.order();
  const Rational scaled_rhs = row.rhs_fraction * q;
  if (!is_integral(scaled_rhs) || numerator_of(scaled_rhs) != pi.rhs()) {
    fail(ErrorCode::kRhsMismatch, "row rhs " + to_string(row.rhs_fraction) + " is not " +
                                      std::to_string(pi.rhs()) + "/" + std::to_string(q));
  }
  Cut cut;
  for (std::size_t j = 0; j < row.column_fractions.size(); ++j) {
    const Rational scaled = row.column_fractions[j] * q;
    if (!is_integral(scaled)) {
      fail(ErrorCode::kGridMismatch, "column " + row.names[j] + " = " + to_string(row.column_fractions[j]) +
                                         " is not on the 1/" + std::to_string(q) + " grid");
    }
    cut.coefficients.push_back({row.names[j], pi(numerator_of(scaled).convert_to<std::int64_t>())});
  }
  return cut;
}

inline Cut emit_cut(const TableauRow& row, const PwlTorusFunction& pi) {
  if (row.rhs_fraction != pi.rhs()) {
    fail(ErrorCode::kRhsMismatch, "row rhs " + to_string(row.rhs_fraction) + " differs from b = " + to_string(pi.rhs()));
  }
  Cut cut;
  for (std::size_t j = 0; j < row.column_fractions.size(); ++j) {
    cut.coefficients.push_back({row.names[j], pi(row.column_fractions[j])});
  }
  return cut;
}

// --- discretization of class-G functions -----------------------------------

// Members of G: h(0) = 0, nondecreasing, subadditive, h(x) + h(-x) = 1 for
// x != 0.
inline bool in_class_g(const PwlTorusFunction& h) {
  return h.is_nondecreasing() && is_minimal_pwl(h.with_rhs(Rational(0)), {.stop_at_first = true});
}

// pi^q(x) = h(x/(q-1)) on Z/qZ with b = q - 1; the node x = q - 1 takes the
// value 1 of h extended to [0, 1].
inline FiniteGroupFunction discretize(const PwlTorusFunction& h, std::int64_t q) {
  std::vector<Rational> values;
  values.reserve(static_cast<std::size_t>(q));
  for (std::int64_t x = 0; x + 1 < q; ++x) values.push_back(h(make_rational(x, q - 1)));
  values.emplace_back(1);
  return {CyclicGroup(q), q - 1, std::move(values)};
}

struct RiemannResult {
  std::int64_t q;
  double discrete_mean;  // (1/(q-1)) sum_{x != 0} ln pi^q(x)
  double lower_bound;    // (1/(q-1)) ln((q-1)!/(q-1)^{q-1})
  double integral;       // int ln h
  Rational product;      // prod_{x != 0} pi^q(x)
  Rational optimum;      // (q-1)!/(q-1)^{q-1}
  bool exact_inequality;  // product >= optimum
};

inline RiemannResult riemann_experiment(const PwlTorusFunction& h, std::int64_t q) {
  if (!is_prime(q)) fail(ErrorCode::kNotPrime, std::to_string(q) + " is not prime");
  if (!in_class_g(h)) fail(ErrorCode::kNotInClassG, "h is not nondecreasing, subadditive and symmetric with h(0) = 0");
  const auto pi = discretize(h, q);
  if (const auto verdict = is_minimal(pi, {.stop_at_first = true}); !verdict) {
    fail(ErrorCode::kValidation, "discretization pi^" + std::to_string(q) + " is not minimal");
  }
  RiemannResult result{q, log_geo_mean(pi), 0.0, integral_ln(h), volume_product(pi), optimal_volume_product(q), false};
  result.lower_bound = log_rational(result.optimum) / static_cast<double>(q - 1);
  result.exact_inequality = result.product >= result.optimum;
  if (!result.exact_inequality || result.discrete_mean < result.lower_bound - 1e-12) {
    fail(ErrorCode::kValidation, "discrete mean falls below the finite optimum at q = " + std::to_string(q));
  }
  return result;
}

// --- Stirling table ---------------------------------------------------------

struct StirlingRow {
  std::int64_t q;
  Rational ratio;  // (q-1)!/(q-1)^{q-1}
  double log_mean;
  double gap_to_minus_one;
};

// Rows sorted by q; factorials are accumulated across rows.
inline std::vector<StirlingRow> stirling_table(std::vector<std::int64_t> primes) {
  std::sort(primes.begin(), primes.end());
  primes.erase(std::unique(primes.begin(), primes.end()), primes.end());
  std::vector<StirlingRow> rows;
  Integer factorial_acc = 1;
  std::int64_t reached = 1;
  for (auto q : primes) {
    if (!is_prime(q)) fail(ErrorCode::kNotPrime, std::to_string(q) + " is not prime");
    for (; reached < q - 1; ++reached) factorial_acc *= reached + 1;
    const Rational ratio(factorial_acc, boost::multiprecision::pow(Integer(q - 1), static_cast<unsigned>(q - 1)));
    const double mean = log_rational(ratio) / static_cast<double>(q - 1);
    rows.push_back({q, ratio, mean, std::abs(mean + 1.0)});
  }
  return rows;
}

// --- batch verification of the volume optimum -------------------------------

enum class BPolicy { kAll, kFixed, kCanonical };

struct ExperimentConfig {
  std::vector<std::int64_t> primes;
  BPolicy b_policy = BPolicy::kAll;
  std::vector<std::int64_t> fixed_b;
  std::map<std::string, double> tolerances;
  std::string csv_path;
  std::string json_path;
  unsigned parallelism = 1;
  std::int64_t vertex_cap = kDefaultVertexCap;
  bool force = false;
};

namespace detail {

inline std::string trim(const std::string& s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

inline std::vector<std::int64_t> parse_int_list(const std::string& text) {
  std::vector<std::int64_t> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    item = trim(item);
    if (item.empty()) continue;
    try {
      std::size_t used = 0;
      out.push_back(std::stoll(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      fail(ErrorCode::kParse, "not an integer: '" + item + "'");
    }
  }
  return out;
}

}  // namespace detail

inline BPolicy parse_b_policy(const std::string& text) {
  if (text == "all") return BPolicy::kAll;
  if (text == "fixed") return BPolicy::kFixed;
  if (text == "canonical") return BPolicy::kCanonical;
  fail(ErrorCode::kParse, "unknown b policy '" + text + "' (all|fixed|canonical)");
}

// Flat "key = value" lines; '#' starts a comment. Keys: primes, b_policy, b,
// csv, json, parallelism, vertex_cap, force, tolerance.<name>.
inline ExperimentConfig parse_config(std::istream& in) {
  ExperimentConfig config;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    line = detail::trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) fail(ErrorCode::kParse, "line " + std::to_string(line_no) + ": expected key = value");
    const std::string key = detail::trim(line.substr(0, eq));
    const std::string value = detail::trim(line.substr(eq + 1));
    if (key == "primes") {
      config.primes = detail::parse_int_list(value);
    } else if (key == "b_policy") {
      config.b_policy = parse_b_policy(value);
    } else if (key == "b") {
      config.fixed_b = detail::parse_int_list(value);
    } else if (key == "csv") {
      config.csv_path = value;
    } else if (key == "json") {
      config.json_path = value;
    } else if (key == "parallelism") {
      const auto v = detail::parse_int_list(value);
      if (v.size() != 1 || v[0] < 1) fail(ErrorCode::kParse, "parallelism must be a positive integer");
      config.parallelism = static_cast<unsigned>(v[0]);
    } else if (key == "vertex_cap") {
      const auto v = detail::parse_int_list(value);
      if (v.size() != 1 || v[0] < 2) fail(ErrorCode::kParse, "vertex_cap must be an integer >= 2");
      config.vertex_cap = v[0];
    } else if (key == "force") {
      config.force = value == "true" || value == "1";
    } else if (key.rfind("tolerance.", 0) == 0) {
      double tol = 0.0;
      try {
        tol = std::stod(value);
      } catch (const std::exception&) {
        fail(ErrorCode::kParse, "line " + std::to_string(line_no) + ": bad tolerance '" + value + "'");
      }
      if (!(tol > 0)) fail(ErrorCode::kParse, "tolerances must be positive");
      config.tolerances[key.substr(10)] = tol;
    } else {
      fail(ErrorCode::kParse, "line " + std::to_string(line_no) + ": unknown key '" + key + "'");
    }
  }
  if (config.b_policy == BPolicy::kFixed && config.fixed_b.empty()) {
    fail(ErrorCode::kParse, "b_policy = fixed needs b = ...");
  }
  return config;
}

enum class RowStatus { kOk, kMismatch, kSkippedNotPrime, kSkippedInvalidB, kExperimental, kError };

constexpr std::string_view to_string(RowStatus s) {
  switch (s) {
    case RowStatus::kOk: return "OK";
    case RowStatus::kMismatch: return "MISMATCH";
    case RowStatus::kSkippedNotPrime: return "SKIPPED_NOT_PRIME";
    case RowStatus::kSkippedInvalidB: return "SKIPPED_INVALID_B";
    case RowStatus::kExperimental: return "EXPERIMENTAL";
    case RowStatus::kError: return "ERROR";
  }
  return "UNKNOWN";
}

struct ReportRow {
  std::int64_t q = 0;
  std::optional<std::int64_t> b;
  RowStatus status = RowStatus::kOk;
  std::size_t n_vertices = 0;
  std::optional<Rational> min_product;
  std::optional<FiniteGroupFunction> argmin;
  bool unique = false;
  double wall_time_ms = 0.0;
  std::string message;

  static ReportRow pending(std::int64_t q, std::optional<std::int64_t> b, RowStatus status) {
    ReportRow row;
    row.q = q;
    row.b = b;
    row.status = status;
    return row;
  }
};

struct OptimizationReport {
  std::vector<ReportRow> rows;

  bool all_ok() const {
    return std::none_of(rows.begin(), rows.end(), [](const ReportRow& r) {
      return r.status == RowStatus::kMismatch || r.status == RowStatus::kError;
    });
  }
};

// One row: minimize the volume product over M_b and compare with the
// predicted optimum, uniqueness and rearrangement to GOM^q_{q-1}.
inline ReportRow verify_volume_optimum(std::int64_t q, std::int64_t b, std::int64_t cap, bool force) {
  auto row = ReportRow::pending(q, b, RowStatus::kOk);
  const auto start = std::chrono::steady_clock::now();
  try {
    const bool prime = is_prime(q);
    const auto optimum = minimize_volume(q, b, {.cap = cap, .force_composite = force});
    row.n_vertices = optimum.vertex_count;
    row.min_product = optimum.value;
    row.argmin = optimum.argmin;
    row.unique = optimum.unique;
    if (!prime) {
      row.status = RowStatus::kExperimental;
    } else {
      std::vector<std::string> problems;
      if (optimum.value != optimal_volume_product(q)) problems.emplace_back("value differs from (q-1)!/(q-1)^(q-1)");
      if (!optimum.unique) problems.emplace_back("minimizer is not unique");
      if (rearrange_finite(optimum.argmin) != gom(q, q - 1)) problems.emplace_back("rearranged argmin is not GOM");
      if (!problems.empty()) {
        row.status = RowStatus::kMismatch;
        for (const auto& p : problems) row.message += (row.message.empty() ? "" : "; ") + p;
      }
    }
  } catch (const Error& e) {
    row.status = RowStatus::kError;
    row.message = e.what();
  }
  row.wall_time_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return row;
}

// Rows come out ordered by (q, b) whatever the worker count.
inline OptimizationReport optimize_and_report(const ExperimentConfig& config) {
  struct Task {
    std::int64_t q;
    std::int64_t b;
  };
  OptimizationReport report;
  std::vector<Task> tasks;
  std::vector<std::optional<std::size_t>> task_of_row;
  auto primes = config.primes;
  std::sort(primes.begin(), primes.end());
  primes.erase(std::unique(primes.begin(), primes.end()), primes.end());
  for (auto q : primes) {
    if (q < 2 || (!is_prime(q) && !config.force)) {
      report.rows.push_back(ReportRow::pending(q, std::nullopt, RowStatus::kSkippedNotPrime));
      task_of_row.emplace_back();
      continue;
    }
    std::vector<std::int64_t> bs;
    switch (config.b_policy) {
      case BPolicy::kAll:
        for (std::int64_t b = 1; b < q; ++b) bs.push_back(b);
        break;
      case BPolicy::kCanonical:
        bs.push_back(q - 1);
        break;
      case BPolicy::kFixed:
        bs = config.fixed_b;
        std::sort(bs.begin(), bs.end());
        break;
    }
    for (auto b : bs) {
      if (b <= 0 || b >= q) {
        report.rows.push_back(ReportRow::pending(q, b, RowStatus::kSkippedInvalidB));
        task_of_row.emplace_back();
        continue;
      }
      report.rows.push_back(ReportRow::pending(q, b, RowStatus::kOk));
      task_of_row.emplace_back(tasks.size());
      tasks.push_back({q, b});
    }
  }

  std::vector<ReportRow> results(tasks.size(), ReportRow::pending(0, std::nullopt, RowStatus::kError));
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < tasks.size(); i = next++) {
      results[i] = verify_volume_optimum(tasks[i].q, tasks[i].b, config.vertex_cap, config.force);
    }
  };
  const unsigned workers = std::max(1U, std::min<unsigned>(config.parallelism, static_cast<unsigned>(tasks.size())));
  if (workers <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(worker);
  }
  for (std::size_t r = 0; r < report.rows.size(); ++r) {
    if (task_of_row[r]) report.rows[r] = std::move(results[*task_of_row[r]]);
  }
  return report;
}

}  // namespace cgf
