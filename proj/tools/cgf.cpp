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

// Command-line front end. Inputs are JSON files (or "-" for stdin); results
// go to stdout as JSON or CSV. Exit status: 0 success, 2 a checked identity
// failed, 3 bad input.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include <CLI11.hpp>

#include "cgf/cgf.hpp"
#include "cgf/io/csv.hpp"
#include "cgf/io/json.hpp"

namespace {

using namespace cgf;
using io::Json;

constexpr int kOk = 0;
constexpr int kValidationFailure = 2;
constexpr int kInputError = 3;

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class Format { kJson, kCsv };

struct Common {
  std::string format = "json";
  std::optional<double> tolerance;

  Format fmt() const { return format == "csv" ? Format::kCsv : Format::kJson; }
};

std::string read_text(const std::string& path) {
  if (path == "-") return {std::istreambuf_iterator<char>(std::cin), {}};
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  return {std::istreambuf_iterator<char>(in), {}};
}

Json read_json(const std::string& path) {
  try {
    return Json::parse(read_text(path));
  } catch (const Json::parse_error& e) {
    throw InputError(path + ": " + e.what());
  }
}

using AnyFunction = std::variant<FiniteGroupFunction, PwlTorusFunction>;

// Finite functions carry "q"; everything else is read as a PWL function.
AnyFunction read_function(const std::string& path) {
  const Json j = read_json(path);
  if (j.is_object() && j.contains("q")) return io::finite_from_json(j);
  return io::pwl_from_json(j);
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path);
  if (!out) throw InputError("cannot write " + path);
  out << content;
}

std::vector<unsigned> parse_powers(const std::vector<int>& ps) {
  std::vector<unsigned> out;
  for (int p : ps) {
    if (p < 1) throw InputError("p must be >= 1");
    out.push_back(static_cast<unsigned>(p));
  }
  return out;
}

void print_function_csv(const FiniteGroupFunction& pi) {
  std::cout << "x,value\n";
  for (std::int64_t x = 0; x < pi.order(); ++x) std::cout << x << ',' << to_string(pi(x)) << '\n';
}

void print_function_csv(const PwlTorusFunction& pi) {
  std::cout << "breakpoint,left,at,right,slope,intercept\n";
  for (std::size_t i = 0; i < pi.size(); ++i) {
    const auto l = pi.limits(i);
    std::cout << to_string(pi.breakpoints()[i]) << ',' << to_string(l.left) << ',' << to_string(l.at) << ','
              << to_string(l.right) << ',' << to_string(pi.pieces()[i].slope) << ','
              << to_string(pi.pieces()[i].intercept) << '\n';
  }
}

template <typename F>
void print_function(const F& pi, Format fmt) {
  if (fmt == Format::kCsv) {
    print_function_csv(pi);
  } else {
    std::cout << io::to_json(pi).dump(2) << '\n';
  }
}

template <typename Point>
void print_verdict_csv(const MinimalityVerdict<Point>& verdict) {
  std::cout << "kind,witness,amount,limit\n";
  for (const auto& v : verdict.violations) {
    std::string witness;
    for (const auto& w : v.witness) {
      if (!witness.empty()) witness += ' ';
      if constexpr (std::is_same_v<Point, Rational>) {
        witness += to_string(w);
      } else {
        witness += std::to_string(w);
      }
    }
    std::cout << to_string(v.kind) << ',' << witness << ',' << to_string(v.amount) << ',' << v.limit << '\n';
  }
}

// --- subcommands ----------------------------------------------------------------

struct MakeArgs {
  std::string kind;
  std::int64_t q = 0;
  std::string b;
  std::int64_t k = 1;
  std::vector<std::string> coordinates;
  std::size_t index = 1;
};

int run_make(const MakeArgs& a, const Common& c) {
  auto finite_b = [&] {
    if (a.q == 0) throw InputError(a.kind + " needs --q");
    if (a.b.empty()) return Residue{1};
    const Rational b = parse_rational(a.b);
    if (!is_integral(b)) throw InputError("--b must be a residue for " + a.kind);
    return static_cast<Residue>(numerator_of(b).convert_to<std::int64_t>());
  };
  auto rational_b = [&] {
    if (a.b.empty()) throw InputError(a.kind + " needs --b");
    return parse_rational(a.b);
  };
  if (a.kind == "gom") {
    print_function(gom(a.q, finite_b()), c.fmt());
  } else if (a.kind == "md2") {
    print_function(md2(a.q, finite_b()), c.fmt());
  } else if (a.kind == "dantzig") {
    print_function(dantzig(a.q, finite_b()), c.fmt());
  } else if (a.kind == "gmi") {
    print_function(gmi(rational_b()), c.fmt());
  } else if (a.kind == "gmi-n") {
    std::vector<Rational> b;
    for (const auto& s : a.coordinates) b.push_back(parse_rational(s));
    print_function(gmi_n(b, a.index).profile, c.fmt());
  } else if (a.kind == "scaled-gmi") {
    print_function(scaled_gmi(rational_b(), a.k), c.fmt());
  } else if (a.kind == "identity") {
    print_function(identity_function(), c.fmt());
  } else if (a.kind == "torus-md2") {
    print_function(torus_md2(a.b.empty() ? Rational(0) : rational_b()), c.fmt());
  } else {
    throw InputError("unknown function kind " + a.kind);
  }
  return kOk;
}

struct CheckArgs {
  std::string input = "-";
  bool expect_minimal = false;
  std::vector<int> powers{1, 2, 3};
};

int run_check(const CheckArgs& a, const Common& c) {
  const auto f = read_function(a.input);
  const auto ps = parse_powers(a.powers);
  bool minimal = false;
  std::visit(
      [&](const auto& pi) {
        const auto verdict = [&] {
          if constexpr (std::is_same_v<std::decay_t<decltype(pi)>, FiniteGroupFunction>) {
            return is_minimal(pi);
          } else {
            return is_minimal_pwl(pi);
          }
        }();
        minimal = verdict.is_minimal();
        if (c.fmt() == Format::kCsv) {
          print_verdict_csv(verdict);
          return;
        }
        Json out{{"verdict", io::to_json(verdict)}};
        if constexpr (std::is_same_v<std::decay_t<decltype(pi)>, FiniteGroupFunction>) {
          out["criteria"] = io::to_json(evaluate_criteria(pi, ps));
        }
        std::cout << out.dump(2) << '\n';
      },
      f);
  return a.expect_minimal && !minimal ? kValidationFailure : kOk;
}

struct RearrangeArgs {
  std::string input = "-";
  bool tilde = false;
  std::string sublevel_csv;
};

int run_rearrange(const RearrangeArgs& a, const Common& c) {
  const auto f = read_function(a.input);
  if (const auto* pi = std::get_if<FiniteGroupFunction>(&f)) {
    if (a.tilde || !a.sublevel_csv.empty()) throw InputError("--tilde and --sublevel-csv apply to torus functions");
    print_function(rearrange_finite(*pi), c.fmt());
    return kOk;
  }
  const auto& pi = std::get<PwlTorusFunction>(f);
  if (!a.sublevel_csv.empty()) {
    std::ostringstream csv;
    io::write_sublevel_csv(csv, pi);
    write_file(a.sublevel_csv, csv.str());
  }
  print_function(a.tilde ? tilde_fn(pi) : rearrange_torus(pi), c.fmt());
  return kOk;
}

struct OptimizeArgs {
  std::string config;
  std::vector<std::int64_t> primes;
  std::string b_policy;
  std::vector<std::int64_t> b;
  std::string csv;
  std::string json;
  unsigned parallelism = 0;
  std::int64_t vertex_cap = 0;
  bool force = false;
};

int run_optimize(const OptimizeArgs& a, const Common& c) {
  ExperimentConfig config;
  if (!a.config.empty()) {
    std::istringstream in(read_text(a.config));
    config = parse_config(in);
  }
  if (!a.primes.empty()) config.primes = a.primes;
  if (!a.b_policy.empty()) config.b_policy = parse_b_policy(a.b_policy);
  if (!a.b.empty()) config.fixed_b = a.b;
  if (!a.csv.empty()) config.csv_path = a.csv;
  if (!a.json.empty()) config.json_path = a.json;
  if (a.parallelism > 0) config.parallelism = a.parallelism;
  if (a.vertex_cap > 0) config.vertex_cap = a.vertex_cap;
  config.force = config.force || a.force;
  if (config.b_policy == BPolicy::kFixed && config.fixed_b.empty()) throw InputError("b policy 'fixed' needs --b");

  const auto report = optimize_and_report(config);
  std::ostringstream csv;
  io::write_report_csv(csv, report);
  const std::string json = io::to_json(report).dump(2) + "\n";
  if (!config.csv_path.empty()) write_file(config.csv_path, csv.str());
  if (!config.json_path.empty()) write_file(config.json_path, json);
  std::cout << (c.fmt() == Format::kCsv ? csv.str() : json);
  return report.all_ok() ? kOk : kValidationFailure;
}

struct IntegrateArgs {
  std::string input = "-";
  std::vector<int> powers{1, 2, 3};
};

int run_integrate(const IntegrateArgs& a, const Common& c) {
  const auto f = read_function(a.input);
  const auto* pi = std::get_if<PwlTorusFunction>(&f);
  if (pi == nullptr) throw InputError("integrate expects a torus function");
  const double tolerance = c.tolerance.value_or(1e-8);
  const auto cake = layer_cake_check(*pi);
  const double integral = integral_ln(*pi);
  std::vector<std::pair<unsigned, LpNorm>> norms;
  for (unsigned p : parse_powers(a.powers)) norms.emplace_back(p, lp_norm_torus(*pi, p));
  if (c.fmt() == Format::kCsv) {
    std::cout << "quantity,value\n"
              << "integral_ln," << io::format_double(integral) << '\n'
              << "layer_cake_lhs," << io::format_double(cake.lhs) << '\n'
              << "layer_cake_rhs," << io::format_double(cake.rhs) << '\n'
              << "layer_cake_gap," << io::format_double(cake.gap) << '\n';
    for (const auto& [p, n] : norms) std::cout << "lp_norm_" << p << ',' << io::format_double(n.value) << '\n';
  } else {
    Json lp = Json::object();
    for (const auto& [p, n] : norms) lp[std::to_string(p)] = io::to_json(n);
    std::cout << Json{{"integral_ln", io::double_json(integral)}, {"layer_cake", io::to_json(cake)}, {"lp_norms", lp}}.dump(2)
              << '\n';
  }
  return cake.gap <= tolerance ? kOk : kValidationFailure;
}

struct ExperimentArgs {
  std::string name;
  std::vector<std::int64_t> q{101};
  std::string h;
};

int run_experiment(const ExperimentArgs& a, const Common& c) {
  if (a.name == "riemann") {
    PwlTorusFunction h = identity_function();
    if (!a.h.empty()) {
      auto f = read_function(a.h);
      if (!std::holds_alternative<PwlTorusFunction>(f)) throw InputError("--function must be a torus function");
      h = std::get<PwlTorusFunction>(std::move(f));
    }
    std::vector<RiemannResult> rows;
    for (auto q : a.q) rows.push_back(riemann_experiment(h, q));
    bool ok = true;
    if (c.tolerance) {
      for (const auto& row : rows) ok = ok && std::abs(row.discrete_mean - row.integral) <= *c.tolerance;
    }
    if (c.fmt() == Format::kCsv) {
      std::cout << "q,discrete_mean,lower_bound,integral,exact_inequality\n";
      for (const auto& row : rows) {
        std::cout << row.q << ',' << io::format_double(row.discrete_mean) << ',' << io::format_double(row.lower_bound)
                  << ',' << io::format_double(row.integral) << ',' << (row.exact_inequality ? "true" : "false")
                  << '\n';
      }
    } else {
      Json out = Json::array();
      for (const auto& row : rows) out.push_back(io::to_json(row));
      std::cout << out.dump(2) << '\n';
    }
    return ok ? kOk : kValidationFailure;
  }
  if (a.name == "stirling") {
    const auto rows = stirling_table(a.q);
    bool ok = true;
    for (std::size_t i = 1; i < rows.size(); ++i) ok = ok && rows[i].gap_to_minus_one < rows[i - 1].gap_to_minus_one;
    if (c.tolerance && !rows.empty()) ok = ok && rows.back().gap_to_minus_one <= *c.tolerance;
    if (c.fmt() == Format::kCsv) {
      io::write_stirling_csv(std::cout, rows);
    } else {
      Json out = Json::array();
      for (const auto& row : rows) out.push_back(io::to_json(row));
      std::cout << out.dump(2) << '\n';
    }
    return ok ? kOk : kValidationFailure;
  }
  throw InputError("unknown experiment " + a.name + " (riemann|stirling)");
}

struct CutgenArgs {
  std::string row;
  std::string function;
};

int run_cutgen(const CutgenArgs& a, const Common& c) {
  const auto row = io::tableau_row_from_json(read_json(a.row));
  const auto f = read_function(a.function);
  const Cut cut = std::visit([&](const auto& pi) { return emit_cut(row, pi); }, f);
  if (c.fmt() == Format::kCsv) {
    std::cout << "name,coefficient\n";
    for (const auto& co : cut.coefficients) std::cout << co.name << ',' << to_string(co.coefficient) << '\n';
  } else {
    std::cout << io::to_json(cut).dump(2) << '\n';
  }
  return kOk;
}

struct VerticesArgs {
  std::int64_t q = 0;
  std::int64_t b = 0;
  std::int64_t cap = kDefaultVertexCap;
};

int run_vertices(const VerticesArgs& a, const Common& c) {
  const auto set = enumerate_vertices(build_polytope(a.q, a.b), a.cap);
  if (c.fmt() == Format::kCsv) {
    std::cout << "vertex,values\n";
    for (std::size_t i = 0; i < set.vertices.size(); ++i) {
      std::cout << i << ',' << io::join_values(set.vertices[i].values()) << '\n';
    }
  } else {
    std::cout << io::to_json(set).dump(2) << '\n';
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Cut-generating functions on cyclic groups and the circle"};
  app.require_subcommand(1);
  app.fallthrough();
  Common common;
  app.add_option("--format", common.format, "Output format")->check(CLI::IsMember({"json", "csv"}));
  app.add_option("--tolerance", common.tolerance, "Tolerance override for checked identities")
      ->check(CLI::PositiveNumber);

  MakeArgs make;
  auto* make_cmd = app.add_subcommand("make", "Emit a named function as JSON");
  make_cmd->add_option("kind", make.kind, "gom|md2|dantzig|gmi|gmi-n|scaled-gmi|identity|torus-md2")->required();
  make_cmd->add_option("--q", make.q, "Group order");
  make_cmd->add_option("--b", make.b, "Right-hand side (residue for finite kinds, p/q on the circle)");
  make_cmd->add_option("--k", make.k, "Scaling factor for scaled-gmi");
  make_cmd->add_option("--coords", make.coordinates, "Right-hand side vector for gmi-n");
  make_cmd->add_option("--i", make.index, "Coordinate for gmi-n (1-based)");

  CheckArgs check;
  auto* check_cmd = app.add_subcommand("check", "Minimality verdict (and criteria for finite functions)");
  check_cmd->add_option("input", check.input, "Function JSON file or -");
  check_cmd->add_flag("--expect-minimal", check.expect_minimal, "Exit 2 unless the function is minimal");
  check_cmd->add_option("--p", check.powers, "L_p exponents for the criterion report")->delimiter(',');

  RearrangeArgs rearrange;
  auto* rearrange_cmd = app.add_subcommand("rearrange", "Nondecreasing rearrangement");
  rearrange_cmd->add_option("input", rearrange.input, "Function JSON file or -");
  rearrange_cmd->add_flag("--tilde", rearrange.tilde, "Symmetrized rearrangement (torus only)");
  rearrange_cmd->add_option("--sublevel-csv", rearrange.sublevel_csv, "Write alpha vs sublevel measure CSV");

  OptimizeArgs optimize;
  auto* optimize_cmd = app.add_subcommand("optimize", "Minimize the volume product over all vertices");
  optimize_cmd->add_option("--config", optimize.config, "Flat key = value configuration file");
  optimize_cmd->add_option("--primes", optimize.primes, "Group orders")->delimiter(',');
  optimize_cmd->add_option("--b-policy", optimize.b_policy, "all|fixed|canonical");
  optimize_cmd->add_option("--b", optimize.b, "Right-hand sides for the fixed policy")->delimiter(',');
  optimize_cmd->add_option("--csv", optimize.csv, "Report CSV path");
  optimize_cmd->add_option("--json", optimize.json, "Report JSON path");
  optimize_cmd->add_option("--parallelism", optimize.parallelism, "Worker threads");
  optimize_cmd->add_option("--vertex-cap", optimize.vertex_cap, "Largest q to enumerate");
  optimize_cmd->add_flag("--force", optimize.force, "Scan composite orders too (experimental rows)");

  IntegrateArgs integrate;
  auto* integrate_cmd = app.add_subcommand("integrate", "Log-integral, L_p norms and layer-cake check");
  integrate_cmd->add_option("input", integrate.input, "Torus function JSON file or -");
  integrate_cmd->add_option("--p", integrate.powers, "L_p exponents")->delimiter(',');

  ExperimentArgs experiment;
  auto* experiment_cmd = app.add_subcommand("experiment", "Limit experiments");
  experiment_cmd->add_option("name", experiment.name, "riemann|stirling")->required();
  experiment_cmd->add_option("--q", experiment.q, "Primes")->delimiter(',');
  experiment_cmd->add_option("--function", experiment.h, "Nondecreasing symmetric torus function (default x)");

  CutgenArgs cutgen;
  auto* cutgen_cmd = app.add_subcommand("cutgen", "Cut coefficients for a tableau row");
  cutgen_cmd->add_option("--row", cutgen.row, "Tableau row JSON")->required();
  cutgen_cmd->add_option("--function", cutgen.function, "Function JSON")->required();

  VerticesArgs vertices;
  auto* vertices_cmd = app.add_subcommand("vertices", "Vertices of the minimal-function polytope");
  vertices_cmd->add_option("--q", vertices.q, "Group order")->required();
  vertices_cmd->add_option("--b", vertices.b, "Right-hand side")->required();
  vertices_cmd->add_option("--cap", vertices.cap, "Largest q to enumerate");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kInputError;
  }

  try {
    if (*make_cmd) return run_make(make, common);
    if (*check_cmd) return run_check(check, common);
    if (*rearrange_cmd) return run_rearrange(rearrange, common);
    if (*optimize_cmd) return run_optimize(optimize, common);
    if (*integrate_cmd) return run_integrate(integrate, common);
    if (*experiment_cmd) return run_experiment(experiment, common);
    if (*cutgen_cmd) return run_cutgen(cutgen, common);
    if (*vertices_cmd) return run_vertices(vertices, common);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return e.code() == ErrorCode::kValidation ? kValidationFailure : kInputError;
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const Json::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInputError;
  }
  return kInputError;
}
