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

// JSON encodings of the library's values. Rationals travel as exact "p/q"
// strings; plain JSON integers are accepted on input. Non-finite doubles are
// written as the strings "inf" / "-inf".

#include <cmath>
#include <limits>
#include <string>
#include <vector>

#include <json.hpp>

#include "cgf/criteria.hpp"
#include "cgf/error.hpp"
#include "cgf/experiments.hpp"
#include "cgf/finite_function.hpp"
#include "cgf/polytope.hpp"
#include "cgf/pwl.hpp"
#include "cgf/rational.hpp"
#include "cgf/torus_integrals.hpp"
#include "cgf/verdict.hpp"

namespace cgf::io {

using Json = nlohmann::ordered_json;

inline Json rational_json(const Rational& r) { return to_string(r); }

inline Rational rational_from_json(const Json& j, const std::string& what) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return make_rational(j.get<std::int64_t>());
  fail(ErrorCode::kParse, what + ": expected a rational as \"p/q\" or an integer");
}

inline Json rationals_json(const std::vector<Rational>& values) {
  Json out = Json::array();
  for (const auto& v : values) out.push_back(rational_json(v));
  return out;
}

inline std::vector<Rational> rationals_from_json(const Json& j, const std::string& what) {
  if (!j.is_array()) fail(ErrorCode::kParse, what + ": expected an array");
  std::vector<Rational> out;
  out.reserve(j.size());
  for (const auto& item : j) out.push_back(rational_from_json(item, what));
  return out;
}

inline Json double_json(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  return x;
}

inline double double_from_json(const Json& j, const std::string& what) {
  if (j.is_number()) return j.get<double>();
  if (j == "inf") return std::numeric_limits<double>::infinity();
  if (j == "-inf") return -std::numeric_limits<double>::infinity();
  fail(ErrorCode::kParse, what + ": expected a number");
}

inline const Json& field(const Json& j, const char* key, const std::string& what) {
  if (!j.is_object()) fail(ErrorCode::kParse, what + ": expected an object");
  const auto it = j.find(key);
  if (it == j.end()) fail(ErrorCode::kParse, what + ": missing field \"" + key + "\"");
  return *it;
}

inline std::int64_t integer_field(const Json& j, const char* key, const std::string& what) {
  const auto& v = field(j, key, what);
  if (!v.is_number_integer()) fail(ErrorCode::kParse, what + ": \"" + key + "\" must be an integer");
  return v.get<std::int64_t>();
}

// --- finite functions -------------------------------------------------------

inline Json to_json(const FiniteGroupFunction& pi) {
  return Json{{"q", pi.order()}, {"b", pi.rhs()}, {"values", rationals_json(pi.values())}};
}

inline FiniteGroupFunction finite_from_json(const Json& j) {
  const std::string what = "finite function";
  return {integer_field(j, "q", what), integer_field(j, "b", what),
          rationals_from_json(field(j, "values", what), what)};
}

// --- PWL torus functions ----------------------------------------------------

inline Json to_json(const PwlTorusFunction& pi) {
  Json pieces = Json::array();
  for (const auto& p : pi.pieces()) {
    pieces.push_back({{"slope", rational_json(p.slope)}, {"intercept", rational_json(p.intercept)}});
  }
  Json limits = Json::array();
  for (std::size_t i = 0; i < pi.size(); ++i) {
    const auto l = pi.limits(i);
    limits.push_back({{"left", rational_json(l.left)}, {"at", rational_json(l.at)}, {"right", rational_json(l.right)}});
  }
  return Json{{"b", rational_json(pi.rhs())},
              {"breakpoints", rationals_json(pi.breakpoints())},
              {"pieces", std::move(pieces)},
              {"limits", std::move(limits)}};
}

// Point values come from "limits[i].at" (left and right are checked against
// the pieces) or from a bare "values" array.
inline PwlTorusFunction pwl_from_json(const Json& j) {
  const std::string what = "PWL function";
  const Rational b = rational_from_json(field(j, "b", what), what);
  auto breakpoints = rationals_from_json(field(j, "breakpoints", what), what);
  const auto& pieces_json = field(j, "pieces", what);
  if (!pieces_json.is_array()) fail(ErrorCode::kParse, what + ": \"pieces\" must be an array");
  std::vector<AffinePiece> pieces;
  for (const auto& p : pieces_json) {
    pieces.push_back({rational_from_json(field(p, "slope", what), what),
                      rational_from_json(field(p, "intercept", what), what)});
  }
  std::vector<Rational> at;
  std::vector<BreakpointLimits> given;
  if (j.contains("limits")) {
    const auto& limits = j.at("limits");
    if (!limits.is_array()) fail(ErrorCode::kParse, what + ": \"limits\" must be an array");
    for (const auto& l : limits) {
      given.push_back({rational_from_json(field(l, "left", what), what), rational_from_json(field(l, "at", what), what),
                       rational_from_json(field(l, "right", what), what)});
      at.push_back(given.back().at);
    }
  } else if (j.contains("values")) {
    at = rationals_from_json(j.at("values"), what);
  } else {
    fail(ErrorCode::kParse, what + ": need \"limits\" or \"values\"");
  }
  PwlTorusFunction pi(b, std::move(breakpoints), std::move(pieces), std::move(at));
  for (std::size_t i = 0; i < given.size(); ++i) {
    const auto actual = pi.limits(i);
    if (actual.left != given[i].left || actual.right != given[i].right) {
      fail(ErrorCode::kInvalidFunction, "limits at breakpoint " + to_string(pi.breakpoints()[i]) +
                                            " disagree with the pieces");
    }
  }
  return pi;
}

// --- verdicts and criteria ----------------------------------------------------

inline Json witness_json(const std::vector<Residue>& w) { return w; }
inline Json witness_json(const std::vector<Rational>& w) { return rationals_json(w); }

template <typename Point>
Json to_json(const MinimalityVerdict<Point>& verdict) {
  Json violations = Json::array();
  for (const auto& v : verdict.violations) {
    Json item{{"kind", std::string(to_string(v.kind))}, {"witness", witness_json(v.witness)},
              {"amount", rational_json(v.amount)}};
    if (!v.limit.empty()) item["limit"] = v.limit;
    violations.push_back(std::move(item));
  }
  return Json{{"minimal", verdict.is_minimal()}, {"violations", std::move(violations)}};
}

inline Json to_json(const LpNorm& n) { return Json{{"pth_power", rational_json(n.pth_power)}, {"value", n.value}}; }

inline Json to_json(const CriterionReport& r) {
  Json norms = Json::object();
  for (const auto& [p, n] : r.lp_norms) norms[std::to_string(p)] = to_json(n);
  Json md2 = Json::object();
  for (const auto& [p, v] : r.md2_pth_power) md2[std::to_string(p)] = rational_json(v);
  return Json{{"lp_norms", std::move(norms)},
              {"md2_pth_power", std::move(md2)},
              {"volume_product", rational_json(r.volume_product)},
              {"simplex_volume", r.simplex_volume ? rational_json(*r.simplex_volume) : Json("inf")},
              {"log_geo_mean", double_json(r.log_geo_mean)}};
}

inline Json to_json(const LayerCake& c) {
  return Json{{"lhs", double_json(c.lhs)}, {"rhs", double_json(c.rhs)}, {"gap", double_json(c.gap)}};
}

// --- polytope results -------------------------------------------------------

inline Json to_json(const VertexSet& set) {
  Json vertices = Json::array();
  for (const auto& v : set.vertices) vertices.push_back(to_json(v));
  return Json{{"method", set.method}, {"count", set.vertices.size()}, {"vertices", std::move(vertices)}};
}

inline Json to_json(const VolumeOptimum& o) {
  return Json{{"argmin", to_json(o.argmin)},
              {"value", rational_json(o.value)},
              {"unique", o.unique},
              {"n_vertices", o.vertex_count},
              {"experimental", o.experimental}};
}

inline Json to_json(const Decomposition& d) {
  return Json{{"lambda", rational_json(d.lambda)}, {"gamma", rational_json(d.gamma)}, {"pi_tilde", to_json(d.pi_tilde)}};
}

inline Json to_json(const ReportRow& row) {
  Json out{{"q", row.q}, {"b", row.b ? Json(*row.b) : Json()}, {"status", std::string(to_string(row.status))},
           {"n_vertices", row.n_vertices}};
  out["min_product"] = row.min_product ? rational_json(*row.min_product) : Json();
  out["argmin"] = row.argmin ? rationals_json(row.argmin->values()) : Json();
  out["unique"] = row.unique;
  out["wall_time_ms"] = row.wall_time_ms;
  if (!row.message.empty()) out["message"] = row.message;
  return out;
}

inline Json to_json(const OptimizationReport& report) {
  Json rows = Json::array();
  for (const auto& r : report.rows) rows.push_back(to_json(r));
  return Json{{"all_ok", report.all_ok()}, {"rows", std::move(rows)}};
}

// --- experiments -------------------------------------------------------------

inline Json to_json(const RiemannResult& r) {
  return Json{{"q", r.q},
              {"discrete_mean", double_json(r.discrete_mean)},
              {"lower_bound", double_json(r.lower_bound)},
              {"integral", double_json(r.integral)},
              {"product", rational_json(r.product)},
              {"optimum", rational_json(r.optimum)},
              {"exact_inequality", r.exact_inequality}};
}

inline Json to_json(const StirlingRow& r) {
  return Json{{"q", r.q},
              {"ratio_num", numerator_of(r.ratio).str()},
              {"ratio_den", denominator_of(r.ratio).str()},
              {"log_mean", double_json(r.log_mean)},
              {"gap_to_minus_one", double_json(r.gap_to_minus_one)}};
}

inline Json to_json(const TableauRow& row) {
  Json columns = Json::array();
  for (std::size_t j = 0; j < row.names.size(); ++j) {
    columns.push_back({{"name", row.names[j]}, {"frac", rational_json(row.column_fractions[j])}});
  }
  return Json{{"rhs", rational_json(row.rhs_fraction)}, {"columns", std::move(columns)}};
}

inline TableauRow tableau_row_from_json(const Json& j) {
  const std::string what = "tableau row";
  const Rational rhs = rational_from_json(field(j, "rhs", what), what);
  const auto& columns = field(j, "columns", what);
  if (!columns.is_array()) fail(ErrorCode::kParse, what + ": \"columns\" must be an array");
  std::vector<std::string> names;
  std::vector<Rational> fractions;
  for (const auto& c : columns) {
    const auto& name = field(c, "name", what);
    if (!name.is_string()) fail(ErrorCode::kParse, what + ": column name must be a string");
    names.push_back(name.get<std::string>());
    fractions.push_back(rational_from_json(field(c, "frac", what), what));
  }
  return make_tableau_row(rhs, std::move(names), fractions);
}

inline Json to_json(const Cut& cut) {
  Json coefficients = Json::array();
  for (const auto& c : cut.coefficients) {
    coefficients.push_back({{"name", c.name}, {"coefficient", rational_json(c.coefficient)}});
  }
  return Json{{"coefficients", std::move(coefficients)}, {"rhs", rational_json(cut.rhs)}};
}

}  // namespace cgf::io
