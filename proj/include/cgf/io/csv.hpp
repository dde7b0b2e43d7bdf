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

// Fixed CSV schemas. Rational columns hold exact "p/q" strings; a function
// column holds its values separated by single spaces.
//
//   report:   q,b,n_vertices,min_product,argmin,unique,wall_time_ms,status
//   stirling: q,ratio,log_mean,gap
//   sublevel: alpha,measure

#include <cstdio>
#include <ostream>
#include <string>
#include <vector>

#include "cgf/experiments.hpp"
#include "cgf/rational.hpp"
#include "cgf/rearrange_torus.hpp"

namespace cgf::io {

inline std::string format_double(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

inline std::string format_millis(double ms) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", ms);
  return buf;
}

inline std::string join_values(const std::vector<Rational>& values) {
  std::string out;
  for (const auto& v : values) {
    if (!out.empty()) out += ' ';
    out += to_string(v);
  }
  return out;
}

inline void write_report_csv(std::ostream& out, const OptimizationReport& report) {
  out << "q,b,n_vertices,min_product,argmin,unique,wall_time_ms,status\n";
  for (const auto& r : report.rows) {
    out << r.q << ',' << (r.b ? std::to_string(*r.b) : "") << ',' << r.n_vertices << ','
        << (r.min_product ? to_string(*r.min_product) : "") << ',' << (r.argmin ? join_values(r.argmin->values()) : "")
        << ',' << (r.unique ? "true" : "false") << ',' << format_millis(r.wall_time_ms) << ',' << to_string(r.status)
        << '\n';
  }
}

inline void write_stirling_csv(std::ostream& out, const std::vector<StirlingRow>& rows) {
  out << "q,ratio,log_mean,gap\n";
  for (const auto& r : rows) {
    out << r.q << ',' << to_string(r.ratio) << ',' << format_double(r.log_mean) << ','
        << format_double(r.gap_to_minus_one) << '\n';
  }
}

// The sublevel profile is piecewise linear in alpha, so its kinks reproduce
// the whole curve. Where a flat piece makes it jump, the left limit is
// written first on its own row.
inline void write_sublevel_csv(std::ostream& out, const PwlTorusFunction& pi) {
  const SublevelProfile profile(pi);
  out << "alpha,measure\n";
  for (const auto& alpha : profile.levels()) {
    const Rational left = profile.left_limit(alpha);
    const Rational value = profile(alpha);
    if (left != value) out << to_string(alpha) << ',' << to_string(left) << '\n';
    out << to_string(alpha) << ',' << to_string(value) << '\n';
  }
}

}  // namespace cgf::io
