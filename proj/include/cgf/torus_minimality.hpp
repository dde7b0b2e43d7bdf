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

// Minimality test for piecewise-linear functions on T^1.
//
// Delta(x, y) = pi(x) + pi(y) - pi(x + y) is affine on every open cell of the
// complex cut out by the lines x = b_i, y = b_j and x + y = b_k (b_* the
// breakpoints, sums mod 1). Its infimum over the torus square is therefore
// attained as a limit at a vertex of that complex, approached from inside one
// of the cells or edges meeting there. Every vertex has the form (b_i, b_j) or
// (b_i, b_k - b_i) up to swapping the arguments, and the thirteen direction
// patterns below realize each (sign dx, sign dy, sign dx+dy) combination, so
// checking all of them is exact for continuous and discontinuous functions.
// Symmetry is affine-on-cells in the same way on the refinement of the
// breakpoints by their reflections b - x_i.

#include <array>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "cgf/pwl.hpp"
#include "cgf/rational.hpp"
#include "cgf/verdict.hpp"

namespace cgf {

namespace detail {

struct Direction {
  int dx;
  int dy;
};

inline constexpr std::array<Direction, 13> kCellDirections{{
    {0, 0}, {1, 0}, {-1, 0}, {0, 1}, {0, -1}, {1, -1}, {-1, 1},
    {1, 1}, {-1, -1}, {-1, 2}, {-2, 1}, {1, -2}, {2, -1},
}};

inline int sign(int v) { return (v > 0) - (v < 0); }

inline char sign_char(int v) { return v > 0 ? '+' : (v < 0 ? '-' : '0'); }

inline std::string limit_label(int sx, int sy, int ss) {
  return {'(', sign_char(sx), ',', sign_char(sy), ',', sign_char(ss), ')'};
}

}  // namespace detail

inline MinimalityVerdict<Rational> is_minimal_pwl(const PwlTorusFunction& pi, VerdictOptions options = {}) {
  MinimalityVerdict<Rational> verdict;
  auto done = [&] { return options.stop_at_first && !verdict.violations.empty(); };
  const auto& bps = pi.breakpoints();
  const Rational& b = pi.rhs();

  if (pi(Rational(0)) != 0) {
    verdict.violations.push_back({ViolationKind::kOrigin, {Rational(0)}, pi(Rational(0)), {}});
    if (done()) return verdict;
  }

  for (std::size_t i = 0; i < pi.size(); ++i) {
    const auto l = pi.limits(i);
    const std::array<std::pair<const Rational*, const char*>, 3> probes{
        {{&l.left, "left"}, {&l.at, ""}, {&l.right, "right"}}};
    for (const auto& [value, label] : probes) {
      if (*value < 0) {
        verdict.violations.push_back({ViolationKind::kNegativity, {bps[i]}, *value, label});
        if (done()) return verdict;
      }
    }
  }

  {
    std::vector<Rational> reflected;
    reflected.reserve(bps.size());
    for (const auto& x : bps) reflected.push_back(frac(b - x));
    std::sort(reflected.begin(), reflected.end());
    const auto grid = merge_breakpoints(bps, reflected);
    for (std::size_t j = 0; j < grid.size(); ++j) {
      const Rational& s = grid[j];
      const Rational next = j + 1 < grid.size() ? grid[j + 1] : Rational(1);
      const bool skip_point = pi.mode() == SymmetryMode::kReflection && s == 0;
      if (!skip_point) {
        const Rational defect = pi(s) + pi(b - s) - 1;
        if (defect != 0) {
          verdict.violations.push_back({ViolationKind::kSymmetry, {s, frac(b - s)}, defect, {}});
          if (done()) return verdict;
        }
      }
      // On the open cell (s, next) both pi(x) and pi(b - x) are affine.
      const Rational start = pi.limit(s, +1) + pi.limit(b - s, -1) - 1;
      if (start != 0) {
        verdict.violations.push_back({ViolationKind::kSymmetry, {s, frac(b - s)}, start, "right"});
        if (done()) return verdict;
      }
      const Rational end = pi.limit(next, -1) + pi.limit(b - next, +1) - 1;
      if (end != 0) {
        verdict.violations.push_back({ViolationKind::kSymmetry, {frac(next), frac(b - next)}, end, "left"});
        if (done()) return verdict;
      }
    }
  }

  std::set<std::pair<Rational, Rational>> vertices;
  for (const auto& x : bps) {
    for (const auto& y : bps) {
      vertices.emplace(x, y);
      vertices.emplace(x, frac(y - x));
    }
  }
  for (const auto& [x, y] : vertices) {
    const Rational sum = frac(x + y);
    for (const auto& d : detail::kCellDirections) {
      const int sx = detail::sign(d.dx);
      const int sy = detail::sign(d.dy);
      const int ss = detail::sign(d.dx + d.dy);
      const Rational slack = pi.limit(x, sx) + pi.limit(y, sy) - pi.limit(sum, ss);
      if (slack < 0) {
        verdict.violations.push_back({ViolationKind::kSubadditivity, {x, y}, slack,
                                      d.dx == 0 && d.dy == 0 ? std::string{} : detail::limit_label(sx, sy, ss)});
        if (done()) return verdict;
      }
    }
  }
  return verdict;
}

}  // namespace cgf
