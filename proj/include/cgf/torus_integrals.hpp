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

// Closed-form integrals of PWL functions on T^1: the log-integral that
// measures cut strength under the volume criterion, L_p norms, and the
// layer-cake form of the log-integral computed from the sublevel profile.

#include <algorithm>
#include <cmath>
#include <limits>

#include "cgf/criteria.hpp"
#include "cgf/error.hpp"
#include "cgf/pwl.hpp"
#include "cgf/rational.hpp"
#include "cgf/rearrange_torus.hpp"

namespace cgf {

namespace detail {

// -r ln(r) / (1 - r) for r in [0, 1], continuous at both ends.
inline double log_ramp_correction(const Rational& r) {
  if (r == 0) return 0.0;
  if (r == 1) return 1.0;
  const Rational s = 1 - r;
  const double rd = to_double(r);
  const double log_r = r < make_rational(1, 2) ? log_rational(r) : std::log1p(-to_double(s));
  return -rd * log_r / to_double(s);
}

}  // namespace detail

// int_0^1 ln(pi(x)) dx. On a piece where pi runs linearly between u0 and u1
// (hi = max, r = min/max) the integral is len * (ln hi - 1 + (-r ln r)/(1-r)),
// which is the closed-form antiderivative (u ln u - u)/slope rearranged to
// avoid cancellation for nearly flat pieces; r = 0 is the improper endpoint
// case lim t(ln t - 1) = 0. A piece that vanishes identically gives -inf.
inline double integral_ln(const PwlTorusFunction& pi) {
  double total = 0.0;
  for (std::size_t i = 0; i < pi.size(); ++i) {
    const Rational x0 = pi.piece_start(i);
    const Rational x1 = pi.piece_end(i);
    const Rational u0 = pi.pieces()[i](x0);
    const Rational u1 = pi.pieces()[i](x1);
    const Rational& lo = std::min(u0, u1);
    const Rational& hi = std::max(u0, u1);
    if (lo < 0) fail(ErrorCode::kOutOfRange, "log-integral needs pi >= 0");
    if (hi == 0) return -std::numeric_limits<double>::infinity();
    const double len = to_double(x1 - x0);
    total += len * (log_rational(hi) - 1.0 + detail::log_ramp_correction(lo / hi));
  }
  return total;
}

// (int |pi|^p)^{1/p} with the p-th power integrated exactly piece by piece.
inline LpNorm lp_norm_torus(const PwlTorusFunction& pi, unsigned p) {
  if (p == 0) fail(ErrorCode::kOutOfRange, "p must be >= 1");
  Rational total = 0;
  for (std::size_t i = 0; i < pi.size(); ++i) {
    const auto& piece = pi.pieces()[i];
    const Rational x0 = pi.piece_start(i);
    const Rational x1 = pi.piece_end(i);
    const Rational u0 = piece(x0);
    const Rational u1 = piece(x1);
    if ((u0 < 0 || u1 < 0) && p % 2 == 1) {
      // |.| differs from the polynomial only where pi < 0.
      fail(ErrorCode::kOutOfRange, "odd L_p norm of a function with negative values");
    }
    if (piece.slope == 0) {
      total += ipow(piece.intercept, p) * (x1 - x0);
    } else {
      total += (ipow(u1, p + 1) - ipow(u0, p + 1)) / (piece.slope * (p + 1));
    }
  }
  double root;
  if (p == 1) {
    root = to_double(total);
  } else if (p == 2) {
    root = std::sqrt(to_double(total));
  } else {
    root = static_cast<double>(std::pow(static_cast<long double>(to_double(total)), 1.0L / p));
  }
  return {total, root};
}

struct LayerCake {
  double lhs;  // int -ln(pi)
  double rhs;  // int_0^1 mu({pi <= s}) / s ds
  double gap;
};

// The profile is exactly PWL in s, so each stretch [s0, s1) where it equals
// A + B s integrates to A ln(s1/s0) + B (s1 - s0); a stretch starting at 0
// is finite only when A = 0.
inline LayerCake layer_cake_check(const PwlTorusFunction& pi) {
  const double inf = std::numeric_limits<double>::infinity();
  if (pi.essential_max() > 1) fail(ErrorCode::kOutOfRange, "layer-cake form needs pi <= 1");
  const double lhs = -integral_ln(pi);

  const SublevelProfile profile(pi);
  const auto& levels = profile.levels();
  double rhs = 0.0;
  auto stretch = [&](const Rational& s0, const Rational& s1, const Rational& a, const Rational& b) {
    if (s1 <= s0) return;
    if (s0 == 0) {
      if (a != 0) {
        rhs = inf;
        return;
      }
      rhs += to_double(b * s1);
      return;
    }
    if (a != 0) rhs += to_double(a) * log_rational(s1 / s0);
    rhs += to_double(b * (s1 - s0));
  };
  for (std::size_t j = 0; j < levels.size() && levels[j] < 1; ++j) {
    const Rational s1 = j + 1 < levels.size() ? std::min(levels[j + 1], Rational(1)) : Rational(1);
    const Rational& slope = profile.slopes()[j];
    stretch(levels[j], s1, profile.values()[j] - slope * levels[j], slope);
  }
  const double gap = (lhs == inf && rhs == inf) ? 0.0 : std::abs(lhs - rhs);
  return {lhs, rhs, gap};
}

}  // namespace cgf
