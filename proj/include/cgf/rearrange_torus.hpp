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

// Sublevel measures and the nondecreasing rearrangement on T^1.
//
// For a PWL function the distribution alpha -> mu({pi <= alpha}) is itself
// piecewise linear in alpha: a constant piece contributes a jump at its
// level, a sloped piece a ramp between its end values. The rearrangement
// pi_hat(x) = inf{ alpha >= 0 : mu({pi <= alpha}) >= x } is the generalized
// inverse of that profile, again PWL with rational data: profile jumps turn
// into flat pieces of pi_hat and flat stretches of the profile into jumps.
// Point values of pi have measure zero and never enter these constructions.

#include <algorithm>
#include <optional>
#include <utility>
#include <vector>

#include "cgf/error.hpp"
#include "cgf/pwl.hpp"
#include "cgf/rational.hpp"
#include "cgf/torus_minimality.hpp"

namespace cgf {

inline Rational sublevel_measure(const PwlTorusFunction& pi, const Rational& alpha) {
  Rational total = 0;
  for (std::size_t i = 0; i < pi.size(); ++i) {
    const auto& piece = pi.pieces()[i];
    const Rational x0 = pi.piece_start(i);
    const Rational x1 = pi.piece_end(i);
    if (piece.slope == 0) {
      if (piece.intercept <= alpha) total += x1 - x0;
      continue;
    }
    const Rational crossing = (alpha - piece.intercept) / piece.slope;
    if (piece.slope > 0) {
      total += std::clamp(crossing, x0, x1) - x0;
    } else {
      total += x1 - std::clamp(crossing, x0, x1);
    }
  }
  return total;
}

// alpha -> mu({pi <= alpha}) on [levels[0], inf): at levels[j] the profile
// equals value[j] (right-continuous, jumps included) and grows with rate
// slope[j] until levels[j+1]. Below levels[0] it is 0; from the last level on
// it is 1.
class SublevelProfile {
 public:
  explicit SublevelProfile(const PwlTorusFunction& pi) {
    struct Ramp {
      Rational lo, hi, rate;
    };
    std::vector<Ramp> ramps;
    for (std::size_t i = 0; i < pi.size(); ++i) {
      const Rational len = pi.piece_end(i) - pi.piece_start(i);
      Rational a = pi.pieces()[i](pi.piece_start(i));
      Rational c = pi.pieces()[i](pi.piece_end(i));
      if (a > c) std::swap(a, c);
      levels_.push_back(a);
      levels_.push_back(c);
      ramps.push_back({a, c, a == c ? Rational(0) : Rational(len / (c - a))});
    }
    std::sort(levels_.begin(), levels_.end());
    levels_.erase(std::unique(levels_.begin(), levels_.end()), levels_.end());
    for (std::size_t j = 0; j < levels_.size(); ++j) {
      value_.push_back(sublevel_measure(pi, levels_[j]));
      Rational rate = 0;
      if (j + 1 < levels_.size()) {
        for (const auto& r : ramps) {
          if (r.lo != r.hi && r.lo <= levels_[j] && r.hi >= levels_[j + 1]) rate += r.rate;
        }
      }
      slope_.push_back(rate);
    }
  }

  const std::vector<Rational>& levels() const noexcept { return levels_; }
  const std::vector<Rational>& values() const noexcept { return value_; }
  const std::vector<Rational>& slopes() const noexcept { return slope_; }

  Rational operator()(const Rational& alpha) const {
    if (alpha < levels_.front()) return 0;
    auto it = std::upper_bound(levels_.begin(), levels_.end(), alpha);
    const auto j = static_cast<std::size_t>(it - levels_.begin()) - 1;
    return value_[j] + slope_[j] * (alpha - levels_[j]);
  }

  Rational left_limit(const Rational& alpha) const {
    if (alpha <= levels_.front()) return 0;
    auto it = std::lower_bound(levels_.begin(), levels_.end(), alpha);
    const auto j = static_cast<std::size_t>(it - levels_.begin()) - 1;
    return value_[j] + slope_[j] * (alpha - levels_[j]);
  }

 private:
  std::vector<Rational> levels_;
  std::vector<Rational> value_;
  std::vector<Rational> slope_;
};

// The nondecreasing, left-continuous, equimeasurable rearrangement. The result
// uses the reflection convention (b = 0).
inline PwlTorusFunction rearrange_torus(const PwlTorusFunction& pi) {
  for (std::size_t i = 0; i < pi.size(); ++i) {
    const auto l = pi.limits(i);
    if (l.left < 0 || l.right < 0) fail(ErrorCode::kOutOfRange, "rearrangement needs pi >= 0");
  }
  const SublevelProfile profile(pi);
  const auto& levels = profile.levels();

  // Walk x upward through [0, 1), emitting pieces of pi_hat as (start, piece).
  std::vector<Rational> starts;
  std::vector<AffinePiece> pieces;
  auto emit = [&](const Rational& start, AffinePiece piece) {
    if (start >= 1) return;
    if (!starts.empty() && starts.back() == start) {
      pieces.back() = std::move(piece);
    } else {
      starts.push_back(start);
      pieces.push_back(std::move(piece));
    }
  };
  Rational below = 0;  // profile value just below the current level
  for (std::size_t j = 0; j < levels.size(); ++j) {
    const Rational& level = levels[j];
    const Rational& at = profile.values()[j];
    if (at > below) emit(below, {0, level});  // jump of the profile: flat pi_hat
    if (j + 1 == levels.size()) break;
    const Rational& rate = profile.slopes()[j];
    const Rational next_below = at + rate * (levels[j + 1] - level);
    if (rate > 0) {
      // x = at + rate * (alpha - level)  =>  alpha = level + (x - at) / rate
      const Rational slope = 1 / rate;
      emit(at, {slope, level - at * slope});
    }
    below = next_below;
  }
  if (starts.empty() || starts.front() != 0) fail(ErrorCode::kInternal, "rearrangement lost the origin");

  std::vector<Rational> at_values;
  at_values.reserve(starts.size());
  at_values.emplace_back(0);  // pi_hat(0) = inf{alpha >= 0} = 0
  for (std::size_t i = 1; i < starts.size(); ++i) {
    at_values.push_back(pieces[i - 1](starts[i]));  // left-continuous
  }
  return PwlTorusFunction(Rational(0), std::move(starts), std::move(pieces), std::move(at_values)).normalized();
}

// pi_bar(x) = lim_{eps -> 0+} pi_hat(x + eps).
inline PwlTorusFunction right_limit_fn(const PwlTorusFunction& hat) {
  if (!hat.is_nondecreasing()) fail(ErrorCode::kNotNondecreasing, "right limits need a nondecreasing input");
  std::vector<Rational> at;
  at.reserve(hat.size());
  for (std::size_t i = 0; i < hat.size(); ++i) at.push_back(hat.limits(i).right);
  return PwlTorusFunction(hat.rhs(), hat.breakpoints(), hat.pieces(), std::move(at)).normalized();
}

// pi_tilde = (pi_hat + pi_bar) / 2: nondecreasing, subadditive and
// reflection-symmetric. The origin is pinned to 0 (pi_bar(0) is the right
// limit there); a single point does not change any integral.
inline PwlTorusFunction tilde_fn(const PwlTorusFunction& pi) {
  if (!is_minimal_pwl(pi, {.stop_at_first = true})) fail(ErrorCode::kNotMinimal, "input is not minimal");
  const auto hat = rearrange_torus(pi);
  const auto bar = right_limit_fn(hat);
  auto tilde = combine(make_rational(1, 2), hat, make_rational(1, 2), bar);
  std::vector<Rational> at = tilde.point_values();
  at[0] = 0;
  return PwlTorusFunction(Rational(0), tilde.breakpoints(), tilde.pieces(), std::move(at)).normalized();
}

// A finite union of closed arcs of T^1, each given by a start in [0, 1) and a
// length in [0, 1]. Zero-length arcs are single points.
struct Arc {
  Rational start;
  Rational length;
};

// {pi <= alpha} as arcs: closures of the sloped/flat piece parts (the
// closure adds finitely many points) plus the breakpoints whose point value
// is <= alpha.
inline std::vector<Arc> sublevel_arcs(const PwlTorusFunction& pi, const Rational& alpha) {
  std::vector<Arc> arcs;
  for (std::size_t i = 0; i < pi.size(); ++i) {
    const auto& piece = pi.pieces()[i];
    const Rational x0 = pi.piece_start(i);
    const Rational x1 = pi.piece_end(i);
    Rational lo = x0;
    Rational hi = x1;
    if (piece.slope == 0) {
      if (piece.intercept > alpha) hi = lo;
    } else {
      const Rational crossing = std::clamp(Rational((alpha - piece.intercept) / piece.slope), x0, x1);
      if (piece.slope > 0) {
        hi = crossing;
      } else {
        lo = crossing;
      }
    }
    if (hi > lo) arcs.push_back({lo, hi - lo});
    if (pi.point_values()[i] <= alpha) arcs.push_back({x0, 0});
  }
  return arcs;
}

// Lebesgue measure of a union of arcs.
inline Rational arcs_measure(const std::vector<Arc>& arcs) {
  std::vector<std::pair<Rational, Rational>> spans;
  for (const auto& a : arcs) {
    if (a.length >= 1) return 1;
    const Rational s = frac(a.start);
    const Rational e = s + a.length;
    if (e <= 1) {
      spans.emplace_back(s, e);
    } else {
      spans.emplace_back(s, Rational(1));
      spans.emplace_back(Rational(0), e - 1);
    }
  }
  std::sort(spans.begin(), spans.end());
  Rational total = 0;
  std::optional<std::pair<Rational, Rational>> open;
  for (const auto& [s, e] : spans) {
    if (open && s <= open->second) {
      open->second = std::max(open->second, e);
    } else {
      if (open) total += open->second - open->first;
      open = std::make_pair(s, e);
    }
  }
  if (open) total += open->second - open->first;
  return total;
}

// mu(A + B) for arc unions A, B.
inline Rational sumset_measure(const std::vector<Arc>& a, const std::vector<Arc>& b) {
  std::vector<Arc> sums;
  sums.reserve(a.size() * b.size());
  for (const auto& x : a) {
    for (const auto& y : b) sums.push_back({frac(x.start + y.start), x.length + y.length});
  }
  return arcs_measure(sums);
}

}  // namespace cgf
