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

// Piecewise-linear functions on the circle T^1 = R/Z with rational data.
//
// Breakpoints 0 = x_0 < x_1 < ... < x_{k-1} < 1 split [0, 1) into pieces;
// piece i covers [x_i, x_{i+1}] (x_k = 1) and carries an affine map
// slope * x + intercept in the absolute coordinate x. One-sided limits at a
// breakpoint come from the adjacent pieces (the left limit at 0 is the value
// of the last piece at 1); the value *at* a breakpoint is stored separately,
// which is how jumps and isolated point values are represented.
//
// The right-hand side b lies in [0, 1). b = 0 selects the reflection
// convention pi(x) + pi(-x) = 1 for x != 0 used for nondecreasing
// rearrangements; b in (0, 1) is the usual symmetry pi(x) + pi(b - x) = 1.

#include <algorithm>
#include <cstdint>
#include <iterator>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cgf/error.hpp"
#include "cgf/rational.hpp"

namespace cgf {

struct AffinePiece {
  Rational slope;
  Rational intercept;

  Rational operator()(const Rational& x) const { return slope * x + intercept; }
  friend bool operator==(const AffinePiece&, const AffinePiece&) = default;
};

struct BreakpointLimits {
  Rational left;
  Rational at;
  Rational right;
  friend bool operator==(const BreakpointLimits&, const BreakpointLimits&) = default;
};

enum class SymmetryMode { kRhs, kReflection };

class PwlTorusFunction {
 public:
  PwlTorusFunction(Rational b, std::vector<Rational> breakpoints, std::vector<AffinePiece> pieces,
                   std::vector<Rational> point_values)
      : b_(std::move(b)),
        breakpoints_(std::move(breakpoints)),
        pieces_(std::move(pieces)),
        at_(std::move(point_values)) {
    if (b_ < 0 || b_ >= 1) fail(ErrorCode::kOutOfRange, "b must lie in [0, 1), got " + to_string(b_));
    if (breakpoints_.empty() || breakpoints_.front() != 0) {
      fail(ErrorCode::kInvalidFunction, "breakpoints must start at 0");
    }
    for (std::size_t i = 1; i < breakpoints_.size(); ++i) {
      if (breakpoints_[i] <= breakpoints_[i - 1]) {
        fail(ErrorCode::kInvalidFunction, "breakpoints must be strictly increasing");
      }
    }
    if (breakpoints_.back() >= 1) fail(ErrorCode::kInvalidFunction, "breakpoints must lie in [0, 1)");
    if (pieces_.size() != breakpoints_.size() || at_.size() != breakpoints_.size()) {
      fail(ErrorCode::kInvalidFunction, "need one piece and one point value per breakpoint");
    }
  }

  // Linear interpolation through (x_i, values[i]) with the last piece ending
  // at (1, end_value). Point values equal the node values.
  static PwlTorusFunction interpolate(Rational b, std::vector<Rational> nodes,
                                      std::vector<Rational> values, const Rational& end_value) {
    if (nodes.size() != values.size() || nodes.empty()) {
      fail(ErrorCode::kInvalidFunction, "nodes and values must be nonempty and of equal length");
    }
    std::vector<AffinePiece> pieces;
    pieces.reserve(nodes.size());
    for (std::size_t i = 0; i < nodes.size(); ++i) {
      const Rational& x0 = nodes[i];
      const Rational x1 = i + 1 < nodes.size() ? nodes[i + 1] : Rational(1);
      const Rational& v0 = values[i];
      const Rational& v1 = i + 1 < nodes.size() ? values[i + 1] : end_value;
      if (x1 <= x0) fail(ErrorCode::kInvalidFunction, "nodes must be strictly increasing in [0, 1)");
      const Rational slope = (v1 - v0) / (x1 - x0);
      pieces.push_back({slope, v0 - slope * x0});
    }
    return {std::move(b), std::move(nodes), std::move(pieces), std::move(values)};
  }

  const Rational& rhs() const noexcept { return b_; }
  SymmetryMode mode() const noexcept { return b_ == 0 ? SymmetryMode::kReflection : SymmetryMode::kRhs; }
  const std::vector<Rational>& breakpoints() const noexcept { return breakpoints_; }
  const std::vector<AffinePiece>& pieces() const noexcept { return pieces_; }
  const std::vector<Rational>& point_values() const noexcept { return at_; }
  std::size_t size() const noexcept { return breakpoints_.size(); }

  Rational piece_start(std::size_t i) const { return breakpoints_[i]; }
  Rational piece_end(std::size_t i) const {
    return i + 1 < breakpoints_.size() ? breakpoints_[i + 1] : Rational(1);
  }

  BreakpointLimits limits(std::size_t i) const {
    const Rational left = i == 0 ? pieces_.back()(Rational(1)) : pieces_[i - 1](breakpoints_[i]);
    return {left, at_[i], pieces_[i](breakpoints_[i])};
  }

  // Index of the breakpoint equal to x (x already in [0, 1)), if any.
  std::optional<std::size_t> breakpoint_index(const Rational& x) const {
    auto it = std::lower_bound(breakpoints_.begin(), breakpoints_.end(), x);
    if (it != breakpoints_.end() && *it == x) return static_cast<std::size_t>(it - breakpoints_.begin());
    return std::nullopt;
  }

  // Piece whose half-open span [x_i, x_{i+1}) contains x in [0, 1).
  std::size_t piece_index(const Rational& x) const {
    auto it = std::upper_bound(breakpoints_.begin(), breakpoints_.end(), x);
    return static_cast<std::size_t>(it - breakpoints_.begin()) - 1;
  }

  // direction < 0: limit from the left, > 0: from the right, 0: the value.
  Rational limit(const Rational& point, int direction) const {
    const Rational x = frac(point);
    if (const auto i = breakpoint_index(x)) {
      if (direction == 0) return at_[*i];
      if (direction > 0) return pieces_[*i](x);
      return *i == 0 ? pieces_.back()(Rational(1)) : pieces_[*i - 1](x);
    }
    return pieces_[piece_index(x)](x);
  }

  Rational operator()(const Rational& point) const { return limit(point, 0); }

  bool is_continuous() const {
    for (std::size_t i = 0; i < size(); ++i) {
      const auto l = limits(i);
      if (l.left != l.at || l.at != l.right) return false;
    }
    return true;
  }

  // Nondecreasing on [0, 1) with the real order (the wrap at 0 excluded).
  bool is_nondecreasing() const {
    for (std::size_t i = 0; i < size(); ++i) {
      if (pieces_[i].slope < 0) return false;
      const auto l = limits(i);
      if (i > 0 && l.left > l.at) return false;
      if (l.at > l.right) return false;
    }
    return true;
  }

  Rational essential_max() const {
    Rational best = pieces_[0](breakpoints_[0]);
    for (std::size_t i = 0; i < size(); ++i) {
      best = std::max({best, pieces_[i](piece_start(i)), pieces_[i](piece_end(i))});
    }
    return best;
  }

  PwlTorusFunction with_rhs(Rational b) const {
    return {std::move(b), breakpoints_, pieces_, at_};
  }

  // Merges neighbouring pieces that carry the same affine map and meet
  // without a jump or isolated value. Breakpoint 0 is always kept.
  PwlTorusFunction normalized() const {
    std::vector<Rational> xs{breakpoints_[0]};
    std::vector<AffinePiece> ps{pieces_[0]};
    std::vector<Rational> at{at_[0]};
    for (std::size_t i = 1; i < size(); ++i) {
      if (pieces_[i] == ps.back() && at_[i] == pieces_[i](breakpoints_[i])) continue;
      xs.push_back(breakpoints_[i]);
      ps.push_back(pieces_[i]);
      at.push_back(at_[i]);
    }
    return {b_, std::move(xs), std::move(ps), std::move(at)};
  }

  // Same function written on a finer breakpoint list (must contain ours).
  PwlTorusFunction refined(const std::vector<Rational>& grid) const {
    std::vector<AffinePiece> ps;
    std::vector<Rational> at;
    ps.reserve(grid.size());
    at.reserve(grid.size());
    for (const auto& x : grid) {
      ps.push_back(pieces_[piece_index(x)]);
      at.push_back((*this)(x));
    }
    return {b_, grid, std::move(ps), std::move(at)};
  }

  friend bool operator==(const PwlTorusFunction& f, const PwlTorusFunction& g) {
    const auto a = f.normalized();
    const auto c = g.normalized();
    return a.b_ == c.b_ && a.breakpoints_ == c.breakpoints_ && a.pieces_ == c.pieces_ && a.at_ == c.at_;
  }

 private:
  Rational b_;
  std::vector<Rational> breakpoints_;
  std::vector<AffinePiece> pieces_;
  std::vector<Rational> at_;
};

inline std::vector<Rational> merge_breakpoints(const std::vector<Rational>& a, const std::vector<Rational>& b) {
  std::vector<Rational> out;
  out.reserve(a.size() + b.size());
  std::merge(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

// weight_f * f + weight_g * g, pointwise (point values included). Both inputs
// must share the right-hand side; the result keeps it.
inline PwlTorusFunction combine(const Rational& weight_f, const PwlTorusFunction& f,
                                const Rational& weight_g, const PwlTorusFunction& g) {
  if (f.rhs() != g.rhs()) fail(ErrorCode::kRhsMismatch, "combining functions with different b");
  const auto grid = merge_breakpoints(f.breakpoints(), g.breakpoints());
  const auto rf = f.refined(grid);
  const auto rg = g.refined(grid);
  std::vector<AffinePiece> pieces;
  std::vector<Rational> at;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    pieces.push_back({weight_f * rf.pieces()[i].slope + weight_g * rg.pieces()[i].slope,
                      weight_f * rf.pieces()[i].intercept + weight_g * rg.pieces()[i].intercept});
    at.push_back(weight_f * rf.point_values()[i] + weight_g * rg.point_values()[i]);
  }
  return {f.rhs(), grid, std::move(pieces), std::move(at)};
}

// GMI_b(x) = x/b on [0, b], (1-x)/(1-b) on [b, 1].
inline PwlTorusFunction gmi(const Rational& b) {
  if (b <= 0 || b >= 1) fail(ErrorCode::kOutOfRange, "GMI needs 0 < b < 1, got " + to_string(b));
  return PwlTorusFunction::interpolate(b, {Rational(0), b}, {Rational(0), Rational(1)}, Rational(0));
}

struct GmiProjection {
  PwlTorusFunction profile;
  std::size_t dimension;
  std::size_t coordinate;  // 1-based
};

// GMI^n depends on coordinate i only; its one-dimensional profile is gmi(b_i).
inline GmiProjection gmi_n(const std::vector<Rational>& b, std::size_t coordinate) {
  if (coordinate < 1 || coordinate > b.size()) {
    fail(ErrorCode::kOutOfRange, "coordinate index " + std::to_string(coordinate) + " out of range");
  }
  const Rational bi = frac(b[coordinate - 1]);
  if (bi == 0) fail(ErrorCode::kZeroCoordinate, "b_" + std::to_string(coordinate) + " is zero");
  return {gmi(bi), b.size(), coordinate};
}

// x -> GMI_b(k x). Minimal for the right-hand side b / k.
inline PwlTorusFunction scaled_gmi(const Rational& b, std::int64_t k) {
  if (b <= 0 || b >= 1) fail(ErrorCode::kOutOfRange, "scaled GMI needs 0 < b < 1");
  if (k < 1) fail(ErrorCode::kOutOfRange, "scaled GMI needs k >= 1");
  std::vector<Rational> nodes;
  std::vector<Rational> values;
  for (std::int64_t j = 0; j < k; ++j) {
    nodes.push_back(make_rational(j, k));
    values.emplace_back(0);
    nodes.push_back((Rational(j) + b) / k);
    values.emplace_back(1);
  }
  return PwlTorusFunction::interpolate(b / k, std::move(nodes), std::move(values), Rational(0));
}

// g(x) = x on [0, 1) under the reflection convention.
inline PwlTorusFunction identity_function() {
  return PwlTorusFunction::interpolate(Rational(0), {Rational(0)}, {Rational(0)}, Rational(1));
}

// 1/2 almost everywhere, 0 at the origin and 1 at b (b = 0: only the origin
// is special).
inline PwlTorusFunction torus_md2(const Rational& b) {
  const Rational half = make_rational(1, 2);
  if (b < 0 || b >= 1) fail(ErrorCode::kOutOfRange, "b must lie in [0, 1)");
  if (b == 0) return {b, {Rational(0)}, {{0, half}}, {Rational(0)}};
  return {b, {Rational(0), b}, {{0, half}, {0, half}}, {Rational(0), Rational(1)}};
}

}  // namespace cgf
