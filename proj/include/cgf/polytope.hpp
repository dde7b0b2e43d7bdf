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

// The polytope M_b(Z/qZ) = { pi >= 0 : pi(0) = 0, subadditive, symmetric }
// in exact arithmetic, its vertices (the extreme functions), the global
// minimizer of the volume product, and the perturbation that shows a
// nondecreasing extreme function for b = q - 1 must be GOM^q_{q-1}.

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cgf/criteria.hpp"
#include "cgf/double_description.hpp"
#include "cgf/error.hpp"
#include "cgf/finite_function.hpp"
#include "cgf/group.hpp"
#include "cgf/rational.hpp"

namespace cgf {

// pi(x) = constant + coefficient * t[variable]; variable < 0 means fixed.
struct Substitution {
  Rational constant;
  int variable = -1;
  Rational coefficient = 0;
};

class MinimalFunctionPolytope {
 public:
  MinimalFunctionPolytope(CyclicGroup group, Residue b, std::vector<Substitution> substitution,
                          std::size_t dimension, std::vector<Inequality> inequalities,
                          std::vector<std::pair<Residue, Residue>> symmetry_pairs)
      : group_(group),
        b_(b),
        substitution_(std::move(substitution)),
        dimension_(dimension),
        inequalities_(std::move(inequalities)),
        symmetry_pairs_(std::move(symmetry_pairs)) {}

  const CyclicGroup& group() const noexcept { return group_; }
  std::int64_t order() const noexcept { return group_.order(); }
  Residue rhs() const noexcept { return b_; }

  // Number of free coordinates left after substituting the equalities.
  std::size_t dimension() const noexcept { return dimension_; }
  const std::vector<Substitution>& substitution() const noexcept { return substitution_; }
  const std::vector<Inequality>& inequalities() const noexcept { return inequalities_; }
  // Deduplicated symmetry equalities pi(x) + pi(b - x) = 1, x <= b - x.
  const std::vector<std::pair<Residue, Residue>>& symmetry_pairs() const noexcept {
    return symmetry_pairs_;
  }

  FiniteGroupFunction lift(const std::vector<Rational>& t) const {
    if (t.size() != dimension_) fail(ErrorCode::kInternal, "coordinate count mismatch");
    std::vector<Rational> values;
    values.reserve(substitution_.size());
    for (const auto& s : substitution_) {
      Rational v = s.constant;
      if (s.variable >= 0) v += s.coefficient * t[static_cast<std::size_t>(s.variable)];
      values.push_back(std::move(v));
    }
    return {group_, b_, std::move(values)};
  }

  std::vector<Rational> project(const FiniteGroupFunction& pi) const {
    std::vector<Rational> t(dimension_);
    for (std::size_t x = 0; x < substitution_.size(); ++x) {
      const auto& s = substitution_[x];
      if (s.variable >= 0 && s.coefficient == 1) t[static_cast<std::size_t>(s.variable)] = pi(static_cast<std::int64_t>(x));
    }
    return t;
  }

  bool contains(const std::vector<Rational>& t) const {
    return std::all_of(inequalities_.begin(), inequalities_.end(),
                       [&](const Inequality& row) { return evaluate(row, t) >= row.bound; });
  }

  // Rank of the rows tight at t; equals dimension() exactly at vertices.
  std::size_t tight_rank(const std::vector<Rational>& t) const {
    std::vector<std::vector<Rational>> tight;
    for (const auto& row : inequalities_) {
      if (evaluate(row, t) == row.bound) tight.push_back(row.coefficients);
    }
    return matrix_rank(std::move(tight));
  }

 private:
  static Rational evaluate(const Inequality& row, const std::vector<Rational>& t) {
    Rational s = 0;
    for (std::size_t k = 0; k < t.size(); ++k) s += row.coefficients[k] * t[k];
    return s;
  }

  CyclicGroup group_;
  Residue b_;
  std::vector<Substitution> substitution_;
  std::size_t dimension_;
  std::vector<Inequality> inequalities_;
  std::vector<std::pair<Residue, Residue>> symmetry_pairs_;
};

inline MinimalFunctionPolytope build_polytope(std::int64_t q, Residue b) {
  const CyclicGroup g(q);
  b = reduce(b, q);
  if (b == 0) fail(ErrorCode::kZeroElement, "right-hand side b must be nonzero");

  // Symmetry pairs x <-> b - x. pi(0) = 0 fixes pi(b) = 1, a self-paired x
  // (2x = b) is fixed to 1/2, every other pair contributes one free
  // coordinate t = pi(min) with pi(max) = 1 - t.
  std::vector<Substitution> sub(static_cast<std::size_t>(q));
  std::vector<std::pair<Residue, Residue>> pairs;
  int next_variable = 0;
  for (Residue x = 0; x < q; ++x) {
    const Residue partner = g.sub(b, x);
    if (x > partner) continue;
    pairs.emplace_back(x, partner);
    auto& lo = sub[static_cast<std::size_t>(x)];
    auto& hi = sub[static_cast<std::size_t>(partner)];
    if (x == 0) {
      lo = {0, -1, 0};
      hi = {1, -1, 0};
    } else if (x == partner) {
      lo = {make_rational(1, 2), -1, 0};
    } else {
      lo = {0, next_variable, 1};
      hi = {1, next_variable, -1};
      ++next_variable;
    }
  }
  const auto dim = static_cast<std::size_t>(next_variable);

  // Each candidate row is normalized so its first nonzero coefficient has
  // magnitude 1; parallel rows keep only the tightest bound.
  std::map<std::vector<Rational>, Rational> rows;
  auto add_row = [&](std::vector<Rational> a, Rational beta) {
    auto first = std::find_if(a.begin(), a.end(), [](const Rational& c) { return c != 0; });
    if (first == a.end()) {
      if (beta > 0) fail(ErrorCode::kInternal, "infeasible constant row");
      return;
    }
    const Rational scale = *first < 0 ? Rational(-*first) : *first;
    for (auto& c : a) c /= scale;
    beta /= scale;
    auto [it, inserted] = rows.emplace(std::move(a), beta);
    if (!inserted && beta > it->second) it->second = beta;
  };
  auto accumulate = [&](std::vector<Rational>& a, Rational& constant, Residue x, int sign) {
    const auto& s = sub[static_cast<std::size_t>(x)];
    constant += sign * s.constant;
    if (s.variable >= 0) a[static_cast<std::size_t>(s.variable)] += sign * s.coefficient;
  };

  for (Residue x = 0; x < q; ++x) {
    for (Residue y = x; y < q; ++y) {
      std::vector<Rational> a(dim, Rational(0));
      Rational constant = 0;
      accumulate(a, constant, x, 1);
      accumulate(a, constant, y, 1);
      accumulate(a, constant, g.add(x, y), -1);
      add_row(std::move(a), -constant);
    }
  }
  for (Residue x = 0; x < q; ++x) {
    std::vector<Rational> a(dim, Rational(0));
    Rational constant = 0;
    accumulate(a, constant, x, 1);
    add_row(std::move(a), -constant);
  }

  std::vector<Inequality> inequalities;
  inequalities.reserve(rows.size());
  for (auto& [a, beta] : rows) inequalities.push_back({a, beta});
  return {g, b, std::move(sub), dim, std::move(inequalities), std::move(pairs)};
}

struct VertexSet {
  std::vector<FiniteGroupFunction> vertices;
  std::string method;
};

inline constexpr std::int64_t kDefaultVertexCap = 31;

// Vertices in lexicographic order of their value vectors. Each one is
// certified: it lies in the polytope, its tight rows have full rank and it
// passes is_minimal.
inline VertexSet enumerate_vertices(const MinimalFunctionPolytope& polytope,
                                    std::int64_t cap = kDefaultVertexCap) {
  if (polytope.order() > cap) {
    fail(ErrorCode::kDimensionCap, "q = " + std::to_string(polytope.order()) +
                                       " exceeds the vertex enumeration cap " + std::to_string(cap));
  }
  std::vector<std::vector<Rational>> points;
  if (polytope.dimension() == 0) {
    points.emplace_back();
  } else {
    points = enumerate_polytope_vertices(polytope.inequalities(), polytope.dimension());
  }
  VertexSet out{{}, "double_description"};
  out.vertices.reserve(points.size());
  for (const auto& t : points) {
    if (!polytope.contains(t) || polytope.tight_rank(t) != polytope.dimension()) {
      fail(ErrorCode::kInternal, "vertex certification failed");
    }
    auto pi = polytope.lift(t);
    if (!is_minimal(pi, {.stop_at_first = true})) {
      fail(ErrorCode::kInternal, "enumerated vertex is not minimal");
    }
    out.vertices.push_back(std::move(pi));
  }
  std::sort(out.vertices.begin(), out.vertices.end(),
            [](const FiniteGroupFunction& a, const FiniteGroupFunction& b) { return a.values() < b.values(); });
  return out;
}

struct VolumeOptimum {
  FiniteGroupFunction argmin;
  Rational value;
  bool unique;
  std::size_t vertex_count;
  bool experimental;  // composite order scanned on request
};

struct MinimizeOptions {
  std::int64_t cap = kDefaultVertexCap;
  bool force_composite = false;
};

// The volume product is strictly log-concave on the polytope, so its minimum
// is attained at vertices only and a full vertex scan is exact.
inline VolumeOptimum minimize_volume(std::int64_t q, Residue b, MinimizeOptions options = {}) {
  const CyclicGroup g(q);
  if (!g.prime() && !options.force_composite) {
    fail(ErrorCode::kNotPrime, "minimize_volume requires prime order, got " + std::to_string(q));
  }
  const auto polytope = build_polytope(q, b);
  const auto set = enumerate_vertices(polytope, options.cap);
  std::optional<std::size_t> best;
  Rational best_value;
  std::size_t ties = 0;
  for (std::size_t i = 0; i < set.vertices.size(); ++i) {
    const Rational value = volume_product(set.vertices[i]);
    if (!best || value < best_value) {
      best = i;
      best_value = value;
      ties = 1;
    } else if (value == best_value) {
      ++ties;
    }
  }
  return {set.vertices[*best], best_value, ties == 1, set.vertices.size(), !g.prime()};
}

struct Decomposition {
  Rational lambda;
  FiniteGroupFunction pi_tilde;
  Rational gamma;
};

// For nondecreasing minimal pi with b = q - 1 writes pi = lambda g +
// (1 - lambda) pi_tilde with g = GOM^q_{q-1} and pi_tilde minimal. lambda is
// the largest admissible value min(gamma (q-1)/q, min_{x != 0} pi(x)/x),
// where gamma is the least subadditivity slack over pairs with x + y >= q.
inline Decomposition gomory_decomposition(const FiniteGroupFunction& pi) {
  const auto& g = pi.group();
  const std::int64_t q = g.order();
  if (!g.prime()) fail(ErrorCode::kNotPrime, "decomposition requires prime order");
  if (!pi.is_nondecreasing()) fail(ErrorCode::kNotNondecreasing, "input is not nondecreasing");
  if (pi.rhs() != q - 1) fail(ErrorCode::kNotMinimal, "decomposition requires b = q - 1");
  if (!is_minimal(pi, {.stop_at_first = true})) fail(ErrorCode::kNotMinimal, "input is not minimal");

  std::optional<Rational> gamma;
  for (std::int64_t x = 1; x < q; ++x) {
    for (std::int64_t y = std::max<std::int64_t>(x, q - x); y < q; ++y) {
      const Rational slack = pi(x) + pi(y) - pi(x + y - q);
      if (!gamma || slack < *gamma) gamma = slack;
    }
  }
  Rational lambda = *gamma * make_rational(q - 1, q);
  for (std::int64_t x = 1; x < q; ++x) lambda = std::min(lambda, Rational(pi(x) / x));
  // lambda reaches 1 only for q = 2, where pi = g and every lambda works.
  if (lambda >= 1) lambda = make_rational(1, 2);

  const auto gomory = gom(q, q - 1);
  std::vector<Rational> values;
  values.reserve(static_cast<std::size_t>(q));
  for (std::int64_t x = 0; x < q; ++x) values.push_back((pi(x) - lambda * gomory(x)) / (1 - lambda));
  FiniteGroupFunction tilde(g, q - 1, std::move(values));
  if (!is_minimal(tilde, {.stop_at_first = true})) {
    fail(ErrorCode::kInternal, "perturbed function is not minimal");
  }
  return {lambda, std::move(tilde), *gamma};
}

}  // namespace cgf
