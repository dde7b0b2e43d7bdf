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

// Exact-rational functions pi: Z/qZ -> Q+ with a designated right-hand side
// b != 0, the classical members of M_b(Z/qZ), the minimality test
// (pi(0) = 0, subadditive, pi(x) + pi(b - x) = 1) and the sorting
// rearrangement that makes a minimal function nondecreasing.

#include <algorithm>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "cgf/error.hpp"
#include "cgf/group.hpp"
#include "cgf/rational.hpp"
#include "cgf/verdict.hpp"

namespace cgf {

class FiniteGroupFunction {
 public:
  FiniteGroupFunction(CyclicGroup group, Residue b, std::vector<Rational> values)
      : group_(group), b_(reduce(b, group.order())), values_(std::move(values)) {
    if (b_ == 0) fail(ErrorCode::kZeroElement, "right-hand side b must be nonzero");
    if (static_cast<std::int64_t>(values_.size()) != group_.order()) {
      fail(ErrorCode::kInvalidFunction, "expected " + std::to_string(group_.order()) +
                                            " values, got " + std::to_string(values_.size()));
    }
    for (std::size_t x = 0; x < values_.size(); ++x) {
      if (values_[x] < 0) {
        fail(ErrorCode::kInvalidFunction,
             "negative value " + to_string(values_[x]) + " at " + std::to_string(x));
      }
    }
  }

  FiniteGroupFunction(std::int64_t q, Residue b, std::vector<Rational> values)
      : FiniteGroupFunction(CyclicGroup(q), b, std::move(values)) {}

  const CyclicGroup& group() const noexcept { return group_; }
  std::int64_t order() const noexcept { return group_.order(); }
  Residue rhs() const noexcept { return b_; }
  const std::vector<Rational>& values() const noexcept { return values_; }

  const Rational& operator()(std::int64_t x) const {
    return values_[static_cast<std::size_t>(reduce(x, group_.order()))];
  }

  bool is_nondecreasing() const {
    return std::is_sorted(values_.begin(), values_.end());
  }

  friend bool operator==(const FiniteGroupFunction&, const FiniteGroupFunction&) = default;

 private:
  CyclicGroup group_;
  Residue b_;
  std::vector<Rational> values_;
};

// GOM^q_b(x) = x/b for x <= b, (q-x)/(q-b) otherwise.
inline FiniteGroupFunction gom(std::int64_t q, Residue b) {
  const CyclicGroup g(q);
  b = reduce(b, q);
  if (b == 0) fail(ErrorCode::kZeroElement, "GOM needs b != 0");
  std::vector<Rational> values;
  values.reserve(static_cast<std::size_t>(q));
  for (std::int64_t x = 0; x < q; ++x) {
    values.push_back(x <= b ? make_rational(x, b) : make_rational(q - x, q - b));
  }
  return {g, b, std::move(values)};
}

// 1/2 everywhere except pi(0) = 0 and pi(b) = 1.
inline FiniteGroupFunction md2(std::int64_t q, Residue b) {
  const CyclicGroup g(q);
  b = reduce(b, q);
  if (b == 0) fail(ErrorCode::kZeroElement, "MD2 needs b != 0");
  std::vector<Rational> values(static_cast<std::size_t>(q), make_rational(1, 2));
  values[0] = 0;
  values[static_cast<std::size_t>(b)] = 1;
  return {g, b, std::move(values)};
}

// The all-ones function of the Dantzig cut. It is valid but not minimal: the
// origin keeps value 1.
inline FiniteGroupFunction dantzig(std::int64_t q, Residue b = 1) {
  const CyclicGroup g(q);
  return {g, b, std::vector<Rational>(static_cast<std::size_t>(q), Rational(1))};
}

// Reports every violated condition unless `options.stop_at_first` is set.
// Subadditivity is checked on unordered pairs x <= y, symmetry on x <= b - x.
inline MinimalityVerdict<Residue> is_minimal(const FiniteGroupFunction& pi,
                                             VerdictOptions options = {}) {
  MinimalityVerdict<Residue> verdict;
  const auto& g = pi.group();
  const std::int64_t q = g.order();
  auto done = [&] { return options.stop_at_first && !verdict.violations.empty(); };

  if (pi(0) != 0) {
    verdict.violations.push_back({ViolationKind::kOrigin, {0}, pi(0), {}});
    if (done()) return verdict;
  }
  for (Residue x = 0; x < q; ++x) {
    const Residue partner = g.sub(pi.rhs(), x);
    if (x > partner) continue;
    const Rational defect = pi(x) + pi(partner) - 1;
    if (defect != 0) {
      verdict.violations.push_back({ViolationKind::kSymmetry, {x, partner}, defect, {}});
      if (done()) return verdict;
    }
  }
  for (Residue x = 0; x < q; ++x) {
    for (Residue y = x; y < q; ++y) {
      const Rational slack = pi(x) + pi(y) - pi(g.add(x, y));
      if (slack < 0) {
        verdict.violations.push_back({ViolationKind::kSubadditivity, {x, y}, slack, {}});
        if (done()) return verdict;
      }
    }
  }
  return verdict;
}

inline bool is_subadditive(const FiniteGroupFunction& pi) {
  const auto& g = pi.group();
  for (Residue x = 0; x < g.order(); ++x) {
    for (Residue y = x; y < g.order(); ++y) {
      if (pi(x) + pi(y) < pi(g.add(x, y))) return false;
    }
  }
  return true;
}

// (pi o phi)(x) = pi(phi(x)). Valid for I_{b'} with phi(b') = b, so the
// result carries b' = phi^{-1}(b).
inline FiniteGroupFunction compose(const FiniteGroupFunction& pi, const Automorphism& phi) {
  const auto& g = pi.group();
  if (phi.group() != g) fail(ErrorCode::kInvalidOrder, "automorphism of a different group");
  if (!g.prime()) fail(ErrorCode::kNotPrime, "compose requires prime order");
  std::vector<Rational> values;
  values.reserve(pi.values().size());
  for (Residue x = 0; x < g.order(); ++x) values.push_back(pi(phi(x)));
  return {g, phi.inverse()(pi.rhs()), std::move(values)};
}

// Moves pi along phi: the result is pi o phi^{-1}, with right-hand side phi(b).
inline FiniteGroupFunction transport(const FiniteGroupFunction& pi, const Automorphism& phi) {
  return compose(pi, phi.inverse());
}

// pi_hat(x) = min{ alpha >= 0 : |pi^{-1}((0, alpha])| >= x }. For subadditive
// pi with pi(0) = 0 on a prime-order group all nonzero values are positive,
// so this is the nondecreasing sort of the value multiset. The result is
// attached to b = q - 1, the right-hand side it is symmetric for whenever pi
// is symmetric.
inline FiniteGroupFunction rearrange_finite(const FiniteGroupFunction& pi) {
  const auto& g = pi.group();
  if (!g.prime()) fail(ErrorCode::kNotPrime, "rearrangement requires prime order");
  if (pi(0) != 0) fail(ErrorCode::kOriginNotZero, "pi(0) = " + to_string(pi(0)));
  if (std::all_of(pi.values().begin(), pi.values().end(), [](const Rational& v) { return v == 0; })) {
    fail(ErrorCode::kIdenticallyZero, "function vanishes everywhere");
  }
  if (!is_subadditive(pi)) fail(ErrorCode::kNotSubadditive, "input is not subadditive");
  std::vector<Rational> sorted = pi.values();
  std::sort(sorted.begin(), sorted.end());
  return {g, g.order() - 1, std::move(sorted)};
}

}  // namespace cgf
