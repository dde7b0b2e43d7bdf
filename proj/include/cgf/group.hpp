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

// Arithmetic in the finite cyclic group Z/qZ. Elements are always kept in
// canonical form [0, q-1]; sets of elements are sorted residue lists.

#include <algorithm>
#include <compare>
#include <cstdint>
#include <numeric>
#include <utility>
#include <span>
#include <string>
#include <vector>

#include "cgf/error.hpp"

namespace cgf {

using Residue = std::int64_t;

// Deterministic trial division; group orders stay small (<= ~1e5).
constexpr bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  if (n < 4) return true;
  if (n % 2 == 0 || n % 3 == 0) return false;
  for (std::int64_t f = 5; f * f <= n; f += 6) {
    if (n % f == 0 || n % (f + 2) == 0) return false;
  }
  return true;
}

constexpr Residue reduce(std::int64_t value, std::int64_t q) {
  const std::int64_t r = value % q;
  return r < 0 ? r + q : r;
}

class CyclicGroup {
 public:
  explicit CyclicGroup(std::int64_t order) : order_(order), prime_(is_prime(order)) {
    if (order < 2) fail(ErrorCode::kInvalidOrder, "group order must be >= 2, got " + std::to_string(order));
  }

  std::int64_t order() const noexcept { return order_; }
  bool prime() const noexcept { return prime_; }

  Residue add(Residue x, Residue y) const { return reduce(x + y, order_); }
  Residue sub(Residue x, Residue y) const { return reduce(x - y, order_); }
  Residue neg(Residue x) const { return reduce(-x, order_); }
  Residue mul(std::int64_t k, Residue x) const { return reduce(reduce(k, order_) * x, order_); }

  friend bool operator==(const CyclicGroup&, const CyclicGroup&) = default;

 private:
  std::int64_t order_;
  bool prime_;
};

class GroupElement {
 public:
  GroupElement(CyclicGroup group, std::int64_t value)
      : group_(group), residue_(reduce(value, group.order())) {}

  const CyclicGroup& group() const noexcept { return group_; }
  Residue residue() const noexcept { return residue_; }
  bool is_zero() const noexcept { return residue_ == 0; }

  friend GroupElement operator+(const GroupElement& a, const GroupElement& b) {
    check_same(a, b);
    return {a.group_, a.residue_ + b.residue_};
  }
  friend GroupElement operator-(const GroupElement& a, const GroupElement& b) {
    check_same(a, b);
    return {a.group_, a.residue_ - b.residue_};
  }
  GroupElement operator-() const { return {group_, -residue_}; }

  friend bool operator==(const GroupElement&, const GroupElement&) = default;

 private:
  static void check_same(const GroupElement& a, const GroupElement& b) {
    if (a.group_ != b.group_) fail(ErrorCode::kInvalidOrder, "elements of different groups");
  }

  CyclicGroup group_;
  Residue residue_;
};

// a^{-1} mod q via the extended Euclidean algorithm.
inline Residue mod_inverse(std::int64_t a, std::int64_t q) {
  if (q < 2) fail(ErrorCode::kInvalidOrder, "modulus must be >= 2");
  const std::int64_t r = reduce(a, q);
  std::int64_t old_r = r, cur_r = q;
  std::int64_t old_s = 1, cur_s = 0;
  while (cur_r != 0) {
    const std::int64_t quotient = old_r / cur_r;
    old_r = std::exchange(cur_r, old_r - quotient * cur_r);
    old_s = std::exchange(cur_s, old_s - quotient * cur_s);
  }
  if (old_r != 1) {
    fail(ErrorCode::kNotAUnit, std::to_string(a) + " is not invertible mod " + std::to_string(q));
  }
  return reduce(old_s, q);
}

// x -> multiplier * x, a bijection of Z/qZ because gcd(multiplier, q) = 1.
class Automorphism {
 public:
  Automorphism(CyclicGroup group, std::int64_t multiplier)
      : group_(group), multiplier_(reduce(multiplier, group.order())) {
    if (std::gcd(multiplier_, group_.order()) != 1) {
      fail(ErrorCode::kNotAUnit, "multiplier " + std::to_string(multiplier) +
                                     " is not a unit mod " + std::to_string(group_.order()));
    }
  }

  static Automorphism identity(CyclicGroup group) { return {group, 1}; }

  const CyclicGroup& group() const noexcept { return group_; }
  Residue multiplier() const noexcept { return multiplier_; }

  Residue operator()(Residue x) const { return group_.mul(multiplier_, x); }
  GroupElement operator()(const GroupElement& x) const {
    return {group_, (*this)(x.residue())};
  }

  Automorphism inverse() const { return {group_, mod_inverse(multiplier_, group_.order())}; }

  // (this o other)(x) = this(other(x))
  Automorphism after(const Automorphism& other) const {
    return {group_, group_.mul(multiplier_, other.multiplier_)};
  }

  friend bool operator==(const Automorphism&, const Automorphism&) = default;

 private:
  CyclicGroup group_;
  Residue multiplier_;
};

// The unique automorphism of Z/qZ (q prime) with phi(b) = target, i.e.
// multiplication by target * b^{-1}.
inline Automorphism automorphism_sending(const GroupElement& b, const GroupElement& target) {
  const CyclicGroup& g = b.group();
  if (g != target.group()) fail(ErrorCode::kInvalidOrder, "elements of different groups");
  if (!g.prime()) fail(ErrorCode::kNotPrime, "order " + std::to_string(g.order()) + " is not prime");
  if (b.is_zero() || target.is_zero()) fail(ErrorCode::kZeroElement, "automorphisms fix 0");
  const Residue multiplier = g.mul(target.residue(), mod_inverse(b.residue(), g.order()));
  return {g, multiplier};
}

using ElementSet = std::vector<Residue>;  // sorted, unique, canonical

inline ElementSet make_set(const CyclicGroup& g, std::span<const std::int64_t> values) {
  ElementSet out;
  out.reserve(values.size());
  for (auto v : values) out.push_back(reduce(v, g.order()));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

inline ElementSet sumset(const CyclicGroup& g, std::span<const Residue> a, std::span<const Residue> b) {
  if (a.empty() || b.empty()) fail(ErrorCode::kEmptySet, "sumset of an empty set");
  std::vector<bool> hit(static_cast<std::size_t>(g.order()), false);
  for (auto x : a) {
    for (auto y : b) hit[static_cast<std::size_t>(g.add(x, y))] = true;
  }
  ElementSet out;
  for (Residue r = 0; r < g.order(); ++r) {
    if (hit[static_cast<std::size_t>(r)]) out.push_back(r);
  }
  return out;
}

}  // namespace cgf
