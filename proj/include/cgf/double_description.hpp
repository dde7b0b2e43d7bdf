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

// Exact vertex enumeration for bounded polyhedra { t : A t >= beta } by the
// double description method, using integer (primitive) ray coordinates and
// the combinatorial adjacency test on zero sets.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <utility>
#include <vector>

#include "cgf/error.hpp"
#include "cgf/rational.hpp"

namespace cgf {

struct Inequality {
  std::vector<Rational> coefficients;  // a
  Rational bound;                      // beta, row reads a . t >= beta
};

namespace detail {

class Bitset {
 public:
  explicit Bitset(std::size_t bits = 0) : words_((bits + 63) / 64, 0) {}

  void set(std::size_t i) { words_[i / 64] |= std::uint64_t{1} << (i % 64); }
  bool test(std::size_t i) const { return (words_[i / 64] >> (i % 64)) & 1U; }

  std::size_t count() const {
    std::size_t n = 0;
    for (auto w : words_) n += static_cast<std::size_t>(std::popcount(w));
    return n;
  }
  bool subset_of(const Bitset& other) const {
    for (std::size_t i = 0; i < words_.size(); ++i) {
      if ((words_[i] & ~other.words_[i]) != 0) return false;
    }
    return true;
  }
  friend Bitset operator&(const Bitset& a, const Bitset& b) {
    Bitset out = a;
    for (std::size_t i = 0; i < out.words_.size(); ++i) out.words_[i] &= b.words_[i];
    return out;
  }

 private:
  std::vector<std::uint64_t> words_;
};

using IntVector = std::vector<Integer>;

inline void make_primitive(IntVector& v) {
  Integer g = 0;
  for (const auto& c : v) {
    if (c != 0) g = boost::multiprecision::gcd(g, Integer(abs(c)));
  }
  if (g > 1) {
    for (auto& c : v) c /= g;
  }
}

inline Integer dot(const IntVector& a, const IntVector& b) {
  Integer s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

// Scales a rational row to a primitive integer row with the same sign.
inline IntVector integer_row(const std::vector<Rational>& row) {
  Integer lcm = 1;
  for (const auto& c : row) lcm = boost::multiprecision::lcm(lcm, denominator_of(c));
  IntVector out;
  out.reserve(row.size());
  for (const auto& c : row) out.push_back(numerator_of(c) * (lcm / denominator_of(c)));
  make_primitive(out);
  return out;
}

struct Ray {
  IntVector coords;
  Bitset zeros;
};

}  // namespace detail

// Rank of a rational matrix (rows x cols) by fraction-exact elimination.
inline std::size_t matrix_rank(std::vector<std::vector<Rational>> rows) {
  if (rows.empty()) return 0;
  const std::size_t cols = rows.front().size();
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows.size(); ++c) {
    std::size_t pivot = rank;
    while (pivot < rows.size() && rows[pivot][c] == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[rank], rows[pivot]);
    for (std::size_t r = rank + 1; r < rows.size(); ++r) {
      if (rows[r][c] == 0) continue;
      const Rational factor = rows[r][c] / rows[rank][c];
      for (std::size_t k = c; k < cols; ++k) rows[r][k] -= factor * rows[rank][k];
    }
    ++rank;
  }
  return rank;
}

// Vertices of the bounded, nonempty polyhedron { t in Q^dim : A t >= beta }.
// Throws kInternal if the system is unbounded or infeasible.
inline std::vector<std::vector<Rational>> enumerate_polytope_vertices(
    const std::vector<Inequality>& system, std::size_t dim) {
  using detail::Bitset;
  using detail::IntVector;
  using detail::Ray;

  const std::size_t n = dim + 1;  // homogenized: z = (t0, t)
  std::vector<IntVector> rows;
  rows.reserve(system.size() + 1);
  {
    std::vector<Rational> positivity(n, Rational(0));
    positivity[0] = 1;
    rows.push_back(detail::integer_row(positivity));
  }
  for (const auto& ineq : system) {
    if (ineq.coefficients.size() != dim) fail(ErrorCode::kInternal, "row width mismatch");
    std::vector<Rational> h;
    h.reserve(n);
    h.push_back(-ineq.bound);
    h.insert(h.end(), ineq.coefficients.begin(), ineq.coefficients.end());
    rows.push_back(detail::integer_row(h));
  }
  const std::size_t m = rows.size();

  // Greedy choice of n independent rows; the initial cone is simplicial.
  std::vector<std::size_t> basis;
  {
    std::vector<std::vector<Rational>> echelon;
    for (std::size_t i = 0; i < m && basis.size() < n; ++i) {
      std::vector<std::vector<Rational>> trial = echelon;
      trial.emplace_back(rows[i].begin(), rows[i].end());
      if (matrix_rank(trial) == trial.size()) {
        echelon = std::move(trial);
        basis.push_back(i);
      }
    }
  }
  if (basis.size() < n) fail(ErrorCode::kInternal, "polyhedron is not bounded (rank deficient)");

  // Columns of the inverse of the basis matrix are the initial rays.
  std::vector<Ray> rays;
  {
    std::vector<std::vector<Rational>> aug(n, std::vector<Rational>(2 * n, Rational(0)));
    for (std::size_t r = 0; r < n; ++r) {
      for (std::size_t c = 0; c < n; ++c) aug[r][c] = Rational(rows[basis[r]][c]);
      aug[r][n + r] = 1;
    }
    for (std::size_t c = 0; c < n; ++c) {
      std::size_t pivot = c;
      while (aug[pivot][c] == 0) ++pivot;
      std::swap(aug[c], aug[pivot]);
      const Rational inv = Rational(1) / aug[c][c];
      for (auto& v : aug[c]) v *= inv;
      for (std::size_t r = 0; r < n; ++r) {
        if (r == c || aug[r][c] == 0) continue;
        const Rational factor = aug[r][c];
        for (std::size_t k = 0; k < 2 * n; ++k) aug[r][k] -= factor * aug[c][k];
      }
    }
    for (std::size_t j = 0; j < n; ++j) {
      std::vector<Rational> column(n);
      for (std::size_t r = 0; r < n; ++r) column[r] = aug[r][n + j];
      Ray ray{detail::integer_row(column), Bitset(m)};
      rays.push_back(std::move(ray));
    }
  }

  std::vector<bool> processed(m, false);
  for (auto i : basis) processed[i] = true;
  for (auto& ray : rays) {
    for (auto i : basis) {
      if (detail::dot(rows[i], ray.coords) == 0) ray.zeros.set(i);
    }
  }

  for (std::size_t h = 0; h < m; ++h) {
    if (processed[h]) continue;
    std::vector<Integer> value(rays.size());
    std::vector<std::size_t> plus, zero, minus;
    for (std::size_t r = 0; r < rays.size(); ++r) {
      value[r] = detail::dot(rows[h], rays[r].coords);
      if (value[r] > 0) {
        plus.push_back(r);
      } else if (value[r] == 0) {
        zero.push_back(r);
      } else {
        minus.push_back(r);
      }
    }

    std::vector<Ray> next;
    next.reserve(plus.size() + zero.size());
    for (auto r : plus) next.push_back(rays[r]);
    for (auto r : zero) {
      next.push_back(rays[r]);
      next.back().zeros.set(h);
    }
    for (auto p : plus) {
      for (auto q : minus) {
        const Bitset common = rays[p].zeros & rays[q].zeros;
        if (common.count() + 2 < n) continue;
        bool adjacent = true;
        for (std::size_t t = 0; t < rays.size() && adjacent; ++t) {
          if (t == p || t == q) continue;
          if (common.subset_of(rays[t].zeros)) adjacent = false;
        }
        if (!adjacent) continue;
        IntVector coords(n);
        for (std::size_t k = 0; k < n; ++k) {
          coords[k] = value[p] * rays[q].coords[k] - value[q] * rays[p].coords[k];
        }
        detail::make_primitive(coords);
        Ray ray{std::move(coords), common};
        ray.zeros.set(h);
        next.push_back(std::move(ray));
      }
    }
    rays = std::move(next);
    processed[h] = true;
    if (rays.empty()) fail(ErrorCode::kInternal, "polyhedron is empty");
  }

  std::vector<std::vector<Rational>> vertices;
  vertices.reserve(rays.size());
  for (const auto& ray : rays) {
    if (ray.coords[0] <= 0) fail(ErrorCode::kInternal, "polyhedron is not bounded (recession ray)");
    std::vector<Rational> point;
    point.reserve(dim);
    for (std::size_t k = 1; k < n; ++k) point.emplace_back(ray.coords[k], ray.coords[0]);
    vertices.push_back(std::move(point));
  }
  std::sort(vertices.begin(), vertices.end());
  vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
  return vertices;
}

}  // namespace cgf
