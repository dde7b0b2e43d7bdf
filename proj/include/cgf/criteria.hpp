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

// Strength scores of a finite-group function under the uniform (Haar)
// probability measure: L_p norms, the volume product prod_{x != 0} pi(x),
// the volume of the simplex the cut removes from the orthant, and the
// logarithm of the geometric mean of the nonzero-point values.
//
// Float error budget: log_geo_mean sums q - 1 logarithms, each within
// ~1 ulp, so the absolute error stays below q * 4 ulp of the largest term.

#include <cmath>
#include <cstdint>
#include <limits>
#include <map>
#include <optional>
#include <span>

#include "cgf/finite_function.hpp"
#include "cgf/rational.hpp"

namespace cgf {

struct LpNorm {
  Rational pth_power;  // |pi|_p^p, exact
  double value;        // |pi|_p
};

inline LpNorm lp_norm(const FiniteGroupFunction& pi, unsigned p) {
  if (p == 0) fail(ErrorCode::kOutOfRange, "p must be >= 1");
  Rational sum = 0;
  for (const auto& v : pi.values()) sum += ipow(v, p);
  sum /= pi.order();
  double root;
  if (p == 1) {
    root = to_double(sum);
  } else if (p == 2) {
    root = std::sqrt(to_double(sum));
  } else {
    root = static_cast<double>(std::pow(static_cast<long double>(to_double(sum)), 1.0L / p));
  }
  return {sum, root};
}

inline Rational volume_product(const FiniteGroupFunction& pi) {
  Rational product = 1;
  for (std::int64_t x = 1; x < pi.order(); ++x) product *= pi(x);
  return product;
}

inline Integer factorial(std::int64_t n) {
  Integer f = 1;
  for (std::int64_t k = 2; k <= n; ++k) f *= k;
  return f;
}

// (1/(q-1)!) * prod_{x != 0} 1/pi(x); nullopt when some pi(x) = 0 (the cut
// is parallel to that axis and the region is unbounded).
inline std::optional<Rational> simplex_volume(const FiniteGroupFunction& pi) {
  const Rational product = volume_product(pi);
  if (product == 0) return std::nullopt;
  return Rational(1) / (product * Rational(factorial(pi.order() - 1)));
}

inline double log_geo_mean(const FiniteGroupFunction& pi) {
  double sum = 0.0;
  for (std::int64_t x = 1; x < pi.order(); ++x) {
    if (pi(x) == 0) return -std::numeric_limits<double>::infinity();
    sum += log_rational(pi(x));
  }
  return sum / static_cast<double>(pi.order() - 1);
}

// The optimal volume product over M_b(Z/qZ) for prime q: (q-1)!/(q-1)^{q-1}.
inline Rational optimal_volume_product(std::int64_t q) {
  return Rational(factorial(q - 1), boost::multiprecision::pow(Integer(q - 1), static_cast<unsigned>(q - 1)));
}

struct CriterionReport {
  std::map<unsigned, LpNorm> lp_norms;
  Rational volume_product;
  std::optional<Rational> simplex_volume;  // nullopt = infinite
  double log_geo_mean;
  // Finite-group value of |md2|_p^p next to the L_p lower bound (1/2)^p.
  std::map<unsigned, Rational> md2_pth_power;
};

inline CriterionReport evaluate_criteria(const FiniteGroupFunction& pi,
                                         std::span<const unsigned> ps) {
  CriterionReport report;
  const auto reference = md2(pi.order(), pi.rhs());
  for (unsigned p : ps) {
    report.lp_norms.emplace(p, lp_norm(pi, p));
    report.md2_pth_power.emplace(p, lp_norm(reference, p).pth_power);
  }
  report.volume_product = volume_product(pi);
  report.simplex_volume = simplex_volume(pi);
  report.log_geo_mean = log_geo_mean(pi);
  return report;
}

}  // namespace cgf
