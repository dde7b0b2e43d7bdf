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

#include <string>
#include <string_view>
#include <vector>

#include "cgf/rational.hpp"

namespace cgf {

enum class ViolationKind { kOrigin, kSubadditivity, kSymmetry, kNegativity };

constexpr std::string_view to_string(ViolationKind kind) {
  switch (kind) {
    case ViolationKind::kOrigin: return "origin";
    case ViolationKind::kSubadditivity: return "subadditivity";
    case ViolationKind::kSymmetry: return "symmetry";
    case ViolationKind::kNegativity: return "negativity";
  }
  return "unknown";
}

// `amount` is the exact signed defect: pi(0) for origin, the (negative) slack
// pi(x)+pi(y)-pi(x+y) for subadditivity, pi(x)+pi(b-x)-1 for symmetry and
// the (negative) value for negativity. `limit` names the one-sided limit
// pattern used on the circle, empty for point values.
template <typename Point>
struct Violation {
  ViolationKind kind;
  std::vector<Point> witness;
  Rational amount;
  std::string limit;
};

template <typename Point>
struct MinimalityVerdict {
  std::vector<Violation<Point>> violations;

  bool is_minimal() const noexcept { return violations.empty(); }
  explicit operator bool() const noexcept { return is_minimal(); }

  std::size_t count(ViolationKind kind) const {
    std::size_t n = 0;
    for (const auto& v : violations) n += v.kind == kind ? 1 : 0;
    return n;
  }
};

struct VerdictOptions {
  bool stop_at_first = false;
};

}  // namespace cgf
