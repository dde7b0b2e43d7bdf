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

// Rearranges a few minimal functions on the circle and compares the
// log-integral, which the rearrangement preserves, with its limit -1.

#include <cstdio>
#include <string>
#include <utility>
#include <vector>

#include "cgf/cgf.hpp"

int main() {
  using namespace cgf;
  const std::vector<std::pair<std::string, PwlTorusFunction>> cases{
      {"gmi(1/3)", gmi(make_rational(1, 3))},
      {"scaled_gmi(2/5, 3)", scaled_gmi(make_rational(2, 5), 3)},
      {"torus_md2(1/2)", torus_md2(make_rational(1, 2))},
  };
  for (const auto& [name, pi] : cases) {
    const auto hat = rearrange_torus(pi);
    const auto tilde = tilde_fn(pi);
    std::printf("%-20s int ln pi = %+.12f  int ln hat = %+.12f  int ln tilde = %+.12f  tilde minimal: %s\n",
                name.c_str(), integral_ln(pi), integral_ln(hat), integral_ln(tilde),
                is_minimal_pwl(tilde.with_rhs(Rational(0))) ? "yes" : "no");
  }
}
