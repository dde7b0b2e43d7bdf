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

// Enumerates the vertices of the minimal-function polytope for small primes
// and reports the volume-product minimizer for every right-hand side.

#include <cstdio>
#include <iostream>

#include "cgf/cgf.hpp"
#include "cgf/io/csv.hpp"

int main(int argc, char** argv) {
  using namespace cgf;
  const std::int64_t q_max = argc > 1 ? std::atoll(argv[1]) : 11;
  for (std::int64_t q = 3; q <= q_max; ++q) {
    if (!is_prime(q)) continue;
    const Rational best = optimal_volume_product(q);
    for (Residue b = 1; b < q; ++b) {
      const auto opt = minimize_volume(q, b);
      std::printf("q=%-3lld b=%-3lld vertices=%-4zu min=%s%s argmin=[%s]\n", static_cast<long long>(q),
                  static_cast<long long>(b), opt.vertex_count, to_string(opt.value).c_str(),
                  opt.value == best ? "" : " (!)", io::join_values(opt.argmin.values()).c_str());
    }
  }
}
