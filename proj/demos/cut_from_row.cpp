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

// Reads a simplex tableau row off the 1/7 grid and applies GOM and the
// two-slope md2 function to it; prints both cuts.

#include <iostream>

#include "cgf/cgf.hpp"
#include "cgf/io/json.hpp"

int main() {
  using namespace cgf;
  // x_B + 3/7 s1 + 6/7 s2 + 2/7 s3 = 5/7 (mod 1)
  const auto row = tableau_row_on_grid(7, 5, {"s1", "s2", "s3"}, {3, 6, 2});
  for (const auto& pi : {gom(7, 5), md2(7, 5)}) {
    const auto verdict = is_minimal(pi);
    std::cout << (verdict ? "minimal" : "not minimal") << ' ' << io::to_json(pi).dump() << '\n';
    std::cout << "  cut: " << io::to_json(emit_cut(row, pi)).dump() << '\n';
  }
}
