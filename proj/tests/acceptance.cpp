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

// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "cgf/cgf.hpp"
#include "test_support.hpp"

namespace {

using namespace cgf;
using testing::Rng;

struct Outcome {
  bool ok = true;
  std::ostringstream detail;

  void require(bool condition, const std::string& what) {
    if (!condition && ok) detail << "first failure: " << what << "; ";
    ok = ok && condition;
  }
};

const std::vector<std::int64_t> kSmallPrimes{3, 5, 7, 11, 13};

Rational r(int n, int d = 1) { return make_rational(n, d); }

void volume_optimum(Outcome& out) {
  int rows = 0;
  for (auto q : kSmallPrimes) {
    const CyclicGroup g(q);
    for (Residue b = 1; b < q; ++b) {
      const auto opt = minimize_volume(q, b);
      const auto phi = automorphism_sending(GroupElement(g, b), GroupElement(g, q - 1));
      const std::string where = "q=" + std::to_string(q) + " b=" + std::to_string(b);
      out.require(opt.value == optimal_volume_product(q), where + " minimum");
      out.require(opt.unique, where + " uniqueness");
      out.require(transport(opt.argmin, phi) == gom(q, q - 1), where + " argmin");
      ++rows;
    }
  }
  out.detail << rows << " (q, b) pairs";
}

void lp_norms(Outcome& out) {
  for (std::int64_t q : {3, 5, 7, 11}) {
    for (Residue b = 1; b < q; ++b) {
      const auto m = md2(q, b);
      out.require(lp_norm(m, 1).pth_power == r(1, 2), "|md2|_1");
      for (unsigned p : {2U, 3U}) {
        const Rational half_p = ipow(r(1, 2), p);
        out.require(lp_norm(m, p).pth_power == half_p + (1 - 2 * half_p) / q, "|md2|_p^p closed form");
      }
    }
  }
  Rng rng(1001);
  for (int trial = 0; trial < 100; ++trial) {
    const auto& v = testing::random_vertex(rng, {5, 7, 11});
    for (unsigned p : {1U, 2U, 3U}) out.require(lp_norm(v, p).pth_power >= ipow(r(1, 2), p), "vertex L_p bound");
  }
  double worst = 0.0;
  for (auto b : {r(0), r(1, 3), r(1, 2), r(4, 5)}) {
    for (unsigned p : {1U, 2U, 3U}) worst = std::max(worst, std::abs(lp_norm_torus(torus_md2(b), p).value - 0.5));
  }
  out.require(worst <= 1e-12, "torus md2 norm");
  out.detail << "100 vertices; torus deviation " << worst;
}

void log_integrals(Outcome& out) {
  double worst = 0.0;
  for (auto b : {r(1, 10), r(1, 3), r(1, 2), r(2, 3), r(9, 10)}) {
    worst = std::max(worst, std::abs(integral_ln(gmi(b)) + 1.0));
  }
  for (int k : {2, 3, 5}) worst = std::max(worst, std::abs(integral_ln(scaled_gmi(r(1, 2), k)) + 1.0));
  out.require(worst < 1e-9, "GMI family integral");
  const double id = std::abs(integral_ln(identity_function()) + 1.0);
  out.require(id < 1e-12, "identity integral");
  Rng rng(1003);
  double lowest = 0.0;
  for (int trial = 0; trial < 50; ++trial) lowest = std::min(lowest, integral_ln(testing::random_minimal_pwl(rng)));
  out.require(lowest >= -1.0 - 1e-9, "random minimal integral >= -1");
  out.detail << "GMI deviation " << worst << ", identity " << id << ", min over 50 random " << lowest;
}

void finite_rearrangement(Outcome& out) {
  Rng rng(1005);
  for (int trial = 0; trial < 200; ++trial) {
    const auto& pi = testing::random_vertex(rng, {5, 7, 11});
    const auto q = pi.order();
    const auto hat = rearrange_finite(pi);
    auto sorted = pi.values();
    std::sort(sorted.begin(), sorted.end());
    auto hat_sorted = hat.values();
    std::sort(hat_sorted.begin(), hat_sorted.end());
    out.require(sorted == hat_sorted, "value multiset");
    out.require(hat.is_nondecreasing(), "nondecreasing");
    out.require(testing::subadditive_brute_force(hat), "subadditive");
    bool symmetric = hat.rhs() == q - 1;
    for (std::int64_t x = 0; x < q; ++x) symmetric = symmetric && hat(x) + hat((q - 1 - x + q) % q) == 1;
    out.require(symmetric, "symmetric w.r.t. q-1");
    out.require(rearrange_finite(hat) == hat, "idempotent");
  }
  for (auto q : kSmallPrimes) {
    for (Residue b = 1; b < q; ++b) {
      out.require(rearrange_finite(minimize_volume(q, b).argmin) == gom(q, q - 1), "argmin rearranges to GOM");
    }
  }
  out.detail << "200 random vertices";
}

void torus_rearrangement(Outcome& out) {
  for (auto b : {r(1, 4), r(1, 2), r(3, 4)}) out.require(rearrange_torus(gmi(b)) == identity_function(), "GMI -> identity");
  Rng rng(1007);
  int levels = 0;
  for (int f_index = 0; f_index < 10; ++f_index) {
    const auto f = testing::random_minimal_pwl(rng);
    const auto hat = rearrange_torus(f);
    for (int j = 0; j < 50; ++j) {
      const auto beta = make_rational(testing::uniform_int(rng, 0, 1200), 997);
      out.require(sublevel_measure(hat, beta) == sublevel_measure(f, beta), "equimeasurability");
      ++levels;
    }
  }
  double worst = 0.0;
  for (int trial = 0; trial < 50; ++trial) {
    const auto f = testing::random_minimal_pwl(rng);
    const auto t = tilde_fn(f);
    const auto verdict = is_minimal_pwl(t);
    out.require(verdict.count(ViolationKind::kSymmetry) == 0, "tilde symmetry");
    out.require(verdict.count(ViolationKind::kSubadditivity) == 0, "tilde subadditivity");
    worst = std::max(worst, std::abs(integral_ln(f) - integral_ln(t)));
  }
  out.require(worst < 1e-9, "integral preservation");
  out.detail << levels << " levels; integral drift " << worst;
}

void layer_cake(Outcome& out) {
  std::vector<PwlTorusFunction> inputs{gmi(r(1, 2)), identity_function(), torus_md2(r(1, 2)), torus_md2(r(0))};
  Rng rng(1009);
  for (int trial = 0; trial < 20; ++trial) inputs.push_back(testing::random_minimal_pwl(rng));
  double worst = 0.0;
  for (const auto& f : inputs) worst = std::max(worst, layer_cake_check(f).gap);
  out.require(worst < 1e-8, "layer-cake gap");
  out.detail << inputs.size() << " functions, max gap " << worst;
}

void limits(Outcome& out) {
  const auto table = stirling_table({11, 101, 1009});
  out.require(table[2].gap_to_minus_one < 0.01, "Stirling gap at 1009");
  out.require(table[0].gap_to_minus_one > table[1].gap_to_minus_one &&
                  table[1].gap_to_minus_one > table[2].gap_to_minus_one,
              "Stirling gap monotone");
  double mean101 = 0.0;
  for (std::int64_t q : {5, 11, 101}) {
    const auto res = riemann_experiment(identity_function(), q);
    out.require(res.product >= res.optimum, "exact product inequality at q=" + std::to_string(q));
    if (q == 101) mean101 = res.discrete_mean;
  }
  out.require(std::abs(mean101 + 1.0) < 0.03, "discrete mean at q=101 within 0.03 of -1");
  out.detail << "Stirling gaps " << table[0].gap_to_minus_one << " " << table[1].gap_to_minus_one << " "
             << table[2].gap_to_minus_one << "; discrete mean at 101 = " << mean101 << " (gap "
             << std::abs(mean101 + 1.0) << ")";
}

void structure(Outcome& out) {
  std::size_t total = 0;
  for (auto q : kSmallPrimes) {
    for (Residue b = 1; b < q; ++b) {
      for (const auto& v : testing::vertices_of(q, b)) {
        out.require(static_cast<bool>(is_minimal(v)), "vertex minimal");
        ++total;
      }
    }
    std::vector<FiniteGroupFunction> nondecreasing;
    for (const auto& v : testing::vertices_of(q, q - 1)) {
      if (v.is_nondecreasing()) nondecreasing.push_back(v);
    }
    out.require(nondecreasing.size() == 1 && nondecreasing.front() == gom(q, q - 1), "unique nondecreasing vertex");
    if (!nondecreasing.empty()) {
      out.require(gomory_decomposition(nondecreasing.front()).pi_tilde == gom(q, q - 1), "decomposition of GOM");
    }
  }
  const FiniteGroupFunction half(5, 4, {r(0), r(1, 2), r(1, 2), r(1, 2), r(1)});
  const auto d = gomory_decomposition(half);
  out.require(d.lambda == r(1, 6), "lambda = 1/6");
  out.require(d.pi_tilde.values() == std::vector<Rational>{r(0), r(11, 20), r(1, 2), r(9, 20), r(1)}, "pi_tilde");
  out.detail << total << " vertices checked";
}

void properties(Outcome& out) {
  Rng rng(1011);
  int pairs = 0;
  for (std::int64_t q : {5, 7, 11, 13}) {
    const CyclicGroup g(q);
    for (int trial = 0; trial < 1000; ++trial) {
      const auto a = testing::random_subset(rng, q);
      const auto b = testing::random_subset(rng, q);
      const auto bound = std::min<std::size_t>(static_cast<std::size_t>(q), a.size() + b.size() - 1);
      out.require(sumset(g, a, b).size() >= bound, "Cauchy-Davenport");
      ++pairs;
    }
  }
  for (int trial = 0; trial < 100; ++trial) {
    const auto f = testing::random_minimal_pwl(rng);
    const auto a = sublevel_arcs(f, make_rational(testing::uniform_int(rng, 0, 1100), 1000));
    const auto b = sublevel_arcs(f, make_rational(testing::uniform_int(rng, 0, 1100), 1000));
    out.require(sumset_measure(a, b) >= std::min(Rational(1), arcs_measure(a) + arcs_measure(b)), "Kemperman surrogate");
  }
  const CyclicGroup g7(7);
  for (Residue b = 1; b < 7; ++b) {
    for (Residue c = 1; c < 7; ++c) {
      const auto phi = automorphism_sending(GroupElement(g7, b), GroupElement(g7, c));
      std::vector<std::vector<Rational>> images;
      for (const auto& v : testing::vertices_of(7, c)) images.push_back(compose(v, phi).values());
      std::sort(images.begin(), images.end());
      std::vector<std::vector<Rational>> actual;
      for (const auto& v : testing::vertices_of(7, b)) actual.push_back(v.values());
      out.require(images == actual, "vertex equivariance");
    }
  }
  out.detail << pairs << " subset pairs, 100 level pairs, 36 automorphism checks";
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<void(Outcome&)>>> criteria{
      {"AC1 volume optimum over vertices", volume_optimum},
      {"AC2 L_p norms", lp_norms},
      {"AC3 log-integral infimum", log_integrals},
      {"AC4 finite rearrangement", finite_rearrangement},
      {"AC5 torus rearrangement", torus_rearrangement},
      {"AC6 layer-cake identity", layer_cake},
      {"AC7 limit arguments", limits},
      {"AC8 polytope structure", structure},
      {"AC9 property suites", properties},
  };
  int failures = 0;
  for (const auto& [name, run] : criteria) {
    Outcome out;
    const auto start = std::chrono::steady_clock::now();
    try {
      run(out);
    } catch (const std::exception& e) {
      out.ok = false;
      out.detail << "exception: " << e.what();
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("[%s] %s: %s (%.2fs)\n", out.ok ? "PASS" : "FAIL", name.c_str(), out.detail.str().c_str(), seconds);
    failures += out.ok ? 0 : 1;
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
