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

#include <algorithm>
#include <vector>

#include <gtest/gtest.h>

#include "cgf/pwl.hpp"
#include "cgf/torus_minimality.hpp"
#include "test_support.hpp"

namespace cgf {
namespace {

using testing::code_of;

Rational r(int n, int d = 1) { return make_rational(n, d); }

// --- representation -----------------------------------------------------------

TEST(PwlConstruction, Validates) {
  EXPECT_EQ(code_of([] { return PwlTorusFunction(r(1, 2), {r(1, 4)}, {{0, 0}}, {0}); }),
            ErrorCode::kInvalidFunction);
  EXPECT_EQ(code_of([] { return PwlTorusFunction(r(1, 2), {r(0), r(1, 2), r(1, 2)}, {{0, 0}, {0, 0}, {0, 0}}, {0, 0, 0}); }),
            ErrorCode::kInvalidFunction);
  EXPECT_EQ(code_of([] { return PwlTorusFunction(r(1, 2), {r(0), r(1)}, {{0, 0}, {0, 0}}, {0, 0}); }),
            ErrorCode::kInvalidFunction);
  EXPECT_EQ(code_of([] { return PwlTorusFunction(r(1, 2), {r(0)}, {{0, 0}, {0, 0}}, {0}); }),
            ErrorCode::kInvalidFunction);
  EXPECT_EQ(code_of([] { return PwlTorusFunction(r(1), {r(0)}, {{0, 0}}, {0}); }), ErrorCode::kOutOfRange);
  EXPECT_EQ(code_of([] { return PwlTorusFunction(r(-1, 2), {r(0)}, {{0, 0}}, {0}); }), ErrorCode::kOutOfRange);
}

TEST(PwlConstruction, LimitsAndEvaluation) {
  const auto f = torus_md2(r(1, 3));
  const auto l0 = f.limits(0);
  EXPECT_EQ(l0.left, r(1, 2));
  EXPECT_EQ(l0.at, 0);
  EXPECT_EQ(l0.right, r(1, 2));
  EXPECT_EQ(f(r(1, 3)), 1);
  EXPECT_EQ(f.limit(r(1, 3), -1), r(1, 2));
  EXPECT_EQ(f(r(4, 3)), 1);  // arguments are read mod 1
  EXPECT_EQ(f(r(-2, 3)), 1);
  EXPECT_EQ(f(r(7, 10)), r(1, 2));
  EXPECT_FALSE(f.is_continuous());
  EXPECT_TRUE(gmi(r(1, 3)).is_continuous());
}

TEST(PwlConstruction, NormalizeAndRefineKeepTheFunction) {
  const auto g = gmi(r(2, 5));
  const std::vector<Rational> grid{r(0), r(1, 7), r(2, 5), r(1, 2), r(9, 10)};
  const auto fine = g.refined(grid);
  EXPECT_EQ(fine.size(), 5U);
  EXPECT_EQ(fine, g);
  EXPECT_EQ(fine.normalized().size(), 2U);
  for (int k = 0; k < 70; ++k) EXPECT_EQ(fine(r(k, 70)), g(r(k, 70)));
}

TEST(PwlConstruction, CombineAveragesPointwise) {
  const auto f = gmi(r(1, 3));
  const auto m = torus_md2(r(1, 3));
  const auto c = combine(r(1, 4), f, r(3, 4), m);
  for (int k = 0; k < 36; ++k) {
    const auto x = r(k, 36);
    EXPECT_EQ(c(x), r(1, 4) * f(x) + r(3, 4) * m(x));
    EXPECT_EQ(c.limit(x, -1), r(1, 4) * f.limit(x, -1) + r(3, 4) * m.limit(x, -1));
  }
  EXPECT_EQ(code_of([&] { return combine(r(1, 2), f, r(1, 2), gmi(r(1, 2))); }), ErrorCode::kRhsMismatch);
}

TEST(PwlConstruction, NondecreasingDetection) {
  EXPECT_TRUE(identity_function().is_nondecreasing());
  EXPECT_FALSE(gmi(r(1, 2)).is_nondecreasing());
  const PwlTorusFunction step(r(0), {r(0), r(1, 2)}, {{0, r(1, 4)}, {0, r(3, 4)}}, {0, r(3, 4)});
  EXPECT_TRUE(step.is_nondecreasing());
  const PwlTorusFunction dip(r(0), {r(0), r(1, 2)}, {{0, r(1, 4)}, {0, r(3, 4)}}, {0, r(1, 8)});
  EXPECT_FALSE(dip.is_nondecreasing());
}

// --- named functions ----------------------------------------------------------

TEST(NamedFunctions, Gmi) {
  const auto half = gmi(r(1, 2));
  EXPECT_EQ(half.pieces()[0], (AffinePiece{2, 0}));
  EXPECT_EQ(half.pieces()[1], (AffinePiece{-2, 2}));
  const auto quarter = gmi(r(1, 4));
  EXPECT_EQ(quarter.pieces()[0], (AffinePiece{4, 0}));
  EXPECT_EQ(quarter(r(1, 2)), r(2, 3));  // (1 - x)/(3/4)
  for (auto b : {r(1, 10), r(1, 3), r(2, 3), r(9, 10)}) EXPECT_EQ(gmi(b)(b), 1);
  EXPECT_EQ(code_of([] { return gmi(r(0)); }), ErrorCode::kOutOfRange);
  EXPECT_EQ(code_of([] { return gmi(r(1)); }), ErrorCode::kOutOfRange);
}

TEST(NamedFunctions, GmiProjection) {
  const auto p = gmi_n({r(1, 3), r(1, 2)}, 1);
  EXPECT_EQ(p.profile, gmi(r(1, 3)));
  EXPECT_EQ(p.dimension, 2U);
  EXPECT_EQ(p.coordinate, 1U);
  EXPECT_EQ(code_of([] { return gmi_n({r(0), r(1, 2)}, 1); }), ErrorCode::kZeroCoordinate);
  EXPECT_EQ(gmi_n({r(0), r(1, 2)}, 2).profile, gmi(r(1, 2)));
  EXPECT_EQ(gmi_n({r(0), r(3, 2)}, 2).profile, gmi(r(1, 2)));
  EXPECT_EQ(code_of([] { return gmi_n({r(1, 2)}, 2); }), ErrorCode::kOutOfRange);
}

TEST(NamedFunctions, ScaledGmi) {
  EXPECT_EQ(scaled_gmi(r(1, 2), 1), gmi(r(1, 2)));
  const auto saw = scaled_gmi(r(1, 2), 2);
  EXPECT_EQ(saw.normalized().size(), 4U);
  for (int k = 0; k < 40; ++k) EXPECT_EQ(saw(r(k, 40)), gmi(r(1, 2))(r(2 * k, 40)));
  EXPECT_EQ(code_of([] { return scaled_gmi(r(1, 2), 0); }), ErrorCode::kOutOfRange);
  EXPECT_EQ(code_of([] { return scaled_gmi(r(3, 2), 2); }), ErrorCode::kOutOfRange);
}

// --- minimality on the circle ---------------------------------------------------

TEST(TorusMinimality, NamedFunctionsAreMinimal) {
  EXPECT_TRUE(is_minimal_pwl(gmi(r(1, 2))));
  EXPECT_TRUE(is_minimal_pwl(identity_function()));
  EXPECT_EQ(identity_function().mode(), SymmetryMode::kReflection);
  EXPECT_TRUE(is_minimal_pwl(torus_md2(r(1, 3))));
  EXPECT_TRUE(is_minimal_pwl(torus_md2(r(0))));
  for (auto b : {r(1, 10), r(1, 3), r(1, 2), r(2, 3), r(9, 10)}) EXPECT_TRUE(is_minimal_pwl(gmi(b)));
  for (int k : {2, 3, 5}) EXPECT_TRUE(is_minimal_pwl(scaled_gmi(r(1, 2), k)));
  EXPECT_TRUE(is_minimal_pwl(scaled_gmi(r(1, 3), 3)));
}

TEST(TorusMinimality, ReportsViolations) {
  // GMI with the wrong right-hand side breaks symmetry.
  const auto wrong_b = gmi(r(1, 3)).with_rhs(r(1, 2));
  const auto v = is_minimal_pwl(wrong_b);
  EXPECT_FALSE(v);
  EXPECT_GT(v.count(ViolationKind::kSymmetry), 0U);

  // A bump: 2x on [0, 1/2) is fine, but raising the origin is not.
  const auto lifted = PwlTorusFunction(r(1, 2), {r(0), r(1, 2)}, {{2, 0}, {-2, 2}}, {r(1, 5), 1});
  const auto w = is_minimal_pwl(lifted);
  EXPECT_EQ(w.count(ViolationKind::kOrigin), 1U);

  const PwlTorusFunction negative(r(1, 2), {r(0), r(1, 2)}, {{1, r(-1, 4)}, {0, 1}}, {0, 1});
  EXPECT_GT(is_minimal_pwl(negative).count(ViolationKind::kNegativity), 0U);

  // Symmetric on the 1/8 grid, but pi(1/8) + pi(1/8) < pi(1/4).
  std::vector<Rational> nodes;
  for (int k = 0; k < 8; ++k) nodes.push_back(r(k, 8));
  const auto convex = PwlTorusFunction::interpolate(
      r(1, 2), nodes, {r(0), r(1, 8), r(1, 2), r(7, 8), r(1), r(1, 2), r(1, 2), r(1, 2)}, r(0));
  EXPECT_EQ(is_minimal_pwl(convex).count(ViolationKind::kSymmetry), 0U);
  const auto c = is_minimal_pwl(convex);
  EXPECT_GT(c.count(ViolationKind::kSubadditivity), 0U);
  EXPECT_EQ(is_minimal_pwl(convex, {.stop_at_first = true}).violations.size(), 1U);
}

TEST(TorusMinimality, DetectsJumpOnlyViolations) {
  // Continuous GMI(1/2) except the right limit at 1/4 jumps up: symmetric
  // partner 1/4 from the left would need to drop, so symmetry fails only in
  // one-sided limits.
  const PwlTorusFunction f(r(1, 2), {r(0), r(1, 4), r(1, 2)}, {{2, 0}, {2, r(1, 10)}, {-2, 2}},
                           {0, r(1, 2), 1});
  const auto v = is_minimal_pwl(f);
  ASSERT_FALSE(v);
  bool one_sided = false;
  for (const auto& item : v.violations) one_sided = one_sided || !item.limit.empty();
  EXPECT_TRUE(one_sided);
}

TEST(TorusMinimality, RandomMinimalFunctionsPass) {
  testing::Rng rng(23);
  for (int trial = 0; trial < 60; ++trial) {
    const auto f = testing::random_minimal_pwl(rng);
    EXPECT_TRUE(is_minimal_pwl(f)) << trial;
    EXPECT_TRUE(testing::symmetric_on_grid(f, 2 * 3 * 5 * 7 * 11));
  }
}

// The finite certificate against dense sampling: on continuous functions whose
// breakpoints lie on the 1/q grid, checking all grid pairs is exact, so the
// two verdicts must agree; with jumps the grid check is only necessary.
TEST(TorusMinimality, AgreesWithDenseSampling) {
  testing::Rng rng(29);
  int rejected = 0;
  for (int trial = 0; trial < 150; ++trial) {
    const std::int64_t q = testing::pick(rng, std::vector<std::int64_t>{5, 7, 11});
    const auto& vertex = testing::pick(rng, testing::vertices_of(q, testing::uniform_int(rng, 1, q - 1)));
    auto values = vertex.values();
    const auto x = testing::uniform_int(rng, 1, q - 1);
    const Rational delta = make_rational(testing::uniform_int(rng, -2, 2), 4 * q);
    values[static_cast<std::size_t>(x)] += delta;
    if (trial % 2 == 0) {
      const auto partner = ((vertex.rhs() - x) % q + q) % q;
      if (partner != x) values[static_cast<std::size_t>(partner)] -= delta;
    }
    std::vector<Rational> nodes;
    for (std::int64_t k = 0; k < q; ++k) nodes.push_back(make_rational(k, q));
    const auto f = PwlTorusFunction::interpolate(make_rational(vertex.rhs(), q), nodes, values, Rational(0));
    const bool nonnegative = std::all_of(values.begin(), values.end(), [](const Rational& v) { return v >= 0; });
    const bool oracle = nonnegative && f(Rational(0)) == 0 && testing::symmetric_on_grid(f, 2 * q) &&
                        testing::subadditive_on_grid(f, 2 * q);
    EXPECT_EQ(static_cast<bool>(is_minimal_pwl(f)), oracle) << "trial " << trial;
    rejected += oracle ? 0 : 1;

    // Blend in MD2 jumps: the grid check stays necessary.
    const auto g = combine(r(1, 2), f, r(1, 2), torus_md2(f.rhs()));
    const bool grid_ok = testing::symmetric_on_grid(g, 2 * q) && testing::subadditive_on_grid(g, 2 * q);
    if (is_minimal_pwl(g)) {
      EXPECT_TRUE(grid_ok) << "trial " << trial;
    }
  }
  EXPECT_GT(rejected, 20);
}

TEST(TorusMinimality, ReflectionModeSkipsTheOrigin) {
  // For b = 0 the partner of 0 is 0 itself; only x != 0 is constrained.
  const auto id = identity_function();
  EXPECT_EQ(id(Rational(0)), 0);
  EXPECT_EQ(id.limit(Rational(0), -1), 1);
  EXPECT_TRUE(is_minimal_pwl(id));
  const auto half = PwlTorusFunction::interpolate(r(0), {r(0)}, {r(0)}, r(1, 2));
  EXPECT_FALSE(is_minimal_pwl(half));
}

}  // namespace
}  // namespace cgf
