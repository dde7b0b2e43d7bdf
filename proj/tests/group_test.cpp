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

#include <numeric>
#include <vector>

#include <gtest/gtest.h>

#include "cgf/group.hpp"
#include "test_support.hpp"

namespace cgf {
namespace {

using testing::code_of;

TEST(Primality, MatchesSieve) {
  constexpr int kLimit = 5000;
  std::vector<bool> composite(kLimit + 1, false);
  composite[0] = composite[1] = true;
  for (int p = 2; p * p <= kLimit; ++p) {
    if (composite[p]) continue;
    for (int m = p * p; m <= kLimit; m += p) composite[m] = true;
  }
  for (int n = -3; n <= kLimit; ++n) EXPECT_EQ(is_prime(n), n >= 0 && !composite[n]) << n;
}

TEST(CyclicGroup, RejectsTinyOrders) {
  EXPECT_EQ(code_of([] { CyclicGroup g(1); }), ErrorCode::kInvalidOrder);
  EXPECT_EQ(code_of([] { CyclicGroup g(0); }), ErrorCode::kInvalidOrder);
  EXPECT_NO_THROW(CyclicGroup(2));
}

TEST(CyclicGroup, ArithmeticIsCanonical) {
  const CyclicGroup g(7);
  EXPECT_EQ(g.add(5, 4), 2);
  EXPECT_EQ(g.sub(1, 3), 5);
  EXPECT_EQ(g.neg(0), 0);
  EXPECT_EQ(g.neg(3), 4);
  EXPECT_EQ(g.mul(-1, 3), 4);
  const GroupElement a(g, -1);
  EXPECT_EQ(a.residue(), 6);
  EXPECT_EQ((a + GroupElement(g, 3)).residue(), 2);
  EXPECT_EQ((-a).residue(), 1);
  EXPECT_EQ(code_of([&] { return a + GroupElement(CyclicGroup(5), 1); }), ErrorCode::kInvalidOrder);
}

TEST(ModInverse, AgreesWithSearch) {
  for (std::int64_t q = 2; q <= 60; ++q) {
    for (std::int64_t a = 0; a < q; ++a) {
      if (std::gcd(a, q) == 1) {
        const auto inv = mod_inverse(a, q);
        EXPECT_EQ((a * inv) % q, 1 % q) << a << " mod " << q;
      } else {
        EXPECT_EQ(code_of([&] { return mod_inverse(a, q); }), ErrorCode::kNotAUnit);
      }
    }
  }
}

TEST(Automorphism, RejectsNonUnits) {
  EXPECT_EQ(code_of([] { Automorphism(CyclicGroup(9), 3); }), ErrorCode::kNotAUnit);
  EXPECT_EQ(code_of([] { Automorphism(CyclicGroup(7), 0); }), ErrorCode::kNotAUnit);
}

TEST(Automorphism, IsABijectionWithInverse) {
  const CyclicGroup g(11);
  for (std::int64_t m = 1; m < 11; ++m) {
    const Automorphism phi(g, m);
    std::vector<bool> seen(11, false);
    for (Residue x = 0; x < 11; ++x) {
      seen[static_cast<std::size_t>(phi(x))] = true;
      EXPECT_EQ(phi.inverse()(phi(x)), x);
    }
    EXPECT_EQ(std::count(seen.begin(), seen.end(), true), 11);
    EXPECT_EQ(phi.after(phi.inverse()), Automorphism::identity(g));
  }
}

TEST(Automorphism, CompositionOrder) {
  const CyclicGroup g(13);
  const Automorphism a(g, 2), b(g, 5);
  for (Residue x = 0; x < 13; ++x) EXPECT_EQ(a.after(b)(x), a(b(x)));
}

TEST(AutomorphismSending, HitsTarget) {
  const CyclicGroup g(7);
  const auto phi = automorphism_sending(GroupElement(g, 3), GroupElement(g, 6));
  EXPECT_EQ(phi.multiplier(), 2);
  EXPECT_EQ(phi(GroupElement(g, 3)).residue(), 6);
  for (std::int64_t q : {3, 5, 7, 11, 13}) {
    const CyclicGroup h(q);
    for (Residue b = 1; b < q; ++b) {
      for (Residue t = 1; t < q; ++t) {
        EXPECT_EQ(automorphism_sending(GroupElement(h, b), GroupElement(h, t))(b), t);
      }
    }
  }
}

TEST(AutomorphismSending, Errors) {
  const CyclicGroup g(7);
  EXPECT_EQ(code_of([&] { return automorphism_sending(GroupElement(g, 0), GroupElement(g, 1)); }),
            ErrorCode::kZeroElement);
  const CyclicGroup c(9);
  EXPECT_EQ(code_of([&] { return automorphism_sending(GroupElement(c, 2), GroupElement(c, 4)); }),
            ErrorCode::kNotPrime);
}

TEST(Sumset, MatchesPairwiseSums) {
  testing::Rng rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const auto q = testing::uniform_int(rng, 2, 20);
    const CyclicGroup g(q);
    const auto a = testing::random_subset(rng, q);
    const auto b = testing::random_subset(rng, q);
    std::vector<Residue> expected;
    for (auto x : a) {
      for (auto y : b) expected.push_back((x + y) % q);
    }
    std::sort(expected.begin(), expected.end());
    expected.erase(std::unique(expected.begin(), expected.end()), expected.end());
    EXPECT_EQ(sumset(g, a, b), expected);
  }
}

TEST(Sumset, Examples) {
  const CyclicGroup g(7);
  const std::vector<std::int64_t> a{1, 2}, b{3, 4};
  EXPECT_EQ(sumset(g, make_set(g, a), make_set(g, b)), (ElementSet{4, 5, 6}));
  const std::vector<Residue> empty;
  EXPECT_EQ(code_of([&] { return sumset(g, empty, make_set(g, b)); }), ErrorCode::kEmptySet);
  const std::vector<std::int64_t> messy{9, -5, 2, 16};
  EXPECT_EQ(make_set(g, messy), (ElementSet{2}));
}

TEST(Sumset, CauchyDavenportForPrimes) {
  testing::Rng rng(11);
  for (std::int64_t q : {5, 7, 11, 13, 17}) {
    const CyclicGroup g(q);
    for (int trial = 0; trial < 300; ++trial) {
      const auto a = testing::random_subset(rng, q);
      const auto b = testing::random_subset(rng, q);
      const auto bound = std::min<std::int64_t>(q, static_cast<std::int64_t>(a.size() + b.size()) - 1);
      EXPECT_GE(static_cast<std::int64_t>(sumset(g, a, b).size()), bound);
    }
  }
}

TEST(Sumset, CauchyDavenportCanFailForComposites) {
  const CyclicGroup g(8);
  const std::vector<std::int64_t> evens{0, 2, 4, 6};
  const auto a = make_set(g, evens);
  EXPECT_EQ(sumset(g, a, a).size(), 4U);  // below min(8, 7)
}

}  // namespace
}  // namespace cgf
