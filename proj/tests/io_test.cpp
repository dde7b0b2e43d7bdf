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

#include <sstream>
#include <string>

#include <gtest/gtest.h>

#include "cgf/io/csv.hpp"
#include "cgf/io/json.hpp"
#include "test_support.hpp"

namespace cgf {
namespace {

using io::Json;
using testing::code_of;

Rational r(int n, int d = 1) { return make_rational(n, d); }

TEST(JsonFinite, Schema) {
  const auto j = io::to_json(gom(5, 4));
  EXPECT_EQ(j.dump(), R"({"q":5,"b":4,"values":["0","1/4","1/2","3/4","1"]})");
}

TEST(JsonFinite, RoundTripIsExact) {
  testing::Rng rng(97);
  for (int trial = 0; trial < 50; ++trial) {
    const auto& pi = testing::random_vertex(rng, {5, 7, 11});
    const auto text = io::to_json(pi).dump();
    EXPECT_EQ(io::finite_from_json(Json::parse(text)), pi);
    EXPECT_EQ(io::to_json(io::finite_from_json(Json::parse(text))).dump(), text);
  }
}

TEST(JsonFinite, AcceptsIntegersRejectsGarbage) {
  const auto pi = io::finite_from_json(Json::parse(R"({"q":3,"b":1,"values":[0,1,"1/2"]})"));
  EXPECT_EQ(pi, gom(3, 1));
  for (const char* text : {R"({"q":3,"b":1,"values":[0,1,0.5]})", R"({"q":3,"values":[0,1,1]})",
                           R"({"q":"3","b":1,"values":[0,1,1]})", R"([1,2])", R"({"q":3,"b":1,"values":"0"})"}) {
    EXPECT_EQ(code_of([&] { return io::finite_from_json(Json::parse(text)); }), ErrorCode::kParse) << text;
  }
  EXPECT_EQ(code_of([] { return io::finite_from_json(Json::parse(R"({"q":3,"b":0,"values":[0,1,1]})")); }),
            ErrorCode::kZeroElement);
}

TEST(JsonPwl, Schema) {
  const auto j = io::to_json(gmi(r(1, 2)));
  EXPECT_EQ(j.dump(),
            R"({"b":"1/2","breakpoints":["0","1/2"],"pieces":[{"slope":"2","intercept":"0"},)"
            R"({"slope":"-2","intercept":"2"}],"limits":[{"left":"0","at":"0","right":"0"},)"
            R"({"left":"1","at":"1","right":"1"}]})");
}

TEST(JsonPwl, RoundTripIsExact) {
  testing::Rng rng(101);
  for (int trial = 0; trial < 50; ++trial) {
    const auto f = testing::random_minimal_pwl(rng);
    const auto text = io::to_json(f).dump();
    const auto back = io::pwl_from_json(Json::parse(text));
    EXPECT_EQ(back.breakpoints(), f.breakpoints());
    EXPECT_EQ(back.pieces(), f.pieces());
    EXPECT_EQ(back.point_values(), f.point_values());
    EXPECT_EQ(io::to_json(back).dump(), text);
  }
}

TEST(JsonPwl, ValuesShorthandAndLimitChecks) {
  const auto f = io::pwl_from_json(Json::parse(
      R"({"b":"1/3","breakpoints":["0","1/3"],"pieces":[{"slope":"3","intercept":"0"},{"slope":"-3/2","intercept":"3/2"}],"values":["0","1"]})"));
  EXPECT_EQ(f, gmi(r(1, 3)));
  const char* inconsistent =
      R"({"b":"1/2","breakpoints":["0"],"pieces":[{"slope":"0","intercept":"1/2"}],"limits":[{"left":"0","at":"0","right":"1/2"}]})";
  EXPECT_EQ(code_of([&] { return io::pwl_from_json(Json::parse(inconsistent)); }), ErrorCode::kInvalidFunction);
  const char* missing = R"({"b":"1/2","breakpoints":["0"],"pieces":[{"slope":"0","intercept":"1/2"}]})";
  EXPECT_EQ(code_of([&] { return io::pwl_from_json(Json::parse(missing)); }), ErrorCode::kParse);
}

TEST(JsonVerdict, CarriesWitnessesAndLimits) {
  const auto j = io::to_json(is_minimal(dantzig(3, 1)));
  EXPECT_FALSE(j["minimal"].get<bool>());
  EXPECT_EQ(j["violations"][0]["kind"], "origin");
  EXPECT_EQ(j["violations"][0]["amount"], "1");
  const auto t = io::to_json(is_minimal_pwl(torus_md2(r(1, 3)).with_rhs(r(1, 2))));
  EXPECT_FALSE(t["minimal"].get<bool>());
  EXPECT_TRUE(t["violations"][0]["witness"][0].is_string());
}

TEST(JsonCriteria, InfinityIsAString) {
  const std::vector<unsigned> ps{1, 2};
  const FiniteGroupFunction degenerate(3, 1, {r(0), r(0), r(1)});
  const auto j = io::to_json(evaluate_criteria(degenerate, ps));
  EXPECT_EQ(j["log_geo_mean"], "-inf");
  EXPECT_EQ(j["simplex_volume"], "inf");
  EXPECT_EQ(j["lp_norms"]["1"]["pth_power"], "1/3");
  EXPECT_EQ(io::double_from_json(j["log_geo_mean"], "x"), -std::numeric_limits<double>::infinity());
}

TEST(JsonTableau, ParsesRows) {
  const auto row = io::tableau_row_from_json(
      Json::parse(R"({"rhs":"3/2","columns":[{"name":"x1","frac":"5/4"},{"name":"x2","frac":"-1/4"}]})"));
  EXPECT_EQ(row.rhs_fraction, r(1, 2));
  EXPECT_EQ(row.column_fractions, (std::vector<Rational>{r(1, 4), r(3, 4)}));
  EXPECT_EQ(io::to_json(row).dump(),
            R"({"rhs":"1/2","columns":[{"name":"x1","frac":"1/4"},{"name":"x2","frac":"3/4"}]})");
  const auto cut = emit_cut(row, gmi(r(1, 2)));
  EXPECT_EQ(io::to_json(cut).dump(),
            R"({"coefficients":[{"name":"x1","coefficient":"1/2"},{"name":"x2","coefficient":"1/2"}],"rhs":"1"})");
  EXPECT_EQ(code_of([] { return io::tableau_row_from_json(Json::parse(R"({"rhs":"1/2","columns":[{"frac":"1/4"}]})")); }),
            ErrorCode::kParse);
}

TEST(Csv, ReportSchema) {
  ExperimentConfig config;
  config.primes = {3, 4};
  config.b_policy = BPolicy::kCanonical;
  std::ostringstream out;
  io::write_report_csv(out, optimize_and_report(config));
  std::istringstream lines(out.str());
  std::string header, first, second;
  std::getline(lines, header);
  std::getline(lines, first);
  std::getline(lines, second);
  EXPECT_EQ(header, "q,b,n_vertices,min_product,argmin,unique,wall_time_ms,status");
  EXPECT_EQ(first.substr(0, first.find(",true,")), "3,2,1,1/2,0 1/2 1");
  EXPECT_TRUE(first.ends_with(",OK"));
  EXPECT_EQ(second, "4,,0,,,false,0.000,SKIPPED_NOT_PRIME");
}

TEST(Csv, StirlingAndSublevel) {
  std::ostringstream s;
  io::write_stirling_csv(s, stirling_table({3}));
  EXPECT_EQ(s.str().substr(0, s.str().find('\n')), "q,ratio,log_mean,gap");
  EXPECT_NE(s.str().find("\n3,1/2,"), std::string::npos);

  std::ostringstream m;
  io::write_sublevel_csv(m, gmi(r(1, 2)));
  EXPECT_EQ(m.str(), "alpha,measure\n0,0\n1,1\n");
  std::ostringstream flat;
  io::write_sublevel_csv(flat, torus_md2(r(1, 3)));
  EXPECT_EQ(flat.str(), "alpha,measure\n1/2,0\n1/2,1\n");
}

}  // namespace
}  // namespace cgf
