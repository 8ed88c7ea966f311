// Copyright 2026 The ooa-gr Authors
//
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

#include <gtest/gtest.h>

#include <sstream>

#include "ooa/error.hpp"
#include "ooa/serialize.hpp"

namespace ooa {
namespace {

TEST(MatrixDump, RoundTrip) {
  for (int q : {2, 3, 4, 9}) {
    const Field& F = Field::make(q);
    for (const Poly& f : enumerate_polys(F, 2, PolyFilter::Permissible)) {
      const OoaMatrix m = gr_construct(f);
      std::stringstream ss;
      write_matrix(ss, m);
      EXPECT_EQ(read_matrix(ss), m) << to_string(f);
    }
  }
}

TEST(MatrixDump, Header) {
  std::stringstream ss;
  write_matrix(ss, gr_construct(parse_poly(Field::make(2), "(x+1)^3")));
  std::string first;
  std::getline(ss, first);
  EXPECT_EQ(first, "OOA q=2 t=3 gamma=1 rows=8 cols=6");
}

TEST(MatrixDump, Malformed) {
  std::stringstream a("NOPE q=2\n");
  EXPECT_THROW(read_matrix(a), ParseError);
  std::stringstream b("OOA q=2 t=2 gamma=1 rows=4 cols=4\n0 1\n0 2\n1 1\n1 2\n0 0 0\n");
  EXPECT_THROW(read_matrix(b), ParseError);
  std::stringstream c("");
  EXPECT_THROW(read_matrix(c), ParseError);
}

TEST(PointDump, RoundTrip) {
  const PointSet p = net_points(gr_construct(parse_poly(Field::make(3), "x^3+2x^2+1")));
  std::stringstream ss;
  write_points(ss, p, 3, 3);
  EXPECT_EQ(read_points(ss), p);
  std::stringstream bad;
  EXPECT_THROW(write_points(bad, p, 2, 3), PreconditionViolation);
}

TEST(CoverageJson, RoundTrip) {
  const Field& F2 = Field::make(2);
  for (const char* text : {"x^4+x^3+1", "x^8+x^6+x^4+x^3+1", "(x+1)^3"}) {
    const CoverageReport r = coverage_stats(parse_poly(F2, text));
    const auto j = to_json(r);
    EXPECT_EQ(j["poly"], text == std::string("(x+1)^3") ? "x^3+x^2+x+1" : text);
    const CoverageReport back = coverage_from_json(nlohmann::json::parse(j.dump()));
    EXPECT_EQ(back.f, r.f);
    EXPECT_EQ(back.cls.kind, r.cls.kind);
    ASSERT_EQ(back.cls.factorization.size(), r.cls.factorization.size());
    for (std::size_t i = 0; i < r.cls.factorization.size(); ++i) {
      EXPECT_EQ(back.cls.factorization[i].poly, r.cls.factorization[i].poly);
      EXPECT_EQ(back.cls.factorization[i].multiplicity, r.cls.factorization[i].multiplicity);
    }
    EXPECT_EQ(back.covered, r.covered);
    EXPECT_EQ(back.total, r.total);
    EXPECT_EQ(back.gamma, r.gamma);
    EXPECT_EQ(back.cols, r.cols);
    EXPECT_EQ(back.ooa_verified, r.ooa_verified);
  }
  EXPECT_THROW(coverage_from_json(nlohmann::json::parse("{\"q\": 2}")), ParseError);
}

TEST(DiscrepancyJson, RoundTrip) {
  const DiscrepancySurvey s = discrepancy_survey(3, 2);
  for (const DiscrepancyEntry& e : s.entries) {
    const auto j = to_json(e);
    const DiscrepancyEntry back = discrepancy_from_json(nlohmann::json::parse(j.dump()));
    EXPECT_EQ(back.f, e.f);
    EXPECT_EQ(back.s, e.s);
    EXPECT_EQ(back.n, e.n);
    EXPECT_EQ(back.dstar.value(), e.dstar.value());
    EXPECT_EQ(back.dstar.fixed4(), e.dstar.fixed4());
  }
}

TEST(Tables, RoundTripCsvAndJson) {
  TextTable tb{{"name", "value"}, {{"plain", "1"}, {"with,comma", "2"}, {"with \"quote\"", "3"}, {"", "4"}}};
  for (TableFormat fmt : {TableFormat::Csv, TableFormat::Json}) {
    std::stringstream ss;
    write_table(ss, tb, fmt);
    EXPECT_EQ(read_table(ss, fmt), tb);
  }
  EXPECT_EQ(parse_format("json"), TableFormat::Json);
  EXPECT_THROW(parse_format("xml"), ParseError);
  std::stringstream bad("a,b\n1\n");
  EXPECT_THROW(read_table(bad, TableFormat::Csv), ParseError);
}

TEST(Tables, SurveyTablesRoundTrip) {
  const TextTable comp = comp_table(2, 2, 4);
  ASSERT_EQ(comp.rows.size(), 3u);
  EXPECT_EQ(comp.rows[2][3], "0.3556");
  EXPECT_EQ(comp.rows[2][6], "0.0844");
  for (TableFormat fmt : {TableFormat::Csv, TableFormat::Json}) {
    std::stringstream ss;
    write_table(ss, comp, fmt);
    EXPECT_EQ(read_table(ss, fmt), comp);
  }
  std::stringstream text;
  write_table(text, comp, TableFormat::Text);
  EXPECT_NE(text.str().find("GR_min"), std::string::npos);
}

TEST(Tables, FactorizationText) {
  const Field& F2 = Field::make(2);
  EXPECT_EQ(factorization_text(classify(parse_poly(F2, "x^8+x^6+x^4+x^3+1"))), "(x^2+x+1)(x^6+x^5+x^4+x+1)");
  EXPECT_EQ(factorization_text(classify(parse_poly(F2, "x^11+x^9+x^7+x^6+1"))), "(x^2+x+1)^3(x^5+x^4+x^2+x+1)");
  EXPECT_EQ(factorization_text(classify(parse_poly(F2, "x^4+x^3+1"))), "");
}

}  // namespace
}  // namespace ooa
