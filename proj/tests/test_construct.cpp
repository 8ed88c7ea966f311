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

#include <algorithm>
#include <random>
#include <set>

#include "fixtures.hpp"
#include "ooa/construct.hpp"
#include "ooa/error.hpp"
#include "ooa/lfsr.hpp"

namespace ooa {
namespace {

using testing::binary_matrix;
using testing::kPrimitiveDegree4Rows;
using testing::kStrength3Rows;

const Field& F2 = Field::make(2);

Poly random_permissible(const Field& F, int t, std::mt19937_64& rng) {
  std::vector<elem_t> c(t + 1);
  for (auto& e : c) e = static_cast<elem_t>(rng() % F.q());
  c[0] = static_cast<elem_t>(1 + rng() % (F.q() - 1));
  c[t] = 1;
  return Poly(F, c);
}

std::vector<elem_t> random_state(const Field& F, int t, std::mt19937_64& rng) {
  std::vector<elem_t> u(t);
  for (auto& e : u) e = static_cast<elem_t>(rng() % F.q());
  return u;
}

TEST(GrConstruct, StrengthThreeExample) {
  const OoaMatrix m = gr_construct(parse_poly(F2, "(x+1)^3"));
  EXPECT_EQ(m.rows(), 8);
  EXPECT_EQ(m.cols(), 6);
  EXPECT_EQ(m.blocks(), 2);
  EXPECT_EQ(m.gamma(), 1);
  EXPECT_TRUE(verify_ooa(m, VerifyMode::Rank));
  EXPECT_TRUE(verify_ooa(m, VerifyMode::Exhaustive));
  // The canonical orbit bases reproduce the printed array row for row.
  EXPECT_EQ(m, binary_matrix(kStrength3Rows, 3, 2));
}

TEST(GrConstruct, PrimitiveDegreeFourExample) {
  const OoaMatrix m = gr_construct(parse_poly(F2, "x^4+x^3+1"));
  EXPECT_EQ(m.rows(), 16);
  EXPECT_EQ(m.cols(), 12);
  EXPECT_TRUE(verify_ooa(m, VerifyMode::Rank));
  EXPECT_TRUE(verify_ooa(m, VerifyMode::Exhaustive));
  EXPECT_EQ(m, binary_matrix(kPrimitiveDegree4Rows, 4, 3));
}

TEST(GrConstruct, PrintedArraysVerify) {
  for (VerifyMode mode : {VerifyMode::Rank, VerifyMode::Exhaustive}) {
    EXPECT_TRUE(verify_ooa(binary_matrix(kStrength3Rows, 3, 2), mode));
    EXPECT_TRUE(verify_ooa(binary_matrix(kPrimitiveDegree4Rows, 4, 3), mode));
  }
}

TEST(GrConstruct, FlippedEntryFails) {
  for (int r = 0; r < 8; ++r)
    for (int c = 0; c < 6; ++c) {
      OoaMatrix m = binary_matrix(kStrength3Rows, 3, 2);
      m.set(r, c, static_cast<elem_t>(1 - m.at(r, c)));
      EXPECT_FALSE(verify_ooa(m, VerifyMode::Exhaustive)) << r << "," << c;
      EXPECT_FALSE(verify_ooa(m, VerifyMode::Rank)) << r << "," << c;
    }
}

TEST(GrConstruct, Impermissible) {
  EXPECT_THROW(gr_construct(parse_poly(F2, "x^2+x")), Impermissible);
  EXPECT_THROW(generator_matrix(parse_poly(F2, "x+1")), Impermissible);
}

TEST(GrConstruct, LayoutInvariants) {
  std::mt19937_64 rng(31);
  for (int q : {2, 3, 4, 5, 7}) {
    const Field& F = Field::make(q);
    for (int i = 0; i < 6; ++i) {
      const int t = 2 + static_cast<int>(rng() % (q <= 3 ? 3 : 1));
      const Poly f = random_permissible(F, t, rng);
      const OoaMatrix m = gr_construct(f);
      const GammaSet gs = gamma_set(f);
      ASSERT_EQ(m.cols(), t * (gs.gamma() + 1));
      EXPECT_EQ(m.labels(), block_labels(gs.gamma() + 1, t));
      const OrbitDecomposition d = orbit_decomposition(f);
      int row = 0;
      for (const Stream& base : d.bases)
        for (long long w = 0; w < base.period(); ++w, ++row) {
          const Stream u = shift(base, w);
          for (int j = 1; j <= t; ++j) {
            EXPECT_EQ(m.at(row, j - 1), u[j - 1]);
            for (int k = 1; k <= gs.gamma(); ++k) {
              Stream v = u;
              for (int p = 0; p < j; ++p) v = affine_inverse(v, FieldElement(F, gs.elements[k - 1]));
              EXPECT_EQ(m.at(row, k * t + j - 1), v[0]);
            }
          }
        }
      EXPECT_EQ(row, m.rows());
      // The zero orbit gives an all-zero row.
      const auto rows_zero = std::count_if(d.bases.begin(), d.bases.end(), [](const Stream& s) { return s.is_zero(); });
      EXPECT_EQ(rows_zero, 1);
    }
  }
}

TEST(Generator, SpansRowsAndIsLinear) {
  std::mt19937_64 rng(32);
  for (int q : {2, 3, 4, 5, 7, 8, 9}) {
    const Field& F = Field::make(q);
    for (int i = 0; i < 6; ++i) {
      const int t = 2 + static_cast<int>(rng() % (q <= 3 ? 4 : 2));
      const Poly f = random_permissible(F, t, rng);
      const GeneratorMatrix g = generator_matrix(f);
      const OoaMatrix m = gr_construct(f);
      ASSERT_EQ(g.cols(), m.cols());
      EXPECT_EQ(rank(F, std::vector<elem_t>(g.cols() * t, 0), t, g.cols()), 0);
      std::vector<elem_t> ge;
      for (int r = 0; r < t; ++r)
        for (int c = 0; c < g.cols(); ++c) ge.push_back(g.at(r, c));
      EXPECT_EQ(rank(F, ge, t, g.cols()), t);
      for (int r = 0; r < t; ++r)
        for (int c = 0; c < t; ++c) EXPECT_EQ(g.at(r, c), r == c ? 1 : 0);
      // Row of M for the stream with state u is u * G.
      const OrbitDecomposition d = orbit_decomposition(f);
      std::set<std::vector<elem_t>> encoded;
      int row = 0;
      for (const Stream& base : d.bases)
        for (long long w = 0; w < base.period(); ++w, ++row) {
          const std::vector<elem_t> enc = g.encode(base.window(w, t));
          ASSERT_TRUE(std::equal(enc.begin(), enc.end(), m.row(row).begin()));
          encoded.insert(enc);
        }
      EXPECT_EQ(static_cast<int>(encoded.size()), m.rows());
      // Linearity of state -> row.
      for (int k = 0; k < 10; ++k) {
        const auto u = random_state(F, t, rng), v = random_state(F, t, rng);
        const elem_t c = static_cast<elem_t>(rng() % q);
        std::vector<elem_t> w(t), cu(t);
        for (int j = 0; j < t; ++j) {
          w[j] = F.add(u[j], v[j]);
          cu[j] = F.mul(c, u[j]);
        }
        const auto gu = g.encode(u), gv = g.encode(v), gw = g.encode(w), gcu = g.encode(cu);
        for (int j = 0; j < g.cols(); ++j) {
          EXPECT_EQ(gw[j], F.add(gu[j], gv[j]));
          EXPECT_EQ(gcu[j], F.mul(c, gu[j]));
        }
      }
      const auto rsg = row_space_generator(m);
      ASSERT_TRUE(rsg.has_value());
    }
  }
}

TEST(IsCovered, Examples) {
  const GeneratorMatrix g = generator_matrix(parse_poly(F2, "x^2+x+1"));
  int covered = 0;
  for (int a = 0; a < 6; ++a)
    for (int b = a + 1; b < 6; ++b) {
      const int cols[] = {a, b};
      covered += is_covered(g, cols);
    }
  EXPECT_EQ(covered, 11);
  const int repeated[] = {1, 1};
  EXPECT_FALSE(is_covered(g, repeated));
}

TEST(IsCovered, LeftJustifiedSets) {
  EXPECT_EQ(left_justified_sets(2, 3, 3).size(), 4u);
  EXPECT_EQ(left_justified_sets(3, 4, 4).size(), 15u);
  std::mt19937_64 rng(33);
  for (int q : {2, 3, 4, 5, 7, 8, 9}) {
    const Field& F = Field::make(q);
    for (int i = 0; i < 5; ++i) {
      const int t = 2 + static_cast<int>(rng() % 4);
      const Poly f = random_permissible(F, t, rng);
      const GeneratorMatrix g = generator_matrix(f);
      for (const auto& cols : left_justified_sets(gamma_set(f).gamma() + 1, t, t)) EXPECT_TRUE(is_covered(g, cols));
    }
  }
}

// Every t-subset of columns, colex order.
template <class Fn>
void for_each_subset(int n, int t, Fn fn) {
  std::vector<int> c(t);
  for (int i = 0; i < t; ++i) c[i] = i;
  while (true) {
    fn(c);
    int i = 0;
    while (i < t && (i + 1 < t ? c[i] + 1 == c[i + 1] : c[i] + 1 == n)) ++i;
    if (i == t) return;
    ++c[i];
    for (int j = 0; j < i; ++j) c[j] = j;
  }
}

TEST(IsCovered, AgreesWithExhaustiveCount) {
  for (int t = 2; t <= 4; ++t)
    for (const Poly& f : enumerate_polys(F2, t, PolyFilter::Permissible)) {
      const GeneratorMatrix g = generator_matrix(f);
      const OoaMatrix m = gr_construct(f);
      int subsets = 0;
      for_each_subset(m.cols(), t, [&](const std::vector<int>& cols) {
        ++subsets;
        ASSERT_EQ(is_covered(g, cols), is_covered_exhaustive(m, cols)) << to_string(f);
      });
      if (gamma_set(f).gamma() == 2) EXPECT_EQ(subsets, t == 2 ? 15 : (t == 3 ? 84 : 495));
    }
}

TEST(VerifyOoa, RandomPermissibleBothModes) {
  std::mt19937_64 rng(34);
  for (int q : {2, 3, 4, 5, 7, 8, 9}) {
    const Field& F = Field::make(q);
    for (int i = 0; i < 20; ++i) {
      int t = 2 + static_cast<int>(rng() % 5);
      long long qt = 1;
      for (int j = 0; j < t; ++j) qt *= q;
      while (qt > 4096) qt /= q, --t;
      const Poly f = random_permissible(F, t, rng);
      const OoaMatrix m = gr_construct(f);
      EXPECT_TRUE(verify_ooa(m, VerifyMode::Rank)) << to_string(f);
      if (qt <= 1024) EXPECT_TRUE(verify_ooa(m, VerifyMode::Exhaustive)) << to_string(f);
      if (classify(f).kind == PolyKind::Primitive) EXPECT_EQ(m.cols(), t * (q + 1));
    }
  }
}

TEST(Rank, Examples) {
  const Field& F3 = Field::make(3);
  EXPECT_EQ(rank(F3, {1, 2, 2, 1}, 2, 2), 1);
  EXPECT_EQ(rank(F3, {1, 0, 0, 1}, 2, 2), 2);
  EXPECT_EQ(rank(F3, {0, 0, 0, 0, 0, 0}, 2, 3), 0);
}

TEST(RowSpace, NonLinearArrayHasNoGenerator) {
  OoaMatrix m = binary_matrix(kStrength3Rows, 3, 2);
  m.set(0, 0, 1);
  EXPECT_FALSE(row_space_generator(m).has_value());
}

}  // namespace
}  // namespace ooa
