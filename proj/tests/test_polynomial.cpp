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
#include <numeric>
#include <random>

#include "ooa/error.hpp"
#include "ooa/polynomial.hpp"

namespace ooa {
namespace {

const Field& F2 = Field::make(2);
const Field& F3 = Field::make(3);

Poly P(const Field& F, const char* text) { return parse_poly(F, text); }

Poly random_poly(const Field& F, int degree, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> d(0, F.q() - 1);
  std::vector<elem_t> c(degree + 1);
  for (auto& e : c) e = static_cast<elem_t>(d(rng));
  c[degree] = static_cast<elem_t>(1 + d(rng) % (F.q() - 1));
  return Poly(F, c);
}

TEST(PolyArith, Examples) {
  EXPECT_EQ(P(F2, "x+1") * P(F2, "x+1"), P(F2, "x^2+1"));
  EXPECT_EQ(P(F2, "x^3+x^2+x+1").eval(1), 0);
  const DivMod dm = divmod(P(F2, "x^4+x^3+1"), P(F2, "x^2+x+1"));
  EXPECT_EQ(dm.quotient, P(F2, "x^2+1"));
  EXPECT_EQ(dm.remainder, P(F2, "x"));
}

TEST(PolyArith, DivmodOverGf5) {
  const Field& F5 = Field::make(5);
  const DivMod dm = divmod(P(F5, "x^5+2x^3+x+4"), P(F5, "3x^2+x+2"));
  EXPECT_EQ(dm.quotient, P(F5, "2x^3+x^2+4x+3"));
  EXPECT_EQ(dm.remainder, P(F5, "3"));
}

TEST(PolyArith, DivisionByZero) { EXPECT_THROW(divmod(P(F2, "x"), Poly(F2)), DivisionByZero); }

TEST(PolyArith, DivmodProperty) {
  std::mt19937_64 rng(11);
  for (int q : {2, 3, 4, 5, 7, 8, 9}) {
    const Field& F = Field::make(q);
    for (int i = 0; i < 50; ++i) {
      const Poly a = random_poly(F, 1 + static_cast<int>(rng() % 8), rng);
      const Poly b = random_poly(F, static_cast<int>(rng() % 5), rng);
      const DivMod dm = divmod(a, b);
      EXPECT_EQ(dm.quotient * b + dm.remainder, a);
      EXPECT_LT(dm.remainder.degree(), b.degree());
    }
  }
}

TEST(PolyGcd, Examples) {
  EXPECT_EQ(gcd_ext(P(F2, "x-1"), P(F2, "(x+1)^3")).g, P(F2, "x+1"));
  EXPECT_EQ(gcd_ext(P(F2, "x"), P(F2, "x^4+x^3+1")).g, P(F2, "1"));
  EXPECT_THROW(gcd_ext(Poly(F2), Poly(F2)), PreconditionViolation);
}

TEST(PolyGcd, BezoutProperty) {
  std::mt19937_64 rng(12);
  for (int q : {2, 3, 4, 5, 7, 8, 9}) {
    const Field& F = Field::make(q);
    for (int i = 0; i < 50; ++i) {
      const Poly a = random_poly(F, static_cast<int>(rng() % 7), rng);
      const Poly b = random_poly(F, static_cast<int>(rng() % 7), rng);
      const GcdExt r = gcd_ext(a, b);
      EXPECT_TRUE(r.g.is_monic());
      EXPECT_EQ(r.u * a + r.v * b, r.g);
      EXPECT_TRUE(mod(a, r.g).is_zero());
      EXPECT_TRUE(mod(b, r.g).is_zero());
    }
  }
}

TEST(PolyInverse, Examples) {
  EXPECT_EQ(inverse_mod(P(F2, "x"), P(F2, "x^2+x+1")), P(F2, "x+1"));
  EXPECT_EQ(inverse_mod(P(F2, "1"), P(F2, "x^4+x^3+1")), P(F2, "1"));
  EXPECT_THROW(inverse_mod(P(F2, "x+1"), P(F2, "(x+1)^3")), NotCoprime);
}

TEST(PolyInverse, MultipliesToOne) {
  std::mt19937_64 rng(13);
  for (int q : {3, 4, 7}) {
    const Field& F = Field::make(q);
    for (int i = 0; i < 40; ++i) {
      const Poly f = random_poly(F, 2 + static_cast<int>(rng() % 5), rng).monic();
      const Poly g = random_poly(F, static_cast<int>(rng() % 6), rng);
      if (gcd_ext(g, f).g.degree() != 0) {
        EXPECT_THROW(inverse_mod(g, f), NotCoprime);
        continue;
      }
      const Poly h = inverse_mod(g, f);
      EXPECT_LT(h.degree(), f.degree());
      EXPECT_EQ(mulmod(g, h, f), P(F, "1"));
    }
  }
}

TEST(PolyClassify, Examples) {
  const PolyClass a = classify(P(F2, "x^3+x^2+x+1"));
  EXPECT_EQ(a.kind, PolyKind::Reducible);
  ASSERT_EQ(a.factorization.size(), 1u);
  EXPECT_EQ(a.factorization[0].poly, P(F2, "x+1"));
  EXPECT_EQ(a.factorization[0].multiplicity, 3);

  EXPECT_EQ(classify(P(F2, "x^4+x^3+1")).kind, PolyKind::Primitive);
  EXPECT_EQ(classify(P(F2, "x^4+x^3+x^2+x+1")).kind, PolyKind::IrreducibleNonPrimitive);

  const PolyClass c = classify(P(F2, "x^8+x^6+x^4+x^3+1"));
  EXPECT_EQ(c.kind, PolyKind::Reducible);
  ASSERT_EQ(c.factorization.size(), 2u);
  EXPECT_EQ(c.factorization[0].poly, P(F2, "x^2+x+1"));
  EXPECT_EQ(c.factorization[1].poly, P(F2, "x^6+x^5+x^4+x+1"));
}

TEST(PolyClassify, RepeatedFactor) {
  const PolyClass c = classify(P(F2, "x^11+x^9+x^7+x^6+1"));
  ASSERT_EQ(c.factorization.size(), 2u);
  EXPECT_EQ(c.factorization[0].poly, P(F2, "x^2+x+1"));
  EXPECT_EQ(c.factorization[0].multiplicity, 3);
  EXPECT_EQ(c.factorization[1].poly, P(F2, "x^5+x^4+x^2+x+1"));
}

long long phi(long long n) {
  long long r = n;
  for (long long p = 2; p * p <= n; ++p)
    if (n % p == 0) {
      while (n % p == 0) n /= p;
      r -= r / p;
    }
  if (n > 1) r -= r / n;
  return r;
}

// Number of monic irreducibles of degree n: (1/n) sum_{d | n} mu(d) q^(n/d).
long long necklace(long long q, int n) {
  auto mu = [](int d) {
    int r = 1;
    for (int p = 2; p * p <= d; ++p)
      if (d % p == 0) {
        d /= p;
        if (d % p == 0) return 0;
        r = -r;
      }
    return d > 1 ? -r : r;
  };
  long long s = 0;
  for (int d = 1; d <= n; ++d)
    if (n % d == 0) {
      long long pw = 1;
      for (int i = 0; i < n / d; ++i) pw *= q;
      s += mu(d) * pw;
    }
  return s / n;
}

TEST(PolyClassify, CountsMatchClosedForms) {
  for (int q : {2, 3, 4, 5}) {
    const Field& F = Field::make(q);
    for (int t = 2; t <= (q <= 3 ? 6 : 4); ++t) {
      long long prim = 0, irr = 0;
      for (const Poly& f : enumerate_polys(F, t, PolyFilter::Permissible)) {
        const PolyKind k = classify(f).kind;
        prim += k == PolyKind::Primitive;
        irr += k != PolyKind::Reducible;
      }
      long long qt = 1;
      for (int i = 0; i < t; ++i) qt *= q;
      EXPECT_EQ(prim, phi(qt - 1) / t) << "q=" << q << " t=" << t;
      EXPECT_EQ(irr, necklace(q, t)) << "q=" << q << " t=" << t;
      EXPECT_EQ(static_cast<long long>(monic_irreducibles(F, t).size()), necklace(q, t));
    }
  }
}

TEST(PolyClassify, FactorizationMultipliesBack) {
  for (int q : {2, 3, 4, 5}) {
    const Field& F = Field::make(q);
    const int max_t = q == 2 ? 8 : (q == 3 ? 5 : 4);
    for (int t = 1; t <= max_t; ++t) {
      std::vector<elem_t> c(t + 1, 0);
      c[t] = 1;
      // Odometer over all monic degree-t polynomials.
      while (true) {
        const Poly f(F, c);
        const PolyClass cls = classify(f);
        Poly prod = P(F, "1");
        for (const Factor& fa : cls.factorization) {
          EXPECT_TRUE(is_irreducible(fa.poly));
          EXPECT_TRUE(fa.poly.is_monic());
          for (int m = 0; m < fa.multiplicity; ++m) prod = prod * fa.poly;
        }
        ASSERT_EQ(prod, f) << to_string(f);
        if (cls.kind == PolyKind::Primitive) EXPECT_TRUE(is_irreducible(f));
        if (cls.kind != PolyKind::Reducible && t >= 2) EXPECT_EQ(gamma_set(f).gamma(), q) << to_string(f);
        int i = 0;
        while (i < t && ++c[i] == q) c[i++] = 0;
        if (i == t) break;
      }
    }
  }
}

TEST(PolyPermissible, Examples) {
  EXPECT_TRUE(is_permissible(P(F2, "x^3+x^2+x+1")));
  EXPECT_FALSE(is_permissible(P(F2, "x^2+x")));
  EXPECT_FALSE(is_permissible(P(F3, "2x^2+1")));
  EXPECT_FALSE(is_permissible(P(F3, "x+1")));
  EXPECT_EQ(*permissibility_issue(P(F3, "2x^2+1")), "polynomial is not monic");
  EXPECT_EQ(*permissibility_issue(P(F3, "x+1")), "degree must be at least 2");
  EXPECT_EQ(*permissibility_issue(P(F2, "x^2+x")), "constant term b_0 is zero");
}

TEST(PolyGamma, Examples) {
  const GammaSet a = gamma_set(P(F2, "(x+1)^3"));
  EXPECT_EQ(a.elements, (std::vector<elem_t>{0}));
  EXPECT_EQ(gamma_set(P(F2, "x^4+x^3+1")).elements, (std::vector<elem_t>{0, 1}));
  const Field& F7 = Field::make(7);
  for (const Poly& f : enumerate_polys(F7, 2, PolyFilter::Permissible))
    if (classify(f).kind == PolyKind::Primitive) EXPECT_EQ(gamma_set(f).gamma(), 7);
}

TEST(PolyGamma, ThreeWayEquivalence) {
  std::mt19937_64 rng(14);
  for (int q : {2, 3, 4, 5, 7, 8, 9}) {
    const Field& F = Field::make(q);
    for (int i = 0; i < 30; ++i) {
      Poly f = random_poly(F, 2 + static_cast<int>(rng() % 5), rng).monic();
      if (f.coeff(0) == 0) f = f + P(F, "1");
      const GammaSet g = gamma_set(f);
      EXPECT_EQ(g.elements.front(), 0);
      for (int b = 0; b < q; ++b) {
        const bool in = std::find(g.elements.begin(), g.elements.end(), b) != g.elements.end();
        EXPECT_EQ(in, f.eval(b) != 0);
        EXPECT_EQ(in, gcd_ext(Poly::linear(F, b), f).g == P(F, "1"));
      }
      EXPECT_TRUE(std::is_sorted(g.elements.begin(), g.elements.end()));
    }
  }
}

TEST(PolyEnumerate, Examples) {
  const auto two = enumerate_polys(F2, 2, PolyFilter::Rootless);
  ASSERT_EQ(two.size(), 1u);
  EXPECT_EQ(two[0], P(F2, "x^2+x+1"));
  EXPECT_EQ(enumerate_polys(F2, 8, PolyFilter::Rootless).size(), 64u);
  EXPECT_EQ(enumerate_polys(F3, 2, PolyFilter::Rootless).size(), 3u);
}

TEST(PolyEnumerate, RootlessCountsOverGf2) {
  const std::size_t expected[] = {1, 2, 4, 8, 16, 32, 64, 128, 256, 512};
  for (int t = 2; t <= 11; ++t) EXPECT_EQ(enumerate_polys(F2, t, PolyFilter::Rootless).size(), expected[t - 2]);
}

TEST(PolyEnumerate, OrderAndFilters) {
  for (int q : {3, 4}) {
    const Field& F = Field::make(q);
    const auto all = enumerate_polys(F, 3, PolyFilter::Permissible);
    EXPECT_EQ(all.size(), static_cast<std::size_t>(q * q * (q - 1)));
    for (std::size_t i = 1; i < all.size(); ++i) {
      // Lexicographic on (b_{t-1}, ..., b_0).
      std::vector<int> a, b;
      for (int k = 2; k >= 0; --k) {
        a.push_back(all[i - 1].coeff(k));
        b.push_back(all[i].coeff(k));
      }
      EXPECT_LT(a, b);
    }
    for (const Poly& f : enumerate_polys(F, 3, PolyFilter::Rootless)) {
      EXPECT_TRUE(is_permissible(f));
      EXPECT_EQ(gamma_set(f).gamma(), q);
    }
  }
}

TEST(PolyText, RoundTrips) {
  const Field& F4 = Field::make(4);
  EXPECT_EQ(to_string(P(F2, "x^4+x^3+1")), "x^4+x^3+1");
  EXPECT_EQ(to_string(P(F4, "x^2+w*x+w")), "x^2+w*x+w");
  EXPECT_EQ(to_string(P(F4, "x^2+(w+1)x+1")), "x^2+(w+1)*x+1");
  EXPECT_EQ(to_digits(P(F2, "x^4+x^3+1")), "2:4:11001");
  EXPECT_EQ(parse_poly(F2, "2:4:11001"), P(F2, "x^4+x^3+1"));
  EXPECT_EQ(to_string(Poly(F3)), "0");
  std::mt19937_64 rng(15);
  for (int q : {2, 3, 4, 5, 7, 8, 9}) {
    const Field& F = Field::make(q);
    for (int i = 0; i < 30; ++i) {
      const Poly f = random_poly(F, static_cast<int>(rng() % 7), rng);
      EXPECT_EQ(parse_poly(F, to_string(f)), f) << to_string(f);
      EXPECT_EQ(parse_digits(to_digits(f)), f) << to_digits(f);
    }
  }
}

TEST(PolyText, ParseErrors) {
  EXPECT_THROW(parse_poly(F2, "x^"), ParseError);
  EXPECT_THROW(parse_poly(F2, "x+w"), ParseError);
  EXPECT_THROW(parse_poly(F2, "x++1"), ParseError);
  EXPECT_THROW(parse_poly(F2, "(x+1"), ParseError);
  EXPECT_THROW(parse_poly(F2, "y"), ParseError);
  EXPECT_THROW(parse_poly(F2, "3:2:111"), ParseError);
  EXPECT_THROW(parse_digits("2:4:1100"), ParseError);
}

TEST(PolyText, IntegersReduceModP) {
  EXPECT_EQ(P(F3, "4x+5"), P(F3, "x+2"));
  EXPECT_EQ(P(F3, "x-1"), P(F3, "x+2"));
}

}  // namespace
}  // namespace ooa
