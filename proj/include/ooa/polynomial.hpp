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

// Univariate polynomials over the small fields of finite_field.hpp, plus the
// predicates that decide which feedback polynomials the construction accepts.

#ifndef OOA_POLYNOMIAL_HPP_
#define OOA_POLYNOMIAL_HPP_

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "ooa/finite_field.hpp"

namespace ooa {

class Poly {
 public:
  // Zero polynomial.
  explicit Poly(const Field& field) : field_(&field) {}
  // coeffs[i] is the coefficient of x^i; trailing zeroes are dropped.
  Poly(const Field& field, std::vector<elem_t> coeffs);

  static Poly constant(const Field& field, elem_t c);
  static Poly monomial(const Field& field, elem_t c, int degree);
  static Poly x(const Field& field) { return monomial(field, 1, 1); }
  // x - beta
  static Poly linear(const Field& field, elem_t beta);

  const Field& field() const { return *field_; }
  // -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_monic() const { return !c_.empty() && c_.back() == 1; }
  // Coefficient of x^i, zero beyond the degree.
  elem_t coeff(int i) const {
    return i >= 0 && i < static_cast<int>(c_.size()) ? c_[i] : elem_t{0};
  }
  std::span<const elem_t> coeffs() const { return c_; }
  elem_t leading() const { return c_.empty() ? elem_t{0} : c_.back(); }

  elem_t eval(elem_t x) const;
  Poly monic() const;
  Poly scaled(elem_t c) const;

  friend Poly operator+(const Poly& a, const Poly& b);
  friend Poly operator-(const Poly& a, const Poly& b);
  friend Poly operator*(const Poly& a, const Poly& b);
  Poly operator-() const;

  friend bool operator==(const Poly& a, const Poly& b) {
    return a.field_ == b.field_ && a.c_ == b.c_;
  }

 private:
  void normalize();

  const Field* field_;
  std::vector<elem_t> c_;
};

struct DivMod {
  Poly quotient;
  Poly remainder;
};

// a = quotient * b + remainder, deg remainder < deg b. Throws DivisionByZero.
DivMod divmod(const Poly& a, const Poly& b);
Poly mod(const Poly& a, const Poly& m);
Poly mulmod(const Poly& a, const Poly& b, const Poly& m);
Poly powmod(const Poly& base, unsigned long long e, const Poly& m);

struct GcdExt {
  Poly g;  // monic gcd
  Poly u;
  Poly v;  // u*a + v*b == g
};

// Throws PreconditionViolation when both inputs are zero.
GcdExt gcd_ext(const Poly& a, const Poly& b);

// h with g*h == 1 (mod f) and deg h < deg f. Throws NotCoprime.
Poly inverse_mod(const Poly& g, const Poly& f);

// Multiplicity of beta as a root of f (0 if not a root). f must be nonzero.
int root_multiplicity(const Poly& f, elem_t beta);

enum class PolyKind { Primitive, IrreducibleNonPrimitive, Reducible };

struct Factor {
  Poly poly;  // monic irreducible
  int multiplicity;
};

struct PolyClass {
  PolyKind kind;
  // Monic irreducible factors in ascending (degree, coefficient) order. A
  // single entry (f, 1) for irreducible f.
  std::vector<Factor> factorization;
};

// One-letter code used in the tables: P, I or R.
char kind_code(PolyKind kind);

// Requires f monic with degree >= 1.
PolyClass classify(const Poly& f);
bool is_irreducible(const Poly& f);

// All monic irreducibles of the given degree over the field, in enumeration
// order. Cached; safe to call concurrently.
const std::vector<Poly>& monic_irreducibles(const Field& field, int degree);

// Distinct prime divisors of n, ascending.
std::vector<unsigned long long> prime_divisors(unsigned long long n);

// Monic, degree >= 2 and nonzero constant term.
bool is_permissible(const Poly& f);
// Human-readable reason f is not permissible, or nullopt if it is.
std::optional<std::string> permissibility_issue(const Poly& f);

// The elements beta with f(beta) != 0, ascending by index.
struct GammaSet {
  std::vector<elem_t> elements;
  int gamma() const { return static_cast<int>(elements.size()); }
};

GammaSet gamma_set(const Poly& f);

enum class PolyFilter { Permissible, Rootless };

// Every monic degree-t polynomial with nonzero constant term (and, for
// Rootless, no root in the field). Ordered lexicographically on
// (b_{t-1}, ..., b_0) by element index.
std::vector<Poly> enumerate_polys(const Field& field, int t, PolyFilter filter);

// Descending-power text form, e.g. "x^4+x^3+1" or "x^2+w*x+w".
std::string to_string(const Poly& f);
// Compact digit form "q:t:<b_t ... b_0>", e.g. "2:4:11001".
std::string to_digits(const Poly& f);
// Parses either form. Accepts +, -, *, ^, parentheses, implicit
// multiplication ("2x^2"), x and w. Throws ParseError.
Poly parse_poly(const Field& field, std::string_view text);
// Parses the digit form, taking the field from its prefix.
Poly parse_digits(std::string_view text);

}  // namespace ooa

#endif  // OOA_POLYNOMIAL_HPP_
