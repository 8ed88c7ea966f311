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

#include "ooa/polynomial.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>

#include "ooa/error.hpp"

namespace ooa {

Poly::Poly(const Field& field, std::vector<elem_t> coeffs)
    : field_(&field), c_(std::move(coeffs)) {
  for (elem_t c : c_)
    if (c >= field.q()) throw PreconditionViolation("coefficient out of range");
  normalize();
}

void Poly::normalize() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Poly Poly::constant(const Field& field, elem_t c) { return Poly(field, {c}); }

Poly Poly::monomial(const Field& field, elem_t c, int degree) {
  std::vector<elem_t> v(degree + 1, 0);
  v[degree] = c;
  return Poly(field, std::move(v));
}

Poly Poly::linear(const Field& field, elem_t beta) {
  return Poly(field, {field.neg(beta), 1});
}

elem_t Poly::eval(elem_t x) const {
  elem_t acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it)
    acc = field_->add(field_->mul(acc, x), *it);
  return acc;
}

Poly Poly::scaled(elem_t c) const {
  std::vector<elem_t> v(c_.size());
  for (std::size_t i = 0; i < c_.size(); ++i) v[i] = field_->mul(c_[i], c);
  return Poly(*field_, std::move(v));
}

Poly Poly::monic() const {
  if (c_.empty()) return *this;
  return scaled(field_->inv(c_.back()));
}

Poly operator+(const Poly& a, const Poly& b) {
  if (a.field_ != b.field_) throw MixedField();
  const Field& F = *a.field_;
  std::vector<elem_t> v(std::max(a.c_.size(), b.c_.size()), 0);
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = F.add(a.coeff(i), b.coeff(i));
  return Poly(F, std::move(v));
}

Poly operator-(const Poly& a, const Poly& b) {
  if (a.field_ != b.field_) throw MixedField();
  const Field& F = *a.field_;
  std::vector<elem_t> v(std::max(a.c_.size(), b.c_.size()), 0);
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = F.sub(a.coeff(i), b.coeff(i));
  return Poly(F, std::move(v));
}

Poly Poly::operator-() const {
  std::vector<elem_t> v(c_.size());
  for (std::size_t i = 0; i < c_.size(); ++i) v[i] = field_->neg(c_[i]);
  return Poly(*field_, std::move(v));
}

Poly operator*(const Poly& a, const Poly& b) {
  if (a.field_ != b.field_) throw MixedField();
  const Field& F = *a.field_;
  if (a.is_zero() || b.is_zero()) return Poly(F);
  std::vector<elem_t> v(a.c_.size() + b.c_.size() - 1, 0);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j)
      v[i + j] = F.add(v[i + j], F.mul(a.c_[i], b.c_[j]));
  }
  return Poly(F, std::move(v));
}

DivMod divmod(const Poly& a, const Poly& b) {
  if (&a.field() != &b.field()) throw MixedField();
  if (b.is_zero()) throw DivisionByZero();
  const Field& F = a.field();
  const int db = b.degree();
  if (a.degree() < db) return {Poly(F), a};

  std::vector<elem_t> rem(a.coeffs().begin(), a.coeffs().end());
  std::vector<elem_t> quo(a.degree() - db + 1, 0);
  const elem_t lead_inv = F.inv(b.leading());
  for (int d = a.degree(); d >= db; --d) {
    const elem_t c = F.mul(rem[d], lead_inv);
    if (c == 0) continue;
    quo[d - db] = c;
    for (int i = 0; i <= db; ++i) rem[d - db + i] = F.sub(rem[d - db + i], F.mul(c, b.coeff(i)));
  }
  rem.resize(db);
  return {Poly(F, std::move(quo)), Poly(F, std::move(rem))};
}

Poly mod(const Poly& a, const Poly& m) { return divmod(a, m).remainder; }

Poly mulmod(const Poly& a, const Poly& b, const Poly& m) { return mod(a * b, m); }

Poly powmod(const Poly& base, unsigned long long e, const Poly& m) {
  Poly result = mod(Poly::constant(base.field(), 1), m);
  Poly b = mod(base, m);
  while (e > 0) {
    if (e & 1) result = mulmod(result, b, m);
    b = mulmod(b, b, m);
    e >>= 1;
  }
  return result;
}

GcdExt gcd_ext(const Poly& a, const Poly& b) {
  const Field& F = a.field();
  if (a.is_zero() && b.is_zero()) throw PreconditionViolation("gcd of two zero polynomials");
  // Invariants: r0 = u0*a + v0*b, r1 = u1*a + v1*b.
  Poly r0 = a, r1 = b;
  Poly u0 = Poly::constant(F, 1), u1(F);
  Poly v0(F), v1 = Poly::constant(F, 1);
  while (!r1.is_zero()) {
    auto [quo, rem] = divmod(r0, r1);
    Poly u2 = u0 - quo * u1;
    Poly v2 = v0 - quo * v1;
    r0 = std::move(r1);
    r1 = std::move(rem);
    u0 = std::move(u1);
    u1 = std::move(u2);
    v0 = std::move(v1);
    v1 = std::move(v2);
  }
  const elem_t s = F.inv(r0.leading());
  return {r0.scaled(s), u0.scaled(s), v0.scaled(s)};
}

Poly inverse_mod(const Poly& g, const Poly& f) {
  if (f.degree() < 1) throw PreconditionViolation("modulus must have positive degree");
  auto [d, u, v] = gcd_ext(mod(g, f), f);
  if (d.degree() != 0) throw NotCoprime("polynomial is not invertible modulo f");
  return mod(u, f);
}

int root_multiplicity(const Poly& f, elem_t beta) {
  if (f.is_zero()) throw PreconditionViolation("root multiplicity of the zero polynomial");
  const Poly lin = Poly::linear(f.field(), beta);
  Poly cur = f;
  int z = 0;
  while (cur.degree() >= 1 && cur.eval(beta) == 0) {
    cur = divmod(cur, lin).quotient;
    ++z;
  }
  return z;
}

char kind_code(PolyKind kind) {
  switch (kind) {
    case PolyKind::Primitive: return 'P';
    case PolyKind::IrreducibleNonPrimitive: return 'I';
    case PolyKind::Reducible: return 'R';
  }
  return '?';
}

namespace {

// Enumeration order: degree, then lexicographic on (b_{d-1}, ..., b_0).
bool enum_less(const Poly& a, const Poly& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  for (int i = a.degree(); i >= 0; --i)
    if (a.coeff(i) != b.coeff(i)) return a.coeff(i) < b.coeff(i);
  return false;
}

// Monic polynomials of degree d with the lower coefficients running through
// all q^d combinations, b_{d-1} most significant. first_min bounds b_0.
template <typename Fn>
void for_each_monic(const Field& F, int d, elem_t b0_min, Fn&& fn) {
  std::vector<elem_t> c(d + 1, 0);
  c[d] = 1;
  c[0] = b0_min;
  if (b0_min >= F.q()) return;
  while (true) {
    fn(Poly(F, c));
    int i = 0;
    while (i < d) {
      ++c[i];
      if (c[i] < F.q()) break;
      c[i] = (i == 0) ? b0_min : 0;
      ++i;
    }
    if (i == d) break;
  }
}

bool has_factor_up_to(const Poly& f, int max_degree) {
  for (int d = 1; d <= max_degree; ++d)
    for (const Poly& g : monic_irreducibles(f.field(), d))
      if (mod(f, g).is_zero()) return true;
  return false;
}

}  // namespace

const std::vector<Poly>& monic_irreducibles(const Field& field, int degree) {
  static std::mutex mu;
  static std::map<std::pair<int, int>, std::unique_ptr<std::vector<Poly>>> cache;
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find({field.q(), degree});
    if (it != cache.end()) return *it->second;
  }
  auto out = std::make_unique<std::vector<Poly>>();
  if (degree == 1) {
    for_each_monic(field, 1, 0, [&](Poly g) { out->push_back(std::move(g)); });
  } else if (degree > 1) {
    // Sieve: every reducible candidate has an irreducible factor of degree
    // at most degree/2. Constant term zero means x divides.
    for_each_monic(field, degree, 1, [&](Poly g) {
      if (!has_factor_up_to(g, degree / 2)) out->push_back(std::move(g));
    });
  }
  std::lock_guard<std::mutex> lock(mu);
  auto [it, inserted] = cache.emplace(std::make_pair(field.q(), degree), std::move(out));
  return *it->second;
}

std::vector<unsigned long long> prime_divisors(unsigned long long n) {
  std::vector<unsigned long long> out;
  for (unsigned long long d = 2; d * d <= n; ++d) {
    if (n % d != 0) continue;
    out.push_back(d);
    while (n % d == 0) n /= d;
  }
  if (n > 1) out.push_back(n);
  return out;
}

bool is_irreducible(const Poly& f) {
  if (f.degree() < 1) return false;
  return !has_factor_up_to(f.monic(), f.degree() / 2);
}

PolyClass classify(const Poly& f) {
  if (!f.is_monic() || f.degree() < 1)
    throw PreconditionViolation("classify requires a monic polynomial of degree >= 1");
  const Field& F = f.field();

  std::vector<Factor> factors;
  Poly rest = f;
  for (int d = 1; 2 * d <= rest.degree(); ++d) {
    for (const Poly& g : monic_irreducibles(F, d)) {
      int mult = 0;
      while (rest.degree() >= d) {
        auto [quo, rem] = divmod(rest, g);
        if (!rem.is_zero()) break;
        rest = std::move(quo);
        ++mult;
      }
      if (mult > 0) factors.push_back({g, mult});
    }
  }
  if (rest.degree() >= 1) {
    auto same = std::find_if(factors.begin(), factors.end(),
                             [&](const Factor& fa) { return fa.poly == rest; });
    if (same != factors.end())
      ++same->multiplicity;
    else
      factors.push_back({rest, 1});
  }
  std::sort(factors.begin(), factors.end(),
            [](const Factor& a, const Factor& b) { return enum_less(a.poly, b.poly); });

  const bool irreducible = factors.size() == 1 && factors[0].multiplicity == 1;
  if (!irreducible) return {PolyKind::Reducible, std::move(factors)};
  if (f.coeff(0) == 0) return {PolyKind::IrreducibleNonPrimitive, std::move(factors)};

  unsigned long long order = 1;
  for (int i = 0; i < f.degree(); ++i) order *= static_cast<unsigned long long>(F.q());
  order -= 1;
  const Poly x = Poly::x(F);
  const Poly one = Poly::constant(F, 1);
  for (unsigned long long l : prime_divisors(order)) {
    if (powmod(x, order / l, f) == one) return {PolyKind::IrreducibleNonPrimitive, std::move(factors)};
  }
  return {PolyKind::Primitive, std::move(factors)};
}

std::optional<std::string> permissibility_issue(const Poly& f) {
  if (f.is_zero() || !f.is_monic()) return "polynomial is not monic";
  if (f.degree() < 2) return "degree must be at least 2";
  if (f.coeff(0) == 0) return "constant term b_0 is zero";
  return std::nullopt;
}

bool is_permissible(const Poly& f) { return !permissibility_issue(f).has_value(); }

GammaSet gamma_set(const Poly& f) {
  GammaSet out;
  for (int b = 0; b < f.field().q(); ++b)
    if (f.eval(static_cast<elem_t>(b)) != 0) out.elements.push_back(static_cast<elem_t>(b));
  return out;
}

std::vector<Poly> enumerate_polys(const Field& field, int t, PolyFilter filter) {
  if (t < 2) throw PreconditionViolation("degree must be at least 2");
  std::vector<Poly> out;
  for_each_monic(field, t, 1, [&](Poly g) {
    if (filter == PolyFilter::Rootless && gamma_set(g).gamma() != field.q()) return;
    out.push_back(std::move(g));
  });
  return out;
}

}  // namespace ooa
