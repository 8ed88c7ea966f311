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

#include "ooa/finite_field.hpp"

#include "ooa/error.hpp"

namespace ooa {

namespace {

std::vector<int> to_digits(int a, int p, int k) {
  std::vector<int> d(k);
  for (int i = 0; i < k; ++i) {
    d[i] = a % p;
    a /= p;
  }
  return d;
}

int from_digits(const std::vector<int>& d, int p) {
  int a = 0;
  for (int i = static_cast<int>(d.size()) - 1; i >= 0; --i) a = a * p + d[i];
  return a;
}

}  // namespace

Field::Field(int p, int k, std::vector<int> modulus)
    : p_(p), k_(k), q_(1), modulus_(std::move(modulus)) {
  for (int i = 0; i < k; ++i) q_ *= p;
  add_.resize(q_ * q_);
  mul_.resize(q_ * q_);
  neg_.resize(q_);
  inv_.assign(q_, 0);

  for (int a = 0; a < q_; ++a) {
    const auto da = to_digits(a, p, k);
    std::vector<int> dn(k);
    for (int i = 0; i < k; ++i) dn[i] = (p - da[i]) % p;
    neg_[a] = static_cast<elem_t>(from_digits(dn, p));

    for (int b = 0; b < q_; ++b) {
      const auto db = to_digits(b, p, k);
      std::vector<int> ds(k);
      for (int i = 0; i < k; ++i) ds[i] = (da[i] + db[i]) % p;
      add_[a * q_ + b] = static_cast<elem_t>(from_digits(ds, p));

      // Schoolbook product then reduction by the monic modulus.
      std::vector<int> prod(2 * k - 1, 0);
      for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) prod[i + j] = (prod[i + j] + da[i] * db[j]) % p;
      for (int deg = 2 * k - 2; deg >= k; --deg) {
        const int c = prod[deg];
        if (c == 0) continue;
        for (int i = 0; i <= k; ++i) {
          int& slot = prod[deg - k + i];
          slot = ((slot - c * modulus_[i]) % p + p) % p;
        }
      }
      prod.resize(k);
      mul_[a * q_ + b] = static_cast<elem_t>(from_digits(prod, p));
    }
  }
  for (int a = 1; a < q_; ++a)
    for (int b = 1; b < q_; ++b)
      if (mul_[a * q_ + b] == 1) inv_[a] = static_cast<elem_t>(b);
}

const Field& Field::make(int q) {
  // Function-local statics: initialized once, thread-safe, immutable after.
  static const Field f2(2, 1, {0, 1});
  static const Field f3(3, 1, {0, 1});
  static const Field f4(2, 2, {1, 1, 1});
  static const Field f5(5, 1, {0, 1});
  static const Field f7(7, 1, {0, 1});
  static const Field f8(2, 3, {1, 1, 0, 1});
  static const Field f9(3, 2, {1, 0, 1});
  switch (q) {
    case 2: return f2;
    case 3: return f3;
    case 4: return f4;
    case 5: return f5;
    case 7: return f7;
    case 8: return f8;
    case 9: return f9;
    default: throw UnsupportedOrder(q);
  }
}

elem_t Field::inv(elem_t a) const {
  if (a == 0) throw DivisionByZero();
  return inv_[a];
}

elem_t Field::pow(elem_t a, long long n) const {
  if (n < 0) {
    a = inv(a);
    n = -n;
  }
  elem_t result = 1;
  elem_t base = a;
  while (n > 0) {
    if (n & 1) result = mul(result, base);
    base = mul(base, base);
    n >>= 1;
  }
  return result;
}

int Field::digit(elem_t a, int i) const {
  int v = a;
  for (int j = 0; j < i; ++j) v /= p_;
  return v % p_;
}

std::vector<elem_t> Field::elements() const {
  std::vector<elem_t> out(q_);
  for (int i = 0; i < q_; ++i) out[i] = static_cast<elem_t>(i);
  return out;
}

FieldElement::FieldElement(const Field& field, elem_t index)
    : field_(&field), index_(index) {
  if (index >= field.q()) throw PreconditionViolation("element index out of range");
}

FieldElement FieldElement::inverse() const { return {*field_, field_->inv(index_)}; }

FieldElement FieldElement::pow(long long n) const {
  return {*field_, field_->pow(index_, n)};
}

FieldElement FieldElement::operator-() const { return {*field_, field_->neg(index_)}; }

FieldElement operator+(FieldElement a, FieldElement b) {
  if (a.field_ != b.field_) throw MixedField();
  return {*a.field_, a.field_->add(a.index_, b.index_)};
}

FieldElement operator-(FieldElement a, FieldElement b) {
  if (a.field_ != b.field_) throw MixedField();
  return {*a.field_, a.field_->sub(a.index_, b.index_)};
}

FieldElement operator*(FieldElement a, FieldElement b) {
  if (a.field_ != b.field_) throw MixedField();
  return {*a.field_, a.field_->mul(a.index_, b.index_)};
}

FieldElement operator/(FieldElement a, FieldElement b) {
  if (a.field_ != b.field_) throw MixedField();
  return {*a.field_, a.field_->div(a.index_, b.index_)};
}

std::vector<FieldElement> enumerate_elements(const Field& field) {
  std::vector<FieldElement> out;
  out.reserve(field.q());
  for (int i = 0; i < field.q(); ++i) out.emplace_back(field, static_cast<elem_t>(i));
  return out;
}

}  // namespace ooa
