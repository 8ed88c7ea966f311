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

// Table-driven arithmetic for the small fields GF(q), q in {2,3,4,5,7,8,9}.
//
// Elements are identified by an index in [0, q). For an extension field
// GF(p^k) the index is the element's coefficient vector over GF(p) read as a
// base-p integer, constant term least significant. The moduli are fixed:
//
//   GF(4) = GF(2)[w]/(w^2 + w + 1)
//   GF(8) = GF(2)[w]/(w^3 + w + 1)
//   GF(9) = GF(3)[w]/(w^2 + 1)
//
// so `w` (the residue class of the indeterminate) always has index p.
// Index 0 is zero and index 1 is one in every field.

#ifndef OOA_FINITE_FIELD_HPP_
#define OOA_FINITE_FIELD_HPP_

#include <array>
#include <cstdint>
#include <span>
#include <vector>

namespace ooa {

// Storage type for an element index. All supported q fit in a byte.
using elem_t = std::uint8_t;

inline constexpr std::array<int, 7> kSupportedOrders = {2, 3, 4, 5, 7, 8, 9};

class Field {
 public:
  // Returns the canonical field of order q. Throws UnsupportedOrder.
  // The returned reference is valid for the lifetime of the program.
  static const Field& make(int q);

  int p() const { return p_; }
  int k() const { return k_; }
  int q() const { return q_; }

  // Coefficients over GF(p), constant term first, length k + 1. For prime
  // fields this is the identity modulus x.
  std::span<const int> modulus() const { return modulus_; }

  elem_t add(elem_t a, elem_t b) const { return add_[a * q_ + b]; }
  elem_t sub(elem_t a, elem_t b) const { return add_[a * q_ + neg_[b]]; }
  elem_t mul(elem_t a, elem_t b) const { return mul_[a * q_ + b]; }
  elem_t neg(elem_t a) const { return neg_[a]; }
  // Throws DivisionByZero for a == 0.
  elem_t inv(elem_t a) const;
  elem_t div(elem_t a, elem_t b) const { return mul(a, inv(b)); }
  // Negative exponents invert first; 0^0 == 1.
  elem_t pow(elem_t a, long long n) const;

  // Base-p digit i of the element (coefficient of w^i).
  int digit(elem_t a, int i) const;

  // [0, 1, ..., q-1]
  std::vector<elem_t> elements() const;

  // Row-major q*q tables, for kernels that want raw access.
  std::span<const elem_t> add_table() const { return add_; }
  std::span<const elem_t> mul_table() const { return mul_; }

  bool operator==(const Field& o) const { return this == &o; }

 private:
  Field(int p, int k, std::vector<int> modulus);

  int p_;
  int k_;
  int q_;
  std::vector<int> modulus_;
  std::vector<elem_t> add_;
  std::vector<elem_t> mul_;
  std::vector<elem_t> neg_;
  std::vector<elem_t> inv_;
};

// Value-semantic element bound to its field. Arithmetic between elements of
// different fields throws MixedField.
class FieldElement {
 public:
  FieldElement(const Field& field, elem_t index);

  const Field& field() const { return *field_; }
  elem_t index() const { return index_; }
  bool is_zero() const { return index_ == 0; }

  FieldElement inverse() const;
  FieldElement pow(long long n) const;

  friend FieldElement operator+(FieldElement a, FieldElement b);
  friend FieldElement operator-(FieldElement a, FieldElement b);
  friend FieldElement operator*(FieldElement a, FieldElement b);
  friend FieldElement operator/(FieldElement a, FieldElement b);
  FieldElement operator-() const;

  friend bool operator==(FieldElement a, FieldElement b) {
    return a.field_ == b.field_ && a.index_ == b.index_;
  }

 private:
  const Field* field_;
  elem_t index_;
};

// Every element of the field, in index order.
std::vector<FieldElement> enumerate_elements(const Field& field);

}  // namespace ooa

#endif  // OOA_FINITE_FIELD_HPP_
