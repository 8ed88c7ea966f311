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

// Text forms of polynomials: the descending-power form and the compact
// "q:t:digits" form.

#include <cctype>
#include <string>

#include "ooa/error.hpp"
#include "ooa/polynomial.hpp"

namespace ooa {

namespace {

std::string power_of(const char* var, int e) {
  if (e == 0) return "";
  if (e == 1) return var;
  return std::string(var) + "^" + std::to_string(e);
}

// Element as a polynomial in w for extension fields, a plain integer for
// prime fields.
std::string element_text(const Field& F, elem_t a) {
  if (F.k() == 1) return std::to_string(a);
  if (a == 0) return "0";
  std::string out;
  for (int i = F.k() - 1; i >= 0; --i) {
    const int d = F.digit(a, i);
    if (d == 0) continue;
    if (!out.empty()) out += "+";
    if (i == 0)
      out += std::to_string(d);
    else if (d == 1)
      out += power_of("w", i);
    else
      out += std::to_string(d) + "*" + power_of("w", i);
  }
  return out;
}

class Parser {
 public:
  Parser(const Field& F, std::string_view text) : F_(F), s_(text) {}

  Poly parse() {
    Poly p = expr();
    skip_ws();
    if (pos_ != s_.size()) fail("unexpected character");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(what + " at position " + std::to_string(pos_) + " in \"" + std::string(s_) +
                     "\"");
  }

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  char peek() {
    skip_ws();
    return pos_ < s_.size() ? s_[pos_] : '\0';
  }

  bool starts_factor(char c) const {
    return std::isdigit(static_cast<unsigned char>(c)) || c == 'x' || c == 'w' || c == '(';
  }

  Poly expr() {
    Poly acc(F_);
    bool negate = false;
    char c = peek();
    if (c == '+' || c == '-') {
      negate = c == '-';
      ++pos_;
    }
    acc = term();
    if (negate) acc = -acc;
    while (true) {
      c = peek();
      if (c != '+' && c != '-') break;
      ++pos_;
      Poly rhs = term();
      acc = (c == '+') ? acc + rhs : acc - rhs;
    }
    return acc;
  }

  Poly term() {
    Poly acc = factor();
    while (true) {
      char c = peek();
      if (c == '*') {
        ++pos_;
        acc = acc * factor();
      } else if (starts_factor(c)) {
        acc = acc * factor();
      } else {
        break;
      }
    }
    return acc;
  }

  Poly factor() {
    Poly base = primary();
    if (peek() == '^') {
      ++pos_;
      skip_ws();
      const long long e = integer();
      if (e > 4096) fail("exponent too large");
      Poly r = Poly::constant(F_, 1);
      for (long long i = 0; i < e; ++i) r = r * base;
      return r;
    }
    return base;
  }

  long long integer() {
    if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_]))) fail("expected integer");
    long long v = 0;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      v = v * 10 + (s_[pos_] - '0');
      if (v > 1'000'000'000) fail("integer too large");
      ++pos_;
    }
    return v;
  }

  Poly primary() {
    const char c = peek();
    if (c == 'x') {
      ++pos_;
      return Poly::x(F_);
    }
    if (c == 'w') {
      if (F_.k() == 1) fail("'w' is only defined for extension fields");
      ++pos_;
      return Poly::constant(F_, static_cast<elem_t>(F_.p()));
    }
    if (c == '(') {
      ++pos_;
      Poly inner = expr();
      if (peek() != ')') fail("expected ')'");
      ++pos_;
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      // Integers live in the prime subfield, whose elements are 0..p-1.
      const long long v = integer() % F_.p();
      return Poly::constant(F_, static_cast<elem_t>(v));
    }
    fail("expected a term");
  }

  const Field& F_;
  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

std::string to_string(const Poly& f) {
  if (f.is_zero()) return "0";
  const Field& F = f.field();
  std::string out;
  for (int i = f.degree(); i >= 0; --i) {
    const elem_t c = f.coeff(i);
    if (c == 0) continue;
    if (!out.empty()) out += "+";
    const std::string ce = element_text(F, c);
    if (i == 0) {
      out += ce;
    } else if (c == 1) {
      out += power_of("x", i);
    } else if (ce.find('+') == std::string::npos) {
      out += ce + "*" + power_of("x", i);
    } else {
      out += "(" + ce + ")*" + power_of("x", i);
    }
  }
  return out;
}

std::string to_digits(const Poly& f) {
  std::string out = std::to_string(f.field().q()) + ":" + std::to_string(f.degree()) + ":";
  for (int i = f.degree(); i >= 0; --i) out += static_cast<char>('0' + f.coeff(i));
  return out;
}

Poly parse_digits(std::string_view text) {
  const auto c1 = text.find(':');
  const auto c2 = c1 == std::string_view::npos ? c1 : text.find(':', c1 + 1);
  if (c2 == std::string_view::npos) throw ParseError("digit form must be q:t:digits");
  int q = 0, t = 0;
  try {
    q = std::stoi(std::string(text.substr(0, c1)));
    t = std::stoi(std::string(text.substr(c1 + 1, c2 - c1 - 1)));
  } catch (const std::exception&) {
    throw ParseError("bad q or t in \"" + std::string(text) + "\"");
  }
  const Field& F = Field::make(q);
  std::vector<elem_t> desc;
  for (char ch : text.substr(c2 + 1)) {
    if (std::isspace(static_cast<unsigned char>(ch))) continue;
    if (!std::isdigit(static_cast<unsigned char>(ch)) || ch - '0' >= q)
      throw ParseError("bad coefficient digit in \"" + std::string(text) + "\"");
    desc.push_back(static_cast<elem_t>(ch - '0'));
  }
  if (t < 0 || static_cast<int>(desc.size()) != t + 1)
    throw ParseError("expected " + std::to_string(t + 1) + " digits in \"" + std::string(text) + "\"");
  if (desc.front() == 0) throw ParseError("leading digit must be nonzero");
  return Poly(F, std::vector<elem_t>(desc.rbegin(), desc.rend()));
}

Poly parse_poly(const Field& field, std::string_view text) {
  if (text.find(':') != std::string_view::npos) {
    Poly p = parse_digits(text);
    if (&p.field() != &field) throw ParseError("digit form names a different field");
    return p;
  }
  return Parser(field, text).parse();
}

}  // namespace ooa
