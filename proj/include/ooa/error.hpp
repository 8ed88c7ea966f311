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

#ifndef OOA_ERROR_HPP_
#define OOA_ERROR_HPP_

#include <cstdint>
#include <cstdio>
#include <stdexcept>
#include <string>

namespace ooa {

// Base of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class UnsupportedOrder : public Error {
 public:
  explicit UnsupportedOrder(int q)
      : Error("unsupported field order " + std::to_string(q) +
              " (supported: 2, 3, 4, 5, 7, 8, 9)") {}
};

class DivisionByZero : public Error {
 public:
  DivisionByZero() : Error("division by zero") {}
};

class MixedField : public Error {
 public:
  MixedField() : Error("operands belong to different fields") {}
};

class NotCoprime : public Error {
 public:
  using Error::Error;
};

class PreconditionViolation : public Error {
 public:
  using Error::Error;
};

class ZeroStream : public Error {
 public:
  ZeroStream() : Error("operation undefined on the zero stream") {}
};

class ParseError : public Error {
 public:
  using Error::Error;
};

class Impermissible : public Error {
 public:
  using Error::Error;
};

class BudgetExceeded : public Error {
 public:
  BudgetExceeded(double cells, double budget)
      : Error("star-discrepancy search over a grid of " + sci(cells) + " cells exceeded the budget of " +
              sci(budget) + " boxes"),
        cells_(cells) {}
  double cells() const { return cells_; }

 private:
  static std::string sci(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.4g", v);
    return buf;
  }
  double cells_;
};

}  // namespace ooa

#endif  // OOA_ERROR_HPP_
