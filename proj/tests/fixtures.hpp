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

// Reference arrays, transcribed digit by digit.

#ifndef OOA_TESTS_FIXTURES_HPP_
#define OOA_TESTS_FIXTURES_HPP_

#include <string>
#include <vector>

#include "ooa/construct.hpp"

namespace ooa::testing {

// OOA(8;3,2,3,2) from f = x^3+x^2+x+1 over GF(2).
inline const std::vector<std::string> kStrength3Rows = {
    "001110",
    "011011",
    "110001",
    "100100",
    "010101",
    "101010",
    "000000",
    "111111",
};

// OOA(16;4,3,4,2) from f = x^4+x^3+1 over GF(2).
inline const std::vector<std::string> kPrimitiveDegree4Rows = {
    "000110011100",
    "001101001010",
    "011100101111",
    "111100011000",
    "111010000100",
    "110111001110",
    "101011100001",
    "010111111001",
    "101101111101",
    "011010110011",
    "110001010010",
    "100110101011",
    "001011010110",
    "010001100101",
    "100000110111",
    "000000000000",
};

// Binary rows with `blocks` blocks of t columns.
inline OoaMatrix binary_matrix(const std::vector<std::string>& rows, int t, int blocks) {
  std::vector<elem_t> e;
  for (const auto& r : rows)
    for (char c : r) e.push_back(static_cast<elem_t>(c - '0'));
  return OoaMatrix(Field::make(2), t, blocks, std::move(e));
}

}  // namespace ooa::testing

#endif  // OOA_TESTS_FIXTURES_HPP_
