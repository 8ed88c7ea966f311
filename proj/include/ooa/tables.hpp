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

// Report tables as rows of strings, ready for CSV, JSON or aligned text.
//
//   comp  per t: rootless count and GR min/max/avg/SD, then the same over
//         primitive polynomials only (the RUNS columns)
//   cov   per t and gamma < q: with-root polynomials grouped by column count
//   poly  per t: the rootless polynomials attaining maximum coverage
//   disc  per rootless polynomial: exact D* of its net, plus the minimum

#ifndef OOA_TABLES_HPP_
#define OOA_TABLES_HPP_

#include <string>
#include <vector>

#include "ooa/coverage.hpp"
#include "ooa/nets.hpp"

namespace ooa {

struct TextTable {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;

  friend bool operator==(const TextTable&, const TextTable&) = default;
};

TextTable comp_table(int q, int t_lo, int t_hi, int jobs = 0, ProgressFn progress = nullptr);
TextTable cov_table(int q, int t_lo, int t_hi, int jobs = 0, ProgressFn progress = nullptr);
TextTable poly_table(int q, int t_lo, int t_hi, int jobs = 0, ProgressFn progress = nullptr);
TextTable disc_table(int q, int t_lo, int t_hi, double budget = kDefaultDiscrepancyBudget,
                     int jobs = 0);

// One row per polynomial: the coverage report fields.
TextTable stats_table(const std::vector<CoverageReport>& reports);

// Factorization as "(x^2+x+1)(x^6+x^5+x^4+x+1)", with "^k" for repeated
// factors; empty for irreducible polynomials.
std::string factorization_text(const PolyClass& cls);

}  // namespace ooa

#endif  // OOA_TABLES_HPP_
