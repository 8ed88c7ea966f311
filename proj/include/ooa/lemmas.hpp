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

// Randomized checks of the run-of-zeroes identities behind the construction.
//
// Each case draws a permissible f, a non-root beta, a stream r in G(f) with
// a run of exactly l zeroes at a random index n, and s = (L - beta)^-1 r.
// Then, with P = P_{l, L^n r}:
//
//   1  (s_n, ..., s_{n+l}) = s_n (1, beta, ..., beta^l)
//   2  s_n = 0  iff  s has a run of at least l+1 zeroes at n
//   3  (s_n f + P)(beta) = 0
//   4  P(beta) = 0  iff  s_n = 0
//   5  s_n = 0  implies  P = (x - beta) P_{l+1, L^n s}
//   6  with z the multiplicity of beta in P and r^(i) = (L - beta)^-i r:
//      r^(i) has a run of exactly l+i zeroes at n for i <= z, and
//      r^(z+1)_n != 0
//
// Cases are seeded individually from (seed, q, case index), so the report
// does not depend on the thread count.

#ifndef OOA_LEMMAS_HPP_
#define OOA_LEMMAS_HPP_

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "ooa/lfsr.hpp"

namespace ooa {

using RunPolyFn = RunPoly (*)(const Stream&, int, long long);

struct LemmaConfig {
  std::uint64_t seed = 1;
  int cases = 1000;  // per field
  std::vector<int> fields = {2, 3, 4, 5, 7, 8, 9};
  int min_degree = 2;
  int max_degree = 6;
  int jobs = 0;
  RunPolyFn run_poly = nullptr;  // null: the library's run_poly
};

struct LemmaFailure {
  int lemma;  // 1..6
  int q;
  std::string f;
  int beta;
  std::vector<int> state;  // s_n, ..., s_{n+t-1}
  long long n;
  int l;
  std::string detail;
};

struct LemmaTally {
  long long checked = 0;
  long long failed = 0;
};

struct LemmaReport {
  std::array<LemmaTally, 6> tally;
  long long cases = 0;
  std::vector<LemmaFailure> failures;  // first few, in case order

  bool ok() const;
};

LemmaReport run_lemma_suite(const LemmaConfig& config);

// Plain-text report, one line per lemma plus one per recorded failure.
std::string to_text(const LemmaReport& report);
std::string to_text(const LemmaFailure& failure);

}  // namespace ooa

#endif  // OOA_LEMMAS_HPP_
