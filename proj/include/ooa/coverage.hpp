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

// Coverage statistics: how many of the C(cols, t) column t-sets of M(f) are
// covered, not just the left-justified ones.
//
// Two kernels count covered t-sets from the generator matrix:
//
//   count_covered_reference  serial; every t-subset in colex order, one
//                            Gaussian elimination each.
//   count_covered            OpenMP; depth-first over increasing column
//                            choices, tracking the annihilator of the chosen
//                            span so dependent prefixes are cut, with the last
//                            level answered from a precomputed table.
//
// They must agree exactly; the tests and the benchmark compare them.

#ifndef OOA_COVERAGE_HPP_
#define OOA_COVERAGE_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ooa/construct.hpp"
#include "ooa/polynomial.hpp"

namespace ooa {

std::uint64_t binomial(int n, int k);

std::uint64_t count_covered_reference(const GeneratorMatrix& g);
// jobs <= 0 uses the OpenMP default.
std::uint64_t count_covered(const GeneratorMatrix& g, int jobs = 0);

// Round num/den half-up to 4 decimals, e.g. 11/15 -> "0.7333".
std::string format_4dp(std::uint64_t num, std::uint64_t den);
std::string format_4dp(double value);

struct CoverageReport {
  Poly f;
  PolyClass cls;
  int gamma;
  int cols;
  std::uint64_t covered;
  std::uint64_t total;
  bool ooa_verified;

  double fraction() const { return static_cast<double>(covered) / static_cast<double>(total); }
  std::string pct() const { return format_4dp(covered, total); }
};

CoverageReport coverage_stats(const Poly& f, int jobs = 0);

// Statistics over a group of reports sharing the same total. Held as exact
// integer sums so min/max/avg round from rationals.
struct Aggregate {
  int count = 0;
  std::uint64_t total = 0;  // C(cols, t), common to every member
  std::uint64_t min_covered = 0;
  std::uint64_t max_covered = 0;
  std::uint64_t sum_covered = 0;
  unsigned __int128 sum_sq = 0;

  void add(std::uint64_t covered, std::uint64_t group_total);
  std::string min() const { return format_4dp(min_covered, total); }
  std::string max() const { return format_4dp(max_covered, total); }
  std::string avg() const { return format_4dp(sum_covered, total * static_cast<std::uint64_t>(count)); }
  // Sample standard deviation (n - 1 denominator); 0 for a single member.
  double sd() const;
  std::string sd_4dp() const { return format_4dp(sd()); }
};

enum class SurveyMode {
  Rootless,        // gamma == q, one group, plus the primitive-only subgroup
  WithRootsByGamma // permissible with gamma < q, grouped by gamma
};

struct SurveyGroup {
  int gamma;
  int cols;
  Aggregate all;
  Aggregate primitive;
  std::vector<std::size_t> members;  // indices into Survey::reports
};

struct Survey {
  int q;
  int t;
  SurveyMode mode;
  std::vector<CoverageReport> reports;  // enumeration order
  std::vector<SurveyGroup> groups;      // descending gamma

  // Reports of the group attaining its maximum coverage.
  std::vector<const CoverageReport*> argmax(const SurveyGroup& g) const;
};

// Optional progress callback: (done, total).
using ProgressFn = void (*)(std::size_t, std::size_t);

Survey batch_survey(int q, int t, SurveyMode mode, int jobs = 0, ProgressFn progress = nullptr);

}  // namespace ooa

#endif  // OOA_COVERAGE_HPP_
