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

// Digital (0, t, gamma+1)-nets from GR arrays, the elementary-interval check,
// and exact star discrepancy.
//
// Coordinates are exact: every point of a PointSet is a vector of integer
// numerators over one common denominator.

#ifndef OOA_NETS_HPP_
#define OOA_NETS_HPP_

#include <cstdint>
#include <string>
#include <vector>

#include "ooa/construct.hpp"
#include "ooa/polynomial.hpp"

namespace ooa {

class PointSet {
 public:
  // `numerators` is row-major, `s` per point, each in [0, denom).
  PointSet(int s, std::uint64_t denom, std::vector<std::uint64_t> numerators);

  int s() const { return s_; }
  std::size_t size() const { return num_.size() / static_cast<std::size_t>(s_); }
  std::uint64_t denom() const { return denom_; }
  std::uint64_t at(std::size_t point, int dim) const { return num_[point * s_ + dim]; }
  const std::vector<std::uint64_t>& numerators() const { return num_; }

  friend bool operator==(const PointSet&, const PointSet&) = default;

 private:
  int s_;
  std::uint64_t denom_;
  std::vector<std::uint64_t> num_;
};

// One point per row; the block-b coordinate of a row is
// sum_j digit(R[b, j]) q^{t-j} over q^t, digit being the element index.
PointSet net_points(const OoaMatrix& m);

// Box prod_i [a_i / b^{d_i}, (a_i + 1) / b^{d_i}).
struct ElementaryInterval {
  int b;
  std::vector<int> d;
  std::vector<std::uint64_t> a;

  int volume_exponent() const;  // volume is b^-volume_exponent()
  bool contains(const PointSet& p, std::size_t point) const;
};

std::size_t count_in(const PointSet& p, const ElementaryInterval& e);

// True iff every elementary interval in base b of volume b^-m holds exactly
// one point. Requires |P| = b^m.
bool verify_net(const PointSet& p, int b, int m);

// Exact reduced fraction num / den.
struct Discrepancy {
  unsigned __int128 num = 0;
  unsigned __int128 den = 1;

  double value() const;
  std::string rational() const;  // "num/den"
  std::string fixed4() const;    // half-up to 4 decimals
  friend bool operator==(const Discrepancy&, const Discrepancy&) = default;
};

constexpr double kDefaultDiscrepancyBudget = 1e10;

// Size of the critical grid prod_i (distinct coordinates in dim i + 1).
double discrepancy_grid_cells(const PointSet& p);

// Serial reference: evaluates every cell of the critical grid by scanning
// all points. Throws BudgetExceeded when the grid exceeds `budget`.
Discrepancy star_discrepancy_reference(const PointSet& p, double budget = kDefaultDiscrepancyBudget);

// OpenMP branch and bound over the same grid. Throws BudgetExceeded once the
// number of visited boxes passes `budget`.
Discrepancy star_discrepancy(const PointSet& p, double budget = kDefaultDiscrepancyBudget, int jobs = 0);

struct DiscrepancyEntry {
  Poly f;
  int s;
  std::size_t n;
  Discrepancy dstar;
};

struct DiscrepancySurvey {
  int q;
  int t;
  std::vector<DiscrepancyEntry> entries;  // enumeration order
  std::size_t best;                       // index of the smallest D*
};

// D* of the net of every rootless f of degree t over GF(q).
DiscrepancySurvey discrepancy_survey(int q, int t, double budget = kDefaultDiscrepancyBudget,
                                     int jobs = 0);

}  // namespace ooa

#endif  // OOA_NETS_HPP_
