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

// Text formats. Every writer has a reader that inverts it.
//
// Matrix dump:
//   OOA q=<q> t=<t> gamma=<g> rows=<n> cols=<m>
//   <block> <pos>            one line per column
//   <e_0> <e_1> ... <e_m-1>  one line per row, element indices
//
// Point-set dump:
//   NET b=<q> m=<t> s=<s> N=<N>
//   <x_0> ... <x_s-1>        numerators over b^m, one line per point

#ifndef OOA_SERIALIZE_HPP_
#define OOA_SERIALIZE_HPP_

#include <iosfwd>
#include <nlohmann/json.hpp>
#include <string>

#include "ooa/coverage.hpp"
#include "ooa/nets.hpp"
#include "ooa/tables.hpp"

namespace ooa {

void write_matrix(std::ostream& os, const OoaMatrix& m);
OoaMatrix read_matrix(std::istream& is);

// `b` and `m` label the header; the denominator must equal b^m.
void write_points(std::ostream& os, const PointSet& p, int b, int m);
PointSet read_points(std::istream& is);

nlohmann::ordered_json to_json(const CoverageReport& r);
CoverageReport coverage_from_json(const nlohmann::json& j);

nlohmann::ordered_json to_json(const DiscrepancyEntry& e);
DiscrepancyEntry discrepancy_from_json(const nlohmann::json& j);

enum class TableFormat { Csv, Json, Text };
TableFormat parse_format(const std::string& name);

void write_table(std::ostream& os, const TextTable& tb, TableFormat fmt);
// Csv or Json only.
TextTable read_table(std::istream& is, TableFormat fmt);

}  // namespace ooa

#endif  // OOA_SERIALIZE_HPP_
