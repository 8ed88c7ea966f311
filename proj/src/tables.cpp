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

#include "ooa/tables.hpp"

#include "ooa/error.hpp"

namespace ooa {

namespace {

void check_range(int t_lo, int t_hi) {
  if (t_lo < 2 || t_hi < t_lo) throw PreconditionViolation("degree range must satisfy 2 <= lo <= hi");
}

std::vector<std::string> aggregate_cells(const Aggregate& a) {
  if (a.count == 0) return {"0", "-", "-", "-", "-"};
  return {std::to_string(a.count), a.min(), a.max(), a.avg(), a.sd_4dp()};
}

}  // namespace

std::string factorization_text(const PolyClass& cls) {
  if (cls.kind != PolyKind::Reducible) return "";
  std::string out;
  for (const Factor& f : cls.factorization) {
    out += "(" + to_string(f.poly) + ")";
    if (f.multiplicity > 1) out += "^" + std::to_string(f.multiplicity);
  }
  return out;
}

TextTable comp_table(int q, int t_lo, int t_hi, int jobs, ProgressFn progress) {
  check_range(t_lo, t_hi);
  TextTable tb{{"t", "cols", "#", "GR_min", "GR_max", "GR_avg", "GR_SD", "#R", "R_min", "R_max", "R_avg",
                "R_SD"},
               {}};
  for (int t = t_lo; t <= t_hi; ++t) {
    const Survey s = batch_survey(q, t, SurveyMode::Rootless, jobs, progress);
    std::vector<std::string> row{std::to_string(t), std::to_string(t * (q + 1))};
    if (s.groups.empty()) {
      for (const char* c : {"0", "-", "-", "-", "-", "0", "-", "-", "-", "-"}) row.emplace_back(c);
    } else {
      for (auto& c : aggregate_cells(s.groups[0].all)) row.push_back(std::move(c));
      for (auto& c : aggregate_cells(s.groups[0].primitive)) row.push_back(std::move(c));
    }
    tb.rows.push_back(std::move(row));
  }
  return tb;
}

TextTable cov_table(int q, int t_lo, int t_hi, int jobs, ProgressFn progress) {
  check_range(t_lo, t_hi);
  TextTable tb{{"t", "gamma", "cols", "#", "GR_min", "GR_max", "GR_avg", "GR_SD"}, {}};
  for (int t = t_lo; t <= t_hi; ++t) {
    const Survey s = batch_survey(q, t, SurveyMode::WithRootsByGamma, jobs, progress);
    for (const SurveyGroup& g : s.groups) {
      std::vector<std::string> row{std::to_string(t), std::to_string(g.gamma), std::to_string(g.cols)};
      for (auto& c : aggregate_cells(g.all)) row.push_back(std::move(c));
      tb.rows.push_back(std::move(row));
    }
  }
  return tb;
}

TextTable poly_table(int q, int t_lo, int t_hi, int jobs, ProgressFn progress) {
  check_range(t_lo, t_hi);
  TextTable tb{{"t", "cols", "pct", "polynomial", "class", "factorization"}, {}};
  for (int t = t_lo; t <= t_hi; ++t) {
    const Survey s = batch_survey(q, t, SurveyMode::Rootless, jobs, progress);
    if (s.groups.empty()) continue;
    for (const CoverageReport* r : s.argmax(s.groups[0]))
      tb.rows.push_back({std::to_string(t), std::to_string(r->cols), r->pct(), to_string(r->f),
                         std::string(1, kind_code(r->cls.kind)), factorization_text(r->cls)});
  }
  return tb;
}

TextTable disc_table(int q, int t_lo, int t_hi, double budget, int jobs) {
  check_range(t_lo, t_hi);
  TextTable tb{{"q", "t", "s", "N", "polynomial", "dstar_rational", "dstar_4dp", "best"}, {}};
  for (int t = t_lo; t <= t_hi; ++t) {
    const DiscrepancySurvey ds = discrepancy_survey(q, t, budget, jobs);
    for (std::size_t i = 0; i < ds.entries.size(); ++i) {
      const DiscrepancyEntry& e = ds.entries[i];
      tb.rows.push_back({std::to_string(q), std::to_string(t), std::to_string(e.s), std::to_string(e.n),
                         to_string(e.f), e.dstar.rational(), e.dstar.fixed4(), i == ds.best ? "1" : "0"});
    }
  }
  return tb;
}

TextTable stats_table(const std::vector<CoverageReport>& reports) {
  TextTable tb{{"polynomial", "class", "factorization", "gamma", "cols", "covered", "total", "pct",
                "ooa_verified"},
               {}};
  for (const CoverageReport& r : reports)
    tb.rows.push_back({to_string(r.f), std::string(1, kind_code(r.cls.kind)), factorization_text(r.cls),
                       std::to_string(r.gamma), std::to_string(r.cols), std::to_string(r.covered),
                       std::to_string(r.total), r.pct(), r.ooa_verified ? "1" : "0"});
  return tb;
}

}  // namespace ooa
