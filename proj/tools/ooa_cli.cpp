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

// ooa: build, verify and survey generalized RUNS arrays.
//
// Exit codes: 0 success, 1 verification or property failure, 2 usage or
// input error, 3 star-discrepancy budget exceeded.

#include <unistd.h>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "ooa/construct.hpp"
#include "ooa/coverage.hpp"
#include "ooa/error.hpp"
#include "ooa/lemmas.hpp"
#include "ooa/nets.hpp"
#include "ooa/serialize.hpp"
#include "ooa/tables.hpp"

namespace {

constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitBudget = 3;
constexpr unsigned long long kMaxStates = 1ULL << 22;
constexpr int kMaxSurveyDegree = 16;

struct Options {
  int q = 2;
  std::string t_range;
  std::string poly;
  std::string filter = "rootless";
  std::string format = "text";
  std::string out;
  bool verify = false;
  bool net = false;
  std::uint64_t seed = 1;
  int cases = 1000;
  double budget = ooa::kDefaultDiscrepancyBudget;
  int jobs = 0;
  std::string which;
};

struct Range {
  int lo, hi;
};

Range parse_range(const std::string& text) {
  const auto dots = text.find("..");
  try {
    if (dots == std::string::npos) {
      const int t = std::stoi(text);
      return {t, t};
    }
    return {std::stoi(text.substr(0, dots)), std::stoi(text.substr(dots + 2))};
  } catch (const std::exception&) {
    throw ooa::ParseError("bad degree range '" + text + "' (use t or a..b)");
  }
}

void show_progress(std::size_t done, std::size_t total) {
  std::fprintf(stderr, "\r%zu/%zu polynomials", done, total);
  if (done == total) std::fputc('\n', stderr);
}

ooa::ProgressFn progress_fn() { return isatty(STDERR_FILENO) ? &show_progress : nullptr; }

class Output {
 public:
  explicit Output(const std::string& path) {
    if (!path.empty()) {
      file_.open(path);
      if (!file_) throw ooa::PreconditionViolation("cannot open output file " + path);
    }
  }
  std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }

 private:
  std::ofstream file_;
};

const ooa::Field& field_of(const Options& o) { return ooa::Field::make(o.q); }

ooa::Poly require_poly(const Options& o) {
  if (o.poly.empty()) throw ooa::ParseError("this command needs -f <polynomial>");
  ooa::Poly f = ooa::parse_poly(field_of(o), o.poly);
  if (auto why = ooa::permissibility_issue(f)) throw ooa::Impermissible("impermissible polynomial: " + *why);
  unsigned long long states = 1;
  for (int i = 0; i < f.degree(); ++i) states *= static_cast<unsigned long long>(o.q);
  if (states > kMaxStates)
    throw ooa::PreconditionViolation("q^t = " + std::to_string(states) + " exceeds the supported " +
                                     std::to_string(kMaxStates) + " states");
  return f;
}

Range require_range(const Options& o) {
  if (o.t_range.empty()) throw ooa::ParseError("this command needs -t <t> or -t <a>..<b>");
  const Range r = parse_range(o.t_range);
  if (r.lo < 2 || r.hi < r.lo || r.hi > kMaxSurveyDegree)
    throw ooa::PreconditionViolation("degree range must satisfy 2 <= a <= b <= " +
                                     std::to_string(kMaxSurveyDegree));
  return r;
}

std::string ooa_label(const ooa::OoaMatrix& m) {
  std::ostringstream os;
  os << "OOA(" << m.rows() << ";" << m.t() << "," << m.blocks() << "," << m.t() << "," << m.q() << ")";
  return os.str();
}

int cmd_construct(const Options& o, bool points_only) {
  const ooa::Poly f = require_poly(o);
  const ooa::OoaMatrix m = ooa::gr_construct(f);
  Output out(o.out);
  std::ostream& os = out.stream();
  const ooa::PointSet p = ooa::net_points(m);
  if (!points_only) ooa::write_matrix(os, m);
  if (points_only || o.net) ooa::write_points(os, p, m.q(), m.t());
  if (!o.verify) return 0;

  const bool rank_ok = ooa::verify_ooa(m, ooa::VerifyMode::Rank);
  const bool exh_ok = ooa::verify_ooa(m, ooa::VerifyMode::Exhaustive);
  bool ok = rank_ok && exh_ok;
  if (!points_only) os << ooa_label(m) << (ok ? " verified" : " NOT verified") << "\n";
  if (points_only || o.net) {
    const bool net_ok = ooa::verify_net(p, m.q(), m.t());
    os << "(0," << m.t() << "," << m.blocks() << ")-net in base " << m.q()
       << (net_ok ? " verified" : " NOT verified") << "\n";
    ok = ok && net_ok;
  }
  return ok ? 0 : kExitFail;
}

int cmd_table(const Options& o) {
  const Range r = require_range(o);
  field_of(o);
  ooa::TextTable tb;
  if (o.which == "comp")
    tb = ooa::comp_table(o.q, r.lo, r.hi, o.jobs, progress_fn());
  else if (o.which == "cov")
    tb = ooa::cov_table(o.q, r.lo, r.hi, o.jobs, progress_fn());
  else if (o.which == "poly")
    tb = ooa::poly_table(o.q, r.lo, r.hi, o.jobs, progress_fn());
  else
    tb = ooa::disc_table(o.q, r.lo, r.hi, o.budget, o.jobs);
  Output out(o.out);
  ooa::write_table(out.stream(), tb, ooa::parse_format(o.format));
  return 0;
}

int cmd_stats(const Options& o) {
  std::vector<ooa::CoverageReport> reports;
  if (!o.poly.empty()) {
    reports.push_back(ooa::coverage_stats(require_poly(o), o.jobs));
  } else {
    const Range r = require_range(o);
    ooa::PolyFilter filter;
    if (o.filter == "rootless")
      filter = ooa::PolyFilter::Rootless;
    else if (o.filter == "permissible")
      filter = ooa::PolyFilter::Permissible;
    else
      throw ooa::ParseError("unknown filter '" + o.filter + "'");
    for (int t = r.lo; t <= r.hi; ++t) {
      const auto polys = ooa::enumerate_polys(field_of(o), t, filter);
      for (std::size_t i = 0; i < polys.size(); ++i) {
        reports.push_back(ooa::coverage_stats(polys[i], o.jobs));
        if (auto pf = progress_fn()) pf(i + 1, polys.size());
      }
    }
  }
  const ooa::TableFormat fmt = ooa::parse_format(o.format);
  Output out(o.out);
  if (fmt == ooa::TableFormat::Json) {
    auto arr = nlohmann::ordered_json::array();
    for (const auto& r : reports) arr.push_back(ooa::to_json(r));
    out.stream() << arr.dump(2) << "\n";
  } else {
    ooa::write_table(out.stream(), ooa::stats_table(reports), fmt);
  }
  bool ok = true;
  for (const auto& r : reports) ok = ok && r.ooa_verified;
  return ok ? 0 : kExitFail;
}

int cmd_lemmas(const Options& o, bool q_given) {
  ooa::LemmaConfig cfg;
  cfg.seed = o.seed;
  cfg.cases = o.cases;
  cfg.jobs = o.jobs;
  if (q_given) {
    field_of(o);
    cfg.fields = {o.q};
  }
  const ooa::LemmaReport report = ooa::run_lemma_suite(cfg);
  Output out(o.out);
  out.stream() << ooa::to_text(report);
  return report.ok() ? 0 : kExitFail;
}

int cmd_discrepancy(const Options& o) {
  const ooa::TableFormat fmt = ooa::parse_format(o.format);
  Output out(o.out);
  if (o.poly.empty()) {
    const Range r = require_range(o);
    field_of(o);
    ooa::write_table(out.stream(), ooa::disc_table(o.q, r.lo, r.hi, o.budget, o.jobs), fmt);
    return 0;
  }
  const ooa::Poly f = require_poly(o);
  const ooa::PointSet p = ooa::net_points(ooa::gr_construct(f));
  const ooa::DiscrepancyEntry e{f, p.s(), p.size(), ooa::star_discrepancy(p, o.budget, o.jobs)};
  if (fmt == ooa::TableFormat::Json) {
    out.stream() << ooa::to_json(e).dump(2) << "\n";
  } else {
    ooa::TextTable tb{{"polynomial", "s", "N", "dstar_rational", "dstar_4dp"},
                      {{ooa::to_string(f), std::to_string(e.s), std::to_string(e.n), e.dstar.rational(),
                        e.dstar.fixed4()}}};
    ooa::write_table(out.stream(), tb, fmt);
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Generalized RUNS ordered orthogonal arrays: construction, coverage, nets and discrepancy"};
  app.require_subcommand(1);
  Options o;

  auto add_q = [&](CLI::App* c) { return c->add_option("-q", o.q, "Field order (2, 3, 4, 5, 7, 8, 9)"); };
  auto add_t = [&](CLI::App* c) { c->add_option("-t", o.t_range, "Degree t or range a..b"); };
  auto add_f = [&](CLI::App* c) {
    c->add_option("-f", o.poly, "Polynomial, e.g. \"x^4+x^3+1\", \"x^2+w*x+w\" or \"2:4:11001\"");
  };
  auto add_out = [&](CLI::App* c) { c->add_option("-o", o.out, "Write output to this file"); };
  auto add_format = [&](CLI::App* c) {
    c->add_option("--format", o.format, "csv, json or text")->check(CLI::IsMember({"csv", "json", "text"}));
  };
  auto add_jobs = [&](CLI::App* c) { c->add_option("--jobs", o.jobs, "Threads (default: all cores)"); };
  auto add_budget = [&](CLI::App* c) {
    c->add_option("--budget", o.budget, "Maximum boxes examined by the star-discrepancy search");
  };

  CLI::App* construct = app.add_subcommand("construct", "Build M(f) and dump it");
  add_q(construct);
  add_f(construct);
  add_out(construct);
  construct->add_flag("--verify", o.verify, "Check the OOA (and net) property");
  construct->add_flag("--net", o.net, "Also dump the point set");

  CLI::App* net = app.add_subcommand("net", "Dump the point set of M(f)");
  add_q(net);
  add_f(net);
  add_out(net);
  net->add_flag("--verify", o.verify, "Check the elementary-interval property");

  CLI::App* table = app.add_subcommand("table", "Survey tables: comp, cov, poly or disc");
  table->add_option("which", o.which, "comp, cov, poly or disc")
      ->required()
      ->check(CLI::IsMember({"comp", "cov", "poly", "disc"}));
  add_q(table);
  add_t(table);
  add_format(table);
  add_out(table);
  add_jobs(table);
  add_budget(table);

  CLI::App* stats = app.add_subcommand("stats", "Per-polynomial coverage reports");
  add_q(stats);
  add_t(stats);
  add_f(stats);
  stats->add_option("--filter", o.filter, "rootless or permissible")
      ->check(CLI::IsMember({"rootless", "permissible"}));
  add_format(stats);
  add_out(stats);
  add_jobs(stats);

  CLI::App* lemmas = app.add_subcommand("lemmas", "Randomized run-of-zeroes identity checks");
  CLI::Option* lemma_q = add_q(lemmas);
  lemmas->add_option("--seed", o.seed, "Random seed");
  lemmas->add_option("--cases", o.cases, "Cases per field")->check(CLI::NonNegativeNumber);
  add_out(lemmas);
  add_jobs(lemmas);

  CLI::App* disc = app.add_subcommand("discrepancy", "Exact star discrepancy of GR nets");
  add_q(disc);
  add_t(disc);
  add_f(disc);
  add_format(disc);
  add_out(disc);
  add_jobs(disc);
  add_budget(disc);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kExitUsage;
  }

  try {
    if (*construct) return cmd_construct(o, false);
    if (*net) return cmd_construct(o, true);
    if (*table) return cmd_table(o);
    if (*stats) return cmd_stats(o);
    if (*lemmas) return cmd_lemmas(o, lemma_q->count() > 0);
    if (*disc) return cmd_discrepancy(o);
  } catch (const ooa::BudgetExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBudget;
  } catch (const ooa::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
