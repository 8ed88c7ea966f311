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

#include "ooa/lemmas.hpp"

#include <omp.h>

#include <random>
#include <sstream>

#include "ooa/error.hpp"

namespace ooa {

namespace {

constexpr std::size_t kMaxRecordedFailures = 8;

std::uint64_t splitmix(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

struct CaseResult {
  std::array<bool, 6> checked{};
  std::array<bool, 6> failed{};
  std::vector<LemmaFailure> failures;
};

class Case {
 public:
  Case(const Field& F, std::uint64_t seed, int min_t, int max_t, RunPolyFn rp)
      : F_(F), rng_(seed), rp_(rp) {
    const int q = F.q();
    t_ = pick(min_t, max_t);
    std::vector<elem_t> c(t_ + 1);
    c[t_] = 1;
    c[0] = static_cast<elem_t>(pick(1, q - 1));
    for (int i = 1; i < t_; ++i) c[i] = static_cast<elem_t>(pick(0, q - 1));
    f_ = Poly(F, std::move(c));
    const auto gamma = gamma_set(f_).elements;
    beta_ = gamma[pick(0, static_cast<int>(gamma.size()) - 1)];

    // r starts (at index n) with exactly l zeroes, then a nonzero entry.
    l_ = pick(0, t_ - 1);
    std::vector<elem_t> state(t_, 0);
    state[l_] = static_cast<elem_t>(pick(1, q - 1));
    for (int i = l_ + 1; i < t_; ++i) state[i] = static_cast<elem_t>(pick(0, q - 1));
    const Stream r0 = stream_from_state(f_, state);
    n_ = pick(0, static_cast<int>(std::min<long long>(r0.period() * 2, 1 << 20))) - r0.period();
    r_ = shift(r0, -n_);
    s_ = affine_inverse(r_, FieldElement(F, beta_));
  }

  CaseResult check() const {
    CaseResult out;
    const elem_t sn = s_[n_];
    const RunPoly P = rp_(r_, l_, n_);

    // 1
    {
      bool ok = true;
      elem_t bp = 1;
      for (int i = 0; i <= l_; ++i) {
        ok = ok && s_[n_ + i] == F_.mul(bp, sn);
        bp = F_.mul(bp, beta_);
      }
      record(out, 1, ok, "s window is not a geometric progression in beta");
    }
    // 2
    {
      bool run = true;
      for (int i = 0; i <= l_; ++i) run = run && s_[n_ + i] == 0;
      record(out, 2, (sn == 0) == run, "s_n = 0 disagrees with a run of l+1 zeroes in s");
    }
    // 3
    {
      const Poly combo = f_.scaled(sn) + P.poly;
      record(out, 3, combo.eval(beta_) == 0, "beta is not a root of s_n f + P");
    }
    // 4
    record(out, 4, (P.poly.eval(beta_) == 0) == (sn == 0), "P(beta) = 0 disagrees with s_n = 0");
    // 5
    if (sn == 0) {
      bool ok;
      std::string why = "P != (x - beta) P_{l+1, s}";
      try {
        const RunPoly Ps = rp_(s_, l_ + 1, n_);
        ok = P.poly == Poly::linear(F_, beta_) * Ps.poly;
      } catch (const Error& e) {
        ok = false;
        why = e.what();
      }
      record(out, 5, ok, why);
    }
    // 6
    {
      const int z = root_multiplicity(P.poly, beta_);
      Stream cur = r_;
      bool ok = true;
      std::string why;
      for (int i = 0; i <= z && ok; ++i) {
        if (i > 0) cur = affine_inverse(cur, FieldElement(F_, beta_));
        if (run_at(cur, n_) != l_ + i) {
          ok = false;
          why = "r^(" + std::to_string(i) + ") has run " + std::to_string(run_at(cur, n_)) +
                " instead of " + std::to_string(l_ + i);
        }
      }
      if (ok && affine_inverse(cur, FieldElement(F_, beta_))[n_] == 0) {
        ok = false;
        why = "r^(z+1) vanishes at n (z = " + std::to_string(z) + ")";
      }
      record(out, 6, ok, why);
    }
    return out;
  }

 private:
  int pick(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }

  void record(CaseResult& out, int lemma, bool ok, const std::string& why) const {
    out.checked[lemma - 1] = true;
    if (ok) return;
    out.failed[lemma - 1] = true;
    LemmaFailure fl{lemma, F_.q(), to_string(f_), beta_, {}, n_, l_, why};
    for (int i = 0; i < t_; ++i) fl.state.push_back(s_[n_ + i]);
    out.failures.push_back(std::move(fl));
  }

  const Field& F_;
  std::mt19937_64 rng_;
  RunPolyFn rp_;
  int t_ = 0;
  Poly f_{Field::make(2), {}};
  elem_t beta_ = 0;
  int l_ = 0;
  long long n_ = 0;
  Stream r_{f_, {0}};
  Stream s_{f_, {0}};
};

}  // namespace

bool LemmaReport::ok() const {
  for (const auto& t : tally)
    if (t.failed != 0) return false;
  return true;
}

LemmaReport run_lemma_suite(const LemmaConfig& config) {
  if (config.min_degree < 2 || config.max_degree < config.min_degree)
    throw PreconditionViolation("lemma suite needs 2 <= min_degree <= max_degree");
  if (config.cases < 0) throw PreconditionViolation("case count must be nonnegative");
  const RunPolyFn rp = config.run_poly ? config.run_poly : &run_poly;

  LemmaReport report;
  for (int q : config.fields) {
    const Field& F = Field::make(q);
    std::vector<CaseResult> results(static_cast<std::size_t>(config.cases));
    const std::uint64_t field_seed = splitmix(splitmix(config.seed) ^ static_cast<std::uint64_t>(q));
#pragma omp parallel for schedule(dynamic, 4) num_threads(config.jobs > 0 ? config.jobs : omp_get_max_threads())
    for (int c = 0; c < config.cases; ++c) {
      const Case instance(F, splitmix(field_seed + static_cast<std::uint64_t>(c)), config.min_degree,
                          config.max_degree, rp);
      results[c] = instance.check();
    }
    for (const CaseResult& r : results) {
      ++report.cases;
      for (int i = 0; i < 6; ++i) {
        report.tally[i].checked += r.checked[i];
        report.tally[i].failed += r.failed[i];
      }
      for (const LemmaFailure& fl : r.failures)
        if (report.failures.size() < kMaxRecordedFailures) report.failures.push_back(fl);
    }
  }
  return report;
}

std::string to_text(const LemmaFailure& fl) {
  std::ostringstream os;
  os << "lemma " << fl.lemma << " failed: q=" << fl.q << " f=" << fl.f << " beta=" << fl.beta
     << " state=";
  for (int v : fl.state) os << v;
  os << " n=" << fl.n << " l=" << fl.l << " (" << fl.detail << ")";
  return os.str();
}

std::string to_text(const LemmaReport& report) {
  std::ostringstream os;
  os << "cases " << report.cases << "\n";
  for (int i = 0; i < 6; ++i)
    os << "lemma " << i + 1 << ": " << report.tally[i].checked << " checked, " << report.tally[i].failed
       << " failed\n";
  for (const auto& fl : report.failures) os << to_text(fl) << "\n";
  os << (report.ok() ? "PASS" : "FAIL") << "\n";
  return os.str();
}

}  // namespace ooa
