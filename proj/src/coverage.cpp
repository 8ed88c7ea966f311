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

#include "ooa/coverage.hpp"

#include <omp.h>

#include <algorithm>
#include <array>
#include <bit>
#include <cmath>
#include <map>

#include "ooa/error.hpp"

namespace ooa {

std::uint64_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  std::uint64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
  return r;
}

std::uint64_t count_covered_reference(const GeneratorMatrix& g) {
  const int t = g.t();
  const int m = g.cols();
  if (t > m) return 0;
  std::vector<int> c(t);
  for (int i = 0; i < t; ++i) c[i] = i;
  std::uint64_t covered = 0;
  while (true) {
    if (is_covered(g, c)) ++covered;
    // Colex successor.
    int i = 0;
    while (i < t && c[i] + 1 == (i + 1 < t ? c[i + 1] : m)) ++i;
    if (i == t) break;
    ++c[i];
    for (int j = 0; j < i; ++j) c[j] = j;
  }
  return covered;
}

namespace {

constexpr int kMaxT = 24;
constexpr std::size_t kMaxTableCodes = std::size_t{1} << 22;

// Vectors of GF(2)^t packed in a word.
struct Gf2Ops {
  using Vec = std::uint32_t;
  const GeneratorMatrix& g;

  Vec column(int c) const {
    Vec v = 0;
    for (int i = 0; i < g.t(); ++i)
      if (g.at(i, c)) v |= Vec{1} << i;
    return v;
  }
  Vec unit(int i) const { return Vec{1} << i; }
  elem_t dot(Vec a, Vec b) const { return static_cast<elem_t>(std::popcount(a & b) & 1); }
  // psi - (d_psi / d_piv) * pivot
  Vec eliminate(Vec psi, elem_t d_psi, Vec pivot, elem_t) const { return d_psi ? psi ^ pivot : psi; }
  std::size_t code(Vec v) const { return v; }
  Vec decode(std::size_t code) const { return static_cast<Vec>(code); }
  std::size_t code_count() const { return std::size_t{1} << g.t(); }
};

struct GenericOps {
  using Vec = std::array<elem_t, kMaxT>;
  const GeneratorMatrix& g;

  Vec column(int c) const {
    Vec v{};
    for (int i = 0; i < g.t(); ++i) v[i] = g.at(i, c);
    return v;
  }
  Vec unit(int i) const {
    Vec v{};
    v[i] = 1;
    return v;
  }
  elem_t dot(const Vec& a, const Vec& b) const {
    const Field& F = g.field();
    elem_t acc = 0;
    for (int i = 0; i < g.t(); ++i) acc = F.add(acc, F.mul(a[i], b[i]));
    return acc;
  }
  Vec eliminate(const Vec& psi, elem_t d_psi, const Vec& pivot, elem_t d_piv) const {
    if (d_psi == 0) return psi;
    const Field& F = g.field();
    const elem_t factor = F.div(d_psi, d_piv);
    Vec out = psi;
    for (int i = 0; i < g.t(); ++i) out[i] = F.sub(out[i], F.mul(factor, pivot[i]));
    return out;
  }
  // Scale so the lowest nonzero coordinate is 1; whether phi . c vanishes
  // is invariant under scaling.
  std::size_t code(const Vec& v) const {
    const Field& F = g.field();
    elem_t s = 0;
    for (int i = 0; i < g.t() && s == 0; ++i)
      if (v[i]) s = F.inv(v[i]);
    std::size_t code = 0;
    for (int i = g.t() - 1; i >= 0; --i) code = code * F.q() + F.mul(v[i], s);
    return code;
  }
  Vec decode(std::size_t code) const {
    Vec v{};
    for (int i = 0; i < g.t(); ++i) {
      v[i] = static_cast<elem_t>(code % g.field().q());
      code /= g.field().q();
    }
    return v;
  }
  std::size_t code_count() const {
    std::size_t n = 1;
    for (int i = 0; i < g.t(); ++i) n *= g.field().q();
    return n;
  }
};

template <typename Ops>
class Counter {
 public:
  using Vec = typename Ops::Vec;

  explicit Counter(Ops ops) : ops_(ops), t_(ops.g.t()), m_(ops.g.cols()) {
    cols_.reserve(m_);
    for (int c = 0; c < m_; ++c) cols_.push_back(ops_.column(c));
    const std::size_t codes = ops_.code_count();
    if (codes <= kMaxTableCodes) {
      // tail_[code * (m+1) + pos] = #{ j >= pos : phi(code) . col_j != 0 }
      tail_.assign(codes * (m_ + 1), 0);
      for (std::size_t code = 1; code < codes; ++code) {
        const Vec phi = ops_.decode(code);
        if (ops_.code(phi) != code) continue;  // not normalized
        std::uint32_t* row = tail_.data() + code * (m_ + 1);
        for (int j = m_ - 1; j >= 0; --j) row[j] = row[j + 1] + (ops_.dot(phi, cols_[j]) != 0);
      }
    }
  }

  std::uint64_t run(int jobs) const {
    if (t_ > m_) return 0;
    std::array<Vec, kMaxT> base{};
    for (int i = 0; i < t_; ++i) base[i] = ops_.unit(i);

    std::uint64_t total = 0;
    const int first_limit = m_ - t_;
#pragma omp parallel for schedule(dynamic, 1) reduction(+ : total) num_threads(jobs > 0 ? jobs : omp_get_max_threads())
    for (int j = 0; j <= first_limit; ++j) {
      std::array<Vec, kMaxT> ann{};
      if (extend(base.data(), t_, j, ann.data())) total += count(1, j + 1, ann.data());
    }
    return total;
  }

 private:
  // ann holds t - depth annihilator vectors of the chosen span.
  std::uint64_t count(int depth, int start, const Vec* ann) const {
    const int free = t_ - depth;
    if (free == 1) return last_level(ann[0], start);
    std::uint64_t sum = 0;
    std::array<Vec, kMaxT> next{};
    for (int j = start; j <= m_ - free; ++j)
      if (extend(ann, free, j, next.data())) sum += count(depth + 1, j + 1, next.data());
    return sum;
  }

  // Adds column j to the chosen set. False if it is already in the span.
  bool extend(const Vec* ann, int free, int j, Vec* out) const {
    std::array<elem_t, kMaxT> d{};
    int piv = -1;
    for (int a = 0; a < free; ++a) {
      d[a] = ops_.dot(ann[a], cols_[j]);
      if (piv < 0 && d[a] != 0) piv = a;
    }
    if (piv < 0) return false;
    int k = 0;
    for (int a = 0; a < free; ++a)
      if (a != piv) out[k++] = ops_.eliminate(ann[a], d[a], ann[piv], d[piv]);
    return true;
  }

  std::uint64_t last_level(const Vec& phi, int start) const {
    if (!tail_.empty()) return tail_[ops_.code(phi) * (m_ + 1) + start];
    std::uint64_t n = 0;
    for (int j = start; j < m_; ++j) n += ops_.dot(phi, cols_[j]) != 0;
    return n;
  }

  Ops ops_;
  int t_;
  int m_;
  std::vector<Vec> cols_;
  std::vector<std::uint32_t> tail_;
};

}  // namespace

std::uint64_t count_covered(const GeneratorMatrix& g, int jobs) {
  if (g.t() > kMaxT) throw PreconditionViolation("t too large for the coverage kernel");
  if (g.field().q() == 2) return Counter<Gf2Ops>(Gf2Ops{g}).run(jobs);
  return Counter<GenericOps>(GenericOps{g}).run(jobs);
}

std::string format_4dp(std::uint64_t num, std::uint64_t den) {
  if (den == 0) throw PreconditionViolation("zero denominator");
  const unsigned __int128 scaled = (static_cast<unsigned __int128>(num) * 20000 + den) / (2 * static_cast<unsigned __int128>(den));
  const auto r = static_cast<std::uint64_t>(scaled);
  std::string frac = std::to_string(r % 10000);
  frac.insert(0, 4 - frac.size(), '0');
  return std::to_string(r / 10000) + "." + frac;
}

std::string format_4dp(double value) {
  const auto r = static_cast<std::uint64_t>(std::floor(value * 10000.0 + 0.5));
  std::string frac = std::to_string(r % 10000);
  frac.insert(0, 4 - frac.size(), '0');
  return std::to_string(r / 10000) + "." + frac;
}

CoverageReport coverage_stats(const Poly& f, int jobs) {
  const GeneratorMatrix g = generator_matrix(f);
  const int t = g.t();
  const int blocks = g.cols() / t;
  bool verified = true;
  for (const auto& s : left_justified_sets(blocks, t, t)) {
    if (!is_covered(g, s)) {
      verified = false;
      break;
    }
  }
  return CoverageReport{f,
                        classify(f),
                        blocks - 1,
                        g.cols(),
                        count_covered(g, jobs),
                        binomial(g.cols(), t),
                        verified};
}

void Aggregate::add(std::uint64_t covered, std::uint64_t group_total) {
  if (count == 0) {
    total = group_total;
    min_covered = max_covered = covered;
  } else {
    if (group_total != total) throw PreconditionViolation("aggregate members differ in total");
    min_covered = std::min(min_covered, covered);
    max_covered = std::max(max_covered, covered);
  }
  ++count;
  sum_covered += covered;
  sum_sq += static_cast<unsigned __int128>(covered) * covered;
}

double Aggregate::sd() const {
  if (count < 2) return 0.0;
  const unsigned __int128 n = static_cast<unsigned __int128>(count);
  const unsigned __int128 s = sum_covered;
  const unsigned __int128 num = n * sum_sq - s * s;  // >= 0 by Cauchy-Schwarz
  const long double var = static_cast<long double>(num) /
                          (static_cast<long double>(count) * (count - 1)) /
                          (static_cast<long double>(total) * static_cast<long double>(total));
  return static_cast<double>(std::sqrt(var));
}

std::vector<const CoverageReport*> Survey::argmax(const SurveyGroup& g) const {
  std::vector<const CoverageReport*> out;
  for (std::size_t i : g.members)
    if (reports[i].covered == g.all.max_covered) out.push_back(&reports[i]);
  return out;
}

Survey batch_survey(int q, int t, SurveyMode mode, int jobs, ProgressFn progress) {
  const Field& F = Field::make(q);
  const auto polys = enumerate_polys(
      F, t, mode == SurveyMode::Rootless ? PolyFilter::Rootless : PolyFilter::Permissible);

  Survey out{q, t, mode, {}, {}};
  std::map<int, SurveyGroup, std::greater<>> by_gamma;
  std::size_t done = 0;
  for (const Poly& f : polys) {
    const int gamma = gamma_set(f).gamma();
    if (mode == SurveyMode::WithRootsByGamma && gamma == q) {
      ++done;
      continue;
    }
    out.reports.push_back(coverage_stats(f, jobs));
    const CoverageReport& r = out.reports.back();
    auto [it, fresh] = by_gamma.try_emplace(gamma, SurveyGroup{gamma, r.cols, {}, {}, {}});
    it->second.all.add(r.covered, r.total);
    if (r.cls.kind == PolyKind::Primitive) it->second.primitive.add(r.covered, r.total);
    it->second.members.push_back(out.reports.size() - 1);
    if (progress) progress(++done, polys.size());
  }
  for (auto& [gamma, group] : by_gamma) out.groups.push_back(std::move(group));
  return out;
}

}  // namespace ooa
