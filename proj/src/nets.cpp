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

#include "ooa/nets.hpp"

#include <omp.h>

#include <algorithm>
#include <atomic>
#include <numeric>

#include "ooa/error.hpp"

namespace ooa {

using i128 = __int128;
using u128 = unsigned __int128;

namespace {

std::string to_decimal(u128 v) {
  if (v == 0) return "0";
  std::string s;
  while (v > 0) {
    s.push_back(static_cast<char>('0' + static_cast<int>(v % 10)));
    v /= 10;
  }
  std::reverse(s.begin(), s.end());
  return s;
}

u128 gcd128(u128 a, u128 b) {
  while (b != 0) {
    const u128 r = a % b;
    a = b;
    b = r;
  }
  return a;
}

// floor(num * b^d / denom)
std::uint64_t leading_digits(std::uint64_t num, int b, int d, std::uint64_t denom) {
  u128 scaled = num;
  for (int i = 0; i < d; ++i) scaled *= static_cast<unsigned>(b);
  return static_cast<std::uint64_t>(scaled / denom);
}

Discrepancy reduce(i128 score, i128 den) {
  if (score < 0) score = 0;
  const u128 g = gcd128(static_cast<u128>(score), static_cast<u128>(den));
  return {static_cast<u128>(score) / g, static_cast<u128>(den) / g};
}

// Distinct coordinates per dimension, ascending, with denom appended.
std::vector<std::vector<std::uint64_t>> critical_values(const PointSet& p) {
  std::vector<std::vector<std::uint64_t>> out(p.s());
  for (int d = 0; d < p.s(); ++d) {
    auto& v = out[d];
    for (std::size_t i = 0; i < p.size(); ++i) v.push_back(p.at(i, d));
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    v.push_back(p.denom());
  }
  return out;
}

struct Scale {
  i128 n;
  std::vector<i128> dpow;  // dpow[k] = denom^k
};

Scale make_scale(const PointSet& p) {
  if (p.size() == 0) throw PreconditionViolation("star discrepancy needs at least one point");
  long double bound = static_cast<long double>(p.size());
  for (int i = 0; i < p.s(); ++i) bound *= static_cast<long double>(p.denom());
  if (bound > 1e36L) throw PreconditionViolation("point set too large for exact star discrepancy");
  Scale sc{static_cast<i128>(p.size()), {1}};
  for (int i = 0; i < p.s(); ++i) sc.dpow.push_back(sc.dpow.back() * static_cast<i128>(p.denom()));
  return sc;
}

constexpr std::uint32_t kOpenBit = 0x80000000u;

// Depth-first search over the critical grid, one dimension per level.
// Alive entries are point indices whose box prefix still contains them
// (closed); kOpenBit marks points also strictly inside.
class BoxSearch {
 public:
  BoxSearch(const PointSet& p, const Scale& sc, std::atomic<long long>& visits, double budget)
      : p_(p), sc_(sc), visits_(visits), budget_(budget), levels_(p.s() + 1) {}

  // Children of the root whose first coordinate is `y0`, given the points
  // sorted by first coordinate.
  i128 run_first(const std::vector<std::uint32_t>& sorted0, std::uint64_t y0, i128 best) {
    best_ = best;
    auto& child = levels_[1];
    child.clear();
    for (std::uint32_t e : sorted0) {
      const std::uint64_t x = p_.at(e & ~kOpenBit, 0);
      if (x > y0) break;
      child.push_back(x < y0 ? e : (e & ~kOpenBit));
    }
    visit(1, static_cast<i128>(y0));
    flush();
    return best_;
  }

  bool aborted() const { return aborted_; }

 private:
  void visit(int level, i128 vol) {
    if (aborted_) return;
    if (++local_visits_ >= 4096) flush();
    auto& alive = levels_[level];
    const int s = p_.s();
    i128 open = 0;
    for (std::uint32_t e : alive) open += (e & kOpenBit) != 0;
    const i128 closed = static_cast<i128>(alive.size());
    if (level == s) {
      const i128 nv = sc_.n * vol;
      best_ = std::max({best_, nv - open * sc_.dpow[s], closed * sc_.dpow[s] - nv});
      return;
    }
    if (std::max(sc_.n * vol * sc_.dpow[s - level], closed * sc_.dpow[s]) <= best_) return;

    std::sort(alive.begin(), alive.end(), [&](std::uint32_t a, std::uint32_t b) {
      return p_.at(a & ~kOpenBit, level) < p_.at(b & ~kOpenBit, level);
    });
    if (level == s - 1) {
      // Leaves of the last dimension, scanned in coordinate order.
      i128 open_below = 0;
      std::size_t i = 0;
      while (true) {
        const std::uint64_t y = i < alive.size() ? p_.at(alive[i] & ~kOpenBit, level) : p_.denom();
        std::size_t end = i;
        while (end < alive.size() && p_.at(alive[end] & ~kOpenBit, level) == y) ++end;
        const i128 nv = sc_.n * vol * static_cast<i128>(y);
        best_ = std::max({best_, nv - open_below * sc_.dpow[s], static_cast<i128>(end) * sc_.dpow[s] - nv});
        ++local_visits_;
        if (i == alive.size()) break;
        for (std::size_t k = i; k < end; ++k) open_below += (alive[k] & kOpenBit) != 0;
        i = end;
      }
      return;
    }
    auto& child = levels_[level + 1];
    std::size_t i = 0;
    while (true) {
      // Next candidate: the next distinct coordinate, or denom after the last.
      const std::uint64_t y = i < alive.size() ? p_.at(alive[i] & ~kOpenBit, level) : p_.denom();
      std::size_t end = i;
      while (end < alive.size() && p_.at(alive[end] & ~kOpenBit, level) == y) ++end;
      child.clear();
      for (std::size_t k = 0; k < end; ++k) child.push_back(k < i ? alive[k] : (alive[k] & ~kOpenBit));
      visit(level + 1, vol * static_cast<i128>(y));
      if (aborted_ || i == alive.size()) break;
      i = end;
    }
  }

  void flush() {
    if (visits_.fetch_add(local_visits_) + local_visits_ > budget_) aborted_ = true;
    local_visits_ = 0;
  }

  const PointSet& p_;
  const Scale& sc_;
  std::atomic<long long>& visits_;
  double budget_;
  std::vector<std::vector<std::uint32_t>> levels_;
  i128 best_ = 0;
  long long local_visits_ = 0;
  bool aborted_ = false;
};

}  // namespace

PointSet::PointSet(int s, std::uint64_t denom, std::vector<std::uint64_t> numerators)
    : s_(s), denom_(denom), num_(std::move(numerators)) {
  if (s < 1 || denom < 1) throw PreconditionViolation("point set needs s >= 1 and denom >= 1");
  if (num_.size() % static_cast<std::size_t>(s) != 0)
    throw PreconditionViolation("numerator count is not a multiple of s");
  for (std::uint64_t v : num_)
    if (v >= denom) throw PreconditionViolation("coordinate outside [0, 1)");
}

PointSet net_points(const OoaMatrix& m) {
  const int q = m.q();
  const int t = m.t();
  std::uint64_t denom = 1;
  for (int i = 0; i < t; ++i) denom *= q;
  std::vector<std::uint64_t> num;
  num.reserve(static_cast<std::size_t>(m.rows()) * m.blocks());
  for (int r = 0; r < m.rows(); ++r) {
    for (int b = 0; b < m.blocks(); ++b) {
      std::uint64_t x = 0;
      for (int j = 0; j < t; ++j) x = x * q + m.at(r, b * t + j);
      num.push_back(x);
    }
  }
  return PointSet(m.blocks(), denom, std::move(num));
}

int ElementaryInterval::volume_exponent() const { return std::accumulate(d.begin(), d.end(), 0); }

bool ElementaryInterval::contains(const PointSet& p, std::size_t point) const {
  for (int i = 0; i < p.s(); ++i)
    if (leading_digits(p.at(point, i), b, d[i], p.denom()) != a[i]) return false;
  return true;
}

std::size_t count_in(const PointSet& p, const ElementaryInterval& e) {
  if (static_cast<int>(e.d.size()) != p.s() || e.a.size() != e.d.size())
    throw PreconditionViolation("interval dimension mismatch");
  std::size_t n = 0;
  for (std::size_t i = 0; i < p.size(); ++i) n += e.contains(p, i);
  return n;
}

bool verify_net(const PointSet& p, int b, int m) {
  if (b < 2 || m < 0) throw PreconditionViolation("net check needs b >= 2 and m >= 0");
  std::size_t cells = 1;
  for (int i = 0; i < m; ++i) cells *= static_cast<std::size_t>(b);
  if (p.size() != cells) throw PreconditionViolation("net check needs exactly b^m points");

  const int s = p.s();
  std::vector<int> d(s, 0);
  std::vector<unsigned char> hit(cells);
  bool ok = true;
  // Every composition of m into s parts; each cell of the induced partition
  // must be hit exactly once, i.e. the cell codes are all distinct.
  auto rec = [&](auto&& self, int dim, int left) -> void {
    if (!ok) return;
    if (dim == s - 1) {
      d[dim] = left;
      std::fill(hit.begin(), hit.end(), 0);
      for (std::size_t i = 0; i < p.size() && ok; ++i) {
        std::size_t code = 0;
        for (int k = 0; k < s; ++k) {
          std::size_t radix = 1;
          for (int r = 0; r < d[k]; ++r) radix *= static_cast<std::size_t>(b);
          code = code * radix + leading_digits(p.at(i, k), b, d[k], p.denom());
        }
        if (hit[code]++) ok = false;
      }
      return;
    }
    for (int v = 0; v <= left; ++v) {
      d[dim] = v;
      self(self, dim + 1, left - v);
    }
  };
  rec(rec, 0, m);
  return ok;
}

double Discrepancy::value() const { return static_cast<double>(static_cast<long double>(num) / static_cast<long double>(den)); }

std::string Discrepancy::rational() const { return to_decimal(num) + "/" + to_decimal(den); }

std::string Discrepancy::fixed4() const {
  const u128 r = (num * 20000 + den) / (2 * den);
  std::string frac = to_decimal(r % 10000);
  frac.insert(0, 4 - frac.size(), '0');
  return to_decimal(r / 10000) + "." + frac;
}

double discrepancy_grid_cells(const PointSet& p) {
  double cells = 1;
  for (const auto& v : critical_values(p)) cells *= static_cast<double>(v.size());
  return cells;
}

Discrepancy star_discrepancy_reference(const PointSet& p, double budget) {
  const Scale sc = make_scale(p);
  const double cells = discrepancy_grid_cells(p);
  if (cells > budget) throw BudgetExceeded(cells, budget);
  const auto grid = critical_values(p);
  const int s = p.s();
  std::vector<std::size_t> idx(s, 0);
  i128 best = 0;
  while (true) {
    i128 vol = 1;
    for (int d = 0; d < s; ++d) vol *= static_cast<i128>(grid[d][idx[d]]);
    i128 open = 0, closed = 0;
    for (std::size_t i = 0; i < p.size(); ++i) {
      bool in_open = true, in_closed = true;
      for (int d = 0; d < s && in_closed; ++d) {
        const std::uint64_t x = p.at(i, d), y = grid[d][idx[d]];
        in_open = in_open && x < y;
        in_closed = x <= y;
      }
      open += in_open && in_closed;
      closed += in_closed;
    }
    const i128 nv = sc.n * vol;
    best = std::max({best, nv - open * sc.dpow[s], closed * sc.dpow[s] - nv});
    int d = 0;
    while (d < s && ++idx[d] == grid[d].size()) idx[d++] = 0;
    if (d == s) break;
  }
  return reduce(best, sc.n * sc.dpow[s]);
}

Discrepancy star_discrepancy(const PointSet& p, double budget, int jobs) {
  const Scale sc = make_scale(p);
  std::vector<std::uint32_t> sorted0(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) sorted0[i] = static_cast<std::uint32_t>(i) | kOpenBit;
  std::stable_sort(sorted0.begin(), sorted0.end(), [&](std::uint32_t a, std::uint32_t b) {
    return p.at(a & ~kOpenBit, 0) < p.at(b & ~kOpenBit, 0);
  });
  const std::vector<std::uint64_t> first = critical_values(p)[0];

  std::atomic<long long> visits{0};
  i128 best = 0;
  bool aborted = false;
  const int n_first = static_cast<int>(first.size());
#pragma omp parallel num_threads(jobs > 0 ? jobs : omp_get_max_threads())
  {
    BoxSearch search(p, sc, visits, budget);
#pragma omp for schedule(dynamic, 1)
    for (int k = n_first - 1; k >= 0; --k) {
      i128 seed;
#pragma omp critical(ooa_dstar_best)
      seed = best;
      const i128 found = search.run_first(sorted0, first[k], seed);
#pragma omp critical(ooa_dstar_best)
      {
        best = std::max(best, found);
        aborted = aborted || search.aborted();
      }
    }
  }
  if (aborted) throw BudgetExceeded(discrepancy_grid_cells(p), budget);
  return reduce(best, sc.n * sc.dpow[p.s()]);
}

DiscrepancySurvey discrepancy_survey(int q, int t, double budget, int jobs) {
  const Field& F = Field::make(q);
  DiscrepancySurvey out{q, t, {}, 0};
  for (const Poly& f : enumerate_polys(F, t, PolyFilter::Rootless)) {
    const PointSet p = net_points(gr_construct(f));
    out.entries.push_back({f, p.s(), p.size(), star_discrepancy(p, budget, jobs)});
  }
  for (std::size_t i = 1; i < out.entries.size(); ++i) {
    const auto& a = out.entries[i].dstar;
    const auto& b = out.entries[out.best].dstar;
    if (a.num * b.den < b.num * a.den) out.best = i;
  }
  return out;
}

}  // namespace ooa
