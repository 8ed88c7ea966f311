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

#include "ooa/lfsr.hpp"

#include <algorithm>

#include "ooa/error.hpp"

namespace ooa {

namespace {

void require_permissible(const Poly& f) {
  if (auto why = permissibility_issue(f)) throw Impermissible(*why);
}

// Smallest d dividing cycle.size() such that cycle has period d.
std::vector<elem_t> minimal_cycle(std::vector<elem_t> cycle) {
  std::size_t rho = cycle.size();
  auto has_period = [&](std::size_t d) {
    for (std::size_t i = d; i < rho; ++i)
      if (cycle[i] != cycle[i - d]) return false;
    return true;
  };
  for (unsigned long long l : prime_divisors(rho)) {
    while (rho % l == 0 && has_period(rho / l)) rho /= l;
  }
  cycle.resize(rho);
  return cycle;
}

// Start index of the lexicographically least rotation.
std::size_t least_rotation(std::span<const elem_t> s) {
  const std::size_t n = s.size();
  std::size_t i = 0, j = 1, k = 0;
  while (i < n && j < n && k < n) {
    const elem_t a = s[(i + k) % n];
    const elem_t b = s[(j + k) % n];
    if (a == b) {
      ++k;
      continue;
    }
    if (a > b)
      i += k + 1;
    else
      j += k + 1;
    if (i == j) ++j;
    k = 0;
  }
  return std::min(i, j);
}

std::vector<elem_t> rotated(std::span<const elem_t> s, std::size_t start) {
  std::vector<elem_t> out(s.size());
  for (std::size_t i = 0; i < s.size(); ++i) out[i] = s[(start + i) % s.size()];
  return out;
}

}  // namespace

std::vector<elem_t> Stream::window(long long n, int count) const {
  std::vector<elem_t> out(count);
  for (int i = 0; i < count; ++i) out[i] = (*this)[n + i];
  return out;
}

Stream stream_from_state(const Poly& f, std::span<const elem_t> initial) {
  require_permissible(f);
  const int t = f.degree();
  if (static_cast<int>(initial.size()) != t)
    throw PreconditionViolation("initial state must have length " + std::to_string(t));
  const Field& F = f.field();
  for (elem_t e : initial)
    if (e >= F.q()) throw PreconditionViolation("initial state entry out of range");

  // s_{n+t} = sum_i (-b_i) s_{n+i}
  std::vector<elem_t> feedback(t);
  for (int i = 0; i < t; ++i) feedback[i] = F.neg(f.coeff(i));
  const auto mul = F.mul_table();
  const auto add = F.add_table();
  const int q = F.q();

  std::vector<elem_t> s(initial.begin(), initial.end());
  for (std::size_t n = 0;; ++n) {
    elem_t next = 0;
    const elem_t* w = s.data() + n;
    for (int i = 0; i < t; ++i) next = add[next * q + mul[feedback[i] * q + w[i]]];
    s.push_back(next);
    // The state map is a bijection, so the first repeated state is the
    // initial one.
    const elem_t* st = s.data() + n + 1;
    if (st[0] == initial[0] && std::equal(initial.begin(), initial.end(), st)) {
      s.resize(n + 1);
      return Stream(f, std::move(s));
    }
  }
}

Stream shift(const Stream& s, long long n) {
  const long long rho = s.period();
  long long start = n % rho;
  if (start < 0) start += rho;
  return Stream(s.poly(), rotated(s.cycle(), static_cast<std::size_t>(start)));
}

Stream apply_operator(const Poly& g, const Stream& s) {
  const Poly& f = s.poly();
  if (&g.field() != &f.field()) throw MixedField();
  const Poly h = mod(g, f);
  const Field& F = f.field();
  const auto mul = F.mul_table();
  const auto add = F.add_table();
  const int q = F.q();
  const std::size_t rho = s.cycle().size();
  const auto cyc = s.cycle();
  const int dh = h.degree();

  // Unroll enough of the cycle that index n + j never wraps.
  std::vector<elem_t> ext(rho + std::max(dh, 0));
  for (std::size_t i = 0; i < ext.size(); ++i) ext[i] = cyc[i % rho];

  std::vector<elem_t> out(rho, 0);
  for (int j = 0; j <= dh; ++j) {
    const elem_t c = h.coeff(j);
    if (c == 0) continue;
    const elem_t* row = mul.data() + c * q;
    for (std::size_t n = 0; n < rho; ++n) out[n] = add[out[n] * q + row[ext[n + j]]];
  }
  return Stream(f, minimal_cycle(std::move(out)));
}

Stream affine_inverse(const Stream& s, FieldElement beta) {
  const Poly& f = s.poly();
  if (&beta.field() != &f.field()) throw MixedField();
  if (f.eval(beta.index()) == 0)
    throw NotCoprime("beta is a root of f, so (L - beta) is not invertible on G(f)");
  return apply_operator(inverse_mod(Poly::linear(f.field(), beta.index()), f), s);
}

long long find_shift_offset(const Poly& f, FieldElement beta) {
  if (&beta.field() != &f.field()) throw MixedField();
  if (beta.is_zero()) throw PreconditionViolation("beta must be nonzero");
  if (!is_permissible(f) || classify(f).kind != PolyKind::Primitive)
    throw PreconditionViolation("f must be primitive");
  const int t = f.degree();
  std::vector<elem_t> init(t, 0);
  init[t - 1] = 1;
  const Stream a = stream_from_state(f, init);
  const Stream r = apply_operator(Poly::linear(f.field(), beta.index()), a);
  const long long rho = a.period();

  // Every nonzero t-window occurs exactly once per period, so the offset is
  // pinned by the first window of r.
  const auto head = r.window(0, t);
  for (long long m = 0; m < rho; ++m) {
    if (a.window(m, t) != head) continue;
    const long long k = m == 0 ? rho : rho - m;
    for (long long n = 0; n < rho; ++n)
      if (r[n] != a[n - k]) throw Error("shift offset check failed");
    return k;
  }
  throw Error("no shift offset found");
}

long long OrbitDecomposition::total_streams() const {
  long long sum = 0;
  for (const Stream& b : bases) sum += b.period();
  return sum;
}

OrbitDecomposition orbit_decomposition(const Poly& f) {
  require_permissible(f);
  const Field& F = f.field();
  const int t = f.degree();
  const int q = F.q();
  unsigned long long states = 1;
  for (int i = 0; i < t; ++i) states *= q;

  std::vector<bool> seen(states, false);
  std::vector<elem_t> state(t);
  OrbitDecomposition out{f, {}};
  for (unsigned long long code = 0; code < states; ++code) {
    if (seen[code]) continue;
    // Window code: s_0 most significant digit.
    unsigned long long c = code;
    for (int i = t - 1; i >= 0; --i) {
      state[i] = static_cast<elem_t>(c % q);
      c /= q;
    }
    Stream s = stream_from_state(f, state);
    const auto cyc = s.cycle();
    const long long rho = s.period();
    unsigned long long w = code;
    const unsigned long long top = states / q;
    for (long long n = 0; n < rho; ++n) {
      seen[w] = true;
      w = (w % top) * q + cyc[static_cast<std::size_t>((n + t) % rho)];
    }
    out.bases.emplace_back(f, rotated(cyc, least_rotation(cyc)));
  }
  std::sort(out.bases.begin(), out.bases.end(), [](const Stream& a, const Stream& b) {
    if (a.period() != b.period()) return a.period() > b.period();
    return std::lexicographical_compare(a.cycle().begin(), a.cycle().end(), b.cycle().begin(),
                                        b.cycle().end());
  });
  return out;
}

int run_at(const Stream& s, long long n) {
  if (s.is_zero()) throw ZeroStream();
  int l = 0;
  while (s[n + l] == 0) ++l;
  return l;
}

RunPoly run_poly(const Stream& r, int l, long long n) {
  const Poly& f = r.poly();
  const Field& F = f.field();
  const int t = f.degree();
  if (l < 0 || l >= t) throw PreconditionViolation("run length must lie in [0, t)");
  for (int m = 0; m < l; ++m)
    if (r[n + m] != 0) throw PreconditionViolation("stream has no run of that length at n");
  if (r[n + l] == 0) throw PreconditionViolation("run continues past length l");

  // [x^m] P = sum_{j=0}^{t-m-l-1} b_{j+m+l+1} r_{n+j+l}
  std::vector<elem_t> c(t - l, 0);
  for (int m = 0; m <= t - l - 1; ++m) {
    elem_t acc = 0;
    for (int j = 0; j <= t - m - l - 1; ++j)
      acc = F.add(acc, F.mul(f.coeff(j + m + l + 1), r[n + j + l]));
    c[m] = acc;
  }
  return {Poly(F, std::move(c)), l, n};
}

std::string dump(const Stream& s) {
  const Poly& f = s.poly();
  std::string out = std::to_string(f.field().q()) + " " + std::to_string(f.degree()) + " ";
  for (int i = f.degree(); i >= 0; --i) out += static_cast<char>('0' + f.coeff(i));
  out += " " + std::to_string(s.period()) + " ";
  for (elem_t e : s.cycle()) out += static_cast<char>('0' + e);
  return out;
}

}  // namespace ooa
