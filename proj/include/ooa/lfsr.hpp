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

// LFSR output streams as periodic sequences indexed over all integers, and
// the operators the construction applies to them: shifts L^n, g(L) for a
// polynomial g, and (L - beta)^-1.
//
// A stream annihilated by a permissible f (monic, b_0 != 0) can be run
// backwards, so it is purely periodic and s_n = cycle[n mod period] for
// every integer n.

#ifndef OOA_LFSR_HPP_
#define OOA_LFSR_HPP_

#include <span>
#include <string>
#include <vector>

#include "ooa/finite_field.hpp"
#include "ooa/polynomial.hpp"

namespace ooa {

class Stream {
 public:
  // cycle must be one minimal period of a stream annihilated by f.
  Stream(Poly f, std::vector<elem_t> cycle) : f_(std::move(f)), cycle_(std::move(cycle)) {}

  const Poly& poly() const { return f_; }
  const Field& field() const { return f_.field(); }
  long long period() const { return static_cast<long long>(cycle_.size()); }
  std::span<const elem_t> cycle() const { return cycle_; }
  bool is_zero() const { return cycle_.size() == 1 && cycle_[0] == 0; }

  elem_t operator[](long long n) const {
    const long long r = period();
    long long m = n % r;
    if (m < 0) m += r;
    return cycle_[static_cast<std::size_t>(m)];
  }

  // First `count` entries starting at index n.
  std::vector<elem_t> window(long long n, int count) const;

  friend bool operator==(const Stream& a, const Stream& b) {
    return a.f_ == b.f_ && a.cycle_ == b.cycle_;
  }

 private:
  Poly f_;
  std::vector<elem_t> cycle_;
};

// The stream of G(f) whose first t entries are `initial`.
Stream stream_from_state(const Poly& f, std::span<const elem_t> initial);

// L^n s; n may be negative.
Stream shift(const Stream& s, long long n);

// g(L) s, i.e. result_n = sum_j g_j s_{n+j}.
Stream apply_operator(const Poly& g, const Stream& s);

// (L - beta)^-1 s. Throws NotCoprime if f(beta) == 0.
Stream affine_inverse(const Stream& s, FieldElement beta);

// For primitive f and nonzero beta: the k in [1, q^t - 1] with
// (L - beta) a = L^-k a on the nonzero orbit.
long long find_shift_offset(const Poly& f, FieldElement beta);

// Shift-orbits of G(f). Each base is the lexicographically least rotation
// of its orbit; orbits are sorted by descending period, then by base.
struct OrbitDecomposition {
  Poly f;
  std::vector<Stream> bases;

  long long total_streams() const;
};

OrbitDecomposition orbit_decomposition(const Poly& f);

// Length of the run of zeroes starting at index n (0 if s_n != 0). Does not
// look at s_{n-1}. Throws ZeroStream.
int run_at(const Stream& s, long long n);

// P_{l, L^n r}: the polynomial of degree t - l - 1 attached to a run of
// exactly l zeroes of r at index n. Throws PreconditionViolation if the run
// is not exactly l long.
struct RunPoly {
  Poly poly;
  int l;
  long long n;
};

RunPoly run_poly(const Stream& r, int l, long long n);

// "q t <poly digits> <period> <cycle digits>"
std::string dump(const Stream& s);

}  // namespace ooa

#endif  // OOA_LFSR_HPP_
