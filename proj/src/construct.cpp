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

#include "ooa/construct.hpp"

#include <algorithm>
#include <set>

#include "ooa/error.hpp"
#include "ooa/lfsr.hpp"

namespace ooa {

std::vector<ColumnLabel> block_labels(int blocks, int t) {
  std::vector<ColumnLabel> out;
  out.reserve(static_cast<std::size_t>(blocks) * t);
  for (int b = 0; b < blocks; ++b)
    for (int j = 1; j <= t; ++j) out.push_back({b, j});
  return out;
}

OoaMatrix::OoaMatrix(const Field& field, int t, int blocks, std::vector<elem_t> entries,
                     std::optional<Poly> source)
    : field_(&field),
      t_(t),
      blocks_(blocks),
      rows_(0),
      labels_(block_labels(blocks, t)),
      entries_(std::move(entries)),
      source_(std::move(source)) {
  if (t < 1 || blocks < 1) throw PreconditionViolation("OOA needs t >= 1 and at least one block");
  if (entries_.size() % cols() != 0) throw PreconditionViolation("entry count is not a multiple of cols");
  rows_ = static_cast<int>(entries_.size() / cols());
  for (elem_t e : entries_)
    if (e >= field.q()) throw PreconditionViolation("matrix entry out of range");
}

GeneratorMatrix::GeneratorMatrix(const Field& field, int t, int cols, std::vector<elem_t> entries)
    : field_(&field), t_(t), cols_(cols), entries_(std::move(entries)) {
  if (entries_.size() != static_cast<std::size_t>(t) * cols)
    throw PreconditionViolation("generator entry count mismatch");
}

std::vector<elem_t> GeneratorMatrix::column(int c) const {
  std::vector<elem_t> v(t_);
  for (int i = 0; i < t_; ++i) v[i] = at(i, c);
  return v;
}

std::vector<elem_t> GeneratorMatrix::encode(std::span<const elem_t> u) const {
  const Field& F = *field_;
  std::vector<elem_t> out(cols_, 0);
  for (int i = 0; i < t_; ++i) {
    if (u[i] == 0) continue;
    for (int c = 0; c < cols_; ++c) out[c] = F.add(out[c], F.mul(u[i], at(i, c)));
  }
  return out;
}

OoaMatrix gr_construct(const Poly& f) {
  if (auto why = permissibility_issue(f)) throw Impermissible(*why);
  const Field& F = f.field();
  const int t = f.degree();
  const GammaSet gs = gamma_set(f);
  const int gamma = gs.gamma();
  const int cols = t * (gamma + 1);
  const OrbitDecomposition orbits = orbit_decomposition(f);

  std::vector<Poly> inverses;
  inverses.reserve(gamma);
  for (elem_t beta : gs.elements) inverses.push_back(inverse_mod(Poly::linear(F, beta), f));

  std::vector<elem_t> entries;
  entries.reserve(static_cast<std::size_t>(orbits.total_streams()) * cols);
  std::vector<std::vector<elem_t>> block_cols(static_cast<std::size_t>(cols));
  for (const Stream& a : orbits.bases) {
    const long long rho = a.period();
    // Column j of block 0: L^{j-1} a, sampled at rows w = 0..rho-1.
    for (int j = 1; j <= t; ++j) {
      auto& col = block_cols[j - 1];
      col.resize(rho);
      for (long long w = 0; w < rho; ++w) col[w] = a[w + j - 1];
    }
    for (int k = 0; k < gamma; ++k) {
      Stream cur = a;
      for (int j = 1; j <= t; ++j) {
        cur = apply_operator(inverses[k], cur);
        auto& col = block_cols[(k + 1) * t + j - 1];
        col.resize(rho);
        for (long long w = 0; w < rho; ++w) col[w] = cur[w];
      }
    }
    for (long long w = 0; w < rho; ++w)
      for (int c = 0; c < cols; ++c) entries.push_back(block_cols[c][w]);
  }
  return OoaMatrix(F, t, gamma + 1, std::move(entries), f);
}

GeneratorMatrix generator_matrix(const Poly& f) {
  if (auto why = permissibility_issue(f)) throw Impermissible(*why);
  const Field& F = f.field();
  const int t = f.degree();
  const GammaSet gs = gamma_set(f);
  const int cols = t * (gs.gamma() + 1);
  std::vector<elem_t> g(static_cast<std::size_t>(t) * cols, 0);
  for (int i = 0; i < t; ++i) g[static_cast<std::size_t>(i) * cols + i] = 1;
  for (int k = 0; k < gs.gamma(); ++k) {
    const Poly h = inverse_mod(Poly::linear(F, gs.elements[k]), f);
    Poly power = Poly::constant(F, 1);
    for (int j = 1; j <= t; ++j) {
      power = mulmod(power, h, f);
      const int c = (k + 1) * t + j - 1;
      for (int i = 0; i < t; ++i) g[static_cast<std::size_t>(i) * cols + c] = power.coeff(i);
    }
  }
  return GeneratorMatrix(F, t, cols, std::move(g));
}

int rank(const Field& F, std::vector<elem_t> m, int rows, int cols) {
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int piv = -1;
    for (int i = r; i < rows; ++i)
      if (m[static_cast<std::size_t>(i) * cols + c] != 0) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    if (piv != r)
      for (int j = 0; j < cols; ++j)
        std::swap(m[static_cast<std::size_t>(piv) * cols + j], m[static_cast<std::size_t>(r) * cols + j]);
    const elem_t inv = F.inv(m[static_cast<std::size_t>(r) * cols + c]);
    for (int i = r + 1; i < rows; ++i) {
      const elem_t factor = F.mul(m[static_cast<std::size_t>(i) * cols + c], inv);
      if (factor == 0) continue;
      for (int j = c; j < cols; ++j) {
        elem_t& dst = m[static_cast<std::size_t>(i) * cols + j];
        dst = F.sub(dst, F.mul(factor, m[static_cast<std::size_t>(r) * cols + j]));
      }
    }
    ++r;
  }
  return r;
}

bool is_covered(const GeneratorMatrix& g, std::span<const int> cols) {
  const int t = g.t();
  if (static_cast<int>(cols.size()) != t) throw PreconditionViolation("coverage needs exactly t columns");
  for (std::size_t a = 0; a < cols.size(); ++a)
    for (std::size_t b = a + 1; b < cols.size(); ++b)
      if (cols[a] == cols[b]) return false;
  std::vector<elem_t> sub(static_cast<std::size_t>(t) * t);
  for (int i = 0; i < t; ++i)
    for (int j = 0; j < t; ++j) sub[static_cast<std::size_t>(i) * t + j] = g.at(i, cols[j]);
  return rank(g.field(), std::move(sub), t, t) == t;
}

bool is_covered_exhaustive(const OoaMatrix& m, std::span<const int> cols) {
  const int q = m.q();
  const int t = static_cast<int>(cols.size());
  std::size_t tuples = 1;
  for (int i = 0; i < t; ++i) tuples *= q;
  if (static_cast<std::size_t>(m.rows()) != tuples) return false;
  std::vector<int> count(tuples, 0);
  for (int r = 0; r < m.rows(); ++r) {
    std::size_t code = 0;
    for (int c : cols) code = code * q + m.at(r, c);
    if (++count[code] > 1) return false;
  }
  return true;
}

std::vector<std::vector<int>> left_justified_sets(int blocks, int depth, int t) {
  std::vector<std::vector<int>> out;
  std::vector<int> parts(blocks, 0);
  // Depth-first over compositions of t into `blocks` parts bounded by depth.
  auto rec = [&](auto&& self, int b, int left) -> void {
    if (b == blocks - 1) {
      if (left > depth) return;
      parts[b] = left;
      std::vector<int> cols;
      for (int i = 0; i < blocks; ++i)
        for (int j = 0; j < parts[i]; ++j) cols.push_back(i * depth + j);
      out.push_back(std::move(cols));
      return;
    }
    for (int l = std::min(left, depth); l >= 0; --l) {
      parts[b] = l;
      self(self, b + 1, left - l);
    }
  };
  if (blocks > 0) rec(rec, 0, t);
  return out;
}

std::optional<GeneratorMatrix> row_space_generator(const OoaMatrix& m) {
  const Field& F = m.field();
  const int t = m.t();
  const int cols = m.cols();
  std::size_t expected = 1;
  for (int i = 0; i < t; ++i) expected *= F.q();
  if (static_cast<std::size_t>(m.rows()) != expected) return std::nullopt;

  std::set<std::vector<elem_t>> distinct;
  for (int r = 0; r < m.rows(); ++r) distinct.emplace(m.row(r).begin(), m.row(r).end());
  if (distinct.size() != expected) return std::nullopt;

  // Greedy basis: keep rows that raise the rank. A row raising it past t
  // means the rows do not lie in a t-dimensional space.
  std::vector<elem_t> basis;
  int dim = 0;
  for (int r = 0; r < m.rows(); ++r) {
    std::vector<elem_t> trial = basis;
    trial.insert(trial.end(), m.row(r).begin(), m.row(r).end());
    if (rank(F, trial, dim + 1, cols) == dim + 1) {
      if (dim == t) return std::nullopt;
      basis = std::move(trial);
      ++dim;
    }
  }
  // q^t distinct rows inside a t-dimensional space fill it exactly.
  if (dim != t) return std::nullopt;
  return GeneratorMatrix(F, t, cols, std::move(basis));
}

bool verify_ooa(const OoaMatrix& m, VerifyMode mode) {
  const auto sets = left_justified_sets(m.blocks(), m.t(), m.t());
  if (mode == VerifyMode::Rank) {
    if (auto g = row_space_generator(m)) {
      return std::all_of(sets.begin(), sets.end(),
                         [&](const std::vector<int>& s) { return is_covered(*g, s); });
    }
  }
  return std::all_of(sets.begin(), sets.end(),
                     [&](const std::vector<int>& s) { return is_covered_exhaustive(m, s); });
}

}  // namespace ooa
