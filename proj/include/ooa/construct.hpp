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

// The generalized RUNS array M(f) and its verification as an ordered
// orthogonal array OOA(q^t; t, gamma+1, t, q).
//
// Column layout: gamma+1 blocks of t columns. Block 0 is the "infinity"
// block whose position-j column is L^{j-1} a; block k >= 1 belongs to the
// k-th element beta_k of the gamma set and its position-j column is
// (L - beta_k)^{-j} a. Rows come in contiguous groups, one group per orbit
// of G(f), row w of a group being the stream L^w a of that orbit's base a.

#ifndef OOA_CONSTRUCT_HPP_
#define OOA_CONSTRUCT_HPP_

#include <optional>
#include <span>
#include <vector>

#include "ooa/finite_field.hpp"
#include "ooa/polynomial.hpp"

namespace ooa {

struct ColumnLabel {
  int block;  // 0 is the infinity block
  int pos;    // 1..t
  friend bool operator==(ColumnLabel, ColumnLabel) = default;
};

// Labels (0,1)..(0,t), (1,1)..(1,t), ..., (blocks-1, t).
std::vector<ColumnLabel> block_labels(int blocks, int t);

class OoaMatrix {
 public:
  // `entries` is row-major with blocks * t columns.
  OoaMatrix(const Field& field, int t, int blocks, std::vector<elem_t> entries,
            std::optional<Poly> source = std::nullopt);

  const Field& field() const { return *field_; }
  int q() const { return field_->q(); }
  int t() const { return t_; }
  int blocks() const { return blocks_; }
  int gamma() const { return blocks_ - 1; }
  int rows() const { return rows_; }
  int cols() const { return blocks_ * t_; }
  const std::vector<ColumnLabel>& labels() const { return labels_; }
  const std::optional<Poly>& source() const { return source_; }

  elem_t at(int r, int c) const { return entries_[static_cast<std::size_t>(r) * cols() + c]; }
  void set(int r, int c, elem_t v) { entries_[static_cast<std::size_t>(r) * cols() + c] = v; }
  std::span<const elem_t> row(int r) const {
    return {entries_.data() + static_cast<std::size_t>(r) * cols(), static_cast<std::size_t>(cols())};
  }
  std::span<const elem_t> entries() const { return entries_; }

  friend bool operator==(const OoaMatrix& a, const OoaMatrix& b) {
    return a.field_ == b.field_ && a.t_ == b.t_ && a.blocks_ == b.blocks_ &&
           a.entries_ == b.entries_;
  }

 private:
  const Field* field_;
  int t_;
  int blocks_;
  int rows_;
  std::vector<ColumnLabel> labels_;
  std::vector<elem_t> entries_;
  std::optional<Poly> source_;
};

// t x cols matrix whose row space is the row set of M(f): the row of M(f)
// for the stream with initial state u is u * G.
class GeneratorMatrix {
 public:
  GeneratorMatrix(const Field& field, int t, int cols, std::vector<elem_t> entries);

  const Field& field() const { return *field_; }
  int t() const { return t_; }
  int cols() const { return cols_; }
  elem_t at(int r, int c) const { return entries_[static_cast<std::size_t>(r) * cols_ + c]; }
  // Column c as a length-t vector.
  std::vector<elem_t> column(int c) const;
  // u * G for a length-t state u.
  std::vector<elem_t> encode(std::span<const elem_t> u) const;

  friend bool operator==(const GeneratorMatrix& a, const GeneratorMatrix& b) {
    return a.field_ == b.field_ && a.t_ == b.t_ && a.entries_ == b.entries_;
  }

 private:
  const Field* field_;
  int t_;
  int cols_;
  std::vector<elem_t> entries_;
};

// Builds M(f) from the orbit decomposition of G(f). Throws Impermissible.
OoaMatrix gr_construct(const Poly& f);

// Column for (block k, position j) is the coefficient vector of
// (x - beta_k)^{-j} mod f; block 0 is the identity. Throws Impermissible.
GeneratorMatrix generator_matrix(const Poly& f);

// Rank of a small matrix over the field (rows x cols, row-major).
int rank(const Field& field, std::vector<elem_t> m, int rows, int cols);

// True iff the t x t submatrix of G on `cols` has full rank t. A repeated
// column is never covered.
bool is_covered(const GeneratorMatrix& g, std::span<const int> cols);

// Exhaustive check: every t-tuple appears exactly once among the rows of M
// restricted to `cols` (the array has q^t rows, so the index is 1).
bool is_covered_exhaustive(const OoaMatrix& m, std::span<const int> cols);

// Column index sets of every left-justified t-set: one per composition
// (l_0, ..., l_{blocks-1}) of t with 0 <= l_i <= depth.
std::vector<std::vector<int>> left_justified_sets(int blocks, int depth, int t);

enum class VerifyMode { Rank, Exhaustive };

// True iff every left-justified t-set of M is covered. Rank mode extracts a
// row-space basis of M when its rows form a t-dimensional linear space and
// runs the rank test against it; otherwise it falls back to exhaustive
// counting.
bool verify_ooa(const OoaMatrix& m, VerifyMode mode);

// Basis of the row space of M as a generator, if the rows of M are exactly
// the q^t vectors of a t-dimensional space.
std::optional<GeneratorMatrix> row_space_generator(const OoaMatrix& m);

}  // namespace ooa

#endif  // OOA_CONSTRUCT_HPP_
