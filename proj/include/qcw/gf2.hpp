// Copyright 2026 The qcw Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef QCW_GF2_HPP
#define QCW_GF2_HPP

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace qcw {

/// Packed vector over GF(2). Bit i lives in word i / 64, position i % 64.
class BinaryVector {
   public:
    BinaryVector() = default;
    explicit BinaryVector(size_t len);

    /// Parses a string of '0'/'1' characters.
    static BinaryVector from_string(std::string_view bits);
    static BinaryVector from_support(size_t len, std::span<const size_t> support);

    size_t size() const { return len_; }
    bool get(size_t i) const;
    void set(size_t i, bool value);
    void flip(size_t i);

    size_t weight() const;
    bool is_zero() const;
    std::vector<size_t> support() const;

    /// Parity of the bitwise AND.
    bool dot(const BinaryVector &other) const;

    BinaryVector &operator^=(const BinaryVector &other);
    BinaryVector operator^(const BinaryVector &other) const;
    bool operator==(const BinaryVector &other) const = default;
    bool operator<(const BinaryVector &other) const;

    std::span<uint64_t> words() { return words_; }
    std::span<const uint64_t> words() const { return words_; }

    std::string str() const;

   private:
    size_t len_ = 0;
    std::vector<uint64_t> words_;
};

/// Dense row-major bit matrix over GF(2).
class BinaryMatrix {
   public:
    BinaryMatrix() = default;
    BinaryMatrix(size_t rows, size_t cols);

    static BinaryMatrix identity(size_t n);
    static BinaryMatrix from_rows(size_t cols, const std::vector<BinaryVector> &rows);
    /// Each string is one row of '0'/'1' characters; all rows must have equal length.
    static BinaryMatrix from_strings(const std::vector<std::string> &rows);

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }
    size_t words_per_row() const { return stride_; }

    bool get(size_t r, size_t c) const;
    void set(size_t r, size_t c, bool value);
    void flip(size_t r, size_t c);

    BinaryVector row(size_t r) const;
    BinaryVector col(size_t c) const;
    std::span<uint64_t> row_words(size_t r) { return {data_.data() + r * stride_, stride_}; }
    std::span<const uint64_t> row_words(size_t r) const { return {data_.data() + r * stride_, stride_}; }
    size_t row_weight(size_t r) const;
    size_t col_weight(size_t c) const;

    void append_row(const BinaryVector &v);
    void xor_row_into(size_t src, size_t dst);
    void swap_rows(size_t a, size_t b);
    /// Reorders columns: column j of the result is column perm[j] of this matrix.
    BinaryMatrix permute_cols(std::span<const size_t> perm) const;
    BinaryMatrix select_rows(std::span<const size_t> rows) const;

    BinaryMatrix transpose() const;
    /// Syndrome M·v.
    BinaryVector multiply(const BinaryVector &v) const;
    /// Product this · other^T (rows × other.rows).
    BinaryMatrix multiply_transpose(const BinaryMatrix &other) const;
    bool is_zero() const;
    size_t count_ones() const;

    bool operator==(const BinaryMatrix &other) const = default;

    std::string str() const;

   private:
    size_t rows_ = 0;
    size_t cols_ = 0;
    size_t stride_ = 0;
    std::vector<uint64_t> data_;
};

/// Reduced row echelon form. Pivots are chosen left to right; the first
/// remaining row with a one in the pivot column is swapped up.
struct RowEchelon {
    BinaryMatrix reduced;  // nonzero rows only, rank × cols
    std::vector<size_t> pivot_cols;
};

RowEchelon row_reduce(const BinaryMatrix &m);
size_t rank(const BinaryMatrix &m);
/// Basis of {v : M v = 0}, one basis vector per row.
BinaryMatrix nullspace(const BinaryMatrix &m);
bool in_rowspace(const BinaryMatrix &m, const BinaryVector &v);
/// Kronecker products u ⊗ v for every pair of rows; entry (i, j) of the
/// flattened Δ_A × Δ_B block sits at column i * V.cols() + j.
BinaryMatrix tensor_basis(const BinaryMatrix &u, const BinaryMatrix &v);
BinaryVector kronecker(const BinaryVector &u, const BinaryVector &v);

/// Precomputed echelon form for repeated row-space membership and reduction queries.
class RowSpace {
   public:
    RowSpace() = default;
    explicit RowSpace(const BinaryMatrix &m);
    size_t dim() const { return echelon_.pivot_cols.size(); }
    size_t cols() const { return cols_; }
    /// Reduces v against the basis in place; v ends up zero iff v was in the span.
    void reduce(BinaryVector &v) const;
    bool contains(const BinaryVector &v) const;
    const BinaryMatrix &basis() const { return echelon_.reduced; }

   private:
    size_t cols_ = 0;
    RowEchelon echelon_;
};

/// Sparse "alist" format (MacKay). Columns come first in the header.
BinaryMatrix read_alist(std::istream &in);
void write_alist(std::ostream &out, const BinaryMatrix &m);
/// Dense format: "rows cols" then one 0/1 string per row.
BinaryMatrix read_bm(std::istream &in);
void write_bm(std::ostream &out, const BinaryMatrix &m);

BinaryMatrix load_matrix(const std::string &path);
void save_matrix(const std::string &path, const BinaryMatrix &m);

}  // namespace qcw

#endif
