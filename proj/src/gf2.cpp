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

#include "qcw/gf2.hpp"

#include <algorithm>
#include <bit>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace qcw {

namespace {

size_t word_count(size_t bits) { return (bits + 63) / 64; }

void check_index(size_t i, size_t len, const char *what) {
    if (i >= len) {
        std::ostringstream ss;
        ss << what << " index " << i << " out of range for size " << len;
        throw std::out_of_range(ss.str());
    }
}

}  // namespace

BinaryVector::BinaryVector(size_t len) : len_(len), words_(word_count(len), 0) {}

BinaryVector BinaryVector::from_string(std::string_view bits) {
    BinaryVector v(bits.size());
    for (size_t i = 0; i < bits.size(); i++) {
        if (bits[i] == '1') {
            v.set(i, true);
        } else if (bits[i] != '0') {
            throw std::invalid_argument("binary string may only contain '0' and '1'");
        }
    }
    return v;
}

BinaryVector BinaryVector::from_support(size_t len, std::span<const size_t> support) {
    BinaryVector v(len);
    for (size_t i : support) {
        v.set(i, true);
    }
    return v;
}

bool BinaryVector::get(size_t i) const {
    check_index(i, len_, "vector");
    return (words_[i >> 6] >> (i & 63)) & 1;
}

void BinaryVector::set(size_t i, bool value) {
    check_index(i, len_, "vector");
    uint64_t mask = uint64_t{1} << (i & 63);
    if (value) {
        words_[i >> 6] |= mask;
    } else {
        words_[i >> 6] &= ~mask;
    }
}

void BinaryVector::flip(size_t i) {
    check_index(i, len_, "vector");
    words_[i >> 6] ^= uint64_t{1} << (i & 63);
}

size_t BinaryVector::weight() const {
    size_t total = 0;
    for (uint64_t w : words_) {
        total += std::popcount(w);
    }
    return total;
}

bool BinaryVector::is_zero() const {
    return std::all_of(words_.begin(), words_.end(), [](uint64_t w) { return w == 0; });
}

std::vector<size_t> BinaryVector::support() const {
    std::vector<size_t> out;
    for (size_t k = 0; k < words_.size(); k++) {
        uint64_t w = words_[k];
        while (w) {
            out.push_back(k * 64 + std::countr_zero(w));
            w &= w - 1;
        }
    }
    return out;
}

bool BinaryVector::dot(const BinaryVector &other) const {
    if (other.len_ != len_) {
        throw std::invalid_argument("dot product of vectors with different lengths");
    }
    uint64_t acc = 0;
    for (size_t k = 0; k < words_.size(); k++) {
        acc ^= words_[k] & other.words_[k];
    }
    return std::popcount(acc) & 1;
}

BinaryVector &BinaryVector::operator^=(const BinaryVector &other) {
    if (other.len_ != len_) {
        throw std::invalid_argument("xor of vectors with different lengths");
    }
    for (size_t k = 0; k < words_.size(); k++) {
        words_[k] ^= other.words_[k];
    }
    return *this;
}

BinaryVector BinaryVector::operator^(const BinaryVector &other) const {
    BinaryVector out = *this;
    out ^= other;
    return out;
}

bool BinaryVector::operator<(const BinaryVector &other) const {
    if (len_ != other.len_) {
        return len_ < other.len_;
    }
    for (size_t i = 0; i < len_; i++) {
        bool a = get(i), b = other.get(i);
        if (a != b) {
            return b;
        }
    }
    return false;
}

std::string BinaryVector::str() const {
    std::string s(len_, '0');
    for (size_t i : support()) {
        s[i] = '1';
    }
    return s;
}

BinaryMatrix::BinaryMatrix(size_t rows, size_t cols)
    : rows_(rows), cols_(cols), stride_(word_count(cols)), data_(rows * word_count(cols), 0) {}

BinaryMatrix BinaryMatrix::identity(size_t n) {
    BinaryMatrix m(n, n);
    for (size_t i = 0; i < n; i++) {
        m.set(i, i, true);
    }
    return m;
}

BinaryMatrix BinaryMatrix::from_rows(size_t cols, const std::vector<BinaryVector> &rows) {
    BinaryMatrix m(0, cols);
    for (const auto &r : rows) {
        m.append_row(r);
    }
    return m;
}

BinaryMatrix BinaryMatrix::from_strings(const std::vector<std::string> &rows) {
    if (rows.empty()) {
        return BinaryMatrix();
    }
    BinaryMatrix m(0, rows[0].size());
    for (const auto &r : rows) {
        if (r.size() != rows[0].size()) {
            throw std::invalid_argument("rows of unequal length");
        }
        m.append_row(BinaryVector::from_string(r));
    }
    return m;
}

bool BinaryMatrix::get(size_t r, size_t c) const {
    check_index(r, rows_, "row");
    check_index(c, cols_, "column");
    return (data_[r * stride_ + (c >> 6)] >> (c & 63)) & 1;
}

void BinaryMatrix::set(size_t r, size_t c, bool value) {
    check_index(r, rows_, "row");
    check_index(c, cols_, "column");
    uint64_t mask = uint64_t{1} << (c & 63);
    uint64_t &w = data_[r * stride_ + (c >> 6)];
    w = value ? (w | mask) : (w & ~mask);
}

void BinaryMatrix::flip(size_t r, size_t c) {
    check_index(r, rows_, "row");
    check_index(c, cols_, "column");
    data_[r * stride_ + (c >> 6)] ^= uint64_t{1} << (c & 63);
}

BinaryVector BinaryMatrix::row(size_t r) const {
    check_index(r, rows_, "row");
    BinaryVector v(cols_);
    std::copy_n(data_.begin() + r * stride_, stride_, v.words().begin());
    return v;
}

BinaryVector BinaryMatrix::col(size_t c) const {
    check_index(c, cols_, "column");
    BinaryVector v(rows_);
    for (size_t r = 0; r < rows_; r++) {
        if ((data_[r * stride_ + (c >> 6)] >> (c & 63)) & 1) {
            v.set(r, true);
        }
    }
    return v;
}

size_t BinaryMatrix::row_weight(size_t r) const {
    size_t total = 0;
    for (uint64_t w : row_words(r)) {
        total += std::popcount(w);
    }
    return total;
}

size_t BinaryMatrix::col_weight(size_t c) const { return col(c).weight(); }

void BinaryMatrix::append_row(const BinaryVector &v) {
    if (v.size() != cols_) {
        throw std::invalid_argument("appended row has wrong length");
    }
    data_.insert(data_.end(), v.words().begin(), v.words().end());
    rows_++;
}

void BinaryMatrix::xor_row_into(size_t src, size_t dst) {
    uint64_t *d = data_.data() + dst * stride_;
    const uint64_t *s = data_.data() + src * stride_;
    for (size_t k = 0; k < stride_; k++) {
        d[k] ^= s[k];
    }
}

void BinaryMatrix::swap_rows(size_t a, size_t b) {
    if (a == b) {
        return;
    }
    std::swap_ranges(data_.begin() + a * stride_, data_.begin() + (a + 1) * stride_, data_.begin() + b * stride_);
}

BinaryMatrix BinaryMatrix::permute_cols(std::span<const size_t> perm) const {
    if (perm.size() != cols_) {
        throw std::invalid_argument("permutation length does not match column count");
    }
    BinaryMatrix out(rows_, cols_);
    for (size_t r = 0; r < rows_; r++) {
        for (size_t j = 0; j < cols_; j++) {
            if (get(r, perm[j])) {
                out.set(r, j, true);
            }
        }
    }
    return out;
}

BinaryMatrix BinaryMatrix::select_rows(std::span<const size_t> rows) const {
    BinaryMatrix out(0, cols_);
    for (size_t r : rows) {
        out.append_row(row(r));
    }
    return out;
}

BinaryMatrix BinaryMatrix::transpose() const {
    BinaryMatrix t(cols_, rows_);
    for (size_t r = 0; r < rows_; r++) {
        for (size_t c : row(r).support()) {
            t.set(c, r, true);
        }
    }
    return t;
}

BinaryVector BinaryMatrix::multiply(const BinaryVector &v) const {
    if (v.size() != cols_) {
        throw std::invalid_argument("matrix-vector length mismatch");
    }
    BinaryVector out(rows_);
    auto vw = v.words();
    for (size_t r = 0; r < rows_; r++) {
        uint64_t acc = 0;
        const uint64_t *row = data_.data() + r * stride_;
        for (size_t k = 0; k < stride_; k++) {
            acc ^= row[k] & vw[k];
        }
        if (std::popcount(acc) & 1) {
            out.set(r, true);
        }
    }
    return out;
}

BinaryMatrix BinaryMatrix::multiply_transpose(const BinaryMatrix &other) const {
    if (other.cols_ != cols_) {
        throw std::invalid_argument("matrix product column mismatch");
    }
    BinaryMatrix out(rows_, other.rows_);
    for (size_t i = 0; i < rows_; i++) {
        const uint64_t *a = data_.data() + i * stride_;
        for (size_t j = 0; j < other.rows_; j++) {
            const uint64_t *b = other.data_.data() + j * stride_;
            uint64_t acc = 0;
            for (size_t k = 0; k < stride_; k++) {
                acc ^= a[k] & b[k];
            }
            if (std::popcount(acc) & 1) {
                out.set(i, j, true);
            }
        }
    }
    return out;
}

bool BinaryMatrix::is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [](uint64_t w) { return w == 0; });
}

size_t BinaryMatrix::count_ones() const {
    size_t total = 0;
    for (uint64_t w : data_) {
        total += std::popcount(w);
    }
    return total;
}

std::string BinaryMatrix::str() const {
    std::string s;
    for (size_t r = 0; r < rows_; r++) {
        s += row(r).str();
        s += '\n';
    }
    return s;
}

RowEchelon row_reduce(const BinaryMatrix &m) {
    BinaryMatrix work = m;
    std::vector<size_t> pivots;
    size_t next = 0;
    for (size_t c = 0; c < work.cols() && next < work.rows(); c++) {
        size_t word = c >> 6;
        uint64_t mask = uint64_t{1} << (c & 63);
        size_t found = work.rows();
        for (size_t r = next; r < work.rows(); r++) {
            if (work.row_words(r)[word] & mask) {
                found = r;
                break;
            }
        }
        if (found == work.rows()) {
            continue;
        }
        work.swap_rows(found, next);
        for (size_t r = 0; r < work.rows(); r++) {
            if (r != next && (work.row_words(r)[word] & mask)) {
                work.xor_row_into(next, r);
            }
        }
        pivots.push_back(c);
        next++;
    }
    std::vector<size_t> keep(next);
    for (size_t i = 0; i < next; i++) {
        keep[i] = i;
    }
    return RowEchelon{work.select_rows(keep), std::move(pivots)};
}

size_t rank(const BinaryMatrix &m) { return row_reduce(m).pivot_cols.size(); }

BinaryMatrix nullspace(const BinaryMatrix &m) {
    RowEchelon e = row_reduce(m);
    size_t n = m.cols();
    std::vector<bool> is_pivot(n, false);
    for (size_t p : e.pivot_cols) {
        is_pivot[p] = true;
    }
    BinaryMatrix basis(0, n);
    for (size_t free = 0; free < n; free++) {
        if (is_pivot[free]) {
            continue;
        }
        BinaryVector v(n);
        v.set(free, true);
        for (size_t i = 0; i < e.pivot_cols.size(); i++) {
            if (e.reduced.get(i, free)) {
                v.set(e.pivot_cols[i], true);
            }
        }
        basis.append_row(v);
    }
    return basis;
}

RowSpace::RowSpace(const BinaryMatrix &m) : cols_(m.cols()), echelon_(row_reduce(m)) {}

void RowSpace::reduce(BinaryVector &v) const {
    if (v.size() != cols_) {
        throw std::invalid_argument("vector length does not match row space");
    }
    auto vw = v.words();
    for (size_t i = 0; i < echelon_.pivot_cols.size(); i++) {
        size_t p = echelon_.pivot_cols[i];
        if ((vw[p >> 6] >> (p & 63)) & 1) {
            auto rw = echelon_.reduced.row_words(i);
            for (size_t k = 0; k < vw.size(); k++) {
                vw[k] ^= rw[k];
            }
        }
    }
}

bool RowSpace::contains(const BinaryVector &v) const {
    BinaryVector w = v;
    reduce(w);
    return w.is_zero();
}

bool in_rowspace(const BinaryMatrix &m, const BinaryVector &v) {
    if (v.size() != m.cols()) {
        throw std::invalid_argument("in_rowspace: vector length does not match matrix columns");
    }
    return RowSpace(m).contains(v);
}

BinaryVector kronecker(const BinaryVector &u, const BinaryVector &v) {
    BinaryVector out(u.size() * v.size());
    for (size_t i : u.support()) {
        for (size_t j : v.support()) {
            out.set(i * v.size() + j, true);
        }
    }
    return out;
}

BinaryMatrix tensor_basis(const BinaryMatrix &u, const BinaryMatrix &v) {
    BinaryMatrix out(0, u.cols() * v.cols());
    for (size_t i = 0; i < u.rows(); i++) {
        BinaryVector ui = u.row(i);
        for (size_t j = 0; j < v.rows(); j++) {
            out.append_row(kronecker(ui, v.row(j)));
        }
    }
    return out;
}

BinaryMatrix read_alist(std::istream &in) {
    size_t n, m;
    if (!(in >> n >> m)) {
        throw std::runtime_error("alist: missing dimensions");
    }
    size_t max_col, max_row;
    if (!(in >> max_col >> max_row)) {
        throw std::runtime_error("alist: missing maximum weights");
    }
    std::vector<size_t> col_w(n), row_w(m);
    for (auto &w : col_w) {
        if (!(in >> w)) throw std::runtime_error("alist: truncated column weights");
    }
    for (auto &w : row_w) {
        if (!(in >> w)) throw std::runtime_error("alist: truncated row weights");
    }
    BinaryMatrix out(m, n);
    for (size_t c = 0; c < n; c++) {
        for (size_t k = 0; k < max_col; k++) {
            size_t r;
            if (!(in >> r)) throw std::runtime_error("alist: truncated column lists");
            if (r == 0) continue;
            if (k >= col_w[c] || r > m) throw std::runtime_error("alist: inconsistent column list");
            out.set(r - 1, c, true);
        }
    }
    for (size_t r = 0; r < m; r++) {
        size_t seen = 0;
        for (size_t k = 0; k < max_row; k++) {
            size_t c;
            if (!(in >> c)) throw std::runtime_error("alist: truncated row lists");
            if (c == 0) continue;
            if (c > n || !out.get(r, c - 1)) throw std::runtime_error("alist: row and column lists disagree");
            seen++;
        }
        if (seen != row_w[r]) throw std::runtime_error("alist: row weight mismatch");
    }
    for (size_t c = 0; c < n; c++) {
        if (out.col_weight(c) != col_w[c]) throw std::runtime_error("alist: column weight mismatch");
    }
    return out;
}

void write_alist(std::ostream &out, const BinaryMatrix &m) {
    size_t n = m.cols(), rows = m.rows();
    std::vector<std::vector<size_t>> cols(n), rws(rows);
    for (size_t r = 0; r < rows; r++) {
        for (size_t c : m.row(r).support()) {
            rws[r].push_back(c + 1);
            cols[c].push_back(r + 1);
        }
    }
    size_t max_col = 0, max_row = 0;
    for (auto &c : cols) max_col = std::max(max_col, c.size());
    for (auto &r : rws) max_row = std::max(max_row, r.size());
    auto emit_line = [&](const std::vector<size_t> &vals, size_t width) {
        for (size_t k = 0; k < width; k++) {
            if (k) out << ' ';
            out << (k < vals.size() ? vals[k] : 0);
        }
        out << '\n';
    };
    out << n << ' ' << rows << '\n' << max_col << ' ' << max_row << '\n';
    std::vector<size_t> cw, rw;
    for (auto &c : cols) cw.push_back(c.size());
    for (auto &r : rws) rw.push_back(r.size());
    emit_line(cw, cw.size());
    emit_line(rw, rw.size());
    for (auto &c : cols) emit_line(c, max_col);
    for (auto &r : rws) emit_line(r, max_row);
}

BinaryMatrix read_bm(std::istream &in) {
    size_t rows, cols;
    if (!(in >> rows >> cols)) {
        throw std::runtime_error("bm: missing dimensions");
    }
    BinaryMatrix out(0, cols);
    for (size_t r = 0; r < rows; r++) {
        std::string line;
        if (!(in >> line) || line.size() != cols) {
            throw std::runtime_error("bm: row " + std::to_string(r) + " missing or wrong length");
        }
        out.append_row(BinaryVector::from_string(line));
    }
    return out;
}

void write_bm(std::ostream &out, const BinaryMatrix &m) {
    out << m.rows() << ' ' << m.cols() << '\n';
    for (size_t r = 0; r < m.rows(); r++) {
        out << m.row(r).str() << '\n';
    }
}

namespace {
bool ends_with(const std::string &s, std::string_view suffix) {
    return s.size() >= suffix.size() && s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}
}  // namespace

BinaryMatrix load_matrix(const std::string &path) {
    std::ifstream in(path);
    if (!in) {
        throw std::runtime_error("cannot open " + path);
    }
    return ends_with(path, ".bm") ? read_bm(in) : read_alist(in);
}

void save_matrix(const std::string &path, const BinaryMatrix &m) {
    std::ofstream out(path);
    if (!out) {
        throw std::runtime_error("cannot write " + path);
    }
    if (ends_with(path, ".bm")) {
        write_bm(out, m);
    } else {
        write_alist(out, m);
    }
}

}  // namespace qcw
