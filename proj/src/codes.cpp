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

#include "qcw/codes.hpp"

#include <algorithm>
#include <bit>

namespace qcw {

namespace {

/// Calls fn(v) for every vector in the span of the (independent) rows,
/// including zero, by a Gray-code walk.
template <typename Fn>
void for_each_in_span(const BinaryMatrix &basis, Fn &&fn) {
    size_t r = basis.rows();
    if (r >= 40) {
        throw std::length_error("span of dimension " + std::to_string(r) + " is too large to enumerate");
    }
    BinaryVector v(basis.cols());
    fn(v);
    for (uint64_t i = 1; i < (uint64_t{1} << r); i++) {
        v ^= basis.row(static_cast<size_t>(std::countr_zero(i)));
        fn(v);
    }
}

}  // namespace

std::vector<uint64_t> weight_distribution(const BinaryMatrix &basis) {
    BinaryMatrix b = row_reduce(basis).reduced;
    std::vector<uint64_t> dist(basis.cols() + 1, 0);
    for_each_in_span(b, [&](const BinaryVector &v) { dist[v.weight()]++; });
    return dist;
}

size_t min_weight(const BinaryMatrix &basis) {
    auto dist = weight_distribution(basis);
    for (size_t w = 1; w < dist.size(); w++) {
        if (dist[w]) return w;
    }
    return 0;
}

CssCode::CssCode(BinaryMatrix hx, BinaryMatrix hz) : hx_(std::move(hx)), hz_(std::move(hz)) {
    if (hx_.cols() != hz_.cols()) {
        throw MalformedCode("H_X has " + std::to_string(hx_.cols()) + " columns but H_Z has " +
                            std::to_string(hz_.cols()));
    }
    BinaryMatrix prod = hx_.multiply_transpose(hz_);
    for (size_t i = 0; i < prod.rows(); i++) {
        for (size_t j = 0; j < prod.cols(); j++) {
            if (prod.get(i, j)) {
                throw MalformedCode("X check " + std::to_string(i) + " anticommutes with Z check " +
                                    std::to_string(j));
            }
        }
    }
    rank_x_ = rank(hx_);
    rank_z_ = rank(hz_);
}

CssParams css_params(const CssCode &c) {
    CssParams p;
    p.n = c.n();
    p.k = c.k();
    auto stats = [](const BinaryMatrix &m, size_t &w_max, size_t &q_max, double &w_sum, size_t &w_cnt,
                    std::vector<size_t> &deg) {
        for (size_t r = 0; r < m.rows(); r++) {
            size_t w = m.row_weight(r);
            w_max = std::max(w_max, w);
            if (w) {
                w_sum += static_cast<double>(w);
                w_cnt++;
            }
        }
        for (size_t col = 0; col < m.cols(); col++) {
            size_t q = m.col_weight(col);
            q_max = std::max(q_max, q);
            deg[col] += q;
        }
    };
    double sx = 0, sz = 0;
    size_t cx = 0, cz = 0;
    std::vector<size_t> dx(c.n(), 0), dz(c.n(), 0);
    stats(c.hx(), p.w_x, p.q_x, sx, cx, dx);
    stats(c.hz(), p.w_z, p.q_z, sz, cz, dz);
    p.wbar_x = cx ? sx / static_cast<double>(cx) : 0;
    p.wbar_z = cz ? sz / static_cast<double>(cz) : 0;
    p.wbar = cx + cz ? (sx + sz) / static_cast<double>(cx + cz) : 0;
    double qsum = 0;
    size_t qcnt = 0;
    for (size_t i = 0; i < c.n(); i++) {
        if (dx[i]) {
            qsum += static_cast<double>(dx[i]);
            qcnt++;
        }
        if (dz[i]) {
            qsum += static_cast<double>(dz[i]);
            qcnt++;
        }
    }
    p.qbar = qcnt ? qsum / static_cast<double>(qcnt) : 0;
    return p;
}

std::pair<std::vector<Rational>, std::vector<Rational>> css_weight_enumerators(const CssCode &c) {
    auto convert = [](const std::vector<uint64_t> &d) {
        std::vector<Rational> out;
        for (uint64_t v : d) out.emplace_back(mpz_class(std::to_string(v)));
        return out;
    };
    return {convert(weight_distribution(c.hz())), convert(weight_distribution(c.hx()))};
}

PauliOperator::PauliOperator(BinaryVector x_part, BinaryVector z_part) : x(std::move(x_part)), z(std::move(z_part)) {
    if (x.size() != z.size()) throw std::invalid_argument("Pauli x/z parts differ in length");
}

PauliOperator PauliOperator::from_string(std::string_view s) {
    PauliOperator p(s.size());
    for (size_t i = 0; i < s.size(); i++) {
        switch (s[i]) {
            case 'I':
            case '_':
                break;
            case 'X':
                p.x.set(i, true);
                break;
            case 'Z':
                p.z.set(i, true);
                break;
            case 'Y':
                p.x.set(i, true);
                p.z.set(i, true);
                break;
            default:
                throw std::invalid_argument(std::string("bad Pauli letter '") + s[i] + "'");
        }
    }
    return p;
}

size_t PauliOperator::weight() const {
    size_t w = 0;
    auto xs = x.words(), zs = z.words();
    for (size_t i = 0; i < xs.size(); i++) w += std::popcount(xs[i] | zs[i]);
    return w;
}

std::vector<size_t> PauliOperator::support() const {
    std::vector<size_t> out;
    for (size_t i = 0; i < size(); i++) {
        if (x.get(i) || z.get(i)) out.push_back(i);
    }
    return out;
}

bool PauliOperator::commutes(const PauliOperator &other) const {
    if (other.size() != size()) throw std::invalid_argument("Pauli length mismatch");
    return x.dot(other.z) == z.dot(other.x);
}

PauliOperator PauliOperator::operator*(const PauliOperator &other) const { return {x ^ other.x, z ^ other.z}; }

std::string PauliOperator::str() const {
    std::string s(size(), 'I');
    for (size_t i = 0; i < size(); i++) {
        bool a = x.get(i), b = z.get(i);
        s[i] = a && b ? 'Y' : a ? 'X' : b ? 'Z' : 'I';
    }
    return s;
}

BinaryMatrix symplectic_matrix(const std::vector<PauliOperator> &ops, size_t n) {
    BinaryMatrix m(ops.size(), 2 * n);
    for (size_t r = 0; r < ops.size(); r++) {
        if (ops[r].size() != n) throw MalformedCode("operator " + std::to_string(r) + " has the wrong length");
        for (size_t i : ops[r].x.support()) m.set(r, i, true);
        for (size_t i : ops[r].z.support()) m.set(r, n + i, true);
    }
    return m;
}

PauliOperator pauli_from_symplectic(const BinaryVector &v) {
    size_t n = v.size() / 2;
    PauliOperator p(n);
    for (size_t i = 0; i < n; i++) {
        p.x.set(i, v.get(i));
        p.z.set(i, v.get(n + i));
    }
    return p;
}

StabilizerCode::StabilizerCode(size_t n, std::vector<PauliOperator> checks) : n_(n), checks_(std::move(checks)) {
    for (size_t i = 0; i < checks_.size(); i++) {
        if (checks_[i].size() != n_) throw MalformedCode("check " + std::to_string(i) + " has the wrong length");
        for (size_t j = 0; j < i; j++) {
            if (!checks_[i].commutes(checks_[j])) {
                throw MalformedCode("checks " + std::to_string(j) + " and " + std::to_string(i) + " anticommute");
            }
        }
    }
}

StabilizerCode StabilizerCode::from_css(const CssCode &c) {
    std::vector<PauliOperator> checks;
    size_t n = c.n();
    for (size_t r = 0; r < c.hx().rows(); r++) checks.emplace_back(c.hx().row(r), BinaryVector(n));
    for (size_t r = 0; r < c.hz().rows(); r++) checks.emplace_back(BinaryVector(n), c.hz().row(r));
    return StabilizerCode(n, std::move(checks));
}

size_t StabilizerCode::k() const { return n_ - rank(symplectic_matrix(checks_, n_)); }

StabilizerParams stabilizer_params(const StabilizerCode &c) {
    StabilizerParams p;
    p.n = c.n();
    p.k = c.k();
    std::vector<size_t> deg(c.n(), 0);
    for (const auto &s : c.checks()) {
        p.w = std::max(p.w, s.weight());
        for (size_t i : s.support()) deg[i]++;
    }
    for (size_t d : deg) p.q = std::max(p.q, d);
    return p;
}

std::vector<Rational> stabilizer_weight_enumerator(const StabilizerCode &c) {
    size_t n = c.n();
    BinaryMatrix basis = row_reduce(symplectic_matrix(c.checks(), n)).reduced;
    std::vector<uint64_t> dist(n + 1, 0);
    for_each_in_span(basis, [&](const BinaryVector &v) {
        size_t w = 0;
        for (size_t i = 0; i < n; i++) w += v.get(i) || v.get(n + i);
        dist[w]++;
    });
    std::vector<Rational> out;
    for (uint64_t v : dist) out.emplace_back(mpz_class(std::to_string(v)));
    return out;
}

SubsystemCode::SubsystemCode(size_t n, std::vector<PauliOperator> gauge) : n_(n), gauge_(std::move(gauge)) {
    for (size_t i = 0; i < gauge_.size(); i++) {
        if (gauge_[i].size() != n_) throw MalformedCode("gauge check " + std::to_string(i) + " has the wrong length");
    }
}

SubsystemDecomposition subsystem_decompose(const SubsystemCode &c, size_t cap) {
    size_t n = c.n();
    if (n > cap) {
        throw std::length_error("subsystem decomposition capped at n = " + std::to_string(cap) + ", got " +
                                std::to_string(n));
    }
    BinaryMatrix basis = row_reduce(symplectic_matrix(c.gauge(), n)).reduced;
    size_t r = basis.rows();
    std::vector<PauliOperator> ops;
    for (size_t i = 0; i < r; i++) ops.push_back(pauli_from_symplectic(basis.row(i)));
    // Gram matrix of the symplectic form; its kernel spans the center.
    BinaryMatrix gram(r, r);
    for (size_t i = 0; i < r; i++) {
        for (size_t j = 0; j < r; j++) gram.set(i, j, !ops[i].commutes(ops[j]));
    }
    BinaryMatrix kernel = nullspace(gram);
    SubsystemDecomposition out;
    out.gauge_rank = r;
    out.stabilizer_rank = kernel.rows();
    for (size_t t = 0; t < kernel.rows(); t++) {
        PauliOperator s(n);
        for (size_t i : kernel.row(t).support()) s = s * ops[i];
        out.stabilizer_basis.push_back(s);
    }
    out.g = (r - out.stabilizer_rank) / 2;
    out.k = (2 * n - r - out.stabilizer_rank) / 2;
    return out;
}

}  // namespace qcw
