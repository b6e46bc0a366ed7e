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


// Hand-built fixtures and brute-force oracles shared by the test binaries.

#ifndef QCW_TESTS_FIXTURES_HPP
#define QCW_TESTS_FIXTURES_HPP

#include <algorithm>
#include <bit>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

#include "qcw/codes.hpp"

namespace qcw::testing {

/// Matrix from 0-indexed supports.
inline BinaryMatrix from_supports(size_t n, std::initializer_list<std::vector<size_t>> rows) {
    BinaryMatrix m(0, n);
    for (const auto &r : rows) m.append_row(BinaryVector::from_support(n, r));
    return m;
}

/// Four X checks on the vertices of K4, qubits on its six edges, Z checks on
/// the four triangles: a cellulated sphere.
inline CssCode tetrahedron_code() {
    // Edges: 0=01 1=02 2=03 3=12 4=13 5=23.
    BinaryMatrix hx = from_supports(6, {{0, 1, 2}, {0, 3, 4}, {1, 3, 5}, {2, 4, 5}});
    BinaryMatrix hz = from_supports(6, {{0, 1, 3}, {0, 2, 4}, {1, 2, 5}, {3, 4, 5}});
    return CssCode(hx, hz);
}

/// A 4-cycle of doubled edges whose Z check {0,1,4,5} is two disjoint 2-cycles
/// while Z0Z1 is not a stabilizer.
inline CssCode two_cycle_counterexample() {
    BinaryMatrix hx = from_supports(8, {{0, 1, 6, 7}, {0, 1, 2, 3}, {2, 3, 4, 5}, {4, 5, 6, 7}});
    BinaryMatrix hz = from_supports(8, {{0, 1, 4, 5}, {2, 3}, {6, 7}, {1, 3, 5, 7}, {0, 2, 4, 6}});
    return CssCode(hx, hz);
}

/// Two spheres made of four bigons each, with one bigon from each merged into
/// a single Z check; both halves of the merged check are stabilizers.
inline CssCode merged_bigons_code() {
    BinaryMatrix hx = from_supports(8, {{0, 1, 2, 3}, {0, 1, 2, 3}, {4, 5, 6, 7}, {4, 5, 6, 7}});
    BinaryMatrix hz = from_supports(8, {{0, 1, 4, 5}, {1, 2}, {2, 3}, {3, 0}, {5, 6}, {6, 7}, {7, 4}});
    return CssCode(hx, hz);
}

/// An X and a Z check on the same four qubits with a disentangled pair.
inline CssCode disentangled_pair_code() {
    BinaryMatrix h = from_supports(4, {{0, 1, 2, 3}, {0, 1}, {2, 3}});
    return CssCode(h, h);
}

/// Minimum nonzero weight over the span of the rows, by plain enumeration of
/// all 2^rows combinations (no echelon form).
inline size_t brute_min_weight(const BinaryMatrix &m) {
    size_t best = 0;
    for (uint64_t mask = 1; mask < (uint64_t{1} << m.rows()); mask++) {
        BinaryVector v(m.cols());
        for (size_t r = 0; r < m.rows(); r++) {
            if (mask >> r & 1) v ^= m.row(r);
        }
        size_t w = v.weight();
        if (w && (best == 0 || w < best)) best = w;
    }
    return best;
}

/// Dimension of the row space by counting distinct combinations.
inline size_t brute_rank(const BinaryMatrix &m) {
    std::vector<BinaryVector> seen;
    for (uint64_t mask = 0; mask < (uint64_t{1} << m.rows()); mask++) {
        BinaryVector v(m.cols());
        for (size_t r = 0; r < m.rows(); r++) {
            if (mask >> r & 1) v ^= m.row(r);
        }
        if (std::find(seen.begin(), seen.end(), v) == seen.end()) seen.push_back(v);
    }
    return static_cast<size_t>(std::countr_zero(seen.size()));
}

/// (d_X, d_Z) of a CSS code by scanning all 2^n vectors: d_X is the least
/// weight in ker(H_X) outside rowspace(H_Z), and symmetrically.
inline std::pair<size_t, size_t> brute_css_distance(const CssCode &c) {
    size_t n = c.n(), dx = 0, dz = 0;
    for (uint64_t mask = 1; mask < (uint64_t{1} << n); mask++) {
        BinaryVector v(n);
        for (size_t i = 0; i < n; i++) v.set(i, mask >> i & 1);
        size_t w = v.weight();
        if ((dx == 0 || w < dx) && c.hx().multiply(v).is_zero() && !in_rowspace(c.hz(), v)) dx = w;
        if ((dz == 0 || w < dz) && c.hz().multiply(v).is_zero() && !in_rowspace(c.hx(), v)) dz = w;
    }
    return {dx, dz};
}

/// Random CSS code: random H_X, H_Z drawn from the dual of H_X.
template <typename R>
CssCode random_css(R &rng, size_t n) {
    BinaryMatrix hx(1 + rng.below(n / 2 + 1), n);
    for (size_t r = 0; r < hx.rows(); r++) {
        for (size_t c = 0; c < n; c++) hx.set(r, c, rng.below(2));
    }
    BinaryMatrix dual = nullspace(hx);
    BinaryMatrix hz(0, n);
    for (size_t r = 0; r < dual.rows(); r++) {
        if (rng.below(3) == 0) hz.append_row(dual.row(r));
    }
    return CssCode(hx, hz);
}

}  // namespace qcw::testing

#endif
