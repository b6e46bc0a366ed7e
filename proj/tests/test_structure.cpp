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


#include <algorithm>
#include <cmath>
#include <numeric>

#include "doctest.h"
#include "fixtures.hpp"
#include "qcw/library.hpp"
#include "qcw/rng.hpp"
#include "qcw/structure.hpp"

using namespace qcw;
using namespace qcw::testing;

namespace {

/// True when b equals a after some row and column permutation (small sizes).
bool equal_up_to_permutation(const BinaryMatrix &a, const BinaryMatrix &b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
    std::vector<size_t> perm(a.cols());
    std::iota(perm.begin(), perm.end(), 0);
    auto sorted_rows = [](const BinaryMatrix &m) {
        std::vector<std::string> rows;
        for (size_t r = 0; r < m.rows(); r++) rows.push_back(m.row(r).str());
        std::sort(rows.begin(), rows.end());
        return rows;
    };
    auto target = sorted_rows(b);
    do {
        if (sorted_rows(a.permute_cols(perm)) == target) return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

/// Dressed distances from the stabilizer basis of the decomposition: an X
/// vector is a nontrivial dressed logical when it commutes with every
/// stabilizer and lies outside the X part of the gauge group.
std::pair<size_t, size_t> oracle_dressed(const SubsystemCode &c) {
    auto dec = subsystem_decompose(c);
    BinaryMatrix gx(0, c.n()), gz(0, c.n());
    for (const auto &g : c.gauge()) {
        if (!g.x.is_zero()) gx.append_row(g.x);
        if (!g.z.is_zero()) gz.append_row(g.z);
    }
    size_t dx = 0, dz = 0;
    for (uint64_t m = 1; m < (uint64_t{1} << c.n()); m++) {
        BinaryVector v(c.n());
        for (size_t i = 0; i < c.n(); i++) {
            if (m >> i & 1) v.set(i, true);
        }
        size_t w = v.weight();
        bool commute_x = true, commute_z = true;
        for (const auto &s : dec.stabilizer_basis) {
            commute_x = commute_x && !v.dot(s.z);
            commute_z = commute_z && !v.dot(s.x);
        }
        if (commute_x && !in_rowspace(gx, v) && (dx == 0 || w < dx)) dx = w;
        if (commute_z && !in_rowspace(gz, v) && (dz == 0 || w < dz)) dz = w;
    }
    return {dx, dz};
}

BinaryMatrix random_matrix(Rng &rng, size_t max_ones) {
    size_t rows = 1 + rng.below(6), cols = 1 + rng.below(6);
    BinaryMatrix a(rows, cols);
    size_t ones = 1 + rng.below(max_ones);
    for (size_t i = 0; i < ones; i++) a.set(rng.below(rows), rng.below(cols), true);
    return a;
}

SubsystemCode nine_qubit_example_code() {
    // 1-indexed qubit labels, shifted to 0-indexed.
    auto pair = [](char t, size_t i, size_t j) {
        PauliOperator p(9);
        (t == 'X' ? p.x : p.z).set(i - 1, true);
        if (j) (t == 'X' ? p.x : p.z).set(j - 1, true);
        return p;
    };
    return SubsystemCode(9, {pair('X', 2, 3), pair('X', 4, 6), pair('X', 7, 8), pair('X', 8, 9), pair('X', 1, 0),
                             pair('X', 5, 0), pair('Z', 1, 4), pair('Z', 4, 7), pair('Z', 2, 5), pair('Z', 5, 8),
                             pair('Z', 3, 6), pair('Z', 9, 0)});
}

const BinaryMatrix kNineQubitMatrix = BinaryMatrix::from_strings({"011", "101", "110"});

}  // namespace

TEST_CASE("matrix distances agree with plain enumeration") {
    Rng rng(11);
    for (int t = 0; t < 60; t++) {
        BinaryMatrix a = random_matrix(rng, 14);
        auto d = matrix_distances(a);
        CHECK(d.rank == brute_rank(a));
        CHECK(d.d_row == brute_min_weight(a));
        CHECK(d.d_col == brute_min_weight(a.transpose()));
    }
    auto d = matrix_distances(kNineQubitMatrix);
    CHECK(d.rank == 2);
    CHECK(d.d_row == 2);
    CHECK(d.d_col == 2);
}

TEST_CASE("matrix distances reject ranks above the enumeration cap") {
    CHECK_THROWS_AS(matrix_distances(BinaryMatrix::identity(21)), std::length_error);
    CHECK(matrix_distances(BinaryMatrix::identity(20)).d_row == 1);
}

TEST_CASE("forward construction places qubits on the ones") {
    SUBCASE("identity") {
        auto c = subsystem_from_matrix(BinaryMatrix::identity(4));
        CHECK(c.n() == 4);
        CHECK(c.gauge().empty());
        CHECK(subsystem_decompose(c).k == 4);
        CHECK(subsystem_css_distances(c) == std::pair<size_t, size_t>{1, 1});
    }
    SUBCASE("single row") {
        BinaryMatrix a = BinaryMatrix::from_strings({"11111"});
        auto c = subsystem_from_matrix(a);
        CHECK(c.n() == 5);
        CHECK(subsystem_decompose(c).k == 1);
        CHECK(subsystem_css_distances(c) == std::pair<size_t, size_t>{1, 5});
        CHECK(oracle_dressed(c) == std::pair<size_t, size_t>{1, 5});
    }
    SUBCASE("nine-qubit example matrix") {
        auto c = subsystem_from_matrix(kNineQubitMatrix);
        CHECK(c.n() == 6);
        CHECK(subsystem_decompose(c).k == 2);
        CHECK(subsystem_css_distances(c) == std::pair<size_t, size_t>{2, 2});
        CHECK(oracle_dressed(c) == std::pair<size_t, size_t>{2, 2});
    }
    CHECK_THROWS_AS(subsystem_from_matrix(BinaryMatrix(2, 3)), std::invalid_argument);
}

TEST_CASE("forward construction matches rank and distances of A") {
    Rng rng(2024);
    for (int t = 0; t < 100; t++) {
        BinaryMatrix a = random_matrix(rng, 12);
        auto md = matrix_distances(a);
        auto c = subsystem_from_matrix(a);
        CHECK(subsystem_decompose(c).k == md.rank);
        auto [dx, dz] = oracle_dressed(c);
        CHECK(dx == md.d_col);
        CHECK(dz == md.d_row);
        CHECK(subsystem_css_distances(c) == std::pair<size_t, size_t>{dx, dz});
        size_t d = std::min(md.d_row, md.d_col);
        CHECK(static_cast<double>(d) <= std::sqrt(static_cast<double>(c.n())));
        CHECK(md.rank * d <= c.n());
    }
}

TEST_CASE("converse extraction recovers the nine-qubit example") {
    auto c = nine_qubit_example_code();
    auto an = analyze_weight2_subsystem_full(c);
    CHECK(equal_up_to_permutation(an.a, kNineQubitMatrix));
    CHECK(subsystem_decompose(c).k == 2);
    CHECK(oracle_dressed(c) == std::pair<size_t, size_t>{2, 2});
    size_t weight1 = 0;
    for (const auto &comp : an.graph.components) weight1 += comp.kind == ComponentKind::kWeight1;
    CHECK(weight1 == 3);
}

TEST_CASE("round trip through the forward construction") {
    Rng rng(77);
    for (int t = 0; t < 100; t++) {
        BinaryMatrix a = random_matrix(rng, 12);
        BinaryMatrix back = analyze_weight2_subsystem(subsystem_from_matrix(a));
        CHECK(back.count_ones() <= a.count_ones());
        auto d0 = matrix_distances(a), d1 = matrix_distances(back);
        CHECK(d0.rank == d1.rank);
        CHECK(d0.d_row == d1.d_row);
        CHECK(d0.d_col == d1.d_col);
    }
}

TEST_CASE("converse extraction on random weight-2 gauge groups") {
    Rng rng(5);
    for (int t = 0; t < 150; t++) {
        size_t n = 2 + rng.below(7);
        std::vector<PauliOperator> gauge;
        size_t m = rng.below(2 * n);
        for (size_t i = 0; i < m; i++) {
            PauliOperator p(n);
            auto &part = rng.below(2) ? p.x : p.z;
            part.set(rng.below(n), true);
            if (rng.below(3)) part.set(rng.below(n), true);  // may coincide: weight 1
            gauge.push_back(p);
        }
        SubsystemCode c(n, gauge);
        auto an = analyze_weight2_subsystem_full(c);
        CHECK(an.a.count_ones() <= n);
        for (const auto &comp : an.graph.components) {
            for (size_t q : comp.qubits) CHECK(q < n);
        }
        size_t k = subsystem_decompose(c).k;
        size_t r = an.a.rows() ? rank(an.a) : 0;
        CHECK(k == r);
        if (k > 0) {
            auto md = matrix_distances(an.a);
            auto [dx, dz] = oracle_dressed(c);
            CHECK(dx == md.d_col);
            CHECK(dz == md.d_row);
        }
    }
}

TEST_CASE("converse extraction edge cases") {
    PauliOperator z1(3), x1(3);
    z1.z.set(0, true);
    x1.x.set(1, true);
    x1.x.set(2, true);
    SubsystemCode ones_only(1, {PauliOperator::from_string("Z"), PauliOperator::from_string("X")});
    auto a = analyze_weight2_subsystem(ones_only);
    CHECK(a.rows() == 0);
    CHECK(a.cols() == 0);
    CHECK(subsystem_decompose(ones_only).k == 0);
    CHECK_THROWS_AS(analyze_weight2_subsystem(SubsystemCode(2, {PauliOperator::from_string("XZ")})),
                    UnsupportedGauge);
    CHECK_THROWS_AS(analyze_weight2_subsystem(SubsystemCode(3, {PauliOperator::from_string("XXX")})),
                    UnsupportedGauge);
}

TEST_CASE("surface recognition: toric code") {
    for (size_t l : {3, 4}) {
        auto rep = check_surface(toric_code(l));
        REQUIRE(rep.recognized);
        REQUIRE(rep.components.size() == 1);
        CHECK(rep.components[0].euler == 0);
        CHECK(rep.components[0].k == 2);
        CHECK(rep.components[0].vertices == l * l);
        CHECK(rep.components[0].edges == 2 * l * l);
        CHECK(rep.components[0].faces == l * l);
        CHECK(rep.removed_pairs.empty());
    }
}

TEST_CASE("surface recognition: tetrahedron is a sphere") {
    CssCode c = tetrahedron_code();
    CHECK(c.k() == 0);
    auto rep = check_surface(c);
    REQUIRE(rep.recognized);
    REQUIRE(rep.components.size() == 1);
    CHECK(rep.components[0].euler == 2);
    CHECK(rep.components[0].k == 0);
}

TEST_CASE("surface recognition: unsplittable pair of 2-cycles is rejected") {
    auto rep = check_surface(two_cycle_counterexample());
    CHECK_FALSE(rep.recognized);
    REQUIRE(!rep.diagnostics.empty());
    CHECK(rep.diagnostics[0].find("Z check 0") != std::string::npos);
    CHECK(rep.components.empty());
}

TEST_CASE("surface recognition: verified 2+2 split") {
    CssCode merged = merged_bigons_code();
    auto rep = check_surface(merged);
    REQUIRE(rep.recognized);
    CHECK(rep.split_checks == std::vector<size_t>{0});
    REQUIRE(rep.components.size() == 2);
    size_t ksum = 0;
    for (const auto &comp : rep.components) {
        CHECK(comp.euler == 2);
        ksum += comp.k;
    }
    CHECK(ksum == merged.k());
    CHECK(rep.reduced.hz().rows() == merged.hz().rows() + 1);

    // Same surfaces with the two bigons as separate checks from the start.
    BinaryMatrix hz = from_supports(8, {{0, 1}, {4, 5}, {1, 2}, {2, 3}, {3, 0}, {5, 6}, {6, 7}, {7, 4}});
    auto plain = check_surface(CssCode(merged.hx(), hz));
    REQUIRE(plain.recognized);
    REQUIRE(plain.components.size() == 2);
    for (size_t i = 0; i < 2; i++) CHECK(plain.components[i].euler == rep.components[i].euler);
}

TEST_CASE("surface recognition: disentangled pair removal") {
    CssCode c = disentangled_pair_code();
    auto rep = check_surface(c);
    REQUIRE(rep.recognized);
    REQUIRE(rep.removed_pairs.size() == 1);
    CHECK(rep.removed_pairs[0] == std::pair<size_t, size_t>{0, 1});
    CHECK(rep.qubits == std::vector<size_t>{2, 3});
    CHECK(rep.reduced.k() == c.k());
    REQUIRE(rep.components.size() == 1);
    CHECK(rep.components[0].euler == 2);
}

TEST_CASE("surface recognition: per-component dimensions sum to k") {
    for (const CssCode &c : {toric_code(3), toric_code(5), tetrahedron_code(), merged_bigons_code()}) {
        auto rep = check_surface(c);
        REQUIRE(rep.recognized);
        size_t ksum = 0;
        for (const auto &comp : rep.components) {
            CHECK(comp.k <= 2);
            CHECK(comp.euler == static_cast<long>(comp.vertices) - static_cast<long>(comp.edges) +
                                    static_cast<long>(comp.faces));
            ksum += comp.k;
        }
        CHECK(ksum == c.k());
    }
}

TEST_CASE("surface recognition precondition") {
    CHECK_THROWS_AS(check_surface(steane_code()), SurfaceRejected);
    try {
        check_surface(shor_code());
        FAIL("expected rejection");
    } catch (const SurfaceRejected &e) {
        CHECK(std::string(e.what()).find("X check 0 has weight 6") != std::string::npos);
    }
}
