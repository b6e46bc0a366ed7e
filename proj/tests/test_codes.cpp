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


#include "doctest.h"
#include "fixtures.hpp"
#include "qcw/codes.hpp"
#include "qcw/library.hpp"
#include "qcw/rng.hpp"

using namespace qcw;
using namespace qcw::testing;

TEST_CASE("css parameters") {
    auto p = css_params(steane_code());
    CHECK(p.n == 7);
    CHECK(p.k == 1);
    CHECK(p.w_x == 4);
    CHECK(p.w_z == 4);
    CHECK(p.q_x == 3);

    auto t = css_params(toric_code(3));
    CHECK(t.n == 18);
    CHECK(t.k == 2);
    CHECK(t.w() == 4);
    CHECK(t.q_x == 2);
    CHECK(t.q_z == 2);
    CHECK(t.wbar == doctest::Approx(4.0));

    auto e = css_params(CssCode(BinaryMatrix(0, 5), BinaryMatrix(0, 5)));
    CHECK(e.k == 5);
    CHECK(e.w() == 0);
}

TEST_CASE("css naming: H_X checks C_Z and H_Z checks C_X") {
    CssCode c(BinaryMatrix::from_strings({"1100"}), BinaryMatrix::from_strings({"1100", "0011"}));
    CHECK(c.k_x() == 4 - 2);
    CHECK(c.k_z() == 4 - 1);
    CHECK(c.k() == c.k_x() + c.k_z() - c.n());
}

TEST_CASE("average weights count only nonzero rows, including redundant ones") {
    CssCode c(BinaryMatrix::from_strings({"1100", "1100", "0000"}), BinaryMatrix::from_strings({"1111"}));
    auto p = css_params(c);
    CHECK(p.wbar_x == doctest::Approx(2.0));
    CHECK(p.wbar_z == doctest::Approx(4.0));
    CHECK(p.wbar == doctest::Approx(8.0 / 3.0));
}

TEST_CASE("commutation violation is malformed input") {
    CHECK_THROWS_AS(CssCode(BinaryMatrix::from_strings({"110"}), BinaryMatrix::from_strings({"100"})), MalformedCode);
    CHECK_THROWS_AS(StabilizerCode(2, {PauliOperator::from_string("XI"), PauliOperator::from_string("ZI")}),
                    MalformedCode);
}

TEST_CASE("stabilizer parameters") {
    auto p = stabilizer_params(five_qubit_code());
    CHECK(p.n == 5);
    CHECK(p.k == 1);
    CHECK(p.w == 4);
    CHECK(p.q == 4);
    auto z = stabilizer_params(StabilizerCode(3, {PauliOperator::from_string("ZII")}));
    CHECK(z.k == 2);
    CHECK(z.w == 1);
    CHECK(z.q == 1);
    auto s = stabilizer_params(StabilizerCode::from_css(steane_code()));
    CHECK(s.k == 1);
    CHECK(s.w == 4);
}

TEST_CASE("pauli algebra") {
    auto a = PauliOperator::from_string("XYZI");
    CHECK(a.weight() == 3);
    CHECK(a.str() == "XYZI");
    CHECK(a.commutes(PauliOperator::from_string("XYZI")));
    CHECK_FALSE(a.commutes(PauliOperator::from_string("ZIII")));
    CHECK(a.commutes(PauliOperator::from_string("ZZII")));
}

TEST_CASE("css and stabilizer k agree on random small codes") {
    Rng rng(9);
    for (int t = 0; t < 100; t++) {
        size_t n = 2 + rng.below(10);
        BinaryMatrix hx(1 + rng.below(4), n);
        for (size_t r = 0; r < hx.rows(); r++) {
            for (size_t c = 0; c < n; c++) hx.set(r, c, rng.below(2));
        }
        BinaryMatrix dual = nullspace(hx);
        BinaryMatrix hz(0, n);
        for (size_t r = 0; r < dual.rows(); r++) {
            if (rng.below(2)) hz.append_row(dual.row(r));
        }
        CssCode c(hx, hz);
        CHECK(css_params(c).k == stabilizer_params(StabilizerCode::from_css(c)).k);
    }
}

TEST_CASE("subsystem decomposition") {
    auto st = StabilizerCode::from_css(steane_code());
    auto d = subsystem_decompose(SubsystemCode(7, st.checks()));
    CHECK(d.g == 0);
    CHECK(d.k == 1);
    auto one = subsystem_decompose(SubsystemCode(1, {PauliOperator::from_string("X"), PauliOperator::from_string("Z")}));
    CHECK(one.k == 0);
    CHECK(one.g == 1);
    // Bacon-Shor 3x3: k = 1, g = 4.
    std::vector<PauliOperator> gauge;
    for (size_t r = 0; r < 3; r++) {
        for (size_t c = 0; c + 1 < 3; c++) {
            PauliOperator x(9), z(9);
            x.x.set(3 * c + r, true);
            x.x.set(3 * (c + 1) + r, true);
            z.z.set(3 * r + c, true);
            z.z.set(3 * r + c + 1, true);
            gauge.push_back(x);
            gauge.push_back(z);
        }
    }
    auto bs = subsystem_decompose(SubsystemCode(9, gauge));
    CHECK(bs.k == 1);
    CHECK(bs.g == 4);
    CHECK(2 * bs.g == bs.gauge_rank - bs.stabilizer_rank);
    CHECK(bs.gauge_rank + bs.stabilizer_rank + 2 * bs.k == 18);
    for (const auto &s : bs.stabilizer_basis) {
        for (const auto &g : gauge) CHECK(s.commutes(g));
    }
    CHECK_THROWS_AS(subsystem_decompose(SubsystemCode(30, {}), 24), std::length_error);
}

TEST_CASE("weight distributions by enumeration") {
    auto d = weight_distribution(hamming7_parity_check());
    CHECK(d == std::vector<uint64_t>{1, 0, 0, 0, 7, 0, 0, 0});
    CHECK(min_weight(nullspace(hamming7_parity_check())) == 3);
    CHECK(min_weight(BinaryMatrix(0, 4)) == 0);
    auto five = stabilizer_weight_enumerator(five_qubit_code());
    CHECK(five == std::vector<Rational>{1, 0, 0, 0, 15, 0});
}
