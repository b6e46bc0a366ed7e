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


#include <sstream>

#include "doctest.h"
#include "fixtures.hpp"
#include "qcw/library.hpp"
#include "qcw/lpbounds.hpp"
#include "qcw/rng.hpp"

using namespace qcw;
using namespace qcw::testing;

namespace {

mpz_class binom(size_t n, size_t k) {
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

/// Coefficient of y^l in (1 + (q-1) y)^(n-j) (1 - y)^j by polynomial products.
mpz_class generating_coefficient(size_t l, size_t j, size_t n, unsigned q) {
    std::vector<mpz_class> poly{1};
    auto times = [&](long c0, long c1) {
        std::vector<mpz_class> out(poly.size() + 1, 0);
        for (size_t i = 0; i < poly.size(); i++) {
            out[i] += poly[i] * c0;
            out[i + 1] += poly[i] * c1;
        }
        poly = out;
    };
    for (size_t i = 0; i < n - j; i++) times(1, static_cast<long>(q) - 1);
    for (size_t i = 0; i < j; i++) times(1, -1);
    return l < poly.size() ? poly[l] : mpz_class(0);
}

std::vector<Rational> distribution(const BinaryMatrix &basis_rows, size_t n) {
    std::vector<Rational> out(n + 1, 0);
    auto d = weight_distribution(basis_rows);
    for (size_t i = 0; i < d.size(); i++) out[i] = Rational(mpz_class(std::to_string(d[i])));
    return out;
}

BinaryMatrix random_matrix(Rng &rng, size_t rows, size_t cols) {
    BinaryMatrix m(rows, cols);
    for (size_t r = 0; r < rows; r++) {
        for (size_t c = 0; c < cols; c++) m.set(r, c, rng.below(2));
    }
    return m;
}

std::vector<Rational> concat(const std::vector<Rational> &a, const std::vector<Rational> &b) {
    std::vector<Rational> out = a;
    out.insert(out.end(), b.begin(), b.end());
    return out;
}

}  // namespace

TEST_CASE("krawtchouk examples") {
    for (size_t j = 0; j <= 5; j++) CHECK(krawtchouk(0, j, 5, 2) == 1);
    CHECK(krawtchouk(2, 0, 3, 2) == 3);
    CHECK(krawtchouk(2, 3, 3, 2) == 3);
    CHECK(krawtchouk(1, 1, 2, 4) == 2);
    CHECK_THROWS(krawtchouk(4, 0, 3, 2));
}

TEST_CASE("krawtchouk matches the generating polynomial") {
    for (unsigned q : {2u, 4u}) {
        for (size_t n = 0; n <= 12; n++) {
            for (size_t l = 0; l <= n; l++) {
                for (size_t j = 0; j <= n; j++) CHECK(krawtchouk(l, j, n, q) == Rational(generating_coefficient(l, j, n, q)));
            }
        }
    }
}

TEST_CASE("binary MacWilliams round trip on random codes") {
    Rng rng(21);
    for (int t = 0; t < 60; t++) {
        size_t n = 1 + rng.below(14);
        BinaryMatrix h = random_matrix(rng, 1 + rng.below(n), n);
        auto a = distribution(nullspace(h), n);  // C = ker H
        auto b = distribution(h, n);             // C⊥ = rowspace H
        CHECK(macwilliams_transform(a, 2) == b);
        CHECK(macwilliams_transform(b, 2) == a);
    }
}

TEST_CASE("quaternary MacWilliams round trip on stabilizer groups") {
    // A stabilizer group and its normalizer are a quaternary dual pair.
    auto five = five_qubit_code();
    auto a = stabilizer_weight_enumerator(five);
    auto b = macwilliams_transform(a, 4);
    CHECK(b == std::vector<Rational>{1, 0, 0, 30, 15, 18});
    CHECK(macwilliams_transform(b, 4) == a);
    Rng rng(22);
    for (int t = 0; t < 20; t++) {
        CssCode c = random_css(rng, 2 + rng.below(8));
        auto s = stabilizer_weight_enumerator(StabilizerCode::from_css(c));
        CHECK(macwilliams_transform(macwilliams_transform(s, 4), 4) == s);
    }
}

TEST_CASE("solver edge cases") {
    LinearProgram empty;
    empty.num_vars = 2;
    auto r = solve_feasible(empty);
    CHECK(r.feasible);
    CHECK(r.witness == std::vector<Rational>{0, 0});

    LinearProgram bad;
    bad.num_vars = 1;
    bad.add_row({1}, Relation::kGreaterEqual, 1);
    bad.add_row({1}, Relation::kLessEqual, 0);
    auto s = solve_feasible(bad);
    CHECK_FALSE(s.feasible);
    CHECK(verify_farkas(bad, s.farkas));
    CHECK_FALSE(verify_farkas(bad, std::vector<Rational>{0, 0}));
}

TEST_CASE("solver results are self-certifying on random systems") {
    Rng rng(23);
    for (int t = 0; t < 300; t++) {
        LinearProgram lp;
        lp.num_vars = 1 + rng.below(5);
        size_t rows = 1 + rng.below(6);
        for (size_t r = 0; r < rows; r++) {
            std::vector<Rational> coeffs;
            for (size_t v = 0; v < lp.num_vars; v++) coeffs.emplace_back(static_cast<long>(rng.below(7)) - 3);
            lp.add_row(coeffs, static_cast<Relation>(rng.below(3)), Rational(static_cast<long>(rng.below(9)) - 4, 1 + rng.below(3)));
        }
        for (bool guide : {false, true}) {
            auto res = solve_feasible(lp, SolveOptions{guide});
            if (res.feasible) {
                CHECK(verify_witness(lp, res.witness));
            } else {
                CHECK(verify_farkas(lp, res.farkas));
            }
        }
        CHECK(solve_feasible(lp, SolveOptions{false}).feasible == solve_feasible(lp, SolveOptions{true}).feasible);
    }
}

TEST_CASE("witness feasibility of explicit codes") {
    auto [ax, az] = css_weight_enumerators(steane_code());
    LpInstance inst = build_css_lp(7, 3, 4, 4, 4);
    CHECK(verify_witness(inst.program, concat(ax, az)));
    CHECK(solve_feasible(inst.program).feasible);

    auto five = stabilizer_weight_enumerator(five_qubit_code());
    LpInstance st = build_stab_lp(5, 3, 4, 1);
    CHECK(verify_witness(st.program, five));
    CHECK(solve_feasible(st.program).feasible);

    LpInstance trivial = build_css_lp(1, 1, 1, 1, 1);
    CHECK(solve_feasible(trivial.program).feasible);
}

TEST_CASE("witness soundness on random CSS codes") {
    Rng rng(24);
    int checked = 0;
    for (int t = 0; t < 80; t++) {
        CssCode c = random_css(rng, 3 + rng.below(8));
        if (c.k() == 0) continue;
        auto [dx, dz] = brute_css_distance(c);
        size_t d = std::min(dx, dz), w = std::max<size_t>(1, css_params(c).w());
        auto [ax, az] = css_weight_enumerators(c);
        for (auto variant : {Variant::kBase, Variant::kNoWeight1}) {
            if (variant == Variant::kNoWeight1 && (ax[1] != 0 || az[1] != 0)) continue;
            LpOptions opts;
            opts.variant = variant;
            CHECK(verify_witness(build_css_lp(c.n(), d, w, c.k_x(), c.k_z(), opts).program, concat(ax, az)));
        }
        auto s = stabilizer_weight_enumerator(StabilizerCode::from_css(c));
        CHECK(verify_witness(build_stab_lp(c.n(), d, w, c.k()).program, s));
        checked++;
    }
    CHECK(checked > 20);
}

TEST_CASE("known infeasible instances") {
    for (size_t k = 1; k <= 4; k++) {
        for (auto [kx, kz] : css_splits(4, k, 4)) CHECK_FALSE(solve_feasible(build_css_lp(4, 3, 4, kx, kz).program).feasible);
    }
    auto r = max_feasible_k(Family::kCss, 4, 3, 4);
    CHECK((!r.k || *r.k == 0));
    for (size_t w : {1, 2, 3, 5}) CHECK_FALSE(solve_feasible(build_stab_lp(2, 2, w, 1).program).feasible);
}

TEST_CASE("maximum feasible k") {
    CHECK(max_feasible_k(Family::kCss, 7, 3, 4).k.value_or(0) >= 1);
    CHECK(max_feasible_k(Family::kStabilizer, 5, 3, 4).k.value_or(0) >= 1);
    for (size_t n = 1; n <= 8; n++) {
        for (auto f : {Family::kCss, Family::kStabilizer}) CHECK(max_feasible_k(f, n, 1, 3).k == n);
    }
    // Deterministic answer on an instance with no code behind it.
    auto a = max_feasible_k(Family::kStabilizer, 5, 3, 3), b = max_feasible_k(Family::kStabilizer, 5, 3, 3);
    CHECK(a.k == b.k);
}

TEST_CASE("certificates kept by the scan re-verify") {
    auto r = max_feasible_k(Family::kCss, 10, 3, 4, {}, true);
    CHECK(!r.certificates.empty());
    for (const auto &[inst, y] : r.certificates) CHECK(verify_farkas(inst.program, y));
}

TEST_CASE("post-processing examples") {
    std::map<GridKey, RawCell> raw;
    for (size_t n : {5, 6, 7}) {
        for (size_t d : {2, 3}) {
            for (size_t w : {3, 4}) raw[{n, d, w}] = RawCell{2, 2, CellStatus::kFeasibleAt};
        }
    }
    auto table = postprocess(raw, Family::kCss);
    for (const auto &[key, cell] : table.cells) CHECK(cell.k_final == 2);
    CHECK(check_monotonicity(table).empty());

    std::map<GridKey, RawCell> dec;
    dec[{5, 2, 3}] = RawCell{4, 4, CellStatus::kFeasibleAt};
    dec[{6, 2, 3}] = RawCell{3, 5, CellStatus::kFeasibleAt};
    dec[{7, 2, 3}] = RawCell{1, 6, CellStatus::kFeasibleAt};
    auto t2 = postprocess(dec, Family::kCss);
    for (size_t n : {5, 6, 7}) CHECK(t2.cells.at({n, 2, 3}).k1 == 1);
    CHECK(t2.cells.at({7, 2, 3}).boundary_limited);

    std::map<GridKey, RawCell> one;
    one[{9, 3, 4}] = RawCell{3, 2, CellStatus::kFeasibleAt};
    CHECK(postprocess(one, Family::kCss).cells.at({9, 3, 4}).k_final == 2);

    std::map<GridKey, RawCell> holes = raw;
    holes.erase({6, 2, 3});
    CHECK_THROWS(postprocess(holes, Family::kCss));
}

TEST_CASE("small sweep is monotone and deterministic") {
    SweepSpec spec;
    spec.family = Family::kCss;
    spec.ns = {3, 4, 5, 6, 7, 8, 9, 10, 11, 12};
    spec.ds = {2, 3, 4};
    spec.ws = {3, 4};
    auto table = postprocess(sweep(spec), Family::kCss);
    CHECK(check_monotonicity(table).empty());
    std::ostringstream a, b;
    write_bound_csv(a, table, "base");
    write_bound_csv(b, postprocess(sweep(spec, 2), Family::kCss), "base");
    CHECK(a.str() == b.str());
    CHECK(table.cells.at({7, 3, 4}).k_bar1.value_or(0) >= 1);
}

TEST_CASE("stabilizer check-weight rows as printed make every instance infeasible") {
    LpOptions opts;
    opts.printed_stabilizer_weight_rows = true;
    CHECK_FALSE(solve_feasible(build_stab_lp(5, 3, 4, 1, opts).program).feasible);
}

TEST_CASE("floating-point screen never contradicts an exact infeasible verdict") {
    for (size_t n = 4; n <= 40; n += 3) {
        for (size_t d : {2, 3, 4}) {
            for (size_t k : {size_t{1}, n / 4, n / 2}) {
                if (k == 0 || d > n) continue;
                auto splits = css_splits(n, k, 4);
                if (splits.empty()) continue;
                auto res = solve_feasible(build_css_lp(n, d, 4, splits[0].first, splits[0].second).program);
                if (res.screen_feasible && *res.screen_feasible) CHECK(res.feasible);
            }
        }
    }
}
