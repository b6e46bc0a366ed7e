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
#include <map>
#include <set>

#include "doctest.h"
#include "qcw/rng.hpp"
#include "qcw/tanner.hpp"

using namespace qcw;

namespace {

const std::vector<LocalCode> &library() {
    static const std::vector<LocalCode> lib = load_local_codes(QCW_DATA_DIR "/local_codes.json");
    return lib;
}

size_t brute_center_size(const FiniteGroup &g) {
    size_t count = 0;
    for (uint32_t a = 0; a < g.order(); a++) {
        bool central = true;
        for (uint32_t b = 0; b < g.order(); b++) central = central && g(a, b) == g(b, a);
        count += central;
    }
    return count;
}

bool brute_tnc(const FiniteGroup &g, const GeneratingSet &a, const GeneratingSet &b) {
    for (uint32_t x = 0; x < g.order(); x++) {
        for (uint32_t s : a.elements) {
            for (uint32_t t : b.elements) {
                if (g(s, x) == g(x, t)) return false;
            }
        }
    }
    return true;
}

std::multiset<size_t> row_weights(const BinaryMatrix &m) {
    std::multiset<size_t> out;
    for (size_t r = 0; r < m.rows(); r++) out.insert(m.row_weight(r));
    return out;
}

void check_complex(const CayleyComplex &cx) {
    size_t da = cx.delta_a(), db = cx.delta_b();
    CHECK(cx.num_squares() * 4 == cx.cover.order() * da * db);
    std::map<uint32_t, size_t> seen;
    for (const auto &sq : cx.squares) {
        std::set<uint32_t> corners(sq.begin(), sq.end());
        CHECK(corners.size() == 4);
    }
    for (uint32_t v = 0; v < cx.cover.order(); v++) {
        const auto &view = cx.local_view[v];
        REQUIRE(view.size() == da * db);
        std::set<uint32_t> distinct(view.begin(), view.end());
        CHECK(distinct.size() == da * db);
        for (uint32_t s : view) seen[s]++;
    }
    for (const auto &[s, count] : seen) CHECK(count == 4);
    CHECK(seen.size() == cx.num_squares());
}

}  // namespace

TEST_CASE("group constructors") {
    auto c6 = make_group("cyclic(6)");
    CHECK(c6.order() == 6);
    CHECK(c6.is_abelian());
    auto d4 = make_group("dihedral(4)");
    CHECK(d4.order() == 8);
    CHECK_FALSE(d4.is_abelian());
    CHECK(brute_center_size(d4) == 2);
    CHECK(d4.center().size() == 2);
    auto p = make_group("direct_product(cyclic(4),cyclic(2))");
    CHECK(p.order() == 8);
    CHECK(p.is_abelian());
    auto q = make_group("quaternion8");
    CHECK(q.order() == 8);
    CHECK(brute_center_size(q) == 2);
    CHECK(make_group("dicyclic(3)").order() == 12);
    CHECK(make_group("elementary_abelian(2,3)").order() == 8);
    CHECK(make_group("C4xC2").order() == 8);
    for (const char *spec : {"cyclic(6)", "dihedral(4)", "dihedral(7)", "quaternion8", "dicyclic(3)",
                             "direct_product(cyclic(3),dihedral(3))", "elementary_abelian(2,4)"}) {
        auto g = make_group(spec);
        CHECK_NOTHROW(g.validate());
        for (uint32_t x = 0; x < g.order(); x++) CHECK(g(x, g.inv[x]) == 0);
    }
    CHECK_THROWS_AS(make_group("sporadic(1)"), std::invalid_argument);
    CHECK_THROWS_AS(make_group("cyclic(x)"), std::invalid_argument);
}

TEST_CASE("generating set validation") {
    auto g = make_group("cyclic(6)");
    CHECK_NOTHROW(validate_generating_set(g, GeneratingSet{{1, 5}}));
    CHECK_THROWS(validate_generating_set(g, GeneratingSet{{1, 2}}));     // not symmetric
    CHECK_THROWS(validate_generating_set(g, GeneratingSet{{1, 5, 1}}));  // duplicate
    CHECK_THROWS(validate_generating_set(g, GeneratingSet{{0, 3}}));     // identity
    CHECK_NOTHROW(validate_generating_set(g, GeneratingSet{{0, 3}}, true));
}

TEST_CASE("total no-conjugacy condition") {
    auto c8 = make_group("cyclic(8)");
    CHECK_FALSE(check_tnc(c8, GeneratingSet{{1, 7}}, GeneratingSet{{1, 7, 4}}));
    auto d6 = make_group("dihedral(6)");  // r^i s^e at e*6+i
    GeneratingSet refl{{6, 7}}, rot{{1, 5}};
    CHECK(check_tnc(d6, refl, rot) == brute_tnc(d6, refl, rot));

    Rng rng(41);
    for (const char *spec : {"cyclic(6)", "dihedral(3)", "quaternion8", "dihedral(4)", "cyclic(8)"}) {
        auto g = make_group(spec);
        for (int t = 0; t < 40; t++) {
            size_t sa = 1 + rng.below(g.order() - 1), sb = 1 + rng.below(g.order() - 1);
            auto a = random_symmetric_subset(g, sa, false, rng.next());
            auto b = random_symmetric_subset(g, sb, false, rng.next());
            if (a.size() == 0 || b.size() == 0) continue;  // no symmetric subset of that size
            bool tnc = check_tnc(g, a, b);
            CHECK(tnc == brute_tnc(g, a, b));
            if (a.size() + b.size() >= g.order()) CHECK_FALSE(tnc);
        }
    }
}

TEST_CASE("complex covers") {
    auto c2 = make_group("cyclic(2)");
    auto cx = build_complex(c2, GeneratingSet{{1}}, GeneratingSet{{1}});
    CHECK_FALSE(cx.bipartite);
    CHECK(cx.cover.order() == 8);
    CHECK(cx.num_squares() == 2);
    check_complex(cx);

    auto c8 = make_group("cyclic(8)");
    auto bi = build_complex(c8, GeneratingSet{{1, 7, 2, 6}}, GeneratingSet{{0, 4, 3, 5}}, true);
    CHECK(bi.bipartite);
    CHECK(bi.cover.order() == 16);
    CHECK(bi.num_squares() == 64);
    check_complex(bi);

    Rng rng(42);
    for (const char *spec : {"dihedral(3)", "quaternion8", "cyclic(7)", "dihedral(5)"}) {
        auto g = make_group(spec);
        for (int t = 0; t < 5; t++) {
            auto a = random_symmetric_subset(g, 2 + rng.below(2), false, rng.next());
            auto b = random_symmetric_subset(g, 2 + rng.below(2), false, rng.next());
            if (a.size() == 0 || b.size() == 0) continue;
            auto c = build_complex(g, a, b);
            CHECK(c.bipartite == check_tnc(g, a, b));
            CHECK(c.cover.order() == g.order() * (c.bipartite ? 2 : 4));
            check_complex(c);
        }
    }
}

TEST_CASE("local code library") {
    for (const auto &c : library()) {
        BinaryMatrix gen = nullspace(c.h);
        CHECK(min_weight(gen) == c.d);
        CHECK(c.name.rfind("[" + std::to_string(c.length()) + "," + std::to_string(gen.rows()) + ",", 0) == 0);
    }
    CHECK(find_local_code(library(), "[4,1,4]").d == 4);
    CHECK_THROWS(find_local_code(library(), "[99,1,1]"));
}

TEST_CASE("row-weight reduction keeps the row space") {
    Rng rng(43);
    for (int t = 0; t < 50; t++) {
        BinaryMatrix m(1 + rng.below(5), 2 + rng.below(10));
        for (size_t r = 0; r < m.rows(); r++) {
            for (size_t c = 0; c < m.cols(); c++) m.set(r, c, rng.below(2));
        }
        BinaryMatrix red = reduce_row_weights(m);
        CHECK(row_reduce(red).reduced == row_reduce(m).reduced);
        CHECK(red.count_ones() <= m.count_ones());
    }
}

TEST_CASE("tanner codes commute and have one qubit per square") {
    const auto &a = find_local_code(library(), "[3,1,3]");
    const auto &b = find_local_code(library(), "[4,3,2]");
    auto g = make_group("dihedral(3)");
    Rng rng(44);
    for (int t = 0; t < 6; t++) {
        auto ga = random_symmetric_subset(g, 3, false, rng.next());
        auto gb = random_symmetric_subset(g, 4, true, rng.next());
        auto cx = build_complex(g, ga, gb, true);
        std::vector<size_t> ident{0, 1, 2, 3};
        CssCode code = build_tanner_code(cx, a.h, b.h, ident);
        CHECK(code.n() == cx.num_squares());
        CHECK(code.hx().multiply_transpose(code.hz()).is_zero());
        auto perm = rng.permutation(4);
        CssCode shuffled = build_tanner_code(cx, a.h, b.h, perm);
        CHECK(row_weights(shuffled.hx()) == row_weights(code.hx()));
        CHECK(row_weights(shuffled.hz()) == row_weights(code.hz()));
    }
}

TEST_CASE("cyclic group of order 8 with the paired local codes gives 64 qubits") {
    auto c8 = make_group("cyclic(8)");
    auto cx = build_complex(c8, GeneratingSet{{1, 7, 2, 6}}, GeneratingSet{{0, 4, 3, 5}}, true);
    CssCode code = build_tanner_code(cx, find_local_code(library(), "[4,1,4]").h,
                                     find_local_code(library(), "[4,3,2]").h, {0, 1, 2, 3});
    CHECK(code.n() == 64);
    CHECK(css_params(code).w() == 8);
}

TEST_CASE("score") {
    CHECK(tanner_score(64, 22, 4, 8.0, 1.0) == doctest::Approx(22.0 * 16 / (64 * 8)));
    CHECK(tanner_score(10, 1, 2, 4.0, 0.0) == doctest::Approx(0.4));
}

TEST_CASE("search contract") {
    TannerSearchConfig cfg;
    cfg.group = "dihedral(3)";
    cfg.code_a = "[3,1,3]";
    cfg.code_b = "[3,2,2]";
    cfg.h_a = find_local_code(library(), cfg.code_a).h;
    cfg.h_b = find_local_code(library(), cfg.code_b).h;
    cfg.distance_trials = 50;
    cfg.pairs = 1;
    cfg.permutations = 1;
    cfg.keep = 1;
    cfg.skip_trivial = false;
    auto one = tanner_search(cfg);
    CHECK(one.size() == 1);

    cfg.pairs = 3;
    cfg.permutations = 2;
    cfg.keep = 200;
    cfg.seed = 5;
    auto r1 = tanner_search(cfg, 1), r2 = tanner_search(cfg, 3);
    REQUIRE(r1.size() == r2.size());
    for (size_t i = 0; i < r1.size(); i++) {
        CHECK(r1[i].hash == r2[i].hash);
        CHECK(r1[i].d_x == r2[i].d_x);
        CHECK(r1[i].scores == r2[i].scores);
        CHECK(r1[i].code.n() * 4 == r1[i].params.n * 4);
        CHECK(r1[i].scores.size() == cfg.betas.size());
        if (i) CHECK(r1[i - 1].scores[1] >= r1[i].scores[1]);
    }

    cfg.pairs = 0;
    CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
    cfg.pairs = 1;
    cfg.h_b = BinaryMatrix(0, 3);
    CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
}
