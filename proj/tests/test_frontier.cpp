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


#include <fstream>
#include <random>
#include <sstream>

#include "doctest.h"
#include "qcw/frontier.hpp"

using namespace qcw;

namespace {

CodePoint pt(size_t n, size_t k, size_t d, size_t w = 4) { return CodePoint{"t", n, k, d, w, "test"}; }

Rational q(long a, long b) {
    Rational r(a, b);
    r.canonicalize();
    return r;
}

// Direct evaluation of max{R_i : δ_i >= δ}.
std::optional<Rational> brute_frontier(const std::vector<CodePoint> &pts, const Rational &delta) {
    std::optional<Rational> best;
    for (const auto &p : pts) {
        if (p.delta() >= delta && (!best || p.rate() > *best)) best = p.rate();
    }
    return best;
}

}  // namespace

TEST_CASE("frontier of a single point is a single step") {
    auto steps = frontier_steps({pt(10, 5, 2)});
    REQUIRE(steps.size() == 1);
    CHECK(steps[0].delta == q(1, 5));
    CHECK(steps[0].rate == q(1, 2));
    CHECK(*frontier_at(steps, q(1, 10)) == q(1, 2));
    CHECK_FALSE(frontier_at(steps, q(3, 10)).has_value());
}

TEST_CASE("frontier takes the best rate among points at or beyond delta") {
    // (R, δ) = (0.5, 0.1) and (0.2, 0.3).
    std::vector<CodePoint> pts{pt(10, 5, 1), pt(10, 2, 3)};
    auto steps = frontier_steps(pts);
    CHECK(*frontier_at(steps, q(1, 5)) == q(1, 5));
    CHECK(*frontier_at(steps, q(1, 20)) == q(1, 2));
    CHECK(*frontier_at(steps, q(1, 10)) == q(1, 2));
    CHECK(*frontier_at(steps, q(3, 10)) == q(1, 5));
}

TEST_CASE("frontier is non-increasing and matches direct evaluation") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 50; trial++) {
        std::vector<CodePoint> pts;
        size_t count = 1 + rng() % 12;
        for (size_t i = 0; i < count; i++) {
            size_t n = 4 + rng() % 30;
            pts.push_back(pt(n, rng() % n, 1 + rng() % n));
        }
        auto steps = frontier_steps(pts);
        for (size_t i = 1; i < steps.size(); i++) {
            CHECK(steps[i - 1].delta < steps[i].delta);
            CHECK(steps[i - 1].rate >= steps[i].rate);
        }
        for (long num = 0; num <= 40; num++) {
            Rational delta = q(num, 40);
            CHECK(frontier_at(steps, delta) == brute_frontier(pts, delta));
        }
    }
}

TEST_CASE("literature rows parse and appear in the scatter output") {
    std::ifstream in(QCW_DATA_DIR "/literature.csv");
    REQUIRE(in);
    auto lit = read_literature_csv(in);
    CHECK(lit.size() >= 50);
    for (const auto &p : lit) {
        CHECK(p.k < p.n);
        CHECK(p.d >= 1);
    }
    std::ostringstream out;
    write_frontier_csv(out, {}, lit, {6}, 2);
    std::string csv = out.str();
    CHECK(csv.find("scatter,,30,4,6,6,0.1333333333,0.2,") != std::string::npos);
    // Rows above the largest cap are excluded.
    CHECK(csv.find(",144,12,12,6,") != std::string::npos);
    CHECK(csv.find("scatter,,64,22,4,8,") == std::string::npos);
}

TEST_CASE("bound CSV and result lines feed the frontier") {
    std::istringstream bounds(
        "n,d,w,family,variant,k_bar1,k_bar2,k1,k2,k_final,status,boundary_limited\n"
        "10,2,4,css,exact,6,6,6,6,6,feasible_at,0\n"
        "10,3,6,css,exact,4,4,4,4,4,feasible_at,0\n"
        "10,4,6,css,exact,,,,,,skipped,0\n");
    auto b = read_bound_points(bounds);
    REQUIRE(b.size() == 2);
    CHECK(b[1].k == 4);
    std::istringstream results(R"({"n":16,"k":4,"d_x":3,"d_z":4,"w":6})" "\n" R"({"n":20,"k":2,"d":5,"w":8})" "\n");
    auto r = read_result_points(results, "search");
    REQUIRE(r.size() == 2);
    CHECK(r[0].d == 3);
    CHECK(r[1].d == 5);

    std::ostringstream out;
    write_frontier_csv(out, b, r, {4, 6}, 2);
    std::string csv = out.str();
    CHECK(csv.find("frontier,4,,,,,0.6,0.2,lp") != std::string::npos);
    CHECK(csv.find("frontier,6,,,,,0.4,0.3,lp") != std::string::npos);
    CHECK(csv.find("scatter,,16,4,3,6,0.25,0.1875,search") != std::string::npos);
    CHECK(csv.find("scatter,,20,") == std::string::npos);
}

TEST_CASE("malformed literature rows are rejected") {
    std::istringstream bad_header("name,n,k\n");
    CHECK_THROWS_AS(read_literature_csv(bad_header), std::invalid_argument);
    std::istringstream bad_row("construction,n,k,d,w,source\nx,10,10,2,4,s\n");
    CHECK_THROWS_AS(read_literature_csv(bad_row), std::invalid_argument);
}
