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


#include "qcw/frontier.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>

#include "json.hpp"

namespace qcw {

namespace {

std::vector<std::string> split_csv(const std::string &line) {
    std::vector<std::string> out;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) out.push_back(cell);
    if (!line.empty() && line.back() == ',') out.emplace_back();
    return out;
}

std::string strip(std::string s) {
    while (!s.empty() && (s.back() == '\r' || s.back() == ' ')) s.pop_back();
    size_t i = 0;
    while (i < s.size() && s[i] == ' ') i++;
    return s.substr(i);
}

size_t parse_count(const std::string &s, const std::string &what) {
    size_t pos = 0;
    unsigned long v = 0;
    try {
        v = std::stoul(s, &pos);
    } catch (const std::exception &) {
        pos = 0;
    }
    if (pos == 0 || pos != s.size()) throw std::invalid_argument("expected a count for " + what + ", got '" + s + "'");
    return v;
}

std::string decimal(const Rational &r) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.10g", r.get_d());
    return buf;
}

}  // namespace

std::vector<CodePoint> read_literature_csv(std::istream &in) {
    std::string line;
    if (!std::getline(in, line) || strip(line) != "construction,n,k,d,w,source") {
        throw std::invalid_argument("literature CSV header must be construction,n,k,d,w,source");
    }
    std::vector<CodePoint> out;
    size_t lineno = 1;
    while (std::getline(in, line)) {
        lineno++;
        line = strip(line);
        if (line.empty()) continue;
        auto cells = split_csv(line);
        std::string where = "literature line " + std::to_string(lineno);
        if (cells.size() != 6) throw std::invalid_argument(where + ": expected 6 columns");
        CodePoint p;
        p.construction = strip(cells[0]);
        p.n = parse_count(strip(cells[1]), where + " n");
        p.k = parse_count(strip(cells[2]), where + " k");
        p.d = parse_count(strip(cells[3]), where + " d");
        p.w = parse_count(strip(cells[4]), where + " w");
        p.source = strip(cells[5]);
        if (!p.n || !p.k || !p.d || !p.w || p.k >= p.n) {
            throw std::invalid_argument(where + ": n, k, d, w must be positive with k < n");
        }
        out.push_back(p);
    }
    return out;
}

std::vector<CodePoint> read_bound_points(std::istream &in) {
    std::string line;
    const std::string header = "n,d,w,family,variant,k_bar1,k_bar2,k1,k2,k_final,status,boundary_limited";
    if (!std::getline(in, line) || strip(line) != header) {
        throw std::invalid_argument("bound CSV header must be " + header);
    }
    std::vector<CodePoint> out;
    while (std::getline(in, line)) {
        line = strip(line);
        if (line.empty()) continue;
        auto cells = split_csv(line);
        if (cells.size() != 12) throw std::invalid_argument("bound CSV row with " + std::to_string(cells.size()) + " columns");
        if (cells[9].empty()) continue;
        CodePoint p;
        p.construction = cells[3] + " bound";
        p.n = parse_count(cells[0], "n");
        p.d = parse_count(cells[1], "d");
        p.w = parse_count(cells[2], "w");
        p.k = parse_count(cells[9], "k_final");
        p.source = "lp";
        if (p.k > 0) out.push_back(p);
    }
    return out;
}

std::vector<CodePoint> read_result_points(std::istream &in, const std::string &source) {
    std::vector<CodePoint> out;
    std::string line;
    while (std::getline(in, line)) {
        if (strip(line).empty()) continue;
        nlohmann::json j = nlohmann::json::parse(line);
        CodePoint p;
        try {
            p.construction = j.value("construction", std::string("quantum tanner"));
            p.n = j.at("n").get<size_t>();
            p.k = j.at("k").get<size_t>();
            p.d = j.contains("d") ? j.at("d").get<size_t>()
                                  : std::min(j.at("d_x").get<size_t>(), j.at("d_z").get<size_t>());
            p.w = j.at("w").get<size_t>();
        } catch (const nlohmann::json::exception &e) {
            throw std::invalid_argument(std::string("result line schema mismatch: ") + e.what());
        }
        p.source = source;
        if (p.n && p.k && p.d) out.push_back(p);
    }
    return out;
}

std::vector<FrontierStep> frontier_steps(const std::vector<CodePoint> &points) {
    std::vector<FrontierStep> pts;
    for (const auto &p : points) pts.push_back({p.delta(), p.rate()});
    std::sort(pts.begin(), pts.end(), [](const auto &a, const auto &b) { return a.delta > b.delta; });
    std::vector<FrontierStep> out;
    Rational best = -1;
    for (size_t i = 0; i < pts.size(); i++) {
        best = std::max(best, pts[i].rate);
        if (i + 1 < pts.size() && pts[i + 1].delta == pts[i].delta) continue;
        out.push_back({pts[i].delta, best});
    }
    std::reverse(out.begin(), out.end());
    return out;
}

std::optional<Rational> frontier_at(const std::vector<FrontierStep> &steps, const Rational &delta) {
    auto it = std::lower_bound(steps.begin(), steps.end(), delta,
                               [](const FrontierStep &s, const Rational &d) { return s.delta < d; });
    if (it == steps.end()) return std::nullopt;
    return it->rate;  // steps are nonincreasing in rate as δ grows
}

void write_frontier_csv(std::ostream &out, const std::vector<CodePoint> &bounds, const std::vector<CodePoint> &instances,
                        const std::vector<size_t> &w_caps, size_t d_min) {
    out << "kind,w_cap,n,k,d,w,R,delta,source\n";
    std::vector<size_t> caps = w_caps;
    std::sort(caps.begin(), caps.end());
    caps.erase(std::unique(caps.begin(), caps.end()), caps.end());
    for (size_t cap : caps) {
        std::vector<CodePoint> sel;
        for (const auto &p : bounds) {
            if (p.w <= cap && p.d >= d_min) sel.push_back(p);
        }
        for (const auto &s : frontier_steps(sel)) {
            out << "frontier," << cap << ",,,,," << decimal(s.rate) << ',' << decimal(s.delta) << ",lp\n";
        }
    }
    size_t max_cap = caps.empty() ? 0 : caps.back();
    for (const auto &p : instances) {
        if (p.w > max_cap || p.d < d_min) continue;
        out << "scatter,," << p.n << ',' << p.k << ',' << p.d << ',' << p.w << ',' << decimal(p.rate()) << ','
            << decimal(p.delta()) << ',' << p.source << '\n';
    }
}

}  // namespace qcw
