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


#include "qcw/tanner.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <fstream>
#include <functional>
#include <map>
#include <optional>
#include <stdexcept>

#include "json.hpp"
#include "qcw/distance.hpp"
#include "qcw/parallel.hpp"
#include "qcw/rng.hpp"

namespace qcw {

// ---------------------------------------------------------------------------
// Groups

namespace {

FiniteGroup from_rule(std::string name, size_t order, const std::function<uint32_t(uint32_t, uint32_t)> &mul,
                      const std::function<std::string(uint32_t)> &label) {
    FiniteGroup g;
    g.name = std::move(name);
    g.mul.assign(order, std::vector<uint32_t>(order));
    for (uint32_t a = 0; a < order; a++) {
        for (uint32_t b = 0; b < order; b++) g.mul[a][b] = mul(a, b);
    }
    g.inv.assign(order, 0);
    for (uint32_t a = 0; a < order; a++) {
        for (uint32_t b = 0; b < order; b++) {
            if (g.mul[a][b] == 0) g.inv[a] = b;
        }
    }
    for (uint32_t a = 0; a < order; a++) g.labels.push_back(label(a));
    g.validate();
    return g;
}

std::string power(const char *sym, uint32_t i) {
    if (i == 0) return "";
    return i == 1 ? std::string(sym) : std::string(sym) + "^" + std::to_string(i);
}

std::string join_label(std::string a, const std::string &b) {
    a += b;
    return a.empty() ? "e" : a;
}

}  // namespace

bool FiniteGroup::is_abelian() const {
    for (size_t a = 0; a < order(); a++) {
        for (size_t b = a + 1; b < order(); b++) {
            if (mul[a][b] != mul[b][a]) return false;
        }
    }
    return true;
}

std::vector<uint32_t> FiniteGroup::center() const {
    std::vector<uint32_t> out;
    for (uint32_t a = 0; a < order(); a++) {
        bool central = true;
        for (uint32_t b = 0; b < order() && central; b++) central = mul[a][b] == mul[b][a];
        if (central) out.push_back(a);
    }
    return out;
}

void FiniteGroup::validate() const {
    size_t n = order();
    if (n == 0 || inv.size() != n) throw std::logic_error("group " + name + ": malformed table");
    for (uint32_t a = 0; a < n; a++) {
        if (mul[0][a] != a || mul[a][0] != a) throw std::logic_error("group " + name + ": index 0 is not the identity");
        if (mul[a][inv[a]] != 0 || mul[inv[a]][a] != 0) throw std::logic_error("group " + name + ": bad inverse");
        std::vector<bool> seen(n, false);
        for (uint32_t b = 0; b < n; b++) {
            if (mul[a][b] >= n || seen[mul[a][b]]) throw std::logic_error("group " + name + ": row is not a permutation");
            seen[mul[a][b]] = true;
        }
    }
    if (n <= 64) {
        for (uint32_t a = 0; a < n; a++) {
            for (uint32_t b = 0; b < n; b++) {
                for (uint32_t c = 0; c < n; c++) {
                    if (mul[mul[a][b]][c] != mul[a][mul[b][c]]) {
                        throw std::logic_error("group " + name + ": not associative");
                    }
                }
            }
        }
    }
}

FiniteGroup cyclic_group(size_t m) {
    if (m == 0) throw std::invalid_argument("cyclic group order must be positive");
    return from_rule("cyclic(" + std::to_string(m) + ")", m,
                     [m](uint32_t a, uint32_t b) { return static_cast<uint32_t>((a + b) % m); },
                     [](uint32_t a) { return join_label(power("r", a), ""); });
}

FiniteGroup dihedral_group(size_t m) {
    if (m < 1) throw std::invalid_argument("dihedral group needs m >= 1");
    // index = e * m + i  <->  r^i s^e
    return from_rule(
        "dihedral(" + std::to_string(m) + ")", 2 * m,
        [m](uint32_t x, uint32_t y) {
            uint32_t i = x % m, e = x / m, j = y % m, f = y / m;
            uint32_t k = e ? (i + m - j) % m : (i + j) % m;
            return static_cast<uint32_t>(((e + f) % 2) * m + k);
        },
        [m](uint32_t x) { return join_label(power("r", x % m), x / m ? "s" : ""); });
}

FiniteGroup dicyclic_group(size_t m) {
    if (m < 2) throw std::invalid_argument("dicyclic group needs m >= 2");
    size_t n2 = 2 * m;
    // index = e * 2m + i  <->  a^i x^e
    return from_rule(
        "dicyclic(" + std::to_string(m) + ")", 4 * m,
        [m, n2](uint32_t p, uint32_t q) {
            uint32_t i = p % n2, e = p / n2, j = q % n2, f = q / n2;
            if (!e) return static_cast<uint32_t>(f * n2 + (i + j) % n2);
            uint32_t k = (i + n2 - j) % n2;  // a^i x a^j = a^{i-j} x
            if (!f) return static_cast<uint32_t>(n2 + k);
            return static_cast<uint32_t>((k + m) % n2);  // x^2 = a^m
        },
        [n2](uint32_t p) { return join_label(power("a", p % n2), p / n2 ? "x" : ""); });
}

FiniteGroup quaternion_group() {
    FiniteGroup g = dicyclic_group(2);
    g.name = "quaternion8";
    return g;
}

FiniteGroup direct_product(const FiniteGroup &g, const FiniteGroup &h) {
    size_t nh = h.order();
    return from_rule(
        "direct_product(" + g.name + "," + h.name + ")", g.order() * nh,
        [&](uint32_t x, uint32_t y) {
            return static_cast<uint32_t>(g.mul[x / nh][y / nh] * nh + h.mul[x % nh][y % nh]);
        },
        [&](uint32_t x) { return "(" + g.labels[x / nh] + "," + h.labels[x % nh] + ")"; });
}

FiniteGroup elementary_abelian_group(size_t p, size_t r) {
    if (p != 2) throw std::invalid_argument("only elementary abelian 2-groups are supported");
    if (r == 0 || r > 12) throw std::invalid_argument("elementary abelian rank must be in 1..12");
    return from_rule(
        "elementary_abelian(2," + std::to_string(r) + ")", size_t{1} << r,
        [](uint32_t a, uint32_t b) { return a ^ b; },
        [r](uint32_t a) {
            std::string s;
            for (size_t i = 0; i < r; i++) s += ((a >> i) & 1) ? '1' : '0';
            return s;
        });
}

namespace {

std::string trim(std::string_view s) {
    size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) b++;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) e--;
    return std::string(s.substr(b, e - b));
}

/// Splits on `sep` at parenthesis depth zero.
std::vector<std::string> split_top(std::string_view s, char sep) {
    std::vector<std::string> out;
    int depth = 0;
    size_t start = 0;
    for (size_t i = 0; i < s.size(); i++) {
        if (s[i] == '(') depth++;
        if (s[i] == ')') depth--;
        if (depth == 0 && s[i] == sep) {
            out.push_back(trim(s.substr(start, i - start)));
            start = i + 1;
        }
    }
    out.push_back(trim(s.substr(start)));
    return out;
}

size_t parse_count(const std::string &s, std::string_view spec) {
    if (s.empty() || !std::all_of(s.begin(), s.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
        throw std::invalid_argument("unsupported group spec: " + std::string(spec));
    }
    return std::stoul(s);
}

}  // namespace

FiniteGroup make_group(std::string_view spec_in) {
    std::string spec = trim(spec_in);
    auto factors = split_top(spec, 'x');
    if (factors.size() > 1) {
        FiniteGroup g = make_group(factors[0]);
        for (size_t i = 1; i < factors.size(); i++) g = direct_product(g, make_group(factors[i]));
        return g;
    }
    auto open = spec.find('(');
    if (open != std::string::npos) {
        if (spec.back() != ')') throw std::invalid_argument("unsupported group spec: " + spec);
        std::string head = trim(spec.substr(0, open));
        auto args = split_top(std::string_view(spec).substr(open + 1, spec.size() - open - 2), ',');
        if (head == "cyclic" && args.size() == 1) return cyclic_group(parse_count(args[0], spec));
        if (head == "dihedral" && args.size() == 1) return dihedral_group(parse_count(args[0], spec));
        if (head == "dicyclic" && args.size() == 1) return dicyclic_group(parse_count(args[0], spec));
        if (head == "direct_product" && args.size() == 2) return direct_product(make_group(args[0]), make_group(args[1]));
        if (head == "elementary_abelian" && args.size() == 2) {
            return elementary_abelian_group(parse_count(args[0], spec), parse_count(args[1], spec));
        }
        throw std::invalid_argument("unsupported group spec: " + spec);
    }
    if (spec == "quaternion8" || spec == "Q8") return quaternion_group();
    if (spec.size() >= 2 && (spec[0] == 'C' || spec[0] == 'Z')) return cyclic_group(parse_count(spec.substr(1), spec));
    if (spec.size() >= 2 && spec[0] == 'D') return dihedral_group(parse_count(spec.substr(1), spec));
    throw std::invalid_argument("unsupported group spec: " + spec);
}

void validate_generating_set(const FiniteGroup &g, const GeneratingSet &s, bool allow_identity) {
    std::vector<bool> in(g.order(), false);
    for (uint32_t x : s.elements) {
        if (x >= g.order()) throw std::invalid_argument("generator index out of range");
        if (in[x]) throw std::invalid_argument("duplicate generator " + g.labels[x]);
        if (x == 0 && !allow_identity) throw std::invalid_argument("identity in generating set");
        in[x] = true;
    }
    for (uint32_t x : s.elements) {
        if (!in[g.inv[x]]) throw std::invalid_argument("generating set not closed under inverses at " + g.labels[x]);
    }
}

bool check_tnc(const FiniteGroup &g, const GeneratingSet &a, const GeneratingSet &b) {
    for (uint32_t x = 0; x < g.order(); x++) {
        for (uint32_t ai : a.elements) {
            uint32_t ax = g.mul[ai][x];
            for (uint32_t bi : b.elements) {
                if (ax == g.mul[x][bi]) return false;
            }
        }
    }
    return true;
}

// ---------------------------------------------------------------------------
// Complex

CayleyComplex build_complex(const FiniteGroup &g, const GeneratingSet &a, const GeneratingSet &b,
                            bool allow_identity) {
    validate_generating_set(g, a, allow_identity);
    validate_generating_set(g, b, allow_identity);
    if (a.size() == 0 || b.size() == 0) throw std::invalid_argument("generating sets must be nonempty");
    CayleyComplex cx;
    cx.bipartite = check_tnc(g, a, b);
    FiniteGroup z2 = cyclic_group(2);
    if (cx.bipartite) {
        cx.cover = direct_product(g, z2);
        for (uint32_t x : a.elements) cx.a.push_back(x * 2 + 1);
        for (uint32_t x : b.elements) cx.b.push_back(x * 2 + 1);
        cx.side.resize(cx.cover.order());
        for (uint32_t v = 0; v < cx.cover.order(); v++) cx.side[v] = v % 2;
    } else {
        cx.cover = direct_product(direct_product(g, z2), z2);
        for (uint32_t x : a.elements) cx.a.push_back((x * 2 + 0) * 2 + 1);
        for (uint32_t x : b.elements) cx.b.push_back((x * 2 + 1) * 2 + 0);
        cx.side.resize(cx.cover.order());
        for (uint32_t v = 0; v < cx.cover.order(); v++) {
            uint32_t i = (v / 2) % 2, j = v % 2;
            cx.side[v] = i == j ? 0 : 1;
        }
    }
    const FiniteGroup &G = cx.cover;
    for (uint32_t v = 0; v < G.order(); v++) (cx.side[v] ? cx.v1 : cx.v0).push_back(v);

    size_t da = cx.a.size(), db = cx.b.size();
    std::map<std::array<uint32_t, 4>, uint32_t> index;
    auto corners = [&](uint32_t v, size_t i, size_t j) {
        uint32_t av = G.mul[cx.a[i]][v], vb = G.mul[v][cx.b[j]];
        return std::array<uint32_t, 4>{v, av, vb, G.mul[av][cx.b[j]]};
    };
    auto key_of = [](std::array<uint32_t, 4> c) {
        std::sort(c.begin(), c.end());
        return c;
    };
    for (uint32_t v : cx.v0) {
        for (size_t i = 0; i < da; i++) {
            for (size_t j = 0; j < db; j++) {
                auto c = corners(v, i, j);
                auto key = key_of(c);
                if (std::adjacent_find(key.begin(), key.end()) != key.end()) {
                    throw std::logic_error("degenerate square in the Cayley complex cover");
                }
                if (cx.side[c[1]] != 1 || cx.side[c[2]] != 1 || cx.side[c[3]] != 0) {
                    throw std::logic_error("square corners violate the bipartition");
                }
                if (index.emplace(key, static_cast<uint32_t>(cx.squares.size())).second) cx.squares.push_back(c);
            }
        }
    }
    if (4 * cx.squares.size() != G.order() * da * db) {
        throw std::logic_error("square count " + std::to_string(cx.squares.size()) + " differs from |G||A||B|/4");
    }
    cx.local_view.assign(G.order(), {});
    std::vector<uint32_t> touched(cx.squares.size(), 0);
    for (uint32_t v = 0; v < G.order(); v++) {
        auto &view = cx.local_view[v];
        view.reserve(da * db);
        for (size_t i = 0; i < da; i++) {
            for (size_t j = 0; j < db; j++) {
                auto it = index.find(key_of(corners(v, i, j)));
                if (it == index.end()) throw std::logic_error("local view refers to an unknown square");
                view.push_back(it->second);
                touched[it->second]++;
            }
        }
        auto sorted = view;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
            throw std::logic_error("local view is not a bijection");
        }
    }
    for (uint32_t t : touched) {
        if (t != 4) throw std::logic_error("square not seen from exactly four vertices");
    }
    return cx;
}

// ---------------------------------------------------------------------------
// Local codes and the Tanner code

std::vector<LocalCode> load_local_codes(const std::string &path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open local code library " + path);
    nlohmann::json doc = nlohmann::json::parse(in);
    std::vector<LocalCode> out;
    for (const auto &e : doc.at("codes")) {
        LocalCode c;
        c.name = e.at("name").get<std::string>();
        c.h = BinaryMatrix::from_strings(e.at("H").get<std::vector<std::string>>());
        c.d = e.at("d").get<size_t>();
        if (c.h.cols() != e.at("n").get<size_t>() || c.h.cols() - rank(c.h) != e.at("k").get<size_t>()) {
            throw std::runtime_error("local code " + c.name + ": H does not match n, k");
        }
        out.push_back(std::move(c));
    }
    return out;
}

const LocalCode &find_local_code(const std::vector<LocalCode> &lib, std::string_view name) {
    for (const auto &c : lib) {
        if (c.name == name) return c;
    }
    throw std::invalid_argument("unknown local code " + std::string(name));
}

BinaryMatrix reduce_row_weights(BinaryMatrix m) {
    bool changed = true;
    while (changed) {
        changed = false;
        for (size_t i = 0; i < m.rows(); i++) {
            for (size_t j = 0; j < m.rows(); j++) {
                if (i == j) continue;
                BinaryVector s = m.row(i) ^ m.row(j);
                if (s.weight() < m.row_weight(i)) {
                    m.xor_row_into(j, i);
                    changed = true;
                }
            }
        }
    }
    return m;
}

namespace {

BinaryMatrix independent_rows(const BinaryMatrix &m) {
    if (rank(m) == m.rows()) return m;
    return reduce_row_weights(row_reduce(m).reduced);
}

}  // namespace

CssCode build_tanner_code(const CayleyComplex &cx, const BinaryMatrix &h_a, const BinaryMatrix &h_b,
                          const std::vector<size_t> &perm_b) {
    size_t da = cx.delta_a(), db = cx.delta_b();
    if (h_a.cols() != da || h_b.cols() != db) {
        throw std::invalid_argument("local code lengths must equal |A| = " + std::to_string(da) +
                                    " and |B| = " + std::to_string(db));
    }
    if (perm_b.size() != db) throw std::invalid_argument("permutation length must equal |B|");
    std::vector<bool> seen(db, false);
    for (size_t p : perm_b) {
        if (p >= db || seen[p]) throw std::invalid_argument("perm_b is not a permutation");
        seen[p] = true;
    }
    BinaryMatrix hb = h_b.permute_cols(perm_b);
    BinaryMatrix x_local = tensor_basis(reduce_row_weights(nullspace(h_a)), reduce_row_weights(nullspace(hb)));
    BinaryMatrix z_local = tensor_basis(independent_rows(h_a), independent_rows(hb));
    size_t n = cx.num_squares();
    auto embed = [&](const std::vector<uint32_t> &verts, const BinaryMatrix &local) {
        BinaryMatrix out(verts.size() * local.rows(), n);
        size_t r = 0;
        for (uint32_t v : verts) {
            const auto &view = cx.local_view[v];
            for (size_t i = 0; i < local.rows(); i++, r++) {
                for (size_t p : local.row(i).support()) out.set(r, view[p], true);
            }
        }
        return out;
    };
    return CssCode(embed(cx.v0, x_local), embed(cx.v1, z_local));
}

// ---------------------------------------------------------------------------
// Search

void TannerSearchConfig::validate() const {
    if (pairs == 0 || permutations == 0 || keep == 0 || distance_trials == 0) {
        throw std::invalid_argument("search counts must be positive");
    }
    if (betas.empty()) throw std::invalid_argument("at least one score exponent is required");
    if (h_a.cols() == 0 || h_b.cols() == 0) throw std::invalid_argument("local codes are not resolved");
    if (rank(h_a) == 0 || rank(h_b) == 0) {
        throw std::invalid_argument("a local code is the full space; its dual is zero and no Z checks exist");
    }
    if (rank(h_a) == h_a.cols() || rank(h_b) == h_b.cols()) {
        throw std::invalid_argument("a local code is the zero space; no X checks exist");
    }
}

double tanner_score(size_t n, size_t k, size_t d, double wbar, double beta) {
    if (n == 0 || wbar <= 0) return 0.0;
    return static_cast<double>(k) * static_cast<double>(d) * static_cast<double>(d) /
           (static_cast<double>(n) * std::pow(wbar, beta));
}

uint64_t code_hash(const CssCode &c) {
    uint64_t h = splitmix64(c.n());
    for (const BinaryMatrix *m : {&c.hx(), &c.hz()}) {
        h = splitmix64(h ^ m->rows());
        for (size_t r = 0; r < m->rows(); r++) {
            for (uint64_t w : m->row_words(r)) h = splitmix64(h ^ w);
        }
    }
    return h;
}

GeneratingSet random_symmetric_subset(const FiniteGroup &g, size_t size, bool allow_identity, uint64_t seed) {
    std::vector<std::vector<uint32_t>> classes;
    for (uint32_t x = 0; x < g.order(); x++) {
        if (x == 0 && !allow_identity) continue;
        if (g.inv[x] == x) {
            classes.push_back({x});
        } else if (x < g.inv[x]) {
            classes.push_back({x, g.inv[x]});
        }
    }
    Rng rng(seed);
    for (int attempt = 0; attempt < 64; attempt++) {
        rng.shuffle(classes);
        GeneratingSet s;
        for (const auto &c : classes) {
            if (s.size() + c.size() <= size) s.elements.insert(s.elements.end(), c.begin(), c.end());
            if (s.size() == size) break;
        }
        if (s.size() == size) {
            std::sort(s.elements.begin(), s.elements.end());
            return s;
        }
    }
    return {};
}

namespace {

/// Lowers t until certification at t succeeds; returns the exact distance
/// when the enumeration fits the budget.
std::pair<size_t, bool> certify_exact(const BinaryMatrix &h, const BinaryMatrix &s, size_t t,
                                      const CertifyOptions &opts) {
    try {
        while (t > 1) {
            Certificate c = certify_type(h, s, t, opts);
            if (c.verified) return {t, true};
            t = c.witness->weight();
        }
        return {t, true};
    } catch (const BudgetExceeded &) {
        return {t, false};
    }
}

}  // namespace

std::vector<TannerResult> tanner_search(const TannerSearchConfig &cfg, size_t workers) {
    cfg.validate();
    FiniteGroup g = make_group(cfg.group);
    size_t da = cfg.h_a.cols(), db = cfg.h_b.cols();

    struct Pair {
        GeneratingSet a, b;
        std::optional<CayleyComplex> cx;
    };
    std::vector<Pair> pairs(cfg.pairs);
    for (size_t p = 0; p < cfg.pairs; p++) {
        Rng rng(substream_seed(cfg.seed, {1, p}));
        uint64_t sa = rng.next(), sb = rng.next();
        pairs[p].a = random_symmetric_subset(g, da, cfg.allow_identity, sa);
        pairs[p].b = random_symmetric_subset(g, db, cfg.allow_identity, sb);
        if (pairs[p].a.size() == da && pairs[p].b.size() == db) {
            pairs[p].cx = build_complex(g, pairs[p].a, pairs[p].b, cfg.allow_identity);
        }
    }

    size_t jobs = cfg.pairs * cfg.permutations;
    std::vector<std::optional<TannerResult>> slots(jobs);
    CertifyOptions copts;
    copts.cap = cfg.certify_cap;
    copts.budget = cfg.certify_budget;
    parallel_for(jobs, workers, [&](size_t job) {
        size_t p = job / cfg.permutations, q = job % cfg.permutations;
        const Pair &pr = pairs[p];
        if (!pr.cx) return;
        TannerResult r;
        r.pair_index = p;
        r.perm_index = q;
        r.a = pr.a;
        r.b = pr.b;
        r.bipartite = pr.cx->bipartite;
        r.perm_b = Rng(substream_seed(cfg.seed, {2, p, q})).permutation(db);
        r.code = build_tanner_code(*pr.cx, cfg.h_a, cfg.h_b, r.perm_b);
        r.params = css_params(r.code);
        if (r.params.k == 0 && cfg.skip_trivial) return;
        if (r.params.k > 0) {
            EstimateOptions eo;
            eo.trials = cfg.distance_trials;
            eo.seed = substream_seed(cfg.seed, {3, p, q});
            eo.workers = 1;
            DistanceEstimate est = estimate_distance(r.code, eo);
            r.failure_bound = est.failure_bound();
            auto [dx, okx] = est.x.d_upper <= cfg.certify_cap
                                 ? certify_exact(r.code.hx(), r.code.hz(), est.x.d_upper, copts)
                                 : std::pair<size_t, bool>{est.x.d_upper, false};
            auto [dz, okz] = est.z.d_upper <= cfg.certify_cap
                                 ? certify_exact(r.code.hz(), r.code.hx(), est.z.d_upper, copts)
                                 : std::pair<size_t, bool>{est.z.d_upper, false};
            r.d_x = dx;
            r.d_z = dz;
            r.certified = okx && okz;
        }
        for (double beta : cfg.betas) r.scores.push_back(tanner_score(r.params.n, r.params.k, r.d(), r.params.wbar, beta));
        r.hash = code_hash(r.code);
        slots[job] = std::move(r);
    });

    std::vector<TannerResult> out;
    for (auto &s : slots) {
        if (s) out.push_back(std::move(*s));
    }
    auto score1 = [](const TannerResult &r) { return tanner_score(r.params.n, r.params.k, r.d(), r.params.wbar, 1.0); };
    std::stable_sort(out.begin(), out.end(), [&](const TannerResult &x, const TannerResult &y) {
        double sx = score1(x), sy = score1(y);
        if (sx != sy) return sx > sy;
        if (x.params.n != y.params.n) return x.params.n < y.params.n;
        return x.hash < y.hash;
    });
    if (out.size() > cfg.keep) out.resize(cfg.keep);
    return out;
}

}  // namespace qcw
