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

#include "qcw/lpbounds.hpp"

#include <algorithm>
#include <limits>
#include <cstdlib>
#include <mutex>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "qcw/parallel.hpp"

namespace qcw {

const char *family_name(Family f) { return f == Family::kCss ? "css" : "stabilizer"; }

const char *variant_name(Variant v) { return v == Variant::kBase ? "base" : "no-weight1"; }

Family parse_family(const std::string &s) {
    if (s == "css") return Family::kCss;
    if (s == "stabilizer" || s == "stab") return Family::kStabilizer;
    throw std::invalid_argument("unknown code family '" + s + "'");
}

const char *cell_status_name(CellStatus s) {
    switch (s) {
        case CellStatus::kFeasibleAt:
            return "feasible_at";
        case CellStatus::kInfeasibleAll:
            return "infeasible_all";
        case CellStatus::kSkipped:
            return "skipped";
    }
    return "?";
}

namespace {

mpz_class binomial(size_t n, size_t k) {
    if (k > n) return 0;
    mpz_class out;
    mpz_bin_uiui(out.get_mpz_t(), n, k);
    return out;
}

mpz_class pow2(size_t e) {
    mpz_class out;
    mpz_ui_pow_ui(out.get_mpz_t(), 2, e);
    return out;
}

mpz_class binomial_prefix(size_t n, size_t m) {
    mpz_class acc = 0;
    for (size_t j = 0; j <= m && j <= n; j++) acc += binomial(n, j);
    return acc;
}

/// Scale-free width of a row: max |a_j| / min nonzero |a_j| > ratio.
bool row_too_wide(const LpRow &row, double ratio) {
    Rational lo = -1, hi = 0;
    for (const auto &c : row.coeffs) {
        if (sgn(c) == 0) continue;
        Rational a = abs(c);
        if (lo < 0 || a < lo) lo = a;
        if (a > hi) hi = a;
    }
    if (lo <= 0) return false;
    return hi > lo * Rational(ratio);
}

void finalize(LpInstance &inst) {
    if (!inst.options.drop_wide_rows) return;
    std::vector<LpRow> kept;
    for (auto &row : inst.program.rows) {
        if (row_too_wide(row, inst.options.drop_ratio)) {
            inst.dropped_rows++;
        } else {
            kept.push_back(std::move(row));
        }
    }
    inst.program.rows = std::move(kept);
}

}  // namespace

Rational krawtchouk(size_t l, size_t j, size_t n, unsigned q) {
    if (l > n || j > n) {
        throw std::out_of_range("krawtchouk index out of range");
    }
    if (q != 2 && q != 4) {
        throw std::invalid_argument("krawtchouk: q must be 2 or 4");
    }
    mpz_class acc = 0, term;
    for (size_t s = 0; s <= l; s++) {
        if (s > j || l - s > n - j) continue;
        mpz_ui_pow_ui(term.get_mpz_t(), q - 1, l - s);
        term *= binomial(j, s) * binomial(n - j, l - s);
        if (s & 1) {
            acc -= term;
        } else {
            acc += term;
        }
    }
    return Rational(acc);
}

std::vector<std::vector<mpz_class>> krawtchouk_table(size_t n, unsigned q) {
    std::vector<std::vector<mpz_class>> table(n + 1, std::vector<mpz_class>(n + 1));
    for (size_t l = 0; l <= n; l++) {
        for (size_t j = 0; j <= n; j++) {
            table[l][j] = krawtchouk(l, j, n, q).get_num();
        }
    }
    return table;
}

std::vector<Rational> macwilliams_transform(const std::vector<Rational> &a, unsigned q) {
    if (a.empty()) {
        throw std::invalid_argument("empty weight distribution");
    }
    size_t n = a.size() - 1;
    Rational size = 0;
    for (const auto &x : a) size += x;
    if (sgn(size) == 0) {
        throw std::invalid_argument("weight distribution sums to zero");
    }
    auto table = krawtchouk_table(n, q);
    std::vector<Rational> b(n + 1);
    for (size_t l = 0; l <= n; l++) {
        Rational acc = 0;
        for (size_t j = 0; j <= n; j++) acc += Rational(table[l][j]) * a[j];
        b[l] = acc / size;
    }
    return b;
}

LpInstance build_css_lp(size_t n, size_t d, size_t w, size_t k_x, size_t k_z, const LpOptions &opts) {
    if (n < 1 || d < 1 || d > n || w < 1) {
        throw std::invalid_argument("build_css_lp requires 1 <= d <= n and w >= 1");
    }
    if (k_x > n || k_z > n || k_x + k_z < n) {
        throw std::invalid_argument("build_css_lp requires k_X, k_Z <= n and k_X + k_Z >= n");
    }
    LpInstance inst;
    inst.family = Family::kCss;
    inst.n = n;
    inst.d = d;
    inst.w = w;
    inst.k_x = k_x;
    inst.k_z = k_z;
    inst.options = opts;
    LinearProgram &lp = inst.program;
    size_t width = 2 * (n + 1);
    lp.num_vars = width;
    for (const char *side : {"X", "Z"}) {
        for (size_t i = 0; i <= n; i++) lp.var_names.push_back(std::string("A") + side + "_" + std::to_string(i));
    }
    auto kraw = krawtchouk_table(n, 2);
    auto zero_row = [&] { return std::vector<Rational>(width, 0); };
    // side 0 = X block at offset 0, side 1 = Z block at offset n + 1.
    for (int side = 0; side < 2; side++) {
        size_t off = side == 0 ? 0 : n + 1;
        size_t other = side == 0 ? n + 1 : 0;
        size_t k_self = side == 0 ? k_x : k_z;
        size_t k_other = side == 0 ? k_z : k_x;
        const char *name = side == 0 ? "X" : "Z";
        const char *oname = side == 0 ? "Z" : "X";

        auto row = zero_row();
        row[off] = 1;
        lp.add_row(std::move(row), Relation::kEqual, 1, std::string("A") + name + "_0 = 1");

        row = zero_row();
        for (size_t i = 0; i <= n; i++) row[off + i] = 1;
        lp.add_row(std::move(row), Relation::kEqual, Rational(pow2(n - k_self)), std::string("sum A") + name);

        // 2^(n-k_other) A^self_l - sum_j K_l(j) A^other_j  (<= or =) 0, i.e. A^self_l vs B^other_l.
        mpz_class scale = pow2(n - k_other);
        for (size_t l = 0; l <= n; l++) {
            row = zero_row();
            row[off + l] = Rational(scale);
            for (size_t j = 0; j <= n; j++) row[other + j] -= Rational(kraw[l][j]);
            bool eq = l >= 1 && l + 1 <= d;
            lp.add_row(std::move(row), eq ? Relation::kEqual : Relation::kLessEqual, 0,
                       std::string("A") + name + "_" + std::to_string(l) + (eq ? " = B" : " <= B") + oname + "_" +
                           std::to_string(l));
        }

        if (opts.check_weight_rows) {
            for (size_t m = 0; m <= n / w; m++) {
                row = zero_row();
                for (size_t i = 0; i <= std::min(m * w, n); i++) row[off + i] = 1;
                lp.add_row(std::move(row), Relation::kGreaterEqual, Rational(binomial_prefix(n - k_self, m)),
                           std::string("weight ") + name + " m=" + std::to_string(m));
            }
        }

        if (opts.variant == Variant::kNoWeight1 && n >= 1) {
            row = zero_row();
            row[off + 1] = 1;
            lp.add_row(std::move(row), Relation::kEqual, 0, std::string("A") + name + "_1 = 0");
        }
    }
    finalize(inst);
    return inst;
}

LpInstance build_stab_lp(size_t n, size_t d, size_t w, size_t k, const LpOptions &opts) {
    if (n < 1 || d < 1 || d > n || w < 1) {
        throw std::invalid_argument("build_stab_lp requires 1 <= d <= n and w >= 1");
    }
    if (k > n) {
        throw std::invalid_argument("build_stab_lp requires k <= n");
    }
    LpInstance inst;
    inst.family = Family::kStabilizer;
    inst.n = n;
    inst.d = d;
    inst.w = w;
    inst.k_x = inst.k_z = k;
    inst.options = opts;
    LinearProgram &lp = inst.program;
    size_t width = n + 1;
    lp.num_vars = width;
    for (size_t i = 0; i <= n; i++) lp.var_names.push_back("A_" + std::to_string(i));
    auto kraw = krawtchouk_table(n, 4);
    auto zero_row = [&] { return std::vector<Rational>(width, 0); };

    auto row = zero_row();
    row[0] = 1;
    lp.add_row(std::move(row), Relation::kEqual, 1, "A_0 = 1");

    row = zero_row();
    for (size_t i = 0; i <= n; i++) row[i] = 1;
    lp.add_row(std::move(row), Relation::kEqual, Rational(pow2(n - k)), "sum A");

    mpz_class scale = pow2(n - k);
    for (size_t l = 0; l <= n; l++) {
        row = zero_row();
        row[l] = Rational(scale);
        for (size_t j = 0; j <= n; j++) row[j] -= Rational(kraw[l][j]);
        bool eq = l >= 1 && l + 1 <= d;
        lp.add_row(std::move(row), eq ? Relation::kEqual : Relation::kLessEqual, 0,
                   "A_" + std::to_string(l) + (eq ? " = B_" : " <= B_") + std::to_string(l));
    }
    for (size_t l = 0; l <= n; l++) {
        row = zero_row();
        for (size_t j = 0; j <= n; j++) row[j] = Rational(kraw[l][j]);
        lp.add_row(std::move(row), Relation::kGreaterEqual, 0, "B_" + std::to_string(l) + " >= 0");
    }
    if (opts.check_weight_rows) {
        for (size_t m = 0; m <= n / w; m++) {
            row = zero_row();
            size_t first = opts.printed_stabilizer_weight_rows ? 1 : 0;
            for (size_t i = first; i <= std::min(m * w, n); i++) row[i] = 1;
            lp.add_row(std::move(row), Relation::kGreaterEqual, Rational(binomial_prefix(n - k, m)),
                       "weight m=" + std::to_string(m));
        }
    }
    if (opts.variant == Variant::kNoWeight1) {
        row = zero_row();
        row[1] = 1;
        lp.add_row(std::move(row), Relation::kEqual, 0, "A_1 = 0");
    }
    finalize(inst);
    return inst;
}

std::vector<std::pair<size_t, size_t>> css_splits(size_t n, size_t k, size_t w) {
    std::vector<std::pair<size_t, size_t>> out;
    if (k > n) return out;
    size_t lo = (n + k + 1) / 2;
    bool covering_exists = w * (n - lo) >= n;
    for (size_t k_x = lo; k_x <= n; k_x++) {
        size_t k_z = n + k - k_x;
        if (covering_exists && w * (n - k_x) < n) continue;
        out.emplace_back(k_x, k_z);
    }
    return out;
}

MaxKResult max_feasible_k(Family family, size_t n, size_t d, size_t w, const LpOptions &opts,
                          bool keep_certificates, const ScanHints &hints) {
    MaxKResult result;
    size_t top = std::min(hints.k_upper.value_or(n), n);
    for (size_t k = top + 1; k-- > 0;) {
        std::vector<std::pair<size_t, size_t>> splits;
        if (family == Family::kCss) {
            splits = css_splits(n, k, w);
        } else {
            splits.emplace_back(k, k);
        }
        auto build = [&](size_t k_x, size_t k_z) {
            return family == Family::kCss ? build_css_lp(n, d, w, k_x, k_z, opts) : build_stab_lp(n, d, w, k, opts);
        };
        for (const auto &p : hints.known) {
            if (p.k != k) continue;
            if (std::find(splits.begin(), splits.end(), std::make_pair(p.k_x, p.k_z)) == splits.end()) continue;
            if (verify_witness(build(p.k_x, p.k_z).program, p.witness)) {
                result.k = k;
                result.k_x = p.k_x;
                result.k_z = p.k_z;
                result.witness = p.witness;
                return result;
            }
        }
        for (auto [k_x, k_z] : splits) {
            LpInstance inst = build(k_x, k_z);
            LpResult res = solve_feasible(inst.program);
            result.lp_solves++;
            if (res.feasible) {
                result.k = k;
                result.k_x = k_x;
                result.k_z = k_z;
                result.witness = std::move(res.witness);
                return result;
            }
            if (keep_certificates) {
                result.certificates.emplace_back(std::move(inst), std::move(res.farkas));
            }
        }
    }
    return result;
}

BoundTable postprocess(const std::map<GridKey, RawCell> &raw, Family family) {
    BoundTable table;
    table.family = family;
    std::vector<size_t> ns, ds, ws;
    for (const auto &[key, cell] : raw) {
        ns.push_back(std::get<0>(key));
        ds.push_back(std::get<1>(key));
        ws.push_back(std::get<2>(key));
    }
    auto uniq = [](std::vector<size_t> &v) {
        std::sort(v.begin(), v.end());
        v.erase(std::unique(v.begin(), v.end()), v.end());
    };
    uniq(ns);
    uniq(ds);
    uniq(ws);
    if (raw.size() != ns.size() * ds.size() * ws.size()) {
        throw std::invalid_argument("postprocess: grid is not a full (n, d, w) product");
    }
    // Absent values order below every count: represent them as -1.
    auto val = [](const std::optional<size_t> &v) -> long long { return v ? static_cast<long long>(*v) : -1; };
    auto opt = [](long long v) -> std::optional<size_t> {
        return v < 0 ? std::nullopt : std::optional<size_t>(static_cast<size_t>(v));
    };

    std::map<GridKey, long long> k1, k2;
    std::map<GridKey, bool> limited;
    for (size_t d : ds) {
        for (size_t w : ws) {
            for (size_t n : ns) {
                const RawCell &cell = raw.at({n, d, w});
                table.cells[{n, d, w}].k_bar1 = cell.k_bar1;
                table.cells[{n, d, w}].k_bar2 = cell.k_bar2;
                table.cells[{n, d, w}].status = cell.status;
                if (cell.status == CellStatus::kSkipped) continue;
                long long lo = val(cell.k_bar1);
                long long edge = lo;  // k̄1 at the largest in-grid n'
                for (size_t n2 : ns) {
                    if (n2 <= n) continue;
                    const RawCell &c2 = raw.at({n2, d, w});
                    if (c2.status == CellStatus::kSkipped) continue;
                    lo = std::min(lo, val(c2.k_bar1));
                    edge = val(c2.k_bar1);
                }
                long long hi = val(cell.k_bar2);
                for (size_t n2 : ns) {
                    if (n2 >= n) continue;
                    const RawCell &c2 = raw.at({n2, d, w});
                    if (c2.status == CellStatus::kSkipped) continue;
                    hi = std::max(hi, val(c2.k_bar2));
                }
                k1[{n, d, w}] = lo;
                k2[{n, d, w}] = hi;
                // The truncated min could only drop further if it is attained at the edge.
                limited[{n, d, w}] = lo == edge;
            }
        }
    }
    for (auto &[key, cell] : table.cells) {
        if (cell.status == CellStatus::kSkipped) continue;
        auto [n, d, w] = key;
        cell.k1 = opt(k1.at(key));
        cell.k2 = opt(k2.at(key));
        cell.boundary_limited = limited.at(key);
        long long best = std::numeric_limits<long long>::max();
        for (size_t d2 : ds) {
            if (d2 > d) continue;
            for (size_t w2 : ws) {
                if (w2 < w) continue;
                GridKey other{n, d2, w2};
                if (!k1.count(other)) continue;
                best = std::min(best, std::min(k1.at(other), k2.at(other)));
            }
        }
        cell.k_final = opt(best);
    }
    return table;
}

std::string check_monotonicity(const BoundTable &table) {
    auto val = [](const BoundCell &c) -> long long { return c.k_final ? static_cast<long long>(*c.k_final) : -1; };
    for (const auto &[key, cell] : table.cells) {
        if (cell.status == CellStatus::kSkipped) continue;
        auto [n, d, w] = key;
        for (const auto &[key2, cell2] : table.cells) {
            if (cell2.status == CellStatus::kSkipped) continue;
            auto [n2, d2, w2] = key2;
            std::ostringstream ss;
            bool bad = false;
            if (d2 == d && w2 == w && n2 > n && val(cell2) < val(cell)) {
                ss << "k_final decreases in n";
                bad = true;
            } else if (n2 == n && w2 == w && d2 > d && val(cell2) > val(cell)) {
                ss << "k_final increases in d";
                bad = true;
            } else if (n2 == n && d2 == d && w2 > w && val(cell2) < val(cell)) {
                ss << "k_final decreases in w";
                bad = true;
            }
            if (bad) {
                ss << " between (" << n << "," << d << "," << w << ") and (" << n2 << "," << d2 << "," << w2 << ")";
                return ss.str();
            }
        }
    }
    return {};
}

namespace {

std::optional<FeasiblePoint> as_point(const MaxKResult &r) {
    if (!r.k) return std::nullopt;
    return FeasiblePoint{*r.k, r.k_x, r.k_z, r.witness};
}

}  // namespace

// Cells sharing n are solved as one chain. Raising d or adding A_1 = 0 only
// tightens an instance (same splits), so their answers cap later scans;
// lowering w only tightens it too, so witnesses from smaller w are offered as
// candidates and re-verified. Every cell still gets the answer a standalone
// scan would give.
std::map<GridKey, RawCell> sweep(const SweepSpec &spec, size_t workers) {
    std::vector<size_t> ns = spec.ns, ds = spec.ds, ws = spec.ws;
    for (auto *v : {&ns, &ds, &ws}) {
        std::sort(v->begin(), v->end());
        v->erase(std::unique(v->begin(), v->end()), v->end());
    }
    std::vector<std::map<GridKey, RawCell>> per_n(ns.size());
    parallel_for(ns.size(), workers, [&](size_t idx) {
        size_t n = ns[idx];
        auto &out = per_n[idx];
        // Feasible points for (d, w) from both variants, and the last answers.
        std::map<std::pair<size_t, size_t>, std::vector<FeasiblePoint>> points;
        std::map<std::pair<size_t, size_t>, MaxKResult> base_res, no1_res;
        for (size_t wi = 0; wi < ws.size(); wi++) {
            size_t w = ws[wi];
            for (size_t di = 0; di < ds.size(); di++) {
                size_t d = ds[di];
                RawCell &cell = out[{n, d, w}];
                if (d > n) {
                    cell.status = CellStatus::kSkipped;
                    continue;
                }
                LpOptions base = spec.options;
                base.variant = Variant::kBase;
                LpOptions no1 = spec.options;
                no1.variant = Variant::kNoWeight1;

                // A cap of nullopt with `none` set means nothing is feasible.
                auto cap_from = [&](const std::map<std::pair<size_t, size_t>, MaxKResult> &res, ScanHints &h,
                                    bool &none) {
                    if (di == 0) return;
                    auto it = res.find({ds[di - 1], w});
                    if (it == res.end()) return;
                    if (!it->second.k) {
                        none = true;
                    } else {
                        h.k_upper = std::min(h.k_upper.value_or(n), *it->second.k);
                    }
                };
                std::vector<FeasiblePoint> known;
                if (wi > 0) {
                    auto it = points.find({d, ws[wi - 1]});
                    if (it != points.end()) known = it->second;
                }

                ScanHints h1;
                bool none1 = false;
                cap_from(base_res, h1, none1);
                h1.known = known;
                MaxKResult r1 = none1 ? MaxKResult{} : max_feasible_k(spec.family, n, d, w, base, false, h1);

                ScanHints h2;
                bool none2 = !r1.k;
                if (r1.k) h2.k_upper = r1.k;
                cap_from(no1_res, h2, none2);
                h2.known = known;
                MaxKResult r2 = none2 ? MaxKResult{} : max_feasible_k(spec.family, n, d, w, no1, false, h2);

                cell.k_bar1 = r1.k;
                cell.k_bar2 = r2.k;
                cell.status = r1.k ? CellStatus::kFeasibleAt : CellStatus::kInfeasibleAll;
                auto &pts = points[{d, w}];
                if (auto p = as_point(r1)) pts.push_back(*p);
                if (auto p = as_point(r2)) pts.push_back(*p);
                base_res[{d, w}] = std::move(r1);
                no1_res[{d, w}] = std::move(r2);
            }
        }
    });
    std::map<GridKey, RawCell> merged;
    for (auto &m : per_n) merged.insert(m.begin(), m.end());
    return merged;
}

void write_bound_csv(std::ostream &out, const BoundTable &table, const std::string &variant) {
    auto fmt = [](const std::optional<size_t> &v) { return v ? std::to_string(*v) : std::string(); };
    out << "n,d,w,family,variant,k_bar1,k_bar2,k1,k2,k_final,status,boundary_limited\n";
    for (const auto &[key, cell] : table.cells) {
        auto [n, d, w] = key;
        out << n << ',' << d << ',' << w << ',' << family_name(table.family) << ',' << variant << ','
            << fmt(cell.k_bar1) << ',' << fmt(cell.k_bar2) << ',' << fmt(cell.k1) << ',' << fmt(cell.k2) << ','
            << fmt(cell.k_final) << ',' << cell_status_name(cell.status) << ','
            << (cell.boundary_limited ? 1 : 0) << '\n';
    }
}

}  // namespace qcw
