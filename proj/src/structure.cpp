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


#include "qcw/structure.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>
#include <set>

namespace qcw {

namespace {

struct UnionFind {
    std::vector<size_t> parent;
    explicit UnionFind(size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    size_t find(size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(size_t a, size_t b) {
        a = find(a);
        b = find(b);
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
};

BinaryMatrix rows_to_matrix(size_t n, const std::vector<BinaryVector> &rows) { return BinaryMatrix::from_rows(n, rows); }

/// Minimum weight over span(basis) ∖ span(excluded); 0 when empty.
size_t min_weight_outside(const BinaryMatrix &basis, const BinaryMatrix &excluded) {
    BinaryMatrix b = row_reduce(basis).reduced;
    if (b.rows() > 22) throw std::length_error("logical space too large to enumerate");
    RowSpace ex(excluded);
    size_t best = 0;
    BinaryVector v(basis.cols());
    for (uint64_t i = 1; i < (uint64_t{1} << b.rows()); i++) {
        v ^= b.row(static_cast<size_t>(std::countr_zero(i)));
        size_t w = v.weight();
        if ((best == 0 || w < best) && !ex.contains(v)) best = w;
    }
    return best;
}

/// Elements of span(g) that commute (dot product zero) with all of span(h).
BinaryMatrix commuting_part(const BinaryMatrix &g, const BinaryMatrix &h) {
    size_t n = g.cols();
    if (g.rows() == 0) return BinaryMatrix(0, n);
    if (h.rows() == 0) return g;
    BinaryMatrix coeffs = nullspace(g.multiply_transpose(h).transpose());
    BinaryMatrix out(0, n);
    for (size_t r = 0; r < coeffs.rows(); r++) {
        BinaryVector v(n);
        for (size_t i : coeffs.row(r).support()) v ^= g.row(i);
        out.append_row(v);
    }
    return out;
}

BinaryMatrix kernel_or_identity(const BinaryMatrix &m, size_t n) {
    if (m.rows() == 0) return BinaryMatrix::identity(n);
    return nullspace(m);
}

void split_css(const SubsystemCode &c, BinaryMatrix &gx, BinaryMatrix &gz) {
    gx = BinaryMatrix(0, c.n());
    gz = BinaryMatrix(0, c.n());
    for (size_t i = 0; i < c.gauge().size(); i++) {
        const auto &p = c.gauge()[i];
        bool hx = !p.x.is_zero(), hz = !p.z.is_zero();
        if (hx && hz) throw UnsupportedGauge("gauge check " + std::to_string(i) + " is not CSS-type");
        if (hx) gx.append_row(p.x);
        if (hz) gz.append_row(p.z);
    }
}

}  // namespace

MatrixDistances matrix_distances(const BinaryMatrix &a) {
    MatrixDistances d;
    d.rank = rank(a);
    if (d.rank > 20) throw std::length_error("matrix rank " + std::to_string(d.rank) + " exceeds the enumeration cap of 20");
    d.d_row = min_weight(a);
    d.d_col = min_weight(a.transpose());
    return d;
}

SubsystemCode subsystem_from_matrix(const BinaryMatrix &a) {
    size_t n = a.count_ones();
    if (n == 0) throw std::invalid_argument("matrix has no nonzero entries");
    std::vector<std::vector<size_t>> id(a.rows(), std::vector<size_t>(a.cols(), SIZE_MAX));
    size_t q = 0;
    for (size_t i = 0; i < a.rows(); i++) {
        for (size_t j = 0; j < a.cols(); j++) {
            if (a.get(i, j)) id[i][j] = q++;
        }
    }
    std::vector<PauliOperator> gauge;
    auto link = [&](size_t p, size_t r, bool x_type) {
        PauliOperator op(n);
        (x_type ? op.x : op.z).set(p, true);
        (x_type ? op.x : op.z).set(r, true);
        gauge.push_back(op);
    };
    for (size_t i = 0; i < a.rows(); i++) {
        size_t prev = SIZE_MAX;
        for (size_t j = 0; j < a.cols(); j++) {
            if (id[i][j] == SIZE_MAX) continue;
            if (prev != SIZE_MAX) link(prev, id[i][j], true);
            prev = id[i][j];
        }
    }
    for (size_t j = 0; j < a.cols(); j++) {
        size_t prev = SIZE_MAX;
        for (size_t i = 0; i < a.rows(); i++) {
            if (id[i][j] == SIZE_MAX) continue;
            if (prev != SIZE_MAX) link(prev, id[i][j], false);
            prev = id[i][j];
        }
    }
    return SubsystemCode(n, gauge);
}

std::pair<size_t, size_t> subsystem_css_distances(const SubsystemCode &c) {
    if (c.n() > 22) throw std::length_error("dressed distance brute force is limited to n <= 22");
    BinaryMatrix gx, gz;
    split_css(c, gx, gz);
    BinaryMatrix sx = commuting_part(gx, gz), sz = commuting_part(gz, gx);
    size_t dx = min_weight_outside(kernel_or_identity(sz, c.n()), gx);
    size_t dz = min_weight_outside(kernel_or_identity(sx, c.n()), gz);
    return {dx, dz};
}

namespace {

/// Independent, greedily weight-minimal generators of one type, as supports.
std::vector<std::vector<size_t>> reduce_type(size_t n, std::vector<std::vector<size_t>> gens) {
    auto to_vec = [n](const std::vector<size_t> &s) { return BinaryVector::from_support(n, s); };
    auto independent = [&](std::vector<std::vector<size_t>> in) {
        std::vector<std::vector<size_t>> kept;
        BinaryMatrix span(0, n);
        for (auto &g : in) {
            BinaryVector v = to_vec(g);
            if (in_rowspace(span, v)) continue;
            span.append_row(v);
            kept.push_back(std::move(g));
        }
        return kept;
    };
    gens = independent(std::move(gens));
    bool changed = true;
    while (changed) {
        changed = false;
        std::set<size_t> singles;
        for (const auto &g : gens) {
            if (g.size() == 1) singles.insert(g[0]);
        }
        for (auto &g : gens) {
            if (g.size() != 2) continue;
            if (singles.count(g[0])) {
                g = {g[1]};
                changed = true;
            } else if (singles.count(g[1])) {
                g = {g[0]};
                changed = true;
            }
            if (changed) break;
        }
        if (changed) gens = independent(std::move(gens));
    }
    return gens;
}

}  // namespace

Weight2Analysis analyze_weight2_subsystem_full(const SubsystemCode &c) {
    size_t n = c.n();
    std::vector<std::vector<size_t>> xs, zs;
    for (size_t i = 0; i < c.gauge().size(); i++) {
        const auto &p = c.gauge()[i];
        bool hx = !p.x.is_zero(), hz = !p.z.is_zero();
        if (hx && hz) throw UnsupportedGauge("gauge check " + std::to_string(i) + " is not CSS-type");
        if (!hx && !hz) continue;
        auto sup = hx ? p.x.support() : p.z.support();
        if (sup.size() > 2) throw UnsupportedGauge("gauge check " + std::to_string(i) + " has weight > 2");
        (hx ? xs : zs).push_back(sup);
    }
    xs = reduce_type(n, std::move(xs));
    zs = reduce_type(n, std::move(zs));

    Weight2Analysis out;
    for (const auto &g : xs) out.reduced_gauge.emplace_back(BinaryVector::from_support(n, g), BinaryVector(n));
    for (const auto &g : zs) out.reduced_gauge.emplace_back(BinaryVector(n), BinaryVector::from_support(n, g));
    ComponentGraph &graph = out.graph;
    graph.n = n;
    auto build = [&](const std::vector<std::vector<size_t>> &gens, bool x_type) {
        auto &edges = x_type ? graph.x_edges : graph.z_edges;
        auto &marks = x_type ? graph.x_marks : graph.z_marks;
        UnionFind uf(n);
        std::vector<bool> marked(n, false), has_edge(n, false);
        for (const auto &g : gens) {
            if (g.size() == 2) {
                edges.emplace_back(g[0], g[1]);
                uf.unite(g[0], g[1]);
                has_edge[g[0]] = has_edge[g[1]] = true;
            } else {
                marks.push_back(g[0]);
                marked[g[0]] = true;
            }
        }
        std::map<size_t, size_t> slot;
        size_t first = graph.components.size();
        for (size_t q = 0; q < n; q++) {
            size_t r = uf.find(q);
            auto it = slot.find(r);
            if (it == slot.end()) {
                it = slot.emplace(r, graph.components.size()).first;
                Component comp;
                comp.x_type = x_type;
                graph.components.push_back(comp);
            }
            graph.components[it->second].qubits.push_back(q);
        }
        for (size_t ci = first; ci < graph.components.size(); ci++) {
            auto &comp = graph.components[ci];
            bool e = std::any_of(comp.qubits.begin(), comp.qubits.end(), [&](size_t q) { return has_edge[q]; });
            bool m = std::any_of(comp.qubits.begin(), comp.qubits.end(), [&](size_t q) { return marked[q]; });
            if (e && m) throw std::logic_error("component mixes weight-1 and weight-2 checks after reduction");
            comp.kind = e ? ComponentKind::kWeight2 : (m ? ComponentKind::kWeight1 : ComponentKind::kFree);
        }
    };
    build(xs, true);
    build(zs, false);
    for (size_t ci = 0; ci < graph.components.size(); ci++) {
        const auto &comp = graph.components[ci];
        if (comp.kind == ComponentKind::kWeight1) continue;
        (comp.x_type ? out.rows : out.cols).push_back(ci);
    }
    out.a = BinaryMatrix(out.rows.size(), out.cols.size());
    std::vector<size_t> row_of(n, SIZE_MAX);
    for (size_t i = 0; i < out.rows.size(); i++) {
        for (size_t q : graph.components[out.rows[i]].qubits) row_of[q] = i;
    }
    for (size_t j = 0; j < out.cols.size(); j++) {
        for (size_t q : graph.components[out.cols[j]].qubits) {
            if (row_of[q] != SIZE_MAX) out.a.flip(row_of[q], j);
        }
    }
    return out;
}

BinaryMatrix analyze_weight2_subsystem(const SubsystemCode &c) { return analyze_weight2_subsystem_full(c).a; }

// ---------------------------------------------------------------------------
// Surface recognition

namespace {

using Support = std::vector<size_t>;

struct SurfaceState {
    std::vector<size_t> alive;  // original qubit ids, ascending
    std::vector<Support> xs, zs;
    std::vector<size_t> z_origin;

    BinaryMatrix matrix(const std::vector<Support> &checks) const {
        std::map<size_t, size_t> col;
        for (size_t i = 0; i < alive.size(); i++) col[alive[i]] = i;
        BinaryMatrix m(checks.size(), alive.size());
        for (size_t r = 0; r < checks.size(); r++) {
            for (size_t q : checks[r]) m.set(r, col.at(q), true);
        }
        return m;
    }
    BinaryVector vec(const Support &s) const {
        BinaryVector v(alive.size());
        for (size_t q : s) v.set(static_cast<size_t>(std::lower_bound(alive.begin(), alive.end(), q) - alive.begin()), true);
        return v;
    }
};

std::string degree_violation(const SurfaceState &st) {
    for (const auto *checks : {&st.xs, &st.zs}) {
        bool x = checks == &st.xs;
        for (size_t r = 0; r < checks->size(); r++) {
            if ((*checks)[r].size() > 4) {
                return std::string(x ? "X" : "Z") + " check " + std::to_string(r) + " has weight " +
                       std::to_string((*checks)[r].size()) + " > 4";
            }
        }
        std::map<size_t, size_t> deg;
        for (const auto &s : *checks) {
            for (size_t q : s) deg[q]++;
        }
        for (size_t q : st.alive) {
            if (deg[q] != 2) {
                return "qubit " + std::to_string(q) + " is in " + std::to_string(deg[q]) + " " + (x ? "X" : "Z") +
                       " checks (expected exactly 2)";
            }
        }
    }
    return "";
}

/// Pair removal: an X and a Z check on the same four qubits with a
/// pair {i, j} such that X_iX_j and Z_iZ_j are both stabilizers.
bool remove_one_pair(SurfaceState &st, std::vector<std::pair<size_t, size_t>> &removed) {
    BinaryMatrix hx = st.matrix(st.xs), hz = st.matrix(st.zs);
    RowSpace sx(hx), sz(hz);
    for (const auto &x : st.xs) {
        if (x.size() != 4) continue;
        for (const auto &z : st.zs) {
            if (z != x) continue;
            for (size_t a = 0; a < 4; a++) {
                for (size_t b = a + 1; b < 4; b++) {
                    Support pair{x[a], x[b]};
                    BinaryVector v = st.vec(pair);
                    if (!sx.contains(v) || !sz.contains(v)) continue;
                    auto drop = [&](std::vector<Support> &checks, std::vector<size_t> *origin) {
                        std::vector<Support> kept;
                        std::vector<size_t> kept_origin;
                        for (size_t r = 0; r < checks.size(); r++) {
                            Support s;
                            for (size_t q : checks[r]) {
                                if (q != pair[0] && q != pair[1]) s.push_back(q);
                            }
                            if (s.empty()) continue;
                            kept.push_back(s);
                            if (origin) kept_origin.push_back((*origin)[r]);
                        }
                        checks = std::move(kept);
                        if (origin) *origin = std::move(kept_origin);
                    };
                    drop(st.xs, nullptr);
                    drop(st.zs, &st.z_origin);
                    st.alive.erase(std::remove_if(st.alive.begin(), st.alive.end(),
                                                  [&](size_t q) { return q == pair[0] || q == pair[1]; }),
                                   st.alive.end());
                    removed.emplace_back(pair[0], pair[1]);
                    return true;
                }
            }
        }
    }
    return false;
}

}  // namespace

SurfaceReport check_surface(const CssCode &c) {
    SurfaceState st;
    for (size_t q = 0; q < c.n(); q++) st.alive.push_back(q);
    for (size_t r = 0; r < c.hx().rows(); r++) {
        if (c.hx().row_weight(r)) st.xs.push_back(c.hx().row(r).support());
    }
    for (size_t r = 0; r < c.hz().rows(); r++) {
        if (!c.hz().row_weight(r)) continue;
        st.zs.push_back(c.hz().row(r).support());
        st.z_origin.push_back(r);
    }
    if (std::string why = degree_violation(st); !why.empty()) throw SurfaceRejected(why);

    SurfaceReport rep;
    while (remove_one_pair(st, rep.removed_pairs)) {
    }
    auto finish = [&]() {
        rep.qubits = st.alive;
        rep.reduced = CssCode(st.matrix(st.xs), st.matrix(st.zs));
        return rep;
    };
    if (std::string why = degree_violation(st); !why.empty()) {
        rep.diagnostics.push_back("after removing disentangled pairs: " + why);
        return finish();
    }

    // Multigraph: X checks are vertices, each qubit an edge between its two X checks.
    std::map<size_t, std::vector<size_t>> ends;
    for (size_t v = 0; v < st.xs.size(); v++) {
        for (size_t q : st.xs[v]) ends[q].push_back(v);
    }
    BinaryMatrix hz = st.matrix(st.zs);
    RowSpace zspan(hz);
    std::vector<Support> faces;
    std::vector<size_t> face_origin;
    bool ok = true;
    for (size_t s = 0; s < st.zs.size(); s++) {
        const Support &sup = st.zs[s];
        std::map<size_t, size_t> deg;
        for (size_t q : sup) {
            deg[ends[q][0]]++;
            deg[ends[q][1]]++;
        }
        std::string label = "Z check " + std::to_string(st.z_origin[s]);
        bool even_two = std::all_of(deg.begin(), deg.end(), [](const auto &e) { return e.second == 2; });
        if (!even_two) {
            rep.diagnostics.push_back(label + " is not a union of disjoint cycles (a vertex has degree other than 2)");
            ok = false;
            continue;
        }
        UnionFind uf(st.xs.size());
        for (size_t q : sup) uf.unite(ends[q][0], ends[q][1]);
        std::map<size_t, Support> cycles;
        for (size_t q : sup) cycles[uf.find(ends[q][0])].push_back(q);
        if (cycles.size() == 1) {
            faces.push_back(sup);
            face_origin.push_back(st.z_origin[s]);
            continue;
        }
        bool two_two = cycles.size() == 2 &&
                       std::all_of(cycles.begin(), cycles.end(), [](const auto &e) { return e.second.size() == 2; });
        if (two_two && std::all_of(cycles.begin(), cycles.end(),
                                   [&](const auto &e) { return zspan.contains(st.vec(e.second)); })) {
            for (const auto &[root, cyc] : cycles) {
                faces.push_back(cyc);
                face_origin.push_back(st.z_origin[s]);
            }
            rep.split_checks.push_back(st.z_origin[s]);
            continue;
        }
        rep.diagnostics.push_back(label + " decomposes into " + std::to_string(cycles.size()) + " cycles" +
                                  (two_two ? " whose qubit pairs are not both stabilizers" : ""));
        ok = false;
    }
    if (!ok) return finish();
    st.zs = faces;
    st.z_origin = face_origin;
    rep.recognized = true;

    UnionFind uf(st.xs.size());
    for (const auto &[q, e] : ends) uf.unite(e[0], e[1]);
    std::map<size_t, size_t> comp_of_root;
    std::vector<std::vector<size_t>> comp_vertices, comp_edges, comp_faces;
    for (size_t v = 0; v < st.xs.size(); v++) {
        auto [it, fresh] = comp_of_root.emplace(uf.find(v), comp_vertices.size());
        if (fresh) {
            comp_vertices.emplace_back();
            comp_edges.emplace_back();
            comp_faces.emplace_back();
        }
        comp_vertices[it->second].push_back(v);
    }
    for (const auto &[q, e] : ends) comp_edges[comp_of_root.at(uf.find(e[0]))].push_back(q);
    for (size_t f = 0; f < st.zs.size(); f++) comp_faces[comp_of_root.at(uf.find(ends[st.zs[f][0]][0]))].push_back(f);
    for (size_t i = 0; i < comp_vertices.size(); i++) {
        SurfaceComponent sc;
        sc.vertices = comp_vertices[i].size();
        sc.edges = comp_edges[i].size();
        sc.faces = comp_faces[i].size();
        sc.euler = static_cast<long>(sc.vertices) - static_cast<long>(sc.edges) + static_cast<long>(sc.faces);
        std::map<size_t, size_t> col;
        for (size_t e = 0; e < comp_edges[i].size(); e++) col[comp_edges[i][e]] = e;
        BinaryMatrix hx_c(sc.vertices, sc.edges), hz_c(sc.faces, sc.edges);
        for (size_t r = 0; r < sc.vertices; r++) {
            for (size_t q : st.xs[comp_vertices[i][r]]) hx_c.set(r, col.at(q), true);
        }
        for (size_t r = 0; r < sc.faces; r++) {
            for (size_t q : st.zs[comp_faces[i][r]]) hz_c.set(r, col.at(q), true);
        }
        sc.k = sc.edges - rank(hx_c) - rank(hz_c);
        if (sc.k > 2) throw std::logic_error("surface component encodes more than two qubits");
        rep.components.push_back(sc);
    }
    return finish();
}

}  // namespace qcw
