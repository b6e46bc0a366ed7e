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

#include "qcw/simplex.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <optional>
#include <stdexcept>

namespace qcw {

const char *relation_symbol(Relation rel) {
    switch (rel) {
        case Relation::kLessEqual:
            return "<=";
        case Relation::kEqual:
            return "=";
        case Relation::kGreaterEqual:
            return ">=";
    }
    return "?";
}

void LinearProgram::add_row(std::vector<Rational> coeffs, Relation rel, Rational rhs, std::string label) {
    if (coeffs.size() != num_vars) {
        throw std::invalid_argument("row has " + std::to_string(coeffs.size()) + " coefficients, expected " +
                                    std::to_string(num_vars));
    }
    // mpq_class(num, den) is not reduced on construction; arithmetic assumes it is.
    for (auto &c : coeffs) c.canonicalize();
    rhs.canonicalize();
    rows.push_back(LpRow{std::move(coeffs), rel, std::move(rhs), std::move(label)});
}

namespace {

constexpr size_t kNone = static_cast<size_t>(-1);
// Degenerate pivots tolerated under Dantzig's rule before falling back to Bland's.
constexpr size_t kStallLimit = 20;

/// Column layout shared by both tableaus: structural variables, then one
/// slack/surplus per inequality row, then one artificial per row whose
/// (sign-normalized) relation is = or >=. Rows with negative rhs are negated.
struct Layout {
    size_t nv = 0, m = 0, ncols = 0;
    std::vector<int> flip;
    std::vector<Relation> rel;  // after flipping
    std::vector<size_t> slack, art;
    std::vector<bool> artificial;

    explicit Layout(const LinearProgram &lp) : nv(lp.num_vars), m(lp.rows.size()) {
        flip.assign(m, 1);
        rel.resize(m);
        slack.assign(m, kNone);
        art.assign(m, kNone);
        size_t col = nv;
        for (size_t i = 0; i < m; i++) {
            rel[i] = lp.rows[i].rel;
            if (lp.rows[i].rhs < 0) {
                flip[i] = -1;
                if (rel[i] == Relation::kLessEqual) {
                    rel[i] = Relation::kGreaterEqual;
                } else if (rel[i] == Relation::kGreaterEqual) {
                    rel[i] = Relation::kLessEqual;
                }
            }
            if (rel[i] != Relation::kEqual) slack[i] = col++;
        }
        for (size_t i = 0; i < m; i++) {
            if (rel[i] != Relation::kLessEqual) art[i] = col++;
        }
        ncols = col;
        artificial.assign(ncols, false);
        for (size_t i = 0; i < m; i++) {
            if (art[i] != kNone) artificial[art[i]] = true;
        }
    }

    double slack_sign(size_t i) const { return rel[i] == Relation::kLessEqual ? 1 : -1; }
    size_t initial_basic(size_t i) const { return art[i] != kNone ? art[i] : slack[i]; }
};

/// A basis viewed through its structural columns: rows whose own unit column
/// is nonbasic are "tight" and must be solved by the basic structurals.
struct BasisSplit {
    std::vector<size_t> vars, tight;
    std::vector<bool> art_basic;  // row i has its artificial in the basis
    bool square = false;

    BasisSplit(const Layout &L, const std::vector<size_t> &basis) : art_basic(L.m, false) {
        std::vector<bool> unit_basic(L.m, false);
        std::vector<size_t> owner(L.ncols, kNone);
        for (size_t i = 0; i < L.m; i++) {
            if (L.slack[i] != kNone) owner[L.slack[i]] = i;
            if (L.art[i] != kNone) owner[L.art[i]] = i;
        }
        for (size_t c : basis) {
            if (c < L.nv) {
                vars.push_back(c);
            } else {
                unit_basic[owner[c]] = true;
                if (L.artificial[c]) art_basic[owner[c]] = true;
            }
        }
        for (size_t i = 0; i < L.m; i++) {
            if (!unit_basic[i]) tight.push_back(i);
        }
        square = tight.size() == vars.size();
    }
};

/// Solves the p x p integer system M[:, :p] x = M[:, p] by fraction-free
/// elimination; intermediate entries stay bounded by minors of M.
std::optional<std::vector<Rational>> bareiss_solve(std::vector<std::vector<mpz_class>> M) {
    size_t p = M.size();
    mpz_class prev = 1, t1, t2;
    for (size_t k = 0; k < p; k++) {
        size_t piv = k;
        while (piv < p && sgn(M[piv][k]) == 0) piv++;
        if (piv == p) return std::nullopt;
        std::swap(M[piv], M[k]);
        for (size_t i = k + 1; i < p; i++) {
            for (size_t j = k + 1; j <= p; j++) {
                mpz_mul(t1.get_mpz_t(), M[i][j].get_mpz_t(), M[k][k].get_mpz_t());
                mpz_mul(t2.get_mpz_t(), M[i][k].get_mpz_t(), M[k][j].get_mpz_t());
                mpz_sub(t1.get_mpz_t(), t1.get_mpz_t(), t2.get_mpz_t());
                mpz_divexact(M[i][j].get_mpz_t(), t1.get_mpz_t(), prev.get_mpz_t());
            }
            M[i][k] = 0;
        }
        prev = M[k][k];
    }
    std::vector<Rational> x(p);
    for (size_t k = p; k-- > 0;) {
        Rational acc = M[k][p];
        for (size_t j = k + 1; j < p; j++) acc -= Rational(M[k][j]) * x[j];
        x[k] = acc / Rational(M[k][k]);
    }
    return x;
}

/// Scales a rational vector to integers (by the lcm of its denominators).
std::vector<mpz_class> integer_row(const std::vector<const Rational *> &vals) {
    mpz_class l = 1;
    for (const Rational *q : vals) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), q->get_den_mpz_t());
    std::vector<mpz_class> out;
    out.reserve(vals.size());
    for (const Rational *q : vals) out.push_back(q->get_num() * (l / q->get_den()));
    return out;
}

/// Dense phase-one tableau over a numeric field T. The objective row holds
/// phase-one reduced costs; obj(rhs) is minus the phase-one objective.
template <typename T>
class TableauBase {
   protected:
    TableauBase(const Layout &layout) : L(layout), width_(layout.ncols + 1) {
        cells_.resize((L.m + 1) * width_);
        basis_.resize(L.m);
        for (size_t i = 0; i < L.m; i++) basis_[i] = L.initial_basic(i);
    }

    T &at(size_t i, size_t j) { return cells_[i * width_ + j]; }
    T &obj(size_t j) { return cells_[L.m * width_ + j]; }
    T &rhs(size_t i) { return cells_[i * width_ + L.ncols]; }

    void init_objective() {
        for (size_t j = 0; j < width_; j++) {
            T acc = (j < L.ncols && L.artificial[j]) ? T(1) : T(0);
            for (size_t i = 0; i < L.m; i++) {
                if (L.art[i] != kNone) acc -= at(i, j);
            }
            obj(j) = acc;
        }
    }

    const Layout &L;
    size_t width_;
    std::vector<T> cells_;
    std::vector<size_t> basis_;
};

class ExactTableau : TableauBase<mpq_class> {
   public:
    ExactTableau(const LinearProgram &lp, const Layout &layout) : TableauBase(layout) {
        for (size_t i = 0; i < L.m; i++) {
            const LpRow &row = lp.rows[i];
            for (size_t j = 0; j < L.nv; j++) {
                at(i, j) = L.flip[i] < 0 ? Rational(-row.coeffs[j]) : row.coeffs[j];
            }
            rhs(i) = L.flip[i] < 0 ? Rational(-row.rhs) : row.rhs;
            if (L.slack[i] != kNone) at(i, L.slack[i]) = static_cast<int>(L.slack_sign(i));
            if (L.art[i] != kNone) at(i, L.art[i]) = 1;
        }
        init_objective();
    }

    LpResult run() {
        LpResult result;
        result.method = SolveMethod::kExact;
        bool bland = false;
        size_t stall = 0;
        mpq_class ratio, best_ratio, tmp;
        while (true) {
            size_t enter = choose_entering(bland);
            if (enter == kNone) break;
            size_t leave = kNone;
            for (size_t i = 0; i < L.m; i++) {
                const mpq_class &a = at(i, enter);
                if (sgn(a) <= 0) continue;
                ratio = rhs(i) / a;
                if (leave == kNone || ratio < best_ratio ||
                    (ratio == best_ratio && basis_[i] < basis_[leave])) {
                    leave = i;
                    best_ratio = ratio;
                }
            }
            if (leave == kNone) {
                // Phase-one objective is bounded below by zero, so this cannot happen.
                throw std::logic_error("phase-one simplex reported an unbounded ray");
            }
            bool degenerate = sgn(best_ratio) == 0;
            pivot(leave, enter, tmp);
            result.pivots++;
            if (degenerate) {
                if (++stall > kStallLimit) bland = true;
            } else {
                stall = 0;
                bland = false;
            }
        }
        if (sgn(obj(L.ncols)) == 0) {
            result.feasible = true;
            result.witness.assign(L.nv, 0);
            for (size_t i = 0; i < L.m; i++) {
                if (basis_[i] < L.nv) result.witness[basis_[i]] = rhs(i);
            }
        } else {
            result.feasible = false;
            result.farkas.resize(L.m);
            for (size_t i = 0; i < L.m; i++) {
                // Dual value y_i = c_col - d_col on the identity column of row i.
                Rational y = L.art[i] != kNone ? Rational(1 - obj(L.art[i])) : Rational(-obj(L.slack[i]));
                result.farkas[i] = -y * L.flip[i];
            }
        }
        return result;
    }

   private:
    size_t choose_entering(bool bland) {
        size_t best = kNone;
        for (size_t j = 0; j < L.ncols; j++) {
            if (L.artificial[j]) continue;
            const mpq_class &d = obj(j);
            if (sgn(d) >= 0) continue;
            if (bland) return j;
            if (best == kNone || d < obj(best)) best = j;
        }
        return best;
    }

    void pivot(size_t r, size_t s, mpq_class &tmp) {
        nz_.clear();
        mpq_class inv = 1 / at(r, s);
        for (size_t j = 0; j < width_; j++) {
            mpq_class &x = at(r, j);
            if (sgn(x) != 0) {
                if (j != s) mpq_mul(x.get_mpq_t(), x.get_mpq_t(), inv.get_mpq_t());
                nz_.push_back(j);
            }
        }
        at(r, s) = 1;
        mpq_class factor;
        for (size_t i = 0; i <= L.m; i++) {
            if (i == r) continue;
            mpq_class &lead = cells_[i * width_ + s];
            if (sgn(lead) == 0) continue;
            factor = lead;
            mpq_class *row = &cells_[i * width_];
            const mpq_class *prow = &cells_[r * width_];
            for (size_t j : nz_) {
                mpq_mul(tmp.get_mpq_t(), factor.get_mpq_t(), prow[j].get_mpq_t());
                mpq_sub(row[j].get_mpq_t(), row[j].get_mpq_t(), tmp.get_mpq_t());
            }
        }
        basis_[r] = s;
    }

    std::vector<size_t> nz_;
};

using Real = long double;

/// Floating-point phase one on an equilibrated copy. Its verdicts are only
/// hints: the final basis and duals are re-checked in exact arithmetic.
class FloatTableau : TableauBase<Real> {
   public:
    FloatTableau(const LinearProgram &lp, const Layout &layout, bool perturb) : TableauBase(layout) {
        // Geometric-mean equilibration of the structural block.
        std::vector<std::vector<Real>> a(L.m, std::vector<Real>(L.nv));
        std::vector<Real> b(L.m);
        for (size_t i = 0; i < L.m; i++) {
            for (size_t j = 0; j < L.nv; j++) a[i][j] = static_cast<Real>(lp.rows[i].coeffs[j].get_d()) * L.flip[i];
            b[i] = static_cast<Real>(lp.rows[i].rhs.get_d()) * L.flip[i];
        }
        row_scale_.assign(L.m, 1);
        std::vector<Real> col_scale(L.nv, 1);
        for (int pass = 0; pass < 6; pass++) {
            for (size_t i = 0; i < L.m; i++) {
                Real lo = 0, hi = 0;
                for (size_t j = 0; j < L.nv; j++) {
                    Real v = std::fabs(a[i][j] * row_scale_[i] * col_scale[j]);
                    if (v == 0) continue;
                    lo = lo == 0 ? v : std::min(lo, v);
                    hi = std::max(hi, v);
                }
                if (hi > 0) row_scale_[i] /= std::sqrt(lo * hi);
            }
            for (size_t j = 0; j < L.nv; j++) {
                Real lo = 0, hi = 0;
                for (size_t i = 0; i < L.m; i++) {
                    Real v = std::fabs(a[i][j] * row_scale_[i] * col_scale[j]);
                    if (v == 0) continue;
                    lo = lo == 0 ? v : std::min(lo, v);
                    hi = std::max(hi, v);
                }
                if (hi > 0) col_scale[j] /= std::sqrt(lo * hi);
            }
        }
        for (size_t i = 0; i < L.m; i++) {
            for (size_t j = 0; j < L.nv; j++) a[i][j] *= row_scale_[i] * col_scale[j];
        }
        scaled_ = a;
        for (size_t i = 0; i < L.m; i++) {
            for (size_t j = 0; j < L.nv; j++) at(i, j) = a[i][j];
            rhs(i) = b[i] * row_scale_[i];
            // Relaxing perturbation against degeneracy; the exact checks use the true rows.
            if (perturb && L.rel[i] == Relation::kLessEqual) rhs(i) += kPerturb * (1 + std::fmod(0.6180339887L * (i + 1), 1.0L));
            if (L.slack[i] != kNone) at(i, L.slack[i]) = L.slack_sign(i);
            if (L.art[i] != kNone) at(i, L.art[i]) = 1;
        }
        init_objective();
        orig_ = cells_;
        Real bmax = 1;
        for (size_t i = 0; i < L.m; i++) bmax = std::max(bmax, std::fabs(rhs(i)));
        feas_tol_ = 1e-9 * bmax;
    }

    /// Returns false when the iteration limit was hit or the basis went singular.
    bool run() {
        const Real cost_tol = 1e-9L, piv_tol = 1e-11L;
        size_t limit = 50 * (L.m + L.ncols) + 1000;
        bool bland = false;
        size_t stall = 0, since_refactor = 0;
        for (size_t iter = 0; iter < limit; iter++) {
            size_t enter = kNone;
            for (size_t j = 0; j < L.ncols; j++) {
                if (L.artificial[j] || obj(j) >= -cost_tol) continue;
                if (bland) {
                    enter = j;
                    break;
                }
                if (enter == kNone || obj(j) < obj(enter)) enter = j;
            }
            if (enter == kNone) {
                // Confirm optimality on a freshly factored tableau.
                if (since_refactor == 0) return true;
                if (!refactor()) return false;
                since_refactor = 0;
                continue;
            }
            // Harris two-pass ratio test: relax each bound by kHarrisTol, then
            // take the largest pivot among rows within the relaxed step.
            Real colmax = 0;
            for (size_t i = 0; i < L.m; i++) colmax = std::max(colmax, at(i, enter));
            Real tol = std::max(piv_tol, colmax * 1e-9L);
            Real theta = 0;
            bool any = false;
            for (size_t i = 0; i < L.m; i++) {
                Real a = at(i, enter);
                if (a <= tol) continue;
                Real r = (std::max<Real>(rhs(i), 0) + kHarrisTol) / a;
                if (!any || r < theta) theta = r;
                any = true;
            }
            size_t leave = kNone;
            Real best = 0;
            for (size_t i = 0; i < L.m && any; i++) {
                Real a = at(i, enter);
                if (a <= tol) continue;
                Real ratio = std::max<Real>(rhs(i), 0) / a;
                if (ratio > theta) continue;
                bool better = leave == kNone || (bland ? basis_[i] < basis_[leave] : a > at(leave, enter));
                if (better) {
                    leave = i;
                    best = ratio;
                }
            }
            if (leave == kNone) {
                return false;
            }
            pivot(leave, enter);
            for (size_t i = 0; i < L.m; i++) {
                if (rhs(i) < 0) rhs(i) = 0;
            }
            if (++since_refactor >= kRefactorEvery) {
                if (!refactor()) return false;
                since_refactor = 0;
            }
            if (best <= 1e-12L) {
                if (++stall > kStallLimit) bland = true;
            } else {
                stall = 0;
                bland = false;
            }
        }
        return false;
    }

    Real objective() { return -obj(L.ncols); }
    bool looks_feasible() { return -obj(L.ncols) <= feas_tol_; }
    const std::vector<size_t> &basis() const { return basis_; }

    /// Phase-one duals of the final basis, recomputed from the scaled matrix
    /// (not read off the drifted objective row), mapped back to certificate
    /// multipliers on the original rows.
    std::optional<std::vector<double>> farkas_hint() {
        BasisSplit split(L, basis_);
        if (!split.square) return std::nullopt;
        size_t p = split.vars.size();
        // Transposed system: sum_{i tight} y_i a_ij = -sum_{i art basic} a_ij.
        std::vector<std::vector<Real>> M(p, std::vector<Real>(p + 1));
        for (size_t c = 0; c < p; c++) {
            size_t j = split.vars[c];
            for (size_t r = 0; r < p; r++) M[c][r] = scaled_[split.tight[r]][j];
            Real acc = 0;
            for (size_t i = 0; i < L.m; i++) {
                if (split.art_basic[i]) acc -= scaled_[i][j];
            }
            M[c][p] = acc;
        }
        auto sol = lu_solve(M);
        if (!sol) return std::nullopt;
        std::vector<Real> y(L.m, 0);
        for (size_t i = 0; i < L.m; i++) {
            if (split.art_basic[i]) y[i] = 1;
        }
        for (size_t r = 0; r < p; r++) y[split.tight[r]] = (*sol)[r];
        std::vector<double> out(L.m);
        for (size_t i = 0; i < L.m; i++) out[i] = static_cast<double>(-y[i] * row_scale_[i] * L.flip[i]);
        return out;
    }

   private:
    static constexpr size_t kRefactorEvery = 100;
    static constexpr Real kHarrisTol = 1e-9L;
    static constexpr Real kPerturb = 1e-7L;

    /// Rebuilds the tableau for the current basis from the original rows.
    bool refactor() {
        std::vector<size_t> cols = basis_;
        cells_ = orig_;
        std::vector<bool> used(L.m, false);
        for (size_t c : cols) {
            size_t piv = kNone;
            for (size_t i = 0; i < L.m; i++) {
                if (used[i]) continue;
                if (piv == kNone || std::fabs(at(i, c)) > std::fabs(at(piv, c))) piv = i;
            }
            if (piv == kNone || std::fabs(at(piv, c)) < 1e-14L) {
                return false;
            }
            used[piv] = true;
            pivot(piv, c);
        }
        return true;
    }

    void pivot(size_t r, size_t s) {
        Real inv = 1 / at(r, s);
        Real *prow = &cells_[r * width_];
        nz_.clear();
        for (size_t j = 0; j < width_; j++) {
            if (prow[j] != 0) {
                prow[j] *= inv;
                nz_.push_back(j);
            }
        }
        prow[s] = 1;
        for (size_t i = 0; i <= L.m; i++) {
            if (i == r) continue;
            Real *row = &cells_[i * width_];
            Real f = row[s];
            if (f == 0) continue;
            for (size_t j : nz_) row[j] -= f * prow[j];
            row[s] = 0;
        }
        basis_[r] = s;
    }

    /// Gaussian elimination with partial pivoting plus one refinement step.
    static std::optional<std::vector<Real>> lu_solve(const std::vector<std::vector<Real>> &A) {
        size_t p = A.size();
        auto M = A;
        std::vector<size_t> perm(p);
        std::iota(perm.begin(), perm.end(), 0);
        for (size_t k = 0; k < p; k++) {
            size_t piv = k;
            for (size_t i = k + 1; i < p; i++) {
                if (std::fabs(M[i][k]) > std::fabs(M[piv][k])) piv = i;
            }
            if (M[piv][k] == 0) return std::nullopt;
            std::swap(M[piv], M[k]);
            std::swap(perm[piv], perm[k]);
            for (size_t i = k + 1; i < p; i++) {
                Real f = M[i][k] / M[k][k];
                M[i][k] = f;
                for (size_t j = k + 1; j < p; j++) M[i][j] -= f * M[k][j];
            }
        }
        auto solve = [&](std::vector<Real> b) {
            std::vector<Real> x(p);
            for (size_t i = 0; i < p; i++) x[i] = b[perm[i]];
            for (size_t i = 0; i < p; i++) {
                for (size_t j = 0; j < i; j++) x[i] -= M[i][j] * x[j];
            }
            for (size_t i = p; i-- > 0;) {
                for (size_t j = i + 1; j < p; j++) x[i] -= M[i][j] * x[j];
                x[i] /= M[i][i];
            }
            return x;
        };
        std::vector<Real> b(p);
        for (size_t i = 0; i < p; i++) b[i] = A[i][p];
        auto x = solve(b);
        std::vector<Real> res(p);
        for (size_t i = 0; i < p; i++) {
            Real acc = A[i][p];
            for (size_t j = 0; j < p; j++) acc -= A[i][j] * x[j];
            res[i] = acc;
        }
        auto dx = solve(res);
        for (size_t i = 0; i < p; i++) x[i] += dx[i];
        return x;
    }

    std::vector<std::vector<Real>> scaled_;
    std::vector<Real> orig_;
    std::vector<Real> row_scale_;
    std::vector<size_t> nz_;
    Real feas_tol_ = 0;
};

/// Exact vertex for a basis: basic structurals solve the tight rows, all
/// other structurals are zero.
std::optional<std::vector<Rational>> basis_point(const LinearProgram &lp, const Layout &L,
                                                 const std::vector<size_t> &basis) {
    BasisSplit split(L, basis);
    if (!split.square) return std::nullopt;
    size_t p = split.vars.size();
    std::vector<std::vector<mpz_class>> M;
    for (size_t r = 0; r < p; r++) {
        const LpRow &row = lp.rows[split.tight[r]];
        std::vector<const Rational *> vals;
        for (size_t c = 0; c < p; c++) vals.push_back(&row.coeffs[split.vars[c]]);
        vals.push_back(&row.rhs);
        M.push_back(integer_row(vals));
    }
    auto xb = bareiss_solve(std::move(M));
    if (!xb) return std::nullopt;
    std::vector<Rational> x(L.nv, 0);
    for (size_t c = 0; c < p; c++) {
        if ((*xb)[c] < 0) return std::nullopt;
        x[split.vars[c]] = (*xb)[c];
    }
    return x;
}

/// Exact phase-one duals of a basis, as certificate multipliers.
std::optional<std::vector<Rational>> basis_dual(const LinearProgram &lp, const Layout &L,
                                                const std::vector<size_t> &basis) {
    BasisSplit split(L, basis);
    if (!split.square) return std::nullopt;
    size_t p = split.vars.size();
    std::vector<std::vector<mpz_class>> M;
    for (size_t c = 0; c < p; c++) {
        size_t j = split.vars[c];
        std::vector<Rational> vals;
        for (size_t r = 0; r < p; r++) vals.push_back(lp.rows[split.tight[r]].coeffs[j] * L.flip[split.tight[r]]);
        Rational acc = 0;
        for (size_t i = 0; i < L.m; i++) {
            if (split.art_basic[i]) acc -= lp.rows[i].coeffs[j] * L.flip[i];
        }
        vals.push_back(acc);
        std::vector<const Rational *> ptrs;
        for (const auto &v : vals) ptrs.push_back(&v);
        M.push_back(integer_row(ptrs));
    }
    auto sol = bareiss_solve(std::move(M));
    if (!sol) return std::nullopt;
    std::vector<Rational> y(L.m, 0);
    for (size_t i = 0; i < L.m; i++) {
        if (split.art_basic[i]) y[i] = -L.flip[i];
    }
    for (size_t r = 0; r < p; r++) y[split.tight[r]] = -(*sol)[r] * L.flip[split.tight[r]];
    return y;
}

/// Turns approximate multipliers into an exact certificate. Sign conditions
/// are enforced by clamping; small negative entries of yᵀA are then lifted
/// with equality rows whose coefficients are all nonnegative (each such row
/// bounds its support), cheapest right-hand side first.
std::optional<std::vector<Rational>> repair_farkas(const LinearProgram &lp, std::vector<Rational> y) {
    size_t m = lp.rows.size();
    for (size_t i = 0; i < m; i++) {
        if (lp.rows[i].rel == Relation::kLessEqual && y[i] < 0) y[i] = 0;
        if (lp.rows[i].rel == Relation::kGreaterEqual && y[i] > 0) y[i] = 0;
    }
    std::vector<Rational> combo(lp.num_vars, 0);
    for (size_t i = 0; i < m; i++) {
        if (sgn(y[i]) == 0) continue;
        for (size_t j = 0; j < lp.num_vars; j++) {
            if (sgn(lp.rows[i].coeffs[j]) != 0) combo[j] += y[i] * lp.rows[i].coeffs[j];
        }
    }
    std::vector<size_t> packing;
    for (size_t i = 0; i < m; i++) {
        const LpRow &row = lp.rows[i];
        if (row.rel != Relation::kEqual || row.rhs < 0) continue;
        bool ok = std::all_of(row.coeffs.begin(), row.coeffs.end(), [](const Rational &c) { return c >= 0; });
        if (ok) packing.push_back(i);
    }
    std::stable_sort(packing.begin(), packing.end(), [&](size_t a, size_t b) { return lp.rows[a].rhs < lp.rows[b].rhs; });
    for (size_t i : packing) {
        const LpRow &row = lp.rows[i];
        Rational lift = 0;
        for (size_t j = 0; j < lp.num_vars; j++) {
            if (sgn(row.coeffs[j]) > 0 && combo[j] < 0) lift = std::max(lift, Rational(-combo[j] / row.coeffs[j]));
        }
        if (sgn(lift) == 0) continue;
        y[i] += lift;
        for (size_t j = 0; j < lp.num_vars; j++) {
            if (sgn(row.coeffs[j]) != 0) combo[j] += lift * row.coeffs[j];
        }
    }
    if (!verify_farkas(lp, y)) return std::nullopt;
    return y;
}

/// One floating-point phase one followed by exact confirmation of its basis.
std::optional<LpResult> float_attempt(const LinearProgram &lp, const Layout &layout, bool perturb,
                                      std::optional<bool> &screen) {
    FloatTableau ft(lp, layout, perturb);
    if (!ft.run()) return std::nullopt;
    if (!screen) screen = ft.looks_feasible();
    LpResult result;
    result.method = SolveMethod::kFloatGuided;
    auto try_point = [&] {
        auto x = basis_point(lp, layout, ft.basis());
        if (x && verify_witness(lp, *x)) {
            result.feasible = true;
            result.witness = std::move(*x);
            return true;
        }
        return false;
    };
    auto try_cert = [&] {
        std::optional<std::vector<Rational>> y;
        if (auto hint = ft.farkas_hint()) {
            if (std::all_of(hint->begin(), hint->end(), [](double v) { return std::isfinite(v); })) {
                y = repair_farkas(lp, std::vector<Rational>(hint->begin(), hint->end()));
            }
        }
        if (!y) {
            if (auto exact = basis_dual(lp, layout, ft.basis())) y = repair_farkas(lp, std::move(*exact));
        }
        if (!y) return false;
        result.feasible = false;
        result.farkas = std::move(*y);
        return true;
    };
    bool ok = ft.looks_feasible() ? (try_point() || try_cert()) : (try_cert() || try_point());
    if (!ok) return std::nullopt;
    result.screen_feasible = screen;
    return result;
}

}  // namespace

const char *solve_method_name(SolveMethod m) {
    return m == SolveMethod::kExact ? "exact" : "float-guided";
}

LpResult solve_feasible(const LinearProgram &lp, const SolveOptions &opts) {
    for (const auto &row : lp.rows) {
        if (row.coeffs.size() != lp.num_vars) {
            throw std::invalid_argument("row width does not match variable count");
        }
    }
    Layout layout(lp);
    if (opts.float_guide && layout.m > 0) {
        // The perturbed run handles degeneracy well; the plain run rescues
        // the rare bases that are only feasible for the relaxed rows.
        std::optional<bool> screen;
        for (bool perturb : {true, false}) {
            if (auto result = float_attempt(lp, layout, perturb, screen)) return *result;
        }
        LpResult result = ExactTableau(lp, layout).run();
        result.screen_feasible = screen;
        return result;
    }
    return ExactTableau(lp, layout).run();
}

bool verify_witness(const LinearProgram &lp, std::span<const Rational> x) {
    if (x.size() != lp.num_vars) return false;
    for (const auto &v : x) {
        if (v < 0) return false;
    }
    for (const auto &row : lp.rows) {
        Rational lhs = 0;
        for (size_t j = 0; j < lp.num_vars; j++) {
            if (sgn(row.coeffs[j]) != 0 && sgn(x[j]) != 0) lhs += row.coeffs[j] * x[j];
        }
        bool ok = row.rel == Relation::kLessEqual ? lhs <= row.rhs
                  : row.rel == Relation::kEqual   ? lhs == row.rhs
                                                  : lhs >= row.rhs;
        if (!ok) return false;
    }
    return true;
}

bool verify_farkas(const LinearProgram &lp, std::span<const Rational> y) {
    if (y.size() != lp.rows.size()) return false;
    std::vector<Rational> combo(lp.num_vars, 0);
    Rational rhs = 0;
    for (size_t i = 0; i < lp.rows.size(); i++) {
        const auto &row = lp.rows[i];
        if (row.rel == Relation::kLessEqual && y[i] < 0) return false;
        if (row.rel == Relation::kGreaterEqual && y[i] > 0) return false;
        if (sgn(y[i]) == 0) continue;
        for (size_t j = 0; j < lp.num_vars; j++) {
            if (sgn(row.coeffs[j]) != 0) combo[j] += y[i] * row.coeffs[j];
        }
        rhs += y[i] * row.rhs;
    }
    for (const auto &c : combo) {
        if (c < 0) return false;
    }
    return rhs < 0;
}

}  // namespace qcw
