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

#ifndef QCW_LPBOUNDS_HPP
#define QCW_LPBOUNDS_HPP

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "qcw/simplex.hpp"

namespace qcw {

enum class Family { kCss, kStabilizer };
/// kNoWeight1 adds A_1 = 0 (A_1^X = A_1^Z = 0 for CSS), ruling out weight-one checks.
enum class Variant { kBase, kNoWeight1 };

const char *family_name(Family f);
const char *variant_name(Variant v);
Family parse_family(const std::string &s);

struct LpOptions {
    Variant variant = Variant::kBase;
    /// Reproduces the float pipeline's workaround: after normalizing each row,
    /// drop it when its largest |coefficient| exceeds its smallest nonzero one
    /// by more than `drop_ratio`.
    bool drop_wide_rows = false;
    double drop_ratio = 1e10;
    /// Stabilizer check-weight rows summed from i = 1 with the full binomial
    /// right-hand side, exactly as printed. The m = 0 row then reads 0 >= 1,
    /// so every instance is infeasible; kept only for comparison runs.
    bool printed_stabilizer_weight_rows = false;
    /// Emit the check-weight rows at all (off gives the unconstrained bound).
    bool check_weight_rows = true;
};

/// K_l(j; n, q) = sum_s (-1)^s (q-1)^(l-s) C(j, s) C(n-j, l-s).
Rational krawtchouk(size_t l, size_t j, size_t n, unsigned q);
/// table[l][j] = K_l(j; n, q) for 0 <= l, j <= n.
std::vector<std::vector<mpz_class>> krawtchouk_table(size_t n, unsigned q);

/// Dual weight distribution B_l = |C|^-1 sum_j K_l(j; n, q) A_j, where |C| = sum_j A_j.
std::vector<Rational> macwilliams_transform(const std::vector<Rational> &a, unsigned q);

struct LpInstance {
    Family family = Family::kCss;
    size_t n = 0, d = 0, w = 0;
    /// CSS: dimensions of C_X and C_Z. Stabilizer: k_x = k_z = k.
    size_t k_x = 0, k_z = 0;
    LpOptions options;
    /// CSS variables: A^X_0..A^X_n then A^Z_0..A^Z_n. Stabilizer: A_0..A_n.
    LinearProgram program;
    size_t dropped_rows = 0;

    size_t k() const { return family == Family::kCss ? k_x + k_z - n : k_x; }
};

LpInstance build_css_lp(size_t n, size_t d, size_t w, size_t k_x, size_t k_z, const LpOptions &opts = {});
LpInstance build_stab_lp(size_t n, size_t d, size_t w, size_t k, const LpOptions &opts = {});

/// (k_X, k_Z) pairs examined for a target CSS dimension k, in the order tried:
/// k_Z <= k_X, and splits with w (n - k_X) < n are skipped whenever some
/// split for the same k has w (n - k_X) >= n.
std::vector<std::pair<size_t, size_t>> css_splits(size_t n, size_t k, size_t w);

struct FeasiblePoint {
    size_t k = 0, k_x = 0, k_z = 0;
    std::vector<Rational> witness;
};

struct MaxKResult {
    std::optional<size_t> k;
    /// The feasible instance's split (CSS) and witness.
    size_t k_x = 0, k_z = 0;
    std::vector<Rational> witness;
    size_t lp_solves = 0;
    /// Infeasible instances examined above the answer, with their certificates.
    std::vector<std::pair<LpInstance, std::vector<Rational>>> certificates;
};

/// Facts known from related instances that let a scan skip solves without
/// changing its answer.
struct ScanHints {
    /// Every k above this is known infeasible (e.g. from a smaller d).
    std::optional<size_t> k_upper;
    /// Points feasible for a relaxation; each is re-verified exactly on the
    /// instance at hand before it is trusted.
    std::vector<FeasiblePoint> known;
};

/// Largest k whose instance is feasible, scanning k downward from n.
MaxKResult max_feasible_k(Family family, size_t n, size_t d, size_t w, const LpOptions &opts = {},
                          bool keep_certificates = false, const ScanHints &hints = {});

enum class CellStatus { kFeasibleAt, kInfeasibleAll, kSkipped };
const char *cell_status_name(CellStatus s);

using GridKey = std::tuple<size_t, size_t, size_t>;  // (n, d, w)

struct RawCell {
    std::optional<size_t> k_bar1;  // base variant
    std::optional<size_t> k_bar2;  // no-weight-one variant
    CellStatus status = CellStatus::kFeasibleAt;
};

struct BoundCell {
    std::optional<size_t> k_bar1, k_bar2, k1, k2, k_final;
    CellStatus status = CellStatus::kFeasibleAt;
    /// k1's minimum over n' >= n is attained at the largest in-grid n', so a
    /// wider grid could lower it.
    bool boundary_limited = false;
};

struct BoundTable {
    Family family = Family::kCss;
    std::map<GridKey, BoundCell> cells;
};

/// k1 = min over in-grid n' >= n of k̄1; k2 = max over n' <= n of k̄2;
/// k_final = min over d' <= d, w' >= w of min(k1, k2). An absent k̄ means no
/// k is feasible: it wins every min and loses every max. Skipped cells are
/// left out of every min and max.
BoundTable postprocess(const std::map<GridKey, RawCell> &raw, Family family);

/// Whether k_final is nondecreasing in n and w and nonincreasing in d over the
/// grid (absent values order below every count). Returns a description of the
/// first violation, or an empty string.
std::string check_monotonicity(const BoundTable &table);

struct SweepSpec {
    Family family = Family::kCss;
    std::vector<size_t> ns, ds, ws;
    LpOptions options;
};

/// Solves both variants over the grid; cells with d > n are skipped. Work is
/// split across `workers` threads (0 = QCW_WORKERS or 1).
std::map<GridKey, RawCell> sweep(const SweepSpec &spec, size_t workers = 0);

/// CSV with columns n,d,w,family,variant,k_bar1,k_bar2,k1,k2,k_final,status,boundary_limited.
void write_bound_csv(std::ostream &out, const BoundTable &table, const std::string &variant);

}  // namespace qcw

#endif
