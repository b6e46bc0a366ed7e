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

#ifndef QCW_SIMPLEX_HPP
#define QCW_SIMPLEX_HPP

#include <gmpxx.h>

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace qcw {

/// Exact rational number; always kept in canonical form (den > 0, gcd = 1).
using Rational = mpq_class;

enum class Relation { kLessEqual, kEqual, kGreaterEqual };

const char *relation_symbol(Relation rel);

struct LpRow {
    std::vector<Rational> coeffs;  // one entry per variable
    Relation rel = Relation::kLessEqual;
    Rational rhs;
    std::string label;
};

/// Feasibility system over nonnegative variables: every row a·x (rel) b with x >= 0.
struct LinearProgram {
    size_t num_vars = 0;
    std::vector<std::string> var_names;
    std::vector<LpRow> rows;

    void add_row(std::vector<Rational> coeffs, Relation rel, Rational rhs, std::string label = {});
};

enum class SolveMethod { kExact, kFloatGuided };
const char *solve_method_name(SolveMethod m);

struct LpResult {
    bool feasible = false;
    /// Set when feasible: a point satisfying every row exactly.
    std::vector<Rational> witness;
    /// Set when infeasible: one multiplier per row with y_i >= 0 on <= rows,
    /// y_i <= 0 on >= rows and free on = rows, such that yᵀA >= 0 componentwise
    /// and yᵀb < 0. Combined with x >= 0 this rules out every point.
    std::vector<Rational> farkas;
    size_t pivots = 0;
    SolveMethod method = SolveMethod::kExact;
    /// Verdict of the floating-point screen, when one ran. Advisory only.
    std::optional<bool> screen_feasible;
};

struct SolveOptions {
    /// Run a floating-point phase one first and try to confirm its final
    /// basis (feasible) or duals (infeasible) exactly; fall back to the
    /// exact tableau when neither confirms.
    bool float_guide = true;
};

/// Phase-one simplex. The exact tableau picks entering columns by Dantzig's
/// rule, switching to Bland's rule while the phase-one objective stalls.
/// Every verdict is backed by an exactly verified witness or certificate.
LpResult solve_feasible(const LinearProgram &lp, const SolveOptions &opts = {});

bool verify_witness(const LinearProgram &lp, std::span<const Rational> x);
bool verify_farkas(const LinearProgram &lp, std::span<const Rational> y);

}  // namespace qcw

#endif
