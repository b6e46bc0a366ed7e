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


// Rate–distance frontier data: bound CSVs, code instances and literature
// parameters reduced to plot-ready rows.

#ifndef QCW_FRONTIER_HPP
#define QCW_FRONTIER_HPP

#include <cstddef>
#include <istream>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "qcw/simplex.hpp"

namespace qcw {

struct CodePoint {
    std::string construction;
    size_t n = 0, k = 0, d = 0, w = 0;
    std::string source;

    Rational rate() const { return ratio(k, n); }
    Rational delta() const { return ratio(d, n); }

   private:
    static Rational ratio(size_t a, size_t b) {
        Rational r(a, b);
        r.canonicalize();
        return r;
    }
};

/// Columns construction,n,k,d,w,source. Throws std::invalid_argument on a
/// schema mismatch or when n, k, d, w are not positive with k < n.
std::vector<CodePoint> read_literature_csv(std::istream &in);

/// Cells with a k_final value from a bound CSV; `source` is "lp".
std::vector<CodePoint> read_bound_points(std::istream &in);

/// One code per JSON line with fields n, k, d (or d_x and d_z) and w.
std::vector<CodePoint> read_result_points(std::istream &in, const std::string &source);

struct FrontierStep {
    Rational delta, rate;
};

/// R(δ) = max{R_i : δ_i >= δ}, evaluated at every distinct δ_i; ascending in δ.
std::vector<FrontierStep> frontier_steps(const std::vector<CodePoint> &points);

/// R(δ) for an arbitrary δ; empty when no point has δ_i >= δ.
std::optional<Rational> frontier_at(const std::vector<FrontierStep> &steps, const Rational &delta);

/// Frontier rows per w cap (bound cells with w <= cap and d >= d_min) followed
/// by scatter rows for every instance with w <= max cap and d >= d_min.
/// Columns: kind,w_cap,n,k,d,w,R,delta,source.
void write_frontier_csv(std::ostream &out, const std::vector<CodePoint> &bounds, const std::vector<CodePoint> &instances,
                        const std::vector<size_t> &w_caps, size_t d_min);

}  // namespace qcw

#endif
