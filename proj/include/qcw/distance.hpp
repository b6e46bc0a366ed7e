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


#ifndef QCW_DISTANCE_HPP
#define QCW_DISTANCE_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "qcw/codes.hpp"
#include "qcw/simplex.hpp"

namespace qcw {

/// Thrown when an exhaustive enumeration would exceed its budget.
class BudgetExceeded : public std::runtime_error {
   public:
    BudgetExceeded(const std::string &what, uint64_t required)
        : std::runtime_error(what), required_(required) {}
    uint64_t required() const { return required_; }

   private:
    uint64_t required_;
};

/// Conventions: d_X is the minimum weight of ker(H_X) ∖ rowspace(H_Z) and
/// d_Z the minimum weight of ker(H_Z) ∖ rowspace(H_X).
struct TypeEstimate {
    size_t d_upper = 0;
    size_t hits = 0;      // times a word of weight d_upper was found
    size_t distinct = 0;  // distinct words of weight d_upper found
    BinaryVector witness;
    /// hits / distinct, the mean number of times each minimal word was seen.
    Rational mean_hits() const;
    /// exp(-mean_hits).
    double failure_bound() const;
};

struct DistanceEstimate {
    TypeEstimate x, z;
    size_t trials = 0;
    size_t d_upper() const { return std::min(x.d_upper, z.d_upper); }
    double failure_bound() const { return std::max(x.failure_bound(), z.failure_bound()); }
};

struct EstimateOptions {
    size_t trials = 50000;
    uint64_t seed = 0;
    /// Also try sums of pairs of reduced rows in each trial.
    bool pairs = true;
    /// Stop a type early once its bound reaches this value (0: never).
    size_t stop_at = 0;
    size_t workers = 0;
};

/// Randomized information-set search: permute columns, row-reduce the
/// kernel basis, and keep the lightest rows (and row pairs) that are not
/// stabilizers. Returns upper bounds witnessed by explicit logicals.
/// Throws std::invalid_argument when k = 0.
DistanceEstimate estimate_distance(const CssCode &c, const EstimateOptions &opts = {});

struct Certificate {
    size_t claimed_d = 0;
    bool verified = false;
    std::optional<BinaryVector> witness;  // lightest logical below claimed_d
    bool witness_is_x = false;            // witness lies in ker(H_X)
    uint64_t enumerated = 0;
};

struct CertifyOptions {
    size_t cap = 9;
    uint64_t budget = 200'000'000;
};

/// Decides whether every nontrivial logical of either type has weight >= t,
/// by meet-in-the-middle over syndromes of low-weight supports. On failure
/// returns the lightest logical found. Throws std::invalid_argument when
/// t > cap and BudgetExceeded when the enumeration exceeds the budget.
Certificate certify_distance(const CssCode &c, size_t t, const CertifyOptions &opts = {});

/// Certifies a single type: no x with H x = 0, x ∉ rowspace(S), |x| < t.
Certificate certify_type(const BinaryMatrix &h, const BinaryMatrix &s, size_t t,
                         const CertifyOptions &opts = {});

/// Exact distance by increasing certification (small codes only).
size_t exact_distance(const CssCode &c, const CertifyOptions &opts = {});

struct Counterexample {
    StabilizerCode code;
    size_t k = 0;
};

struct FalsifierReport {
    size_t n_max = 0;
    uint64_t exhaustive_codes = 0;  // generator sets examined at n <= n_exhaustive
    uint64_t random_codes = 0;
    uint64_t codes_with_logicals = 0;  // k >= 1
    std::vector<Counterexample> counterexamples;
};

struct FalsifierOptions {
    size_t n_exhaustive = 5;  // exhaustive up to symmetry for n <= this (<= 6)
    size_t random_n = 8;
    uint64_t random_trials = 100000;
    uint64_t seed = 0;
};

/// Searches stabilizer codes with checks of weight <= 3 for k >= 1 and
/// d >= 3. Exhaustive mode fixes one generator to Z, ZZ or ZZZ (qubit
/// permutations and local Cliffords act transitively on each weight) and
/// enumerates the rest as increasing tuples.
FalsifierReport falsify_weight3(const FalsifierOptions &opts = {});

/// Stabilizer distance >= 3 test: no Pauli of weight 1 or 2 commutes with
/// every check without lying in the stabilizer group. Requires k >= 1.
bool stabilizer_distance_at_least3(const StabilizerCode &c);

}  // namespace qcw

#endif
