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


#ifndef QCW_TANNER_HPP
#define QCW_TANNER_HPP

#include <array>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "qcw/codes.hpp"

namespace qcw {

/// Finite group as an explicit multiplication table; index 0 is the identity.
struct FiniteGroup {
    std::string name;
    std::vector<std::vector<uint32_t>> mul;  // mul[g][h] = g·h
    std::vector<uint32_t> inv;
    std::vector<std::string> labels;

    size_t order() const { return mul.size(); }
    uint32_t operator()(uint32_t g, uint32_t h) const { return mul[g][h]; }
    bool is_abelian() const;
    std::vector<uint32_t> center() const;
    /// Checks identity, inverses and (exhaustively) associativity.
    void validate() const;
};

FiniteGroup cyclic_group(size_t m);
/// Order 2m: r^i s^e with s r s = r^-1.
FiniteGroup dihedral_group(size_t m);
/// Order 4m: a^i x^e with a^{2m} = 1, x^2 = a^m, x a x^-1 = a^-1.
FiniteGroup dicyclic_group(size_t m);
FiniteGroup quaternion_group();
/// Index of (g, h) is g * |H| + h.
FiniteGroup direct_product(const FiniteGroup &g, const FiniteGroup &h);
FiniteGroup elementary_abelian_group(size_t p, size_t r);

/// Parses cyclic(m), dihedral(m), quaternion8, dicyclic(m),
/// direct_product(spec, spec), elementary_abelian(2, r), plus the short
/// forms Cm / Zm, Dm (order 2m), Q8 and "spec x spec".
FiniteGroup make_group(std::string_view spec);

struct GeneratingSet {
    std::vector<uint32_t> elements;
    size_t size() const { return elements.size(); }
};

/// Throws std::invalid_argument unless the set is closed under inverses,
/// duplicate-free, in range, and identity-free (unless allowed).
void validate_generating_set(const FiniteGroup &g, const GeneratingSet &s, bool allow_identity = false);

/// Total no-conjugacy: a·g != g·b for all g in G, a in A, b in B.
bool check_tnc(const FiniteGroup &g, const GeneratingSet &a, const GeneratingSet &b);

/// Left-right Cayley complex on a bipartite cover of the base group.
struct CayleyComplex {
    FiniteGroup cover;
    bool bipartite = false;  // double cover (TNC holds) vs quadripartite
    std::vector<uint32_t> a, b;         // generators in the cover group
    std::vector<uint8_t> side;          // 0 for V0, 1 for V1, per cover element
    std::vector<uint32_t> v0, v1;
    /// {g, ag, gb, agb} with g in V0.
    std::vector<std::array<uint32_t, 4>> squares;
    /// Per cover element: square at local position (i, j) for the square
    /// {v, a_i v, v b_j, a_i v b_j}, stored at i * |B| + j.
    std::vector<std::vector<uint32_t>> local_view;

    size_t delta_a() const { return a.size(); }
    size_t delta_b() const { return b.size(); }
    size_t num_squares() const { return squares.size(); }
};

/// Double cover G×Z2 when the base sets satisfy TNC, else the quadripartite
/// cover G×Z2×Z2. Asserts nondegenerate squares, bijective local views and
/// |Q| = |G_cover|·|A|·|B| / 4.
CayleyComplex build_complex(const FiniteGroup &g, const GeneratingSet &a, const GeneratingSet &b,
                            bool allow_identity = false);

/// Named classical code given by a parity-check matrix.
struct LocalCode {
    std::string name;  // "[n,k,d]" label
    BinaryMatrix h;
    size_t d = 0;      // true minimum distance of ker(h)
    size_t length() const { return h.cols(); }
};

/// Reads {"codes": [{"name", "n", "k", "d", "H": [rows]}...]}.
std::vector<LocalCode> load_local_codes(const std::string &path);
/// Looks up by label; throws std::invalid_argument when absent.
const LocalCode &find_local_code(const std::vector<LocalCode> &lib, std::string_view name);

/// Greedy basis-weight reduction: replaces a row by its sum with another
/// row while that lowers its weight, until no replacement applies.
BinaryMatrix reduce_row_weights(BinaryMatrix m);

/// X checks from C_A ⊗ C_B at V0 vertices, Z checks from C_A^⊥ ⊗ C_B^⊥ at V1.
/// C_B's coordinates are re-bijected to B by using h_b.permute_cols(perm_b)
/// as its parity checks. Throws MalformedCode on commutation failure.
CssCode build_tanner_code(const CayleyComplex &cx, const BinaryMatrix &h_a, const BinaryMatrix &h_b,
                          const std::vector<size_t> &perm_b);

struct TannerSearchConfig {
    std::string group;
    std::string code_a, code_b;
    BinaryMatrix h_a, h_b;  // resolved parity checks
    size_t pairs = 10;
    size_t permutations = 10;
    uint64_t seed = 0;
    std::vector<double> betas{0.5, 1.0, 1.5, 2.0, 2.5};
    size_t keep = 200;
    bool allow_identity = false;
    size_t distance_trials = 50000;
    size_t certify_cap = 9;
    uint64_t certify_budget = 50'000'000;
    /// Drop codes with k = 0 before distance estimation.
    bool skip_trivial = true;

    /// Throws std::invalid_argument on nonpositive counts or degenerate local codes.
    void validate() const;
};

struct TannerResult {
    size_t pair_index = 0, perm_index = 0;
    GeneratingSet a, b;
    bool bipartite = false;
    std::vector<size_t> perm_b;
    CssCode code;
    CssParams params;
    size_t d_x = 0, d_z = 0;
    bool certified = false;   // both distances proven exact
    double failure_bound = 1.0;
    std::vector<double> scores;  // one per beta
    uint64_t hash = 0;
    size_t d() const { return std::min(d_x, d_z); }
};

/// k d^2 / (n w̄^beta).
double tanner_score(size_t n, size_t k, size_t d, double wbar, double beta);

/// Stable content hash of (H_X, H_Z).
uint64_t code_hash(const CssCode &c);

/// Random symmetric subset of exactly `size` elements (identity excluded
/// unless allowed); empty when none exists.
GeneratingSet random_symmetric_subset(const FiniteGroup &g, size_t size, bool allow_identity, uint64_t seed);

/// Samples `pairs` (A, B) and `permutations` C_B bijections per pair, builds,
/// estimates and (where t <= cap) certifies distances, ranks by score with
/// beta = 1 (ties: n ascending, then hash) and keeps the top K.
/// Deterministic given the config; independent of `workers`.
std::vector<TannerResult> tanner_search(const TannerSearchConfig &cfg, size_t workers = 0);

}  // namespace qcw

#endif
