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

#ifndef QCW_CODES_HPP
#define QCW_CODES_HPP

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "qcw/gf2.hpp"
#include "qcw/simplex.hpp"

namespace qcw {

/// Raised when a code's defining invariant (commutation, shape) fails.
struct MalformedCode : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ClassicalCode {
    BinaryMatrix H;  // parity checks; n = H.cols()

    size_t n() const { return H.cols(); }
    size_t k() const { return n() - rank(H); }
    BinaryMatrix generator() const { return nullspace(H); }
};

/// Number of codewords of each weight in the span of `basis` (Gray-code walk
/// over all 2^rank combinations; rows must be independent).
std::vector<uint64_t> weight_distribution(const BinaryMatrix &basis);

/// Minimum nonzero weight in the span of `basis` (0 for the zero space).
size_t min_weight(const BinaryMatrix &basis);

/// A CSS code in the convention where H_X is the parity-check matrix of C_Z
/// and H_Z that of C_X. Hence k_X = dim C_X = n - rank H_Z and
/// k_Z = dim C_Z = n - rank H_X, and k = k_X + k_Z - n.
class CssCode {
   public:
    CssCode() = default;
    /// Throws MalformedCode unless both matrices have n columns and H_X H_Zᵀ = 0.
    CssCode(BinaryMatrix hx, BinaryMatrix hz);

    const BinaryMatrix &hx() const { return hx_; }
    const BinaryMatrix &hz() const { return hz_; }
    size_t n() const { return hx_.cols(); }
    size_t rank_x() const { return rank_x_; }
    size_t rank_z() const { return rank_z_; }
    size_t k_x() const { return n() - rank_z_; }
    size_t k_z() const { return n() - rank_x_; }
    size_t k() const { return n() - rank_x_ - rank_z_; }

   private:
    BinaryMatrix hx_, hz_;
    size_t rank_x_ = 0, rank_z_ = 0;
};

struct CssParams {
    size_t n = 0, k = 0;
    size_t w_x = 0, w_z = 0, q_x = 0, q_z = 0;
    /// Means over rows (columns) of nonzero weight; w̄ and q̄ pool both types.
    double wbar_x = 0, wbar_z = 0, wbar = 0, qbar = 0;
    size_t w() const { return std::max(w_x, w_z); }
};

CssParams css_params(const CssCode &c);

/// (A^X, A^Z): weight distributions of rowspace(H_Z) = C_X^⊥ and
/// rowspace(H_X) = C_Z^⊥, in the variable order of the CSS LP.
std::pair<std::vector<Rational>, std::vector<Rational>> css_weight_enumerators(const CssCode &c);

/// Pauli operator in symplectic form; phases are dropped.
struct PauliOperator {
    BinaryVector x, z;

    PauliOperator() = default;
    explicit PauliOperator(size_t n) : x(n), z(n) {}
    PauliOperator(BinaryVector x_part, BinaryVector z_part);
    /// Letters I, X, Y, Z (also accepts '_' for identity).
    static PauliOperator from_string(std::string_view s);

    size_t size() const { return x.size(); }
    size_t weight() const;
    std::vector<size_t> support() const;
    bool commutes(const PauliOperator &other) const;
    bool is_identity() const { return x.is_zero() && z.is_zero(); }
    PauliOperator operator*(const PauliOperator &other) const;
    bool operator==(const PauliOperator &other) const = default;
    std::string str() const;
};

/// Rows (x | z) of length 2n, one per operator.
BinaryMatrix symplectic_matrix(const std::vector<PauliOperator> &ops, size_t n);
PauliOperator pauli_from_symplectic(const BinaryVector &v);

class StabilizerCode {
   public:
    StabilizerCode() = default;
    /// Throws MalformedCode if lengths differ or two checks anticommute.
    StabilizerCode(size_t n, std::vector<PauliOperator> checks);
    static StabilizerCode from_css(const CssCode &c);

    size_t n() const { return n_; }
    const std::vector<PauliOperator> &checks() const { return checks_; }
    size_t k() const;

   private:
    size_t n_ = 0;
    std::vector<PauliOperator> checks_;
};

struct StabilizerParams {
    size_t n = 0, k = 0, w = 0, q = 0;
};

StabilizerParams stabilizer_params(const StabilizerCode &c);

/// Pauli weight distribution of the stabilizer group (2^rank elements).
std::vector<Rational> stabilizer_weight_enumerator(const StabilizerCode &c);

class SubsystemCode {
   public:
    SubsystemCode() = default;
    /// Gauge generators need not commute or be independent.
    SubsystemCode(size_t n, std::vector<PauliOperator> gauge);

    size_t n() const { return n_; }
    const std::vector<PauliOperator> &gauge() const { return gauge_; }

   private:
    size_t n_ = 0;
    std::vector<PauliOperator> gauge_;
};

struct SubsystemDecomposition {
    size_t k = 0, g = 0;
    size_t gauge_rank = 0;   // |G| as a group rank
    size_t stabilizer_rank = 0;  // |S|
    std::vector<PauliOperator> stabilizer_basis;
};

/// Stabilizer group = center of the gauge group, computed from the kernel of
/// the symplectic Gram matrix of a gauge basis. Throws std::length_error when
/// n exceeds `cap`.
SubsystemDecomposition subsystem_decompose(const SubsystemCode &c, size_t cap = 24);

}  // namespace qcw

#endif
