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


#ifndef QCW_STRUCTURE_HPP
#define QCW_STRUCTURE_HPP

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "qcw/codes.hpp"

namespace qcw {

// ---------------------------------------------------------------------------
// Weight-2 subsystem codes and binary matrices

/// Rank and the minimum distances of row(A) and col(A) (0 for a zero space).
struct MatrixDistances {
    size_t rank = 0, d_row = 0, d_col = 0;
};

/// Exhaustive over the row and column spaces; throws std::length_error when
/// the rank exceeds 20.
MatrixDistances matrix_distances(const BinaryMatrix &a);

/// Qubits are the ones of A in row-major order; X gauge checks join
/// consecutive ones of a row, Z gauge checks consecutive ones of a column.
/// Throws std::invalid_argument for an all-zero matrix.
SubsystemCode subsystem_from_matrix(const BinaryMatrix &a);

/// Minimum weights of dressed X and Z logicals of a CSS subsystem code:
/// d_X over ker(S_Z) ∖ span(G_X), d_Z over ker(S_X) ∖ span(G_Z), with S the
/// center. Brute force; throws std::length_error when n > 22. Zero when the
/// code has no logical of that type.
std::pair<size_t, size_t> subsystem_css_distances(const SubsystemCode &c);

enum class ComponentKind { kWeight1, kWeight2, kFree };

struct Component {
    bool x_type = true;
    ComponentKind kind = ComponentKind::kFree;
    std::vector<size_t> qubits;
};

/// Pauli vertices X_i, Z_i joined by weight-2 gauge checks; weight-1 checks
/// mark their vertex. A qubit touched by no check of a type forms a free
/// singleton component of that type.
struct ComponentGraph {
    size_t n = 0;
    std::vector<std::pair<size_t, size_t>> x_edges, z_edges;
    std::vector<size_t> x_marks, z_marks;
    std::vector<Component> components;
};

struct Weight2Analysis {
    std::vector<PauliOperator> reduced_gauge;  // independent, greedily weight-minimal
    ComponentGraph graph;
    std::vector<size_t> rows, cols;  // component indices behind A's rows / columns
    BinaryMatrix a;                  // A_ij = |C_i^X ∩ C_j^Z| mod 2
};

/// Thrown for gauge checks that are not pure X / pure Z of weight <= 2.
class UnsupportedGauge : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
};

Weight2Analysis analyze_weight2_subsystem_full(const SubsystemCode &c);
BinaryMatrix analyze_weight2_subsystem(const SubsystemCode &c);

// ---------------------------------------------------------------------------
// Generalized surface recognition for CSS codes with check weight <= 4 and
// every qubit in exactly two X and two Z checks.

class SurfaceRejected : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
};

struct SurfaceComponent {
    size_t vertices = 0, edges = 0, faces = 0;
    long euler = 0;  // |V| - |E| + |F|
    size_t k = 0;    // |E| - rank H_X|comp - rank H_Z|comp
};

struct SurfaceReport {
    bool recognized = false;
    std::vector<SurfaceComponent> components;
    std::vector<std::pair<size_t, size_t>> removed_pairs;  // original qubit indices
    std::vector<size_t> split_checks;                      // original Z check indices split 2+2
    std::vector<std::string> diagnostics;
    CssCode reduced;             // code after pair removal and splits
    std::vector<size_t> qubits;  // original index of each qubit of `reduced`
};

/// Removes disentangled qubit pairs exposed by an X and a Z check with the
/// same four-qubit support, views X checks as vertices and qubits as edges,
/// splits Z checks made of two stabilizer 2-cycles, and recognizes the code
/// when every Z check is a single cycle. Throws SurfaceRejected when the
/// input violates the weight or degree precondition.
SurfaceReport check_surface(const CssCode &c);

}  // namespace qcw

#endif
