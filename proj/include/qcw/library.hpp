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


// Small named codes used as fixtures by the tools and tests.

#ifndef QCW_LIBRARY_HPP
#define QCW_LIBRARY_HPP

#include <cstddef>

#include "qcw/codes.hpp"

namespace qcw {

/// Parity-check matrix of the [7,4,3] Hamming code.
BinaryMatrix hamming7_parity_check();

/// [[7,1,3]] with H_X = H_Z = the Hamming check matrix.
CssCode steane_code();

/// [[2L², 2, L]] toric code on an L×L periodic lattice: X checks on vertices,
/// Z checks on plaquettes, qubits on edges.
CssCode toric_code(size_t l);

/// [[9,1,3]] Shor code.
CssCode shor_code();

/// [[5,1,3]] code generated by XZZXI and its cyclic shifts.
StabilizerCode five_qubit_code();

}  // namespace qcw

#endif
