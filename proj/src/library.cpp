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


#include "qcw/library.hpp"

#include <string>

namespace qcw {

BinaryMatrix hamming7_parity_check() {
    return BinaryMatrix::from_strings({"1010101", "0110011", "0001111"});
}

CssCode steane_code() { return CssCode(hamming7_parity_check(), hamming7_parity_check()); }

CssCode toric_code(size_t l) {
    if (l < 2) throw std::invalid_argument("toric lattice size must be at least 2");
    size_t n = 2 * l * l;
    auto h = [l](size_t x, size_t y) { return (y % l) * l + (x % l); };
    auto v = [l](size_t x, size_t y) { return l * l + (y % l) * l + (x % l); };
    BinaryMatrix hx(l * l, n), hz(l * l, n);
    for (size_t y = 0; y < l; y++) {
        for (size_t x = 0; x < l; x++) {
            size_t r = y * l + x;
            for (size_t q : {h(x, y), h(x + l - 1, y), v(x, y), v(x, y + l - 1)}) hx.set(r, q, true);
            for (size_t q : {h(x, y), h(x, y + 1), v(x, y), v(x + 1, y)}) hz.set(r, q, true);
        }
    }
    return CssCode(hx, hz);
}

CssCode shor_code() {
    BinaryMatrix hx = BinaryMatrix::from_strings({"111111000", "000111111"});
    BinaryMatrix hz = BinaryMatrix::from_strings(
        {"110000000", "011000000", "000110000", "000011000", "000000110", "000000011"});
    return CssCode(hx, hz);
}

StabilizerCode five_qubit_code() {
    std::vector<PauliOperator> checks;
    std::string s = "XZZXI";
    for (size_t i = 0; i < 4; i++) {
        checks.push_back(PauliOperator::from_string(s));
        s = s.back() + s.substr(0, 4);
    }
    return StabilizerCode(5, checks);
}

}  // namespace qcw
