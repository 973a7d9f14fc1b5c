// Copyright 2026 The exo Authors
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

// Published exchange sequences, transcribed verbatim, in temporal order.

#include "gateset_tables.hpp"

namespace exo::tables {

// 34-gate four-qubit-code sequence locally equivalent to CNOT (8 qubits).
const std::vector<PulseGate> kCnot34 = {
    {4, 5, 1.90680}, {3, 4, 1.59536}, {5, 6, 1.26290}, {2, 3, 1.59745}, {6, 7, 2.06920},
    {1, 2, 0.05331}, {7, 8, 0.76951}, {2, 3, 1.59747}, {6, 7, 0.71337}, {3, 4, 1.59958},
    {5, 6, 1.26287}, {4, 5, 1.90667}, {3, 4, 0.59810}, {5, 6, 1.71467}, {2, 3, 1.06264},
    {6, 7, 0.91559}, {1, 2, 2.30240}, {7, 8, 0.95629}, {2, 3, 1.06260}, {6, 7, 0.68131},
    {3, 4, 0.59800}, {5, 6, 1.19942}, {4, 5, 1.04719}, {3, 4, 3.14138}, {5, 6, 0.95529},
    {2, 3, 1.63957}, {6, 7, 1.91303}, {1, 2, 2.47920}, {7, 8, 2.18627}, {2, 3, 1.05736},
    {6, 7, 0.94814}, {3, 4, 3.14170}, {5, 6, 4.09690}, {4, 5, 2.09434},
};

// Local-unitary slot times on E12, E23, E12, E23.
const std::array<double, 4> kLocalU1 = {2.218823, 4.386508, 3.442139, 1.808165};
const std::array<double, 4> kLocalU2 = {1.391831, 1.977325, 2.974488, 2.105277};
const std::array<double, 4> kLocalV1 = {4.865658, 3.141319, 1.493938, 3.141314};
const std::array<double, 4> kLocalV2 = {0.933012, 2.025429, 1.315318, 0.042865};

// 26-gate three-qubit-code exact CNOT (6 qubits). The table prints two
// columns; temporal order is the left column top to bottom, then the right.
// Segments: 3 local gates, the 19-gate core, 4 local gates.
const std::vector<PulseGate> kCnot26 = {
    {5, 6, 0.863060},  {4, 5, 0.303496},  {5, 6, 0.863060},  {3, 4, 1.290877},
    {2, 3, 0.650655},  {4, 5, 0.871873},  {1, 2, -1.207108}, {5, 6, -1.034121},
    {2, 3, 0.650655},  {4, 5, 0.871873},  {3, 4, 2.012205},  {2, 3, 1.302881},
    {1, 2, -0.502098}, {2, 3, 1.302881},  {3, 4, 0.463869},  {2, 3, 2.554511},
    {4, 5, 0.871873},  {1, 2, 1.249644},  {5, 6, -1.034121}, {2, 3, 2.554511},
    {4, 5, 0.871873},  {3, 4, 1.290877},  {1, 2, 0.612497},  {5, 6, 2.826113},
    {4, 5, 2.838096},  {5, 6, 2.278532},
};
const std::vector<std::size_t> kCnot26Barriers = {3, 22};

// 31-gate three-qubit-code exact CNOT (6 qubits): t1..t31 in table order,
// except that the second block's local triples (t4, t5, t6) and
// (t29, t30, t31) run in reverse table order. Read literally those triples
// leave the product 0.56 from CNOT; reversed, 1.5e-6. The first block's
// triples (pi, t, pi) read the same either way.
const std::vector<PulseGate> kCnot31 = {
    {2, 3, 3.141592}, {1, 2, 0.989737}, {2, 3, 3.141593},                    // t1-t3
    {5, 6, 0.863060}, {4, 5, 0.303496}, {5, 6, 2.477807},                    // t6, t5, t4
    {3, 4, 4.432470}, {2, 3, 3.792238}, {4, 5, 2.107472}, {1, 2, 5.076069},  // t7-t10
    {5, 6, 0.871873}, {2, 3, 3.792237}, {4, 5, 5.249065}, {3, 4, 5.153789},  // t11-t14
    {2, 3, 1.302870}, {1, 2, 5.781068}, {2, 3, 4.444461}, {3, 4, 0.463873},  // t15-t18
    {2, 3, 1.249608}, {4, 5, 5.249065}, {1, 2, 2.554454}, {5, 6, 4.013466},  // t19-t22
    {2, 3, 4.391200}, {4, 5, 2.107472}, {3, 4, 1.290877},                    // t23-t25
    {2, 3, 3.141592}, {1, 2, 0.927636}, {2, 3, 3.141592},                    // t26-t28
    {5, 6, 0.466283}, {4, 5, 0.303496}, {5, 6, 0.863060},                    // t31, t30, t29
};
const std::vector<std::size_t> kCnot31Barriers = {6, 25};

// Figure values for the single-qubit gates, 4 decimals.
const double kPi8Printed = 0.3927;
const std::array<double, 3> kHadamardPrinted = {0.4777, -0.9553, 0.4777};

}  // namespace exo::tables
