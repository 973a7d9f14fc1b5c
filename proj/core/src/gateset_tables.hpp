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

#ifndef EXO_GATESET_TABLES_HPP
#define EXO_GATESET_TABLES_HPP

#include <array>
#include <cstddef>
#include <vector>

#include "exo/sequence.hpp"

namespace exo::tables {

extern const std::vector<PulseGate> kCnot34;
extern const std::array<double, 4> kLocalU1;
extern const std::array<double, 4> kLocalU2;
extern const std::array<double, 4> kLocalV1;
extern const std::array<double, 4> kLocalV2;
extern const std::vector<PulseGate> kCnot26;
extern const std::vector<std::size_t> kCnot26Barriers;
extern const std::vector<PulseGate> kCnot31;
extern const std::vector<std::size_t> kCnot31Barriers;
extern const double kPi8Printed;
extern const std::array<double, 3> kHadamardPrinted;

// Nelder-Mead polished times, same gate order as the printed sequences.
// Generated with `exo optimize --stages nm` (see tools/polish_builtins.sh).
extern const std::vector<double> kCnot34Polished;
extern const std::vector<double> kCnotExact4qPolished;
extern const std::vector<double> kCnot26Polished;
extern const std::vector<double> kCnot31Polished;

}  // namespace exo::tables

#endif  // EXO_GATESET_TABLES_HPP
