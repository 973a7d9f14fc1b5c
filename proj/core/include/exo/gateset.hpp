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

#ifndef EXO_GATESET_HPP
#define EXO_GATESET_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "exo/nelder_mead.hpp"
#include "exo/qcore.hpp"
#include "exo/sequence.hpp"

namespace exo {

/// Published sequences.
enum class BuiltinId {
  Pi8_4q,
  Hadamard_4q,
  Cnot34_4q,      // 34-gate gate locally equivalent to CNOT
  LocalU1_4q,     // local layers of the exact CNOT, block-local qubits 1..3
  LocalU2_4q,
  LocalV1_4q,
  LocalV2_4q,
  CnotExact_4q,   // V layer, 34-gate core, U layer: 50 gates
  Cnot26_3q,      // exact CNOT, three-qubit code, symmetric 19-gate core
  Cnot31_3q,      // exact CNOT, three-qubit code, unconstrained 19-gate core
};

/// Printed: times as published. Polished: Nelder-Mead refined from the
/// printed times (committed data, see gateset_tables.cpp).
enum class TableVariant { Printed, Polished };

std::string_view to_string(BuiltinId id) noexcept;
std::optional<BuiltinId> builtin_from_string(std::string_view name) noexcept;
const std::vector<BuiltinId>& all_builtins();

ExchangeSequence builtin(BuiltinId id, TableVariant variant = TableVariant::Printed);

/// Gate the builtin realizes and the tolerance its printed times meet; used
/// by the published-data regression (`exo verify --builtin`).
struct BuiltinCheck {
  std::string target;  // "cnot", "cnot-invariants", "hadamard", "pi8", "none"
  double tolerance;
};
BuiltinCheck documented_check(BuiltinId id);

enum class SingleQubitGate { Pi8, Hadamard };

/// Full-precision analytic constructions on one four-qubit block:
/// pi/8 = exp(i pi/8 E12); H = exp(i t1 E12) exp(-i t2 E23) exp(i t1 E12)
/// with t1 = asin(sqrt(2/3)) / 2, t2 = acos(sqrt(1/3)).
ExchangeSequence analytic_single_qubit(SingleQubitGate which);

struct TargetGate {
  std::string name;
  ComplexMatrix matrix;
};

/// "cnot", "identity" (4x4), "hadamard", "pi8", "identity1", "sigma_z" (2x2).
/// Throws std::invalid_argument on an unknown name.
TargetGate target(std::string_view name);

enum class ThreeQubitVariant { Table3, Table4 };

/// Exact CNOT on two encoded qubits. FourQubit: V layer + 34-gate core + U
/// layer with segment barriers. ThreeQubit: the requested table.
ExchangeSequence assemble_exact_cnot(Code code,
                                     ThreeQubitVariant variant = ThreeQubitVariant::Table4);

/// The local-unitary slot layout E12, E23, E12, E23 on one block.
ExchangeSequence local_layout(Code code);

/// Places one block-local sequence (qubits 1..block) on `block` (0 or 1) of a
/// two-block register.
ExchangeSequence place_on_block(const ExchangeSequence& local, int block);

struct SynthesisOptions {
  std::size_t max_starts = 10000;
  double accept_cost = 1e-10;
  NMConfig nm = {.initial_step = 0.1, .tolerance = 1e-14, .max_iterations = 4000};
};

struct SynthesisResult {
  ExchangeSequence sequence;  // 4 gates on one block
  double cost = 0.0;          // phase-aligned distance + Lambda
  std::size_t starts = 0;     // starts consumed
};

/// Cost of 4 slot times against a 2x2 target (distance + Lambda).
double local_cost(const TargetGate& target, Code code, std::span<const double> times);

/// Multistart Nelder-Mead over the local layout with starting points uniform
/// in [0, 2 pi]^4. Returns the first start reaching accept_cost; throws
/// BudgetExhausted (with the best point) otherwise.
SynthesisResult synthesize_local(const TargetGate& target, Code code, std::uint64_t seed,
                                 const SynthesisOptions& options = {});

/// Paired times (t_k, t_bar_k) of the 26-gate three-qubit table, k = 5, 6, 8, 10.
struct CorrelatedPair {
  int k;
  double t;
  double t_bar;
};
std::vector<CorrelatedPair> table3_correlated_pairs();

}  // namespace exo

#endif  // EXO_GATESET_HPP
