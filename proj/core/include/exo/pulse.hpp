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

#ifndef EXO_PULSE_HPP
#define EXO_PULSE_HPP

#include <string>
#include <string_view>
#include <vector>

#include "exo/encoding.hpp"
#include "exo/qcore.hpp"
#include "exo/sequence.hpp"

namespace exo {

/// Sign s of the exchange exponent exp(s i t E). The default +1 matches the
/// written forms of the single-qubit gates.
enum class Sign : int { Plus = 1, Minus = -1 };

/// E^{q1,q2}: SWAP of qubits q1 and q2 in a 2^n register.
ComplexMatrix exchange_op(int q1, int q2, int n);

/// exp(s i t E) = cos(t) I + s i sin(t) E, exact because E^2 = I.
ComplexMatrix exchange_unitary(const PulseGate& g, int n, Sign sign = Sign::Plus);

/// U_k ... U_2 U_1 with gates[0] as the rightmost factor.
ComplexMatrix evaluate_sequence(const ExchangeSequence& seq, Sign sign = Sign::Plus);

/// W * columns, computed gate by gate without forming W. `columns` must have
/// 2^n_physical rows.
ComplexMatrix apply_sequence(const ExchangeSequence& seq, const ComplexMatrix& columns,
                             Sign sign = Sign::Plus);

/// P^dagger W P for the sequence's own register, via apply_sequence.
ComplexMatrix project_sequence(const ExchangeSequence& seq, const LogicalProjector& p,
                               Sign sign = Sign::Plus);

/// Parallel cycles of a sequence. Every gate appears in exactly one cycle.
struct Schedule {
  std::vector<std::vector<std::size_t>> cycles;  // gate indices, ascending
  std::vector<double> cycle_durations;           // max |t| per cycle

  std::size_t cycle_count() const noexcept { return cycles.size(); }
  double parallel_time() const noexcept;
};

/// Greedy ASAP packing: each gate goes into the earliest cycle after the last
/// cycle touching either of its qubits, and no earlier than the first cycle of
/// its segment (see ExchangeSequence::barriers).
Schedule schedule_parallel(const ExchangeSequence& seq);

/// Sum of |t| over all gates.
double serial_time(const ExchangeSequence& seq) noexcept;

/// Gates reordered cycle by cycle (ascending index inside a cycle).
ExchangeSequence flatten_schedule(const ExchangeSequence& seq, const Schedule& schedule);

/// Sequence file format v1 (UTF-8 JSON):
///   {"version": 1, "code": "four_qubit", "n_physical": 8,
///    "gates": [{"q1": 4, "q2": 5, "t": 1.9068}, ...],
///    "barriers": [8, 42]}          // optional
std::string serialize(const ExchangeSequence& seq);

/// Throws ParseError naming the line and field of the first problem. With
/// `require_times` false a missing "t" reads as 0 (layout files).
ExchangeSequence parse_sequence(std::string_view text, bool require_times = true);

ExchangeSequence read_sequence_file(const std::string& path, bool require_times = true);
void write_sequence_file(const std::string& path, const ExchangeSequence& seq);

}  // namespace exo

#endif  // EXO_PULSE_HPP
