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

#ifndef EXO_SEQUENCE_HPP
#define EXO_SEQUENCE_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace exo {

/// Which encoding a register uses.
enum class Code { FourQubit, ThreeQubit };

constexpr int block_size(Code code) noexcept { return code == Code::FourQubit ? 4 : 3; }

std::string_view to_string(Code code) noexcept;  // "four_qubit" / "three_qubit"
std::optional<Code> code_from_string(std::string_view name) noexcept;

/// One exchange pulse exp(s i t E^{q1,q2}). Qubits are 1-based; t is in
/// units of 2 hbar / J and may be negative.
struct PulseGate {
  int q1 = 0;
  int q2 = 0;
  double t = 0.0;

  friend bool operator==(const PulseGate&, const PulseGate&) = default;
};

/// Ordered list of pulses on a physical register; gates[0] is applied first.
///
/// `barriers` holds gate indices at which a new segment starts (strictly
/// increasing, each in (0, gates.size())). The scheduler never moves a gate
/// into a cycle that precedes its segment; barriers have no effect on the
/// evaluated unitary.
struct ExchangeSequence {
  int n_physical = 0;
  Code code = Code::FourQubit;
  std::vector<PulseGate> gates;
  std::vector<std::size_t> barriers;

  std::size_t size() const noexcept { return gates.size(); }
  int n_blocks() const noexcept { return n_physical / block_size(code); }

  /// Throws std::invalid_argument / std::out_of_range on bad indices,
  /// a register that is not a whole number of blocks, or bad barriers.
  void validate() const;

  /// Appends `other` (same register) and inserts a barrier at the join
  /// when `with_barrier` is set and both parts are non-empty.
  ExchangeSequence& append(const ExchangeSequence& other, bool with_barrier = false);

  friend bool operator==(const ExchangeSequence&, const ExchangeSequence&) = default;
};

/// Sequence with no gates on `blocks` encoded blocks of `code`.
ExchangeSequence empty_sequence(Code code, int blocks);

/// Wraps t into [0, 2 pi). Exposed as an explicit utility; sequences keep
/// their times verbatim.
double reduce_time(double t) noexcept;

}  // namespace exo

#endif  // EXO_SEQUENCE_HPP
