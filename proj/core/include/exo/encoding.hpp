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

#ifndef EXO_ENCODING_HPP
#define EXO_ENCODING_HPP

#include "exo/qcore.hpp"
#include "exo/sequence.hpp"

namespace exo {

struct LogicalStates {
  StateVector zero;
  StateVector one;
};

/// Logical basis of one encoded block, qubit 1 leftmost.
///
/// FourQubit: |0_L> = singlet(1,2) x singlet(3,4),
///            |1_L> = (|t+ t-> - |t0 t0> + |t- t+>) / sqrt(3).
/// ThreeQubit: |0_L> = |S> x |1>, |1_L> = sqrt(2/3)|T+>|0> - sqrt(1/3)|T0>|1>
/// with |S> = (|10> - |01>)/sqrt(2). Both are normalized.
LogicalStates logical_states(Code code);

/// Isometry whose columns span the logical subspace of one or two blocks.
/// Two-block column order: |0L0L>, |0L1L>, |1L0L>, |1L1L>.
class LogicalProjector {
 public:
  LogicalProjector(Code code, int n_blocks);

  Code code() const noexcept { return code_; }
  int n_blocks() const noexcept { return n_blocks_; }
  int n_physical() const noexcept { return n_blocks_ * block_size(code_); }
  std::size_t logical_dim() const noexcept { return matrix_.cols(); }
  const ComplexMatrix& matrix() const noexcept { return matrix_; }

 private:
  Code code_;
  int n_blocks_;
  ComplexMatrix matrix_;
};

/// Throws std::invalid_argument unless n_blocks is 1 or 2.
LogicalProjector projector(Code code, int n_blocks);

/// Projector matching the register of `seq`.
LogicalProjector projector_for(const ExchangeSequence& seq);

/// M = P^dagger W P.
ComplexMatrix project_logical(const ComplexMatrix& w, const LogicalProjector& p);

/// Two-dimensional layout relabeling of an 8-qubit four-qubit-code register:
/// the second block is read backwards (5<->8, 6<->7). Times are unchanged;
/// each gate is stored with q1 < q2.
ExchangeSequence mirror_relabel(const ExchangeSequence& seq);

}  // namespace exo

#endif  // EXO_ENCODING_HPP
