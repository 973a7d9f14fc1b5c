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

#include "exo/pulse.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace exo {

std::string_view to_string(Code code) noexcept {
  return code == Code::FourQubit ? "four_qubit" : "three_qubit";
}

std::optional<Code> code_from_string(std::string_view name) noexcept {
  if (name == "four_qubit") return Code::FourQubit;
  if (name == "three_qubit") return Code::ThreeQubit;
  return std::nullopt;
}

void ExchangeSequence::validate() const {
  if (n_physical < 2 || n_physical > 10) {
    throw std::out_of_range("sequence: n_physical must lie in [2, 10]");
  }
  if (n_physical % block_size(code) != 0) {
    throw std::invalid_argument("sequence: n_physical is not a whole number of blocks");
  }
  for (std::size_t i = 0; i < gates.size(); ++i) {
    const auto& g = gates[i];
    if (g.q1 == g.q2) {
      throw std::invalid_argument("sequence: gate " + std::to_string(i) + " has q1 == q2");
    }
    if (g.q1 < 1 || g.q2 < 1 || g.q1 > n_physical || g.q2 > n_physical) {
      throw std::out_of_range("sequence: gate " + std::to_string(i) + " qubit out of range");
    }
    if (!std::isfinite(g.t)) {
      throw std::invalid_argument("sequence: gate " + std::to_string(i) + " has non-finite time");
    }
  }
  std::size_t prev = 0;
  for (auto b : barriers) {
    if (b <= prev || b >= gates.size()) {
      throw std::invalid_argument("sequence: barriers must be increasing and inside the gate list");
    }
    prev = b;
  }
}

ExchangeSequence& ExchangeSequence::append(const ExchangeSequence& other, bool with_barrier) {
  if (other.n_physical != n_physical || other.code != code) {
    throw std::invalid_argument("sequence append: register mismatch");
  }
  const std::size_t offset = gates.size();
  if (with_barrier && offset > 0 && !other.gates.empty()) barriers.push_back(offset);
  for (auto b : other.barriers) barriers.push_back(b + offset);
  gates.insert(gates.end(), other.gates.begin(), other.gates.end());
  return *this;
}

ExchangeSequence empty_sequence(Code code, int blocks) {
  ExchangeSequence s;
  s.code = code;
  s.n_physical = blocks * block_size(code);
  return s;
}

double reduce_time(double t) noexcept {
  constexpr double two_pi = 2.0 * std::numbers::pi;
  double r = std::fmod(t, two_pi);
  if (r < 0) r += two_pi;
  return r >= two_pi ? 0.0 : r;
}

namespace {

void check_pair(int q1, int q2, int n) {
  if (n < 2 || n > 10) throw std::out_of_range("exchange: register size out of range");
  if (q1 == q2) throw std::invalid_argument("exchange: q1 == q2");
  if (q1 < 1 || q2 < 1 || q1 > n || q2 > n) throw std::out_of_range("exchange: qubit out of range");
}

/// Row permutation of E^{q1,q2}: (E A)[r, :] = A[perm[r], :].
std::vector<std::size_t> swap_permutation(int q1, int q2, int n) {
  const std::size_t dim = std::size_t{1} << n;
  const std::size_t b1 = std::size_t{1} << (n - q1);
  const std::size_t b2 = std::size_t{1} << (n - q2);
  std::vector<std::size_t> perm(dim);
  for (std::size_t i = 0; i < dim; ++i) {
    const bool x = (i & b1) != 0;
    const bool y = (i & b2) != 0;
    perm[i] = x == y ? i : (i ^ b1 ^ b2);
  }
  return perm;
}

/// a <- cos(t) a + s i sin(t) E a, in place.
void apply_gate(ComplexMatrix& a, const PulseGate& g, int n, Sign sign) {
  const auto perm = swap_permutation(g.q1, g.q2, n);
  const double c = std::cos(g.t);
  const cplx is(0.0, static_cast<double>(static_cast<int>(sign)) * std::sin(g.t));
  const std::size_t cols = a.cols();
  for (std::size_t r = 0; r < perm.size(); ++r) {
    const std::size_t p = perm[r];
    if (p == r) {
      const cplx phase = c + is;
      for (std::size_t k = 0; k < cols; ++k) a(r, k) *= phase;
    } else if (p > r) {
      for (std::size_t k = 0; k < cols; ++k) {
        const cplx x = a(r, k);
        const cplx y = a(p, k);
        a(r, k) = c * x + is * y;
        a(p, k) = c * y + is * x;
      }
    }
  }
}

}  // namespace

ComplexMatrix exchange_op(int q1, int q2, int n) {
  check_pair(q1, q2, n);
  if (q1 > q2) std::swap(q1, q2);
  return embed_pair(swap_gate(), q1, q2, n);
}

ComplexMatrix exchange_unitary(const PulseGate& g, int n, Sign sign) {
  check_pair(g.q1, g.q2, n);
  const double s = static_cast<int>(sign);
  ComplexMatrix u = ComplexMatrix::identity(std::size_t{1} << n) * cplx(std::cos(g.t), 0.0);
  u += exchange_op(g.q1, g.q2, n) * cplx(0.0, s * std::sin(g.t));
  return u;
}

ComplexMatrix apply_sequence(const ExchangeSequence& seq, const ComplexMatrix& columns,
                             Sign sign) {
  seq.validate();
  if (columns.rows() != (std::size_t{1} << seq.n_physical)) {
    throw std::invalid_argument("apply_sequence: column block does not match register");
  }
  ComplexMatrix a = columns;
  for (const auto& g : seq.gates) apply_gate(a, g, seq.n_physical, sign);
  return a;
}

ComplexMatrix evaluate_sequence(const ExchangeSequence& seq, Sign sign) {
  return apply_sequence(seq, ComplexMatrix::identity(std::size_t{1} << seq.n_physical), sign);
}

ComplexMatrix project_sequence(const ExchangeSequence& seq, const LogicalProjector& p,
                               Sign sign) {
  if (p.n_physical() != seq.n_physical) {
    throw std::invalid_argument("project_sequence: projector does not match register");
  }
  return p.matrix().adjoint() * apply_sequence(seq, p.matrix(), sign);
}

double Schedule::parallel_time() const noexcept {
  double total = 0.0;
  for (double d : cycle_durations) total += d;
  return total;
}

Schedule schedule_parallel(const ExchangeSequence& seq) {
  seq.validate();
  Schedule out;
  std::vector<long> last_cycle(static_cast<std::size_t>(seq.n_physical) + 1, -1);
  long segment_floor = 0;
  std::size_t next_barrier = 0;
  for (std::size_t i = 0; i < seq.gates.size(); ++i) {
    if (next_barrier < seq.barriers.size() && seq.barriers[next_barrier] == i) {
      segment_floor = static_cast<long>(out.cycles.size());
      ++next_barrier;
    }
    const auto& g = seq.gates[i];
    const long cycle = std::max({last_cycle[g.q1] + 1, last_cycle[g.q2] + 1, segment_floor});
    if (static_cast<std::size_t>(cycle) >= out.cycles.size()) {
      out.cycles.resize(cycle + 1);
      out.cycle_durations.resize(cycle + 1, 0.0);
    }
    out.cycles[cycle].push_back(i);
    out.cycle_durations[cycle] = std::max(out.cycle_durations[cycle], std::abs(g.t));
    last_cycle[g.q1] = last_cycle[g.q2] = cycle;
  }
  return out;
}

double serial_time(const ExchangeSequence& seq) noexcept {
  double total = 0.0;
  for (const auto& g : seq.gates) total += std::abs(g.t);
  return total;
}

ExchangeSequence flatten_schedule(const ExchangeSequence& seq, const Schedule& schedule) {
  ExchangeSequence out = seq;
  out.gates.clear();
  out.barriers.clear();
  for (const auto& cycle : schedule.cycles)
    for (auto idx : cycle) out.gates.push_back(seq.gates.at(idx));
  if (out.gates.size() != seq.gates.size()) {
    throw std::invalid_argument("flatten_schedule: schedule does not cover the sequence");
  }
  return out;
}

}  // namespace exo
