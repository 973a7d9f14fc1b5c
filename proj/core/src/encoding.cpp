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

#include "exo/encoding.hpp"

#include <cmath>
#include <stdexcept>

namespace exo {

namespace {

std::vector<cplx> ket(std::string_view bits) {
  const auto s = StateVector::basis(bits);
  return {s.amplitudes().begin(), s.amplitudes().end()};
}

std::vector<cplx> axpy(std::vector<cplx> acc, cplx scale, const std::vector<cplx>& v) {
  for (std::size_t i = 0; i < acc.size(); ++i) acc[i] += scale * v[i];
  return acc;
}

std::vector<cplx> zeros(std::size_t n) { return std::vector<cplx>(n); }

LogicalStates four_qubit_states() {
  const double r2 = std::sqrt(0.5);
  const double r3 = 1.0 / std::sqrt(3.0);

  std::vector<cplx> singlet = axpy(axpy(zeros(4), r2, ket("01")), -r2, ket("10"));
  std::vector<cplx> zero = kron(singlet, singlet);

  const std::vector<cplx> t_minus = ket("00");
  const std::vector<cplx> t_plus = ket("11");
  const std::vector<cplx> t_zero = axpy(axpy(zeros(4), r2, ket("01")), r2, ket("10"));
  std::vector<cplx> one = zeros(16);
  one = axpy(one, r3, kron(t_plus, t_minus));
  one = axpy(one, -r3, kron(t_zero, t_zero));
  one = axpy(one, r3, kron(t_minus, t_plus));

  return {StateVector::normalized(std::move(zero)), StateVector::normalized(std::move(one))};
}

LogicalStates three_qubit_states() {
  const double r2 = std::sqrt(0.5);
  const std::vector<cplx> s = axpy(axpy(zeros(4), r2, ket("10")), -r2, ket("01"));
  const std::vector<cplx> t_plus = ket("11");
  const std::vector<cplx> t_zero = axpy(axpy(zeros(4), r2, ket("10")), r2, ket("01"));

  std::vector<cplx> zero = kron(s, ket("1"));
  std::vector<cplx> one = zeros(8);
  one = axpy(one, std::sqrt(2.0 / 3.0), kron(t_plus, ket("0")));
  one = axpy(one, -std::sqrt(1.0 / 3.0), kron(t_zero, ket("1")));

  return {StateVector::normalized(std::move(zero)), StateVector::normalized(std::move(one))};
}

}  // namespace

LogicalStates logical_states(Code code) {
  return code == Code::FourQubit ? four_qubit_states() : three_qubit_states();
}

LogicalProjector::LogicalProjector(Code code, int n_blocks) : code_(code), n_blocks_(n_blocks) {
  if (n_blocks != 1 && n_blocks != 2) {
    throw std::invalid_argument("projector: n_blocks must be 1 or 2");
  }
  const auto states = logical_states(code);
  std::vector<std::vector<cplx>> columns;
  if (n_blocks == 1) {
    for (const auto* s : {&states.zero, &states.one})
      columns.emplace_back(s->amplitudes().begin(), s->amplitudes().end());
  } else {
    for (const auto* a : {&states.zero, &states.one})
      for (const auto* b : {&states.zero, &states.one})
        columns.push_back(kron(a->amplitudes(), b->amplitudes()));
  }
  const std::size_t dim = columns.front().size();
  matrix_ = ComplexMatrix(dim, columns.size());
  for (std::size_t c = 0; c < columns.size(); ++c)
    for (std::size_t r = 0; r < dim; ++r) matrix_(r, c) = columns[c][r];
}

LogicalProjector projector(Code code, int n_blocks) { return LogicalProjector(code, n_blocks); }

LogicalProjector projector_for(const ExchangeSequence& seq) {
  if (seq.n_physical % block_size(seq.code) != 0) {
    throw std::invalid_argument("projector_for: register is not a whole number of blocks");
  }
  return LogicalProjector(seq.code, seq.n_blocks());
}

ComplexMatrix project_logical(const ComplexMatrix& w, const LogicalProjector& p) {
  const auto& pm = p.matrix();
  if (!w.is_square() || w.rows() != pm.rows()) {
    throw std::invalid_argument("project_logical: operator dimension does not match projector");
  }
  return pm.adjoint() * (w * pm);
}

ExchangeSequence mirror_relabel(const ExchangeSequence& seq) {
  if (seq.code != Code::FourQubit || seq.n_physical != 8) {
    throw std::invalid_argument("mirror_relabel: requires two four-qubit blocks (8 qubits)");
  }
  seq.validate();
  auto relabel = [](int q) { return q >= 5 ? 13 - q : q; };
  ExchangeSequence out = seq;
  for (auto& g : out.gates) {
    int a = relabel(g.q1);
    int b = relabel(g.q2);
    if (a > b) std::swap(a, b);
    g.q1 = a;
    g.q2 = b;
  }
  return out;
}

}  // namespace exo
