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

#include "exo/objective.hpp"

#include <stdexcept>

namespace exo {

Layout Layout::from_sequence(const ExchangeSequence& seq) {
  seq.validate();
  Layout layout;
  layout.n_physical = seq.n_physical;
  layout.code = seq.code;
  for (const auto& g : seq.gates) layout.pairs.emplace_back(g.q1, g.q2);
  return layout;
}

ExchangeSequence Layout::with_times(std::span<const double> times) const {
  if (times.size() != pairs.size()) {
    throw std::invalid_argument("layout: time vector length does not match layout");
  }
  ExchangeSequence seq;
  seq.n_physical = n_physical;
  seq.code = code;
  seq.gates.reserve(pairs.size());
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    seq.gates.push_back({pairs[i].first, pairs[i].second, times[i]});
  }
  return seq;
}

SequenceObjective::SequenceObjective(Layout layout, ObjectiveTarget target, Sign sign)
    : layout_(std::move(layout)),
      projector_(layout_.code, layout_.n_physical / block_size(layout_.code)),
      target_(std::move(target)),
      sign_(sign) {
  layout_.with_times(std::vector<double>(layout_.size())).validate();
  if (const auto* g = std::get_if<GateTarget>(&target_)) {
    if (!g->gate.is_square() || g->gate.rows() != projector_.logical_dim()) {
      throw std::invalid_argument("objective: target gate does not match the logical dimension");
    }
  } else if (projector_.n_blocks() != 2) {
    throw std::invalid_argument("objective: invariant targets need two encoded blocks");
  }
}

SequenceObjective::Breakdown SequenceObjective::evaluate(std::span<const double> times) const {
  const ComplexMatrix m = project_sequence(layout_.with_times(times), projector_, sign_);
  Breakdown b;
  if (const auto* inv = std::get_if<InvariantTarget>(&target_)) {
    const FitnessReport r = fitness_projected(m, inv->invariants);
    b.f = r.f;
    b.leakage = r.leakage;
    b.total = r.total;
    b.near_singular = r.near_singular;
  } else {
    const auto& gate = std::get<GateTarget>(target_).gate;
    b.leakage = leakage_projected(m);
    b.distance = phase_aligned_distance(m, gate);
    b.total = b.distance + b.leakage;
  }
  return b;
}

ObjectiveFn SequenceObjective::as_function() const {
  return [self = *this](std::span<const double> x) { return self(x); };
}

double objective(const Layout& layout, std::span<const double> genome,
                 const MakhlinInvariants& target) {
  return SequenceObjective(layout, InvariantTarget{target})(genome);
}

}  // namespace exo
