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

#ifndef EXO_OBJECTIVE_HPP
#define EXO_OBJECTIVE_HPP

#include <functional>
#include <span>
#include <utility>
#include <variant>
#include <vector>

#include "exo/encoding.hpp"
#include "exo/metrics.hpp"
#include "exo/pulse.hpp"

namespace exo {

using Genome = std::vector<double>;
using ObjectiveFn = std::function<double(std::span<const double>)>;

/// Fixed ordered list of coupled pairs; only the times vary.
struct Layout {
  int n_physical = 0;
  Code code = Code::FourQubit;
  std::vector<std::pair<int, int>> pairs;

  std::size_t size() const noexcept { return pairs.size(); }

  static Layout from_sequence(const ExchangeSequence& seq);
  ExchangeSequence with_times(std::span<const double> times) const;
};

/// Match a gate class (f + Lambda)...
struct InvariantTarget {
  MakhlinInvariants invariants = kCnotInvariants;
};
/// ...or an exact gate up to global phase (distance + Lambda).
struct GateTarget {
  ComplexMatrix gate;
};
using ObjectiveTarget = std::variant<InvariantTarget, GateTarget>;

/// Cost of a time vector on a fixed layout. Immutable and safe to call from
/// several threads at once.
class SequenceObjective {
 public:
  SequenceObjective(Layout layout, ObjectiveTarget target, Sign sign = Sign::Plus);

  struct Breakdown {
    double f = 0.0;         // invariant mismatch (InvariantTarget)
    double distance = 0.0;  // phase-aligned distance (GateTarget)
    double leakage = 0.0;
    double total = 0.0;
    bool near_singular = false;
  };

  Breakdown evaluate(std::span<const double> times) const;
  double operator()(std::span<const double> times) const { return evaluate(times).total; }

  const Layout& layout() const noexcept { return layout_; }
  ObjectiveFn as_function() const;

 private:
  Layout layout_;
  LogicalProjector projector_;
  ObjectiveTarget target_;
  Sign sign_;
};

/// F = f + Lambda of `genome` on `layout` against the invariant target.
double objective(const Layout& layout, std::span<const double> genome,
                 const MakhlinInvariants& target);

}  // namespace exo

#endif  // EXO_OBJECTIVE_HPP
