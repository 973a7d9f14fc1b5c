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

#ifndef EXO_NELDER_MEAD_HPP
#define EXO_NELDER_MEAD_HPP

#include <cstddef>
#include <limits>
#include <span>
#include <vector>

#include "exo/objective.hpp"

namespace exo {

struct NMConfig {
  double reflection = 1.0;
  double expansion = 2.0;
  double contraction = 0.5;
  double shrink = 0.5;
  double initial_step = 0.1;  // added to each coordinate of x0 in turn
  double tolerance = 1e-13;   // simplex diameter (max-norm) stop
  std::size_t max_iterations = 20000;
  /// Stop as soon as the best vertex is at or below this value.
  double stop_below = -std::numeric_limits<double>::infinity();

  void validate() const;
};

struct NMResult {
  std::vector<double> x;
  double f = 0.0;
  std::size_t iterations = 0;
  std::size_t evaluations = 0;
  bool converged = false;  // diameter or stop_below reached
};

/// Nelder-Mead simplex search; unconstrained, so times may leave [0, 2 pi].
/// The starting point is a simplex vertex, so the result never exceeds
/// objective(x0).
NMResult nelder_mead(const ObjectiveFn& objective, std::span<const double> x0,
                     const NMConfig& config = {});

}  // namespace exo

#endif  // EXO_NELDER_MEAD_HPP
