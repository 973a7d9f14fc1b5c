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

#include "exo/metrics.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "exo/errors.hpp"

namespace exo {

const ComplexMatrix& bell_basis() {
  static const ComplexMatrix q = [] {
    const cplx i(0.0, 1.0);
    ComplexMatrix m = ComplexMatrix::from_rows({{1.0, 0.0, 0.0, i},
                                                {0.0, i, 1.0, 0.0},
                                                {0.0, i, -1.0, 0.0},
                                                {1.0, 0.0, 0.0, -i}});
    return m * cplx(std::sqrt(0.5), 0.0);
  }();
  return q;
}

ComplexMatrix bell_transform(const ComplexMatrix& m) {
  if (m.rows() != 4 || m.cols() != 4) throw std::invalid_argument("bell_transform: expected 4x4");
  const auto& q = bell_basis();
  return q.adjoint() * m * q;
}

MakhlinInvariants makhlin(const ComplexMatrix& m) {
  if (m.rows() != 4 || m.cols() != 4) throw std::invalid_argument("makhlin: expected 4x4");
  const cplx det = determinant(m);
  if (std::abs(det) < kNearSingularDet) {
    throw NearSingularError("makhlin: |det M| below 1e-8; check leakage", std::abs(det));
  }
  const ComplexMatrix mb = bell_transform(m);
  const ComplexMatrix small = mb.transpose() * mb;
  const cplx tr = small.trace();
  const cplx tr_sq = (small * small).trace();
  return {tr * tr / (16.0 * det), (tr * tr - tr_sq) / (4.0 * det)};
}

double invariant_distance(const MakhlinInvariants& a, const MakhlinInvariants& b) {
  return std::abs(a.m1 - b.m1) + std::abs(a.m2 - b.m2);
}

double leakage_projected(const ComplexMatrix& m) {
  if (!m.is_square()) throw std::invalid_argument("leakage: projected matrix must be square");
  return std::max(0.0, static_cast<double>(m.rows()) - frobenius_norm_sq(m));
}

double leakage(const ComplexMatrix& w, const LogicalProjector& p) {
  return leakage_projected(project_logical(w, p));
}

FitnessReport fitness_projected(const ComplexMatrix& m, const MakhlinInvariants& target) {
  if (m.rows() != 4 || m.cols() != 4) {
    throw std::invalid_argument("fitness: projected gate must be 4x4 (two encoded qubits)");
  }
  FitnessReport r;
  r.leakage = leakage_projected(m);
  try {
    r.f = invariant_distance(makhlin(m), target);
  } catch (const NearSingularError&) {
    r.f = 2.0 + r.leakage;
    r.near_singular = true;
  }
  r.total = r.f + r.leakage;
  return r;
}

FitnessReport fitness(const ComplexMatrix& w, const LogicalProjector& p,
                      const MakhlinInvariants& target) {
  return fitness_projected(project_logical(w, p), target);
}

double phase_aligned_distance(const ComplexMatrix& u, const ComplexMatrix& v) {
  if (u.rows() != v.rows() || u.cols() != v.cols()) {
    throw std::invalid_argument("phase_aligned_distance: dimension mismatch");
  }
  const auto eu = u.entries();
  const auto ev = v.entries();
  std::size_t pivot = 0;
  double best = -1.0;
  for (std::size_t k = 0; k < eu.size(); ++k) {
    const double w = std::abs(eu[k]) * std::abs(ev[k]);
    if (w > best) {
      best = w;
      pivot = k;
    }
  }
  cplx phase = 1.0;
  if (best > 0.0) phase = std::polar(1.0, std::arg(ev[pivot]) - std::arg(eu[pivot]));
  double d = 0.0;
  for (std::size_t k = 0; k < eu.size(); ++k) d = std::max(d, std::abs(phase * eu[k] - ev[k]));
  return d;
}

double correlation_symmetry(double t, double t_bar) {
  constexpr double half_pi = std::numbers::pi / 2.0;
  auto near_pole = [](double x) {
    // distance from x to the nearest odd multiple of pi/2
    const double k = std::round((x - half_pi) / std::numbers::pi);
    return std::abs(x - (half_pi + k * std::numbers::pi)) < 1e-9;
  };
  if (near_pole(t) || near_pole(t_bar)) {
    throw TangentPoleError("correlation_symmetry: argument at a tangent pole");
  }
  return std::tan(t) * std::tan(t_bar) + 2.0;
}

}  // namespace exo
