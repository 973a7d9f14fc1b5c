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

#ifndef EXO_METRICS_HPP
#define EXO_METRICS_HPP

#include "exo/encoding.hpp"
#include "exo/qcore.hpp"

namespace exo {

/// Local-equivalence invariants of a two-qubit gate. Both are kept complex.
struct MakhlinInvariants {
  cplx m1;
  cplx m2;
};

/// Invariants of CNOT: (0, 1).
inline constexpr MakhlinInvariants kCnotInvariants{cplx(0.0, 0.0), cplx(1.0, 0.0)};

/// |det M| below this makes the invariants meaningless.
inline constexpr double kNearSingularDet = 1e-8;

struct FitnessReport {
  double f = 0.0;        // invariant mismatch
  double leakage = 0.0;  // Lambda
  double total = 0.0;    // f + leakage
  bool near_singular = false;
};

/// The fixed magic-basis matrix Q.
const ComplexMatrix& bell_basis();

/// Q^dagger M Q for a 4x4 M.
ComplexMatrix bell_transform(const ComplexMatrix& m);

/// m = M_B^T M_B; M1 = tr^2(m) / (16 det M), M2 = (tr^2(m) - tr(m^2)) / (4 det M).
/// Throws NearSingularError when |det M| < 1e-8.
MakhlinInvariants makhlin(const ComplexMatrix& m);

/// |a.m1 - b.m1| + |a.m2 - b.m2|.
double invariant_distance(const MakhlinInvariants& a, const MakhlinInvariants& b);

/// Lambda of an already-projected logical matrix: dim - sum |M_ij|^2,
/// clamped at 0. dim is 4 for two blocks and 2 for one.
double leakage_projected(const ComplexMatrix& m);

/// Lambda for a physical operator.
double leakage(const ComplexMatrix& w, const LogicalProjector& p);

/// Invariant fitness of a projected 4x4 matrix. On a near-singular
/// projection f is the penalty 2 + Lambda.
FitnessReport fitness_projected(const ComplexMatrix& m, const MakhlinInvariants& target);

FitnessReport fitness(const ComplexMatrix& w, const LogicalProjector& p,
                      const MakhlinInvariants& target);

/// min over a global phase of max_ij |(e^{i phi} u - v)_ij|, with the phase
/// taken from the entry maximizing |u_ij| |v_ij| (lowest index on ties).
/// Exactly symmetric in its arguments.
double phase_aligned_distance(const ComplexMatrix& u, const ComplexMatrix& v);

/// tan(t) tan(t_bar) + 2. Throws TangentPoleError if either angle lies
/// within 1e-9 of an odd multiple of pi/2.
double correlation_symmetry(double t, double t_bar);

}  // namespace exo

#endif  // EXO_METRICS_HPP
