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

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "exo/errors.hpp"
#include "exo/gateset.hpp"
#include "exo/metrics.hpp"
#include "exo/pulse.hpp"
#include "support/helpers.hpp"

namespace {

using exo::Code;
using exo::ComplexMatrix;
using exo::cplx;
using testing_support::to_oracle;

const cplx I(0.0, 1.0);

ComplexMatrix cnot() { return exo::target("cnot").matrix; }

void expect_invariants(const ComplexMatrix& m, cplx m1, cplx m2, double tol) {
  const auto inv = exo::makhlin(m);
  EXPECT_LE(std::abs(inv.m1 - m1), tol);
  EXPECT_LE(std::abs(inv.m2 - m2), tol);
  const auto brute = oracle::makhlin(to_oracle(m));
  EXPECT_LE(std::abs(inv.m1 - brute.m1), 1e-13);
  EXPECT_LE(std::abs(inv.m2 - brute.m2), 1e-13);
}

exo::ExchangeSequence random_local(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> t(0.0, 2 * std::numbers::pi);
  auto s = exo::local_layout(Code::FourQubit);
  for (auto& g : s.gates) g.t = t(rng);
  return s;
}

TEST(BellBasis, IsUnitary) { EXPECT_LE(exo::unitarity_error(exo::bell_basis()), 1e-15); }

TEST(BellBasis, IdentityIsFixed) {
  EXPECT_LE(exo::max_abs_diff(exo::bell_transform(ComplexMatrix::identity(4)), ComplexMatrix::identity(4)),
            1e-15);
}

TEST(BellBasis, CnotGivesTracelessLittleM) {
  const ComplexMatrix mb = exo::bell_transform(cnot());
  EXPECT_LE(std::abs((mb.transpose() * mb).trace()), 1e-15);
}

TEST(BellBasis, RejectsWrongShape) {
  EXPECT_THROW(exo::bell_transform(ComplexMatrix::identity(2)), std::invalid_argument);
}

TEST(Makhlin, Cnot) { expect_invariants(cnot(), 0.0, 1.0, 1e-14); }

TEST(Makhlin, Identity) { expect_invariants(ComplexMatrix::identity(4), 1.0, 3.0, 1e-14); }

TEST(Makhlin, Swap) { expect_invariants(exo::swap_gate(), -1.0, -3.0, 1e-14); }

TEST(Makhlin, MatchesBruteForceOnRandomUnitaries) {
  std::mt19937_64 rng(37);
  for (int trial = 0; trial < 20; ++trial) {
    const ComplexMatrix u = exo::random_unitary(4, rng);
    const auto inv = exo::makhlin(u);
    const auto brute = oracle::makhlin(to_oracle(u));
    EXPECT_LE(std::abs(inv.m1 - brute.m1), 1e-12);
    EXPECT_LE(std::abs(inv.m2 - brute.m2), 1e-12);
  }
}

TEST(Makhlin, GlobalPhaseInvariance) {
  std::mt19937_64 rng(41);
  std::uniform_real_distribution<double> phi(0.0, 2 * std::numbers::pi);
  for (int trial = 0; trial < 20; ++trial) {
    const ComplexMatrix u = exo::random_unitary(4, rng);
    const auto a = exo::makhlin(u);
    const auto b = exo::makhlin(u * std::exp(I * phi(rng)));
    EXPECT_LE(std::abs(a.m1 - b.m1), 1e-10);
    EXPECT_LE(std::abs(a.m2 - b.m2), 1e-10);
  }
}

TEST(Makhlin, LocalTwoQubitUnitariesDoNotChangeInvariants) {
  std::mt19937_64 rng(43);
  const ComplexMatrix g = exo::random_unitary(4, rng);
  const auto base = exo::makhlin(g);
  for (int trial = 0; trial < 10; ++trial) {
    const ComplexMatrix a = exo::kron(exo::random_unitary(2, rng), exo::random_unitary(2, rng));
    const ComplexMatrix b = exo::kron(exo::random_unitary(2, rng), exo::random_unitary(2, rng));
    const auto inv = exo::makhlin(a * g * b);
    EXPECT_LE(std::abs(inv.m1 - base.m1), 1e-12);
    EXPECT_LE(std::abs(inv.m2 - base.m2), 1e-12);
  }
}

TEST(Makhlin, NearSingularThrows) {
  ComplexMatrix m = ComplexMatrix::identity(4);
  m(3, 3) = 1e-9;
  EXPECT_THROW(exo::makhlin(m), exo::NearSingularError);
  try {
    exo::makhlin(m);
  } catch (const exo::NearSingularError& e) {
    EXPECT_NEAR(e.abs_det(), 1e-9, 1e-20);
  }
}

TEST(Leakage, IdentityOnEightQubitsIsZero) {
  EXPECT_EQ(exo::leakage(ComplexMatrix::identity(256), exo::projector(Code::FourQubit, 2)), 0.0);
}

TEST(Leakage, RandomUnitariesStayInRange) {
  std::mt19937_64 rng(47);
  const auto p = exo::projector(Code::FourQubit, 2);
  for (int trial = 0; trial < 100; ++trial) {
    const double l = exo::leakage(exo::random_unitary(256, rng), p);
    EXPECT_GE(l, 0.0);
    EXPECT_LE(l, 4.0);
    EXPECT_GT(l, 1.0);  // a Haar unitary keeps ~4/256 of the weight
  }
}

TEST(Leakage, ProjectedFormulaAndClamp) {
  ComplexMatrix m(4, 4);
  m(0, 0) = 1.0;
  m(1, 1) = std::sqrt(0.5);
  EXPECT_NEAR(exo::leakage_projected(m), 2.5, 1e-15);
  EXPECT_EQ(exo::leakage_projected(ComplexMatrix::identity(4) * 1.0000001), 0.0);
  EXPECT_EQ(exo::leakage_projected(ComplexMatrix::identity(2)), 0.0);
}

TEST(Leakage, ZeroLeakageMeansUnitaryProjection) {
  std::mt19937_64 rng(53);
  const auto p = exo::projector(Code::ThreeQubit, 2);
  std::uniform_real_distribution<double> t(-3.0, 3.0);
  for (int trial = 0; trial < 20; ++trial) {
    auto s = exo::empty_sequence(Code::ThreeQubit, 2);
    s.gates = {{1, 2, t(rng)}, {2, 3, t(rng)}, {4, 5, t(rng)}, {5, 6, t(rng)}, {1, 2, t(rng)}};
    const ComplexMatrix m = exo::project_sequence(s, p);
    ASSERT_LE(exo::leakage_projected(m), 1e-12);
    EXPECT_LE(exo::unitarity_error(m), 1e-6);
  }
}

TEST(Fitness, ExactCnotScoresZero) {
  const auto r = exo::fitness_projected(cnot(), exo::kCnotInvariants);
  EXPECT_LE(r.total, 1e-14);
  EXPECT_FALSE(r.near_singular);
}

TEST(Fitness, IdentityScoresThree) {
  const auto r = exo::fitness_projected(ComplexMatrix::identity(4), exo::kCnotInvariants);
  EXPECT_NEAR(r.f, 3.0, 1e-14);
  EXPECT_EQ(r.leakage, 0.0);
  EXPECT_EQ(r.total, r.f + r.leakage);
}

TEST(Fitness, ThirtyFourGateTable) {
  const auto s = exo::builtin(exo::BuiltinId::Cnot34_4q);
  const auto r = exo::fitness(exo::evaluate_sequence(s), exo::projector(Code::FourQubit, 2), exo::kCnotInvariants);
  EXPECT_LE(r.total, 1e-5);
  EXPECT_LE(r.leakage, 1e-6);
}

TEST(Fitness, NearSingularPenalty) {
  ComplexMatrix m(4, 4);
  m(0, 0) = 1.0;
  const auto r = exo::fitness_projected(m, exo::kCnotInvariants);
  EXPECT_TRUE(r.near_singular);
  EXPECT_NEAR(r.leakage, 3.0, 1e-15);
  EXPECT_NEAR(r.f, 5.0, 1e-15);
  EXPECT_NEAR(r.total, 8.0, 1e-15);
}

TEST(Fitness, EncodedLocalLayersLeaveInvariantsUnchanged) {
  std::mt19937_64 rng(59);
  const auto p = exo::projector(Code::FourQubit, 2);
  const auto core = exo::builtin(exo::BuiltinId::Cnot34_4q);
  const auto base = exo::makhlin(exo::project_sequence(core, p));
  for (int trial = 0; trial < 5; ++trial) {
    auto seq = exo::place_on_block(random_local(rng), 0);
    seq.append(exo::place_on_block(random_local(rng), 1));
    seq.append(core);
    seq.append(exo::place_on_block(random_local(rng), 0));
    seq.append(exo::place_on_block(random_local(rng), 1));
    const auto inv = exo::makhlin(exo::project_sequence(seq, p));
    EXPECT_LE(std::abs(inv.m1 - base.m1), 1e-8);
    EXPECT_LE(std::abs(inv.m2 - base.m2), 1e-8);
  }
}

TEST(PhaseAlignedDistance, SelfAndGlobalPhase) {
  std::mt19937_64 rng(61);
  const ComplexMatrix u = exo::random_unitary(4, rng);
  EXPECT_EQ(exo::phase_aligned_distance(u, u), 0.0);
  EXPECT_LE(exo::phase_aligned_distance(u * std::exp(I * std::numbers::pi / 3.0), u), 1e-15);
}

TEST(PhaseAlignedDistance, IsSymmetric) {
  std::mt19937_64 rng(67);
  for (int trial = 0; trial < 50; ++trial) {
    const ComplexMatrix u = exo::random_unitary(4, rng);
    const ComplexMatrix v = exo::random_unitary(4, rng);
    EXPECT_LE(std::abs(exo::phase_aligned_distance(u, v) - exo::phase_aligned_distance(v, u)), 1e-12);
  }
}

TEST(PhaseAlignedDistance, DetectsDifferencesBeyondPhase) {
  EXPECT_NEAR(exo::phase_aligned_distance(ComplexMatrix::identity(4), cnot()), 1.0, 1e-15);
  const cplx d[] = {1.0, -1.0};
  EXPECT_NEAR(exo::phase_aligned_distance(ComplexMatrix::identity(2), ComplexMatrix::diagonal(d)), 2.0, 1e-15);
  EXPECT_THROW(exo::phase_aligned_distance(ComplexMatrix::identity(2), ComplexMatrix::identity(4)),
               std::invalid_argument);
}

TEST(PhaseAlignedDistance, AnalyticPiOverEight) {
  const auto seq = exo::analytic_single_qubit(exo::SingleQubitGate::Pi8);
  const auto m = exo::project_sequence(seq, exo::projector(Code::FourQubit, 1));
  EXPECT_LE(exo::phase_aligned_distance(m, exo::target("pi8").matrix), 1e-12);
}

TEST(CorrelationSymmetry, TableValues) {
  EXPECT_LE(std::abs(exo::correlation_symmetry(0.650655, -1.207108)), 1e-4);
  EXPECT_LE(std::abs(exo::correlation_symmetry(0.871873, -1.034121)), 1e-4);
}

TEST(CorrelationSymmetry, ExactPair) {
  EXPECT_LE(std::abs(exo::correlation_symmetry(std::numbers::pi / 4, std::atan(-2.0))), 1e-15);
}

TEST(CorrelationSymmetry, TangentPole) {
  EXPECT_THROW(exo::correlation_symmetry(std::numbers::pi / 2, 0.3), exo::TangentPoleError);
  EXPECT_THROW(exo::correlation_symmetry(0.3, -1.5 * std::numbers::pi + 1e-10), exo::TangentPoleError);
  EXPECT_NO_THROW(exo::correlation_symmetry(std::numbers::pi, 0.3));
}

}  // namespace
