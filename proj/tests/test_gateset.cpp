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

#include "exo/errors.hpp"
#include "exo/gateset.hpp"
#include "exo/metrics.hpp"
#include "exo/pulse.hpp"

namespace {

using exo::BuiltinId;
using exo::Code;
using exo::ComplexMatrix;
using exo::cplx;
using exo::PulseGate;
using exo::TableVariant;

constexpr double kPi = std::numbers::pi;

ComplexMatrix projected(const exo::ExchangeSequence& s, exo::Sign sign = exo::Sign::Plus) {
  return exo::project_sequence(s, exo::projector_for(s), sign);
}

double distance_to(const exo::ExchangeSequence& s, const char* name, exo::Sign sign = exo::Sign::Plus) {
  return exo::phase_aligned_distance(projected(s, sign), exo::target(name).matrix);
}

TEST(Builtin, ThirtyFourGateTable) {
  const auto s = exo::builtin(BuiltinId::Cnot34_4q);
  EXPECT_EQ(s.size(), 34u);
  EXPECT_EQ(s.n_physical, 8);
  EXPECT_EQ(s.gates.front(), (PulseGate{4, 5, 1.90680}));
  EXPECT_EQ(s.gates.back(), (PulseGate{4, 5, 2.09434}));
}

TEST(Builtin, LocalU1) {
  const auto s = exo::builtin(BuiltinId::LocalU1_4q);
  const std::vector<PulseGate> expected = {
      {1, 2, 2.218823}, {2, 3, 4.386508}, {1, 2, 3.442139}, {2, 3, 1.808165}};
  EXPECT_EQ(s.gates, expected);
  EXPECT_EQ(s.n_physical, 4);
}

TEST(Builtin, ThirtyOneGateTable) {
  const auto s = exo::builtin(BuiltinId::Cnot31_3q);
  EXPECT_EQ(s.size(), 31u);
  EXPECT_EQ(s.code, Code::ThreeQubit);
  EXPECT_EQ(s.gates.front(), (PulseGate{2, 3, 3.141592}));
}

TEST(Builtin, TwentySixGateTableReadsColumnMajor) {
  const auto s = exo::builtin(BuiltinId::Cnot26_3q);
  ASSERT_EQ(s.size(), 26u);
  EXPECT_EQ(s.gates[13], (PulseGate{2, 3, 1.302881}));  // top of the right column
  EXPECT_EQ(s.gates[25], (PulseGate{5, 6, 2.278532}));
}

TEST(Builtin, NamesRoundTrip) {
  EXPECT_EQ(exo::all_builtins().size(), 10u);
  for (auto id : exo::all_builtins()) {
    EXPECT_EQ(exo::builtin_from_string(exo::to_string(id)), id);
    EXPECT_NO_THROW(exo::builtin(id).validate());
  }
  EXPECT_FALSE(exo::builtin_from_string("cnot_4q").has_value());
}

TEST(Builtin, EveryDocumentedCheckPasses) {
  for (auto id : exo::all_builtins()) {
    const auto check = exo::documented_check(id);
    const auto s = exo::builtin(id);
    const ComplexMatrix m = projected(s);
    EXPECT_LE(exo::leakage_projected(m), check.tolerance) << exo::to_string(id);
    if (check.target == "cnot-invariants") {
      EXPECT_LE(exo::fitness_projected(m, exo::kCnotInvariants).f, check.tolerance);
    } else if (check.target != "none") {
      EXPECT_LE(exo::phase_aligned_distance(m, exo::target(check.target).matrix), check.tolerance)
          << exo::to_string(id);
    }
  }
}

TEST(Builtin, PolishedVariantsImproveOnPrintedTimes) {
  for (auto id : {BuiltinId::CnotExact_4q, BuiltinId::Cnot26_3q, BuiltinId::Cnot31_3q}) {
    const auto printed = exo::builtin(id);
    const auto polished = exo::builtin(id, TableVariant::Polished);
    ASSERT_EQ(polished.size(), printed.size());
    for (std::size_t i = 0; i < printed.size(); ++i) {
      EXPECT_EQ(polished.gates[i].q1, printed.gates[i].q1);
      EXPECT_EQ(polished.gates[i].q2, printed.gates[i].q2);
    }
    EXPECT_LT(distance_to(polished, "cnot"), distance_to(printed, "cnot") / 10.0) << exo::to_string(id);
  }
  const auto p = exo::projector(Code::FourQubit, 2);
  const auto r = exo::fitness_projected(
      exo::project_sequence(exo::builtin(BuiltinId::Cnot34_4q, TableVariant::Polished), p), exo::kCnotInvariants);
  EXPECT_LE(r.f, 1e-9);
  EXPECT_LE(r.leakage, 1e-8);
}

TEST(Builtin, PolishedLocalsAreSlicesOfThePolishedExactCnot) {
  const auto exact = exo::builtin(BuiltinId::CnotExact_4q, TableVariant::Polished);
  const auto v2 = exo::builtin(BuiltinId::LocalV2_4q, TableVariant::Polished);
  const auto u1 = exo::builtin(BuiltinId::LocalU1_4q, TableVariant::Polished);
  for (std::size_t i = 0; i < 4; ++i) {
    EXPECT_EQ(v2.gates[i].t, exact.gates[4 + i].t);
    EXPECT_EQ(u1.gates[i].t, exact.gates[42 + i].t);
  }
}

TEST(AnalyticSingleQubit, PiOverEight) {
  const auto s = exo::analytic_single_qubit(exo::SingleQubitGate::Pi8);
  ASSERT_EQ(s.size(), 1u);
  EXPECT_EQ(s.gates[0], (PulseGate{1, 2, kPi / 8}));
  EXPECT_LE(distance_to(s, "pi8"), 1e-12);
}

TEST(AnalyticSingleQubit, HadamardTimes) {
  const auto s = exo::analytic_single_qubit(exo::SingleQubitGate::Hadamard);
  ASSERT_EQ(s.size(), 3u);
  // half of asin(sqrt(2/3)) = 0.95531661... / 2
  EXPECT_NEAR(s.gates[0].t, 0.4776583, 1e-7);
  EXPECT_NEAR(s.gates[1].t, -0.9553166, 1e-7);
  EXPECT_EQ(s.gates[2], s.gates[0]);
  EXPECT_LE(distance_to(s, "hadamard"), 1e-12);
}

TEST(AnalyticSingleQubit, PositiveMiddleTimeIsNotAHadamard) {
  auto s = exo::analytic_single_qubit(exo::SingleQubitGate::Hadamard);
  s.gates[1].t = -s.gates[1].t;
  EXPECT_GT(distance_to(s, "hadamard"), 0.5);
  EXPECT_GT(distance_to(s, "hadamard", exo::Sign::Minus), 0.5);
}

TEST(SignConvention, PiOverEightSelectsPlus) {
  const auto s = exo::analytic_single_qubit(exo::SingleQubitGate::Pi8);
  EXPECT_LE(distance_to(s, "pi8", exo::Sign::Plus), 1e-12);
  EXPECT_GT(distance_to(s, "pi8", exo::Sign::Minus), 0.1);
}

TEST(SignConvention, CnotChecksAreSignBlind) {
  for (auto id : {BuiltinId::CnotExact_4q, BuiltinId::Cnot31_3q}) {
    const auto s = exo::builtin(id);
    EXPECT_NEAR(distance_to(s, "cnot", exo::Sign::Plus), distance_to(s, "cnot", exo::Sign::Minus), 1e-12);
  }
}

TEST(Target, Matrices) {
  const ComplexMatrix pi8 = exo::target("pi8").matrix;
  EXPECT_LE(std::abs(pi8(0, 0) - 1.0), 1e-15);
  EXPECT_LE(std::abs(pi8(1, 1) - std::exp(cplx(0.0, kPi / 4))), 1e-15);
  EXPECT_EQ(pi8(0, 1), cplx(0.0));
  const double r = std::sqrt(0.5);
  EXPECT_LE(exo::max_abs_diff(exo::target("hadamard").matrix, ComplexMatrix::from_rows({{r, r}, {r, -r}})), 1e-16);
  const ComplexMatrix c = exo::target("cnot").matrix;
  EXPECT_EQ(c(3, 2), cplx(1.0));
  EXPECT_EQ(c(2, 3), cplx(1.0));
  EXPECT_EQ(c(1, 1), cplx(1.0));
  for (const char* name : {"cnot", "identity", "hadamard", "pi8", "identity1", "sigma_z"})
    EXPECT_TRUE(exo::is_unitary(exo::target(name).matrix, 1e-12)) << name;
  EXPECT_THROW(exo::target("toffoli"), std::invalid_argument);
}

TEST(AssembleExactCnot, FourQubitLayers) {
  const auto s = exo::assemble_exact_cnot(Code::FourQubit);
  EXPECT_EQ(s.size(), 50u);
  EXPECT_EQ(exo::schedule_parallel(s).cycle_count(), 27u);
  EXPECT_LE(distance_to(s, "cnot"), 1e-3);
  EXPECT_EQ(s.barriers, (std::vector<std::size_t>{8, 42}));
  EXPECT_EQ(s.gates[4], (PulseGate{5, 6, 0.933012}));  // V2 starts on the second block
}

TEST(AssembleExactCnot, LayersMultiplyToTheConcatenation) {
  const auto s = exo::assemble_exact_cnot(Code::FourQubit);
  auto slice = [&](std::size_t from, std::size_t to) {
    auto part = exo::empty_sequence(Code::FourQubit, 2);
    part.gates.assign(s.gates.begin() + from, s.gates.begin() + to);
    return exo::evaluate_sequence(part);
  };
  const ComplexMatrix layered = slice(42, 50) * slice(8, 42) * slice(0, 8);
  EXPECT_LE(exo::max_abs_diff(layered, exo::evaluate_sequence(s)), 1e-12);
}

TEST(AssembleExactCnot, ThreeQubitVariants) {
  const auto t4 = exo::assemble_exact_cnot(Code::ThreeQubit);
  EXPECT_EQ(t4.size(), 31u);
  EXPECT_LE(distance_to(t4, "cnot"), 1e-4);
  const auto t3 = exo::assemble_exact_cnot(Code::ThreeQubit, exo::ThreeQubitVariant::Table3);
  EXPECT_EQ(t3.size(), 26u);
  EXPECT_LE(distance_to(t3, "cnot"), 1e-4);
}

TEST(LocalLayers, ProjectToLeakFreeUnitaries) {
  for (auto id : {BuiltinId::LocalU1_4q, BuiltinId::LocalU2_4q, BuiltinId::LocalV1_4q, BuiltinId::LocalV2_4q}) {
    const ComplexMatrix m = projected(exo::builtin(id));
    EXPECT_LE(exo::unitarity_error(m), 1e-12);
    EXPECT_LE(exo::leakage_projected(m), 1e-12);
  }
}

TEST(LocalLayers, PlaceOnBlockOffsets) {
  const auto local = exo::local_layout(Code::ThreeQubit);
  const auto b1 = exo::place_on_block(local, 1);
  EXPECT_EQ(b1.n_physical, 6);
  EXPECT_EQ(b1.gates[0].q1, 4);
  EXPECT_EQ(b1.gates[1].q2, 6);
  const auto b0 = exo::place_on_block(exo::local_layout(Code::FourQubit), 0);
  EXPECT_EQ(b0.gates[1], (PulseGate{2, 3, 0.0}));
  EXPECT_THROW(exo::place_on_block(local, 2), std::out_of_range);
  EXPECT_THROW(exo::place_on_block(b1, 0), std::invalid_argument);
}

TEST(CoreSymmetry, RepeatedTimes) {
  const auto& g = exo::builtin(BuiltinId::Cnot26_3q).gates;
  EXPECT_EQ(g[3], (PulseGate{3, 4, 1.290877}));
  EXPECT_EQ(g[21], g[3]);
  EXPECT_EQ(g[8], g[4]);    // t5
  EXPECT_EQ(g[9], g[5]);    // t6
  EXPECT_EQ(g[16], g[5]);
  EXPECT_EQ(g[20], g[5]);
  EXPECT_EQ(g[13], g[11]);  // t8
  EXPECT_EQ(g[19], g[15]);  // t10
  EXPECT_EQ(g[18], g[7]);   // t6 bar
  EXPECT_EQ(g[0], g[2]);
}

TEST(CoreSymmetry, CorrelatedPairs) {
  const auto pairs = exo::table3_correlated_pairs();
  ASSERT_EQ(pairs.size(), 4u);
  const int ks[] = {5, 6, 8, 10};
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    EXPECT_EQ(pairs[i].k, ks[i]);
    EXPECT_LE(std::abs(exo::correlation_symmetry(pairs[i].t, pairs[i].t_bar)), 1e-4);
  }
  EXPECT_DOUBLE_EQ(pairs[0].t_bar, -1.207108);
  EXPECT_DOUBLE_EQ(pairs[3].t_bar, 1.249644);
}

TEST(SynthesizeLocal, IdentityAndSigmaZAtKnownPoints) {
  const double zero[] = {0.0, 0.0, 0.0, 0.0};
  EXPECT_LE(exo::local_cost(exo::target("identity1"), Code::FourQubit, zero), 1e-15);
  const double half_pi[] = {kPi / 2, 0.0, 0.0, 0.0};
  EXPECT_LE(exo::local_cost(exo::target("sigma_z"), Code::FourQubit, half_pi), 1e-12);
}

TEST(SynthesizeLocal, FindsIdentityAndSigmaZ) {
  for (const char* name : {"identity1", "sigma_z"}) {
    const auto r = exo::synthesize_local(exo::target(name), Code::FourQubit, 5);
    EXPECT_LE(r.cost, 1e-10) << name;
    EXPECT_LE(exo::local_cost(exo::target(name), Code::FourQubit,
                              std::vector<double>{r.sequence.gates[0].t, r.sequence.gates[1].t,
                                                  r.sequence.gates[2].t, r.sequence.gates[3].t}),
              1e-10);
  }
}

TEST(SynthesizeLocal, FindsHadamardForBothCodes) {
  for (Code code : {Code::FourQubit, Code::ThreeQubit}) {
    const auto r = exo::synthesize_local(exo::target("hadamard"), code, 11);
    EXPECT_LE(r.cost, 1e-10);
    EXPECT_GE(r.starts, 1u);
    EXPECT_LE(distance_to(r.sequence, "hadamard"), 1e-5);
  }
}

TEST(SynthesizeLocal, DeterministicPerSeed) {
  const auto a = exo::synthesize_local(exo::target("pi8"), Code::FourQubit, 3);
  const auto b = exo::synthesize_local(exo::target("pi8"), Code::FourQubit, 3);
  EXPECT_EQ(a.sequence, b.sequence);
  EXPECT_EQ(a.starts, b.starts);
}

TEST(SynthesizeLocal, BudgetExhaustedCarriesBestPoint) {
  exo::SynthesisOptions opts;
  opts.max_starts = 2;
  opts.accept_cost = -1.0;
  opts.nm.max_iterations = 50;
  try {
    exo::synthesize_local(exo::target("hadamard"), Code::FourQubit, 1, opts);
    FAIL() << "expected BudgetExhausted";
  } catch (const exo::BudgetExhausted& e) {
    EXPECT_EQ(e.best_times().size(), 4u);
    EXPECT_GE(e.best_cost(), 0.0);
  }
}

TEST(SynthesizeLocal, RejectsTwoQubitTargets) {
  EXPECT_THROW(exo::synthesize_local(exo::target("cnot"), Code::FourQubit, 1), std::invalid_argument);
}

}  // namespace
