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

#include "exo/gateset.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <random>
#include <stdexcept>

#include "exo/encoding.hpp"
#include "exo/errors.hpp"
#include "exo/metrics.hpp"
#include "exo/pulse.hpp"
#include "gateset_tables.hpp"

namespace exo {

namespace {

struct BuiltinName {
  BuiltinId id;
  std::string_view name;
};

constexpr BuiltinName kNames[] = {
    {BuiltinId::Pi8_4q, "pi8_4q"},
    {BuiltinId::Hadamard_4q, "hadamard_4q"},
    {BuiltinId::Cnot34_4q, "cnot34_4q"},
    {BuiltinId::LocalU1_4q, "local_U1_4q"},
    {BuiltinId::LocalU2_4q, "local_U2_4q"},
    {BuiltinId::LocalV1_4q, "local_V1_4q"},
    {BuiltinId::LocalV2_4q, "local_V2_4q"},
    {BuiltinId::CnotExact_4q, "cnot_exact_4q"},
    {BuiltinId::Cnot26_3q, "cnot26_3q"},
    {BuiltinId::Cnot31_3q, "cnot31_3q"},
};

ExchangeSequence make_sequence(Code code, int blocks, std::vector<PulseGate> gates,
                               std::vector<std::size_t> barriers = {}) {
  ExchangeSequence s = empty_sequence(code, blocks);
  s.gates = std::move(gates);
  s.barriers = std::move(barriers);
  s.validate();
  return s;
}

ExchangeSequence local_sequence(const std::array<double, 4>& times) {
  ExchangeSequence s = local_layout(Code::FourQubit);
  for (std::size_t i = 0; i < 4; ++i) s.gates[i].t = times[i];
  return s;
}

/// Both blocks' local sequences as one layer, first block's gates first.
ExchangeSequence local_layer(const ExchangeSequence& first, const ExchangeSequence& second) {
  ExchangeSequence layer = place_on_block(first, 0);
  layer.append(place_on_block(second, 1));
  return layer;
}

ExchangeSequence with_times(ExchangeSequence seq, const std::vector<double>& times,
                            std::string_view what) {
  if (times.size() != seq.gates.size()) {
    throw std::logic_error("polished data for " + std::string(what) + " is missing or has the wrong length");
  }
  for (std::size_t i = 0; i < times.size(); ++i) seq.gates[i].t = times[i];
  return seq;
}

ExchangeSequence exact_cnot_4q_printed() {
  ExchangeSequence seq = local_layer(local_sequence(tables::kLocalV1), local_sequence(tables::kLocalV2));
  seq.append(make_sequence(Code::FourQubit, 2, tables::kCnot34), true);
  seq.append(local_layer(local_sequence(tables::kLocalU1), local_sequence(tables::kLocalU2)), true);
  return seq;
}

/// Slice [begin, begin + 4) of the exact CNOT moved back onto block-local qubits.
ExchangeSequence extract_local(const ExchangeSequence& exact, std::size_t begin) {
  ExchangeSequence s = local_layout(Code::FourQubit);
  for (std::size_t i = 0; i < 4; ++i) s.gates[i].t = exact.gates.at(begin + i).t;
  return s;
}

}  // namespace

std::string_view to_string(BuiltinId id) noexcept {
  for (const auto& n : kNames)
    if (n.id == id) return n.name;
  return "unknown";
}

std::optional<BuiltinId> builtin_from_string(std::string_view name) noexcept {
  for (const auto& n : kNames)
    if (n.name == name) return n.id;
  return std::nullopt;
}

const std::vector<BuiltinId>& all_builtins() {
  static const std::vector<BuiltinId> ids = [] {
    std::vector<BuiltinId> v;
    for (const auto& n : kNames) v.push_back(n.id);
    return v;
  }();
  return ids;
}

ExchangeSequence builtin(BuiltinId id, TableVariant variant) {
  const bool polished = variant == TableVariant::Polished;
  switch (id) {
    case BuiltinId::Pi8_4q:
      if (polished) return analytic_single_qubit(SingleQubitGate::Pi8);
      return make_sequence(Code::FourQubit, 1, {{1, 2, tables::kPi8Printed}});
    case BuiltinId::Hadamard_4q: {
      if (polished) return analytic_single_qubit(SingleQubitGate::Hadamard);
      const auto& t = tables::kHadamardPrinted;
      return make_sequence(Code::FourQubit, 1, {{1, 2, t[0]}, {2, 3, t[1]}, {1, 2, t[2]}});
    }
    case BuiltinId::Cnot34_4q: {
      auto seq = make_sequence(Code::FourQubit, 2, tables::kCnot34);
      return polished ? with_times(seq, tables::kCnot34Polished, "cnot34_4q") : seq;
    }
    case BuiltinId::CnotExact_4q: {
      auto seq = exact_cnot_4q_printed();
      return polished ? with_times(seq, tables::kCnotExact4qPolished, "cnot_exact_4q") : seq;
    }
    // Layer order in the exact CNOT: V1 at 0, V2 at 4, core at 8, U1 at 42, U2 at 46.
    case BuiltinId::LocalV1_4q:
      return polished ? extract_local(builtin(BuiltinId::CnotExact_4q, variant), 0)
                      : local_sequence(tables::kLocalV1);
    case BuiltinId::LocalV2_4q:
      return polished ? extract_local(builtin(BuiltinId::CnotExact_4q, variant), 4)
                      : local_sequence(tables::kLocalV2);
    case BuiltinId::LocalU1_4q:
      return polished ? extract_local(builtin(BuiltinId::CnotExact_4q, variant), 42)
                      : local_sequence(tables::kLocalU1);
    case BuiltinId::LocalU2_4q:
      return polished ? extract_local(builtin(BuiltinId::CnotExact_4q, variant), 46)
                      : local_sequence(tables::kLocalU2);
    case BuiltinId::Cnot26_3q: {
      auto seq = make_sequence(Code::ThreeQubit, 2, tables::kCnot26, tables::kCnot26Barriers);
      return polished ? with_times(seq, tables::kCnot26Polished, "cnot26_3q") : seq;
    }
    case BuiltinId::Cnot31_3q: {
      auto seq = make_sequence(Code::ThreeQubit, 2, tables::kCnot31, tables::kCnot31Barriers);
      return polished ? with_times(seq, tables::kCnot31Polished, "cnot31_3q") : seq;
    }
  }
  throw std::invalid_argument("builtin: unknown id");
}

BuiltinCheck documented_check(BuiltinId id) {
  switch (id) {
    case BuiltinId::Pi8_4q: return {"pi8", 1e-4};
    case BuiltinId::Hadamard_4q: return {"hadamard", 1e-3};
    case BuiltinId::Cnot34_4q: return {"cnot-invariants", 1e-5};
    case BuiltinId::LocalU1_4q:
    case BuiltinId::LocalU2_4q:
    case BuiltinId::LocalV1_4q:
    case BuiltinId::LocalV2_4q: return {"none", 1e-12};
    case BuiltinId::CnotExact_4q: return {"cnot", 1e-3};
    case BuiltinId::Cnot26_3q: return {"cnot", 1e-4};
    case BuiltinId::Cnot31_3q: return {"cnot", 1e-4};
  }
  throw std::invalid_argument("documented_check: unknown id");
}

ExchangeSequence analytic_single_qubit(SingleQubitGate which) {
  if (which == SingleQubitGate::Pi8) {
    return make_sequence(Code::FourQubit, 1, {{1, 2, std::numbers::pi / 8.0}});
  }
  const double t1 = 0.5 * std::asin(std::sqrt(2.0 / 3.0));
  const double t2 = std::acos(std::sqrt(1.0 / 3.0));
  return make_sequence(Code::FourQubit, 1, {{1, 2, t1}, {2, 3, -t2}, {1, 2, t1}});
}

TargetGate target(std::string_view name) {
  const cplx i(0.0, 1.0);
  if (name == "cnot") {
    return {"cnot", ComplexMatrix::from_rows({{1.0, 0.0, 0.0, 0.0},
                                              {0.0, 1.0, 0.0, 0.0},
                                              {0.0, 0.0, 0.0, 1.0},
                                              {0.0, 0.0, 1.0, 0.0}})};
  }
  if (name == "identity") return {"identity", ComplexMatrix::identity(4)};
  if (name == "identity1") return {"identity1", ComplexMatrix::identity(2)};
  if (name == "hadamard") {
    const double r = std::sqrt(0.5);
    return {"hadamard", ComplexMatrix::from_rows({{r, r}, {r, -r}})};
  }
  if (name == "pi8") {
    const double a = std::numbers::pi / 8.0;
    const cplx phase = std::exp(i * a);
    return {"pi8", ComplexMatrix::from_rows({{phase * std::exp(-i * a), 0.0},
                                             {0.0, phase * std::exp(i * a)}})};
  }
  if (name == "sigma_z") return {"sigma_z", pauli::z()};
  throw std::invalid_argument("target: unknown gate '" + std::string(name) + "'");
}

ExchangeSequence assemble_exact_cnot(Code code, ThreeQubitVariant variant) {
  if (code == Code::FourQubit) return builtin(BuiltinId::CnotExact_4q);
  return builtin(variant == ThreeQubitVariant::Table3 ? BuiltinId::Cnot26_3q : BuiltinId::Cnot31_3q);
}

ExchangeSequence local_layout(Code code) {
  return make_sequence(code, 1, {{1, 2, 0.0}, {2, 3, 0.0}, {1, 2, 0.0}, {2, 3, 0.0}});
}

ExchangeSequence place_on_block(const ExchangeSequence& local, int block) {
  if (local.n_blocks() != 1) throw std::invalid_argument("place_on_block: expected a one-block sequence");
  if (block != 0 && block != 1) throw std::out_of_range("place_on_block: block must be 0 or 1");
  const int offset = block * block_size(local.code);
  ExchangeSequence out = empty_sequence(local.code, 2);
  for (const auto& g : local.gates) out.gates.push_back({g.q1 + offset, g.q2 + offset, g.t});
  out.barriers = local.barriers;
  return out;
}

double local_cost(const TargetGate& target, Code code, std::span<const double> times) {
  if (target.matrix.rows() != 2 || target.matrix.cols() != 2) {
    throw std::invalid_argument("local_cost: target must be 2x2");
  }
  ExchangeSequence seq = local_layout(code);
  if (times.size() != seq.gates.size()) throw std::invalid_argument("local_cost: expected 4 times");
  for (std::size_t i = 0; i < times.size(); ++i) seq.gates[i].t = times[i];
  static const LogicalProjector p4(Code::FourQubit, 1);
  static const LogicalProjector p3(Code::ThreeQubit, 1);
  const ComplexMatrix m = project_sequence(seq, code == Code::FourQubit ? p4 : p3);
  return phase_aligned_distance(m, target.matrix) + leakage_projected(m);
}

SynthesisResult synthesize_local(const TargetGate& target, Code code, std::uint64_t seed,
                                 const SynthesisOptions& options) {
  if (!is_unitary(target.matrix, 1e-10) || target.matrix.rows() != 2) {
    throw std::invalid_argument("synthesize_local: target must be a 2x2 unitary");
  }
  const ObjectiveFn cost = [&](std::span<const double> x) { return local_cost(target, code, x); };
  NMConfig nm = options.nm;
  nm.stop_below = options.accept_cost;

  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> uniform(0.0, 2.0 * std::numbers::pi);
  std::vector<double> best_x;
  double best_cost = std::numeric_limits<double>::infinity();
  for (std::size_t start = 1; start <= options.max_starts; ++start) {
    std::vector<double> x0(4);
    for (auto& x : x0) x = uniform(rng);
    const NMResult r = nelder_mead(cost, x0, nm);
    if (r.f < best_cost) {
      best_cost = r.f;
      best_x = r.x;
    }
    if (best_cost <= options.accept_cost) {
      SynthesisResult out;
      out.sequence = local_layout(code);
      for (std::size_t i = 0; i < 4; ++i) out.sequence.gates[i].t = best_x[i];
      out.cost = best_cost;
      out.starts = start;
      return out;
    }
  }
  throw BudgetExhausted("synthesize_local: no start reached the acceptance cost", best_cost, best_x);
}

std::vector<CorrelatedPair> table3_correlated_pairs() {
  // indices into the temporal order of the 26-gate table
  const auto& g = tables::kCnot26;
  return {{5, g[4].t, g[6].t}, {6, g[5].t, g[7].t}, {8, g[11].t, g[12].t}, {10, g[15].t, g[17].t}};
}

}  // namespace exo
