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

#ifndef EXO_GENETIC_HPP
#define EXO_GENETIC_HPP

#include <cstdint>
#include <functional>
#include <numbers>
#include <random>
#include <vector>

#include "exo/objective.hpp"

namespace exo {

/// Generator used everywhere in the optimizer. Island k of a run seeded with
/// s draws from Rng(island_seed(s, k)).
using Rng = std::mt19937_64;

/// splitmix64(seed + island): decorrelated per-island streams.
std::uint64_t island_seed(std::uint64_t seed, int island) noexcept;

struct GAConfig {
  std::size_t population_size = 60;
  std::size_t parental_pool = 20;
  double mutation_rate = 0.03;
  std::size_t elite_exempt = 10;
  int islands = 4;
  double epsilon = 1e-10;
  int max_generations = 3000;
  int migration_interval = 50;
  std::uint64_t rng_seed = 1;
  double gene_upper = 2.0 * std::numbers::pi;  // genes live in [0, gene_upper]

  /// Throws std::invalid_argument on inconsistent sizes.
  void validate() const;
};

enum class Origin { Initial, Survivor, Offspring, Fresh };

struct Candidate {
  Genome genes;
  double fitness = 0.0;
  Origin origin = Origin::Initial;
};

/// Members kept sorted by ascending fitness (stable on ties).
struct Population {
  std::vector<Candidate> members;

  const Candidate& best() const { return members.front(); }
  double mean_fitness() const;
  std::size_t size() const noexcept { return members.size(); }
};

/// What one generation step did, for bookkeeping checks.
struct GenerationStats {
  std::size_t m = 0;          // extra survivors drawn uniformly from [0, pool]
  std::size_t survivors = 0;  // pop - 2 pool + m
  std::size_t offspring = 0;  // pool (two per pair)
  std::size_t fresh = 0;      // pool - m
  std::size_t mutated_genes = 0;
};

Genome random_genome(std::size_t dims, Rng& rng, double upper = 2.0 * std::numbers::pi);

/// child_j = alpha u_j + (1 - alpha) v_j.
Genome crossover_convex(const Genome& u, const Genome& v, double alpha);

/// child_j = u_j^beta v_j^(1 - beta); a zero gene gives a zero child gene for
/// beta in (0, 1), and beta = 0 / 1 return v / u exactly.
Genome crossover_geometric(const Genome& u, const Genome& v, double beta);

Population initial_population(std::size_t dims, const GAConfig& config,
                              const ObjectiveFn& objective, Rng& rng);

/// Rank, select the parental pool, cross pairs, insert survivors + offspring
/// + fresh candidates, mutate everything but the top `elite_exempt`, then
/// evaluate and re-rank.
Population ga_generation(const Population& population, const GAConfig& config,
                         const ObjectiveFn& objective, Rng& rng,
                         GenerationStats* stats = nullptr);

struct HistoryEntry {
  int generation = 0;  // 0 is the initial population
  int island = 0;
  double best = 0.0;
  double mean = 0.0;

  friend bool operator==(const HistoryEntry&, const HistoryEntry&) = default;
};

struct IslandRunResult {
  Genome best;
  double best_fitness = 0.0;
  int best_island = 0;
  int generations = 0;
  bool converged = false;  // best < epsilon
  std::vector<HistoryEntry> history;
};

/// Called once per generation with that generation's entries (island order).
using GenerationCallback = std::function<void(const std::vector<HistoryEntry>&)>;

/// Independent GA islands with periodic migration: every
/// `migration_interval` generations the island holding the global best
/// clones it over the worst member of every other island. Results do not
/// depend on `workers`.
IslandRunResult island_run(std::size_t dims, const ObjectiveFn& objective, const GAConfig& config,
                           int workers = 1, const GenerationCallback& on_generation = {});

IslandRunResult island_run(const Layout& layout, const GAConfig& config,
                           const MakhlinInvariants& target, int workers = 1);

}  // namespace exo

#endif  // EXO_GENETIC_HPP
