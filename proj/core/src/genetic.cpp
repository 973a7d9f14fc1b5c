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

#include "exo/genetic.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <thread>

namespace exo {

std::uint64_t island_seed(std::uint64_t seed, int island) noexcept {
  std::uint64_t z = seed + static_cast<std::uint64_t>(island) * 0x9e3779b97f4a7c15ULL;
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

void GAConfig::validate() const {
  if (parental_pool == 0 || parental_pool % 2 != 0) {
    throw std::invalid_argument("GAConfig: parental_pool must be even and positive");
  }
  if (elite_exempt > parental_pool) throw std::invalid_argument("GAConfig: elite_exempt > parental_pool");
  if (population_size < 2 * parental_pool) {
    throw std::invalid_argument("GAConfig: population_size must be at least 2 * parental_pool");
  }
  if (!(mutation_rate >= 0.0 && mutation_rate <= 1.0)) {
    throw std::invalid_argument("GAConfig: mutation_rate must lie in [0, 1]");
  }
  if (islands < 1) throw std::invalid_argument("GAConfig: islands must be >= 1");
  if (max_generations < 0) throw std::invalid_argument("GAConfig: max_generations must be >= 0");
  if (migration_interval < 1) throw std::invalid_argument("GAConfig: migration_interval must be >= 1");
  if (!(gene_upper > 0.0)) throw std::invalid_argument("GAConfig: gene_upper must be > 0");
}

double Population::mean_fitness() const {
  if (members.empty()) return 0.0;
  double s = 0.0;
  for (const auto& c : members) s += c.fitness;
  return s / static_cast<double>(members.size());
}

Genome random_genome(std::size_t dims, Rng& rng, double upper) {
  std::uniform_real_distribution<double> gene(0.0, upper);
  Genome g(dims);
  for (auto& x : g) x = gene(rng);
  return g;
}

Genome crossover_convex(const Genome& u, const Genome& v, double alpha) {
  if (u.size() != v.size()) throw std::invalid_argument("crossover_convex: length mismatch");
  Genome child(u.size());
  for (std::size_t j = 0; j < u.size(); ++j) child[j] = alpha * u[j] + (1.0 - alpha) * v[j];
  return child;
}

Genome crossover_geometric(const Genome& u, const Genome& v, double beta) {
  if (u.size() != v.size()) throw std::invalid_argument("crossover_geometric: length mismatch");
  if (beta == 0.0) return v;
  if (beta == 1.0) return u;
  Genome child(u.size());
  for (std::size_t j = 0; j < u.size(); ++j) {
    if (u[j] < 0.0 || v[j] < 0.0) throw std::invalid_argument("crossover_geometric: negative gene");
    child[j] = (u[j] == 0.0 || v[j] == 0.0) ? 0.0 : std::pow(u[j], beta) * std::pow(v[j], 1.0 - beta);
  }
  return child;
}

namespace {

double checked_fitness(const ObjectiveFn& objective, const Genome& g) {
  const double f = objective(g);
  return std::isnan(f) ? std::numeric_limits<double>::infinity() : f;
}

void rank(Population& p) {
  std::stable_sort(p.members.begin(), p.members.end(),
                   [](const Candidate& a, const Candidate& b) { return a.fitness < b.fitness; });
}

}  // namespace

Population initial_population(std::size_t dims, const GAConfig& config,
                              const ObjectiveFn& objective, Rng& rng) {
  config.validate();
  Population p;
  p.members.reserve(config.population_size);
  for (std::size_t i = 0; i < config.population_size; ++i) {
    Candidate c;
    c.genes = random_genome(dims, rng, config.gene_upper);
    c.fitness = checked_fitness(objective, c.genes);
    p.members.push_back(std::move(c));
  }
  rank(p);
  return p;
}

Population ga_generation(const Population& population, const GAConfig& config,
                         const ObjectiveFn& objective, Rng& rng, GenerationStats* stats) {
  config.validate();
  if (population.size() != config.population_size) {
    throw std::invalid_argument("ga_generation: population size does not match config");
  }
  const std::size_t pool = config.parental_pool;
  const std::size_t dims = population.best().genes.size();
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::uniform_real_distribution<double> gene(0.0, config.gene_upper);

  // crossover over a uniform random perfect matching of the parental pool
  std::vector<std::size_t> parents(pool);
  for (std::size_t i = 0; i < pool; ++i) parents[i] = i;
  std::shuffle(parents.begin(), parents.end(), rng);
  std::vector<Candidate> offspring;
  offspring.reserve(pool);
  for (std::size_t k = 0; k + 1 < pool; k += 2) {
    const Genome& u = population.members[parents[k]].genes;
    const Genome& v = population.members[parents[k + 1]].genes;
    const double alpha = unit(rng);
    const double beta = unit(rng);
    offspring.push_back({crossover_convex(u, v, alpha), 0.0, Origin::Offspring});
    offspring.push_back({crossover_geometric(u, v, beta), 0.0, Origin::Offspring});
  }

  const std::size_t m = std::uniform_int_distribution<std::size_t>(0, pool)(rng);
  const std::size_t survivors = config.population_size - 2 * pool + m;
  const std::size_t fresh = pool - m;

  Population next;
  next.members.reserve(survivors + offspring.size() + fresh);
  for (std::size_t i = 0; i < survivors; ++i) {
    Candidate c = population.members[i];
    c.origin = Origin::Survivor;
    next.members.push_back(std::move(c));
  }
  for (auto& c : offspring) next.members.push_back(std::move(c));
  for (std::size_t i = 0; i < fresh; ++i) {
    next.members.push_back({random_genome(dims, rng, config.gene_upper), 0.0, Origin::Fresh});
  }
  // (survivors + offspring + fresh) == population_size by construction; the
  // resize keeps the worst-ranked cut explicit if the config arithmetic changes.
  if (next.members.size() > config.population_size) next.members.resize(config.population_size);

  // mutation; the top `elite_exempt` ranked survivors are exempt
  std::size_t mutated_genes = 0;
  const std::size_t exempt = std::min(config.elite_exempt, survivors);
  std::vector<bool> dirty(next.members.size(), false);
  for (std::size_t i = 0; i < next.members.size(); ++i) {
    auto& c = next.members[i];
    if (c.origin != Origin::Survivor) dirty[i] = true;
    if (i < exempt) continue;
    for (auto& x : c.genes) {
      if (unit(rng) < config.mutation_rate) {
        x = gene(rng);
        dirty[i] = true;
        ++mutated_genes;
      }
    }
  }
  for (std::size_t i = 0; i < next.members.size(); ++i) {
    if (dirty[i]) next.members[i].fitness = checked_fitness(objective, next.members[i].genes);
  }
  rank(next);

  if (stats) {
    stats->m = m;
    stats->survivors = survivors;
    stats->offspring = offspring.size();
    stats->fresh = fresh;
    stats->mutated_genes = mutated_genes;
  }
  return next;
}

IslandRunResult island_run(std::size_t dims, const ObjectiveFn& objective, const GAConfig& config,
                           int workers, const GenerationCallback& on_generation) {
  config.validate();
  if (dims == 0) throw std::invalid_argument("island_run: empty genome");
  const int n_islands = config.islands;
  const int n_workers = std::clamp(workers, 1, n_islands);

  std::vector<Rng> rngs;
  std::vector<Population> pops(n_islands);
  for (int k = 0; k < n_islands; ++k) rngs.emplace_back(island_seed(config.rng_seed, k));

  // Runs `step(k)` for every island, spread over the worker threads.
  auto for_each_island = [&](auto&& step) {
    if (n_workers == 1) {
      for (int k = 0; k < n_islands; ++k) step(k);
      return;
    }
    std::vector<std::thread> threads;
    threads.reserve(n_workers);
    for (int w = 0; w < n_workers; ++w) {
      threads.emplace_back([&, w] {
        for (int k = w; k < n_islands; k += n_workers) step(k);
      });
    }
    for (auto& t : threads) t.join();
  };

  IslandRunResult result;
  auto record = [&](int generation) {
    std::vector<HistoryEntry> entries;
    for (int k = 0; k < n_islands; ++k) {
      entries.push_back({generation, k, pops[k].best().fitness, pops[k].mean_fitness()});
    }
    result.history.insert(result.history.end(), entries.begin(), entries.end());
    if (on_generation) on_generation(entries);
  };
  auto global_best = [&] {
    int best = 0;
    for (int k = 1; k < n_islands; ++k)
      if (pops[k].best().fitness < pops[best].best().fitness) best = k;
    return best;
  };

  for_each_island([&](int k) { pops[k] = initial_population(dims, config, objective, rngs[k]); });
  record(0);

  int generation = 0;
  while (pops[global_best()].best().fitness >= config.epsilon && generation < config.max_generations) {
    ++generation;
    for_each_island([&](int k) { pops[k] = ga_generation(pops[k], config, objective, rngs[k]); });
    if (n_islands > 1 && generation % config.migration_interval == 0) {
      const int src = global_best();
      const Candidate clone = pops[src].best();
      for (int k = 0; k < n_islands; ++k) {
        if (k == src) continue;
        pops[k].members.back() = clone;
        rank(pops[k]);
      }
    }
    record(generation);
  }

  const int best = global_best();
  result.best = pops[best].best().genes;
  result.best_fitness = pops[best].best().fitness;
  result.best_island = best;
  result.generations = generation;
  result.converged = result.best_fitness < config.epsilon;
  return result;
}

IslandRunResult island_run(const Layout& layout, const GAConfig& config,
                           const MakhlinInvariants& target, int workers) {
  const SequenceObjective objective(layout, InvariantTarget{target});
  return island_run(layout.size(), objective.as_function(), config, workers);
}

}  // namespace exo
