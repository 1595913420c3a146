// Copyright 2026 The ehmin Authors - All rights reserved.
// SPDX-License-Identifier: Apache-2.0

/**
 * @file ga.hpp
 * @brief Real-coded island-model genetic algorithm (minimizing).
 *
 * Each parameter x is carried by n_gen real genes with decimal positional
 * weights, x = Σ_j 10^{-j} g_j (j = 0 … n_gen-1), so the leading gene moves
 * x coarsely and the trailing genes refine it.
 *
 * An epoch rebuilds an island population by repeatedly drawing two random
 * pairs from the best n_population - n_bad members, keeping the better of
 * each pair and crossing the two winners, then mutating every new member.
 * The best member of the previous population survives unmutated (elitism).
 * After every epoch each island, with probability p_mig, copies its best
 * member over the worst member of another uniformly chosen island.
 *
 * A run stops after n_epochs or once the global best of the last n_term
 * epochs spans less than epsilon. Every island owns an RNG stream derived
 * from (seed, island), and migration owns another, so results do not depend
 * on how islands are scheduled across worker threads.
 */

#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <random>
#include <span>
#include <vector>

namespace hmeas {

struct GAConfig {
    std::size_t n_gen = 4;          ///< genes per parameter
    std::size_t n_population = 40;  ///< population per island
    std::size_t n_bad = 10;         ///< weakest members excluded from reproduction
    double p_mut = 0.05;            ///< per-gene mutation probability
    double m_mut = 1.0;             ///< mutation half-range
    double m_init = 3.0;            ///< initialization half-range
    std::size_t n_epochs = 2000;
    double epsilon = 1e-6;          ///< stagnation tolerance
    std::size_t n_term = 200;       ///< stagnation window in epochs
    std::size_t n_islands = 8;
    double p_mig = 0.02;            ///< per-island, per-epoch migration probability
    std::uint64_t seed = 0;
    bool elitism = true;
    std::size_t workers = 1;        ///< threads used to evolve islands

    /// Throws InvalidConfig when an invariant is violated.
    void validate() const;
};

struct Chromosome {
    std::vector<double> genes;

    friend bool operator==(const Chromosome&, const Chromosome&) = default;
};

/// Maps a real parameter vector of fixed arity to a score to minimize.
/// Must be reentrant when workers > 1.
using FitnessFunction = std::function<double(std::span<const double>)>;

using Rng = std::mt19937_64;

struct Individual {
    Chromosome chromosome;
    double fitness;
};

using Population = std::vector<Individual>;

struct EpochStats {
    double best;
    double mean;
};

struct OptimizationReport {
    double best_value = 0.0;
    std::vector<double> best_params;
    Chromosome best_chromosome;
    std::size_t epochs = 0;       ///< epochs actually run
    std::size_t evaluations = 0;  ///< fitness calls
    bool stagnated = false;       ///< stopped by the epsilon/n_term rule
    /// island_traces[island][epoch]; epoch 0 is the initial population.
    std::vector<std::vector<EpochStats>> island_traces;
    /// Global best after each epoch (epoch 0 is the initial population).
    std::vector<double> best_trace;
};

/// Decodes consecutive n_gen-gene blocks into parameters. Throws BadLength.
[[nodiscard]] std::vector<double> decode(const Chromosome& c, std::size_t n_gen);

/// Chromosome whose decoding is exactly `params` (leading gene carries x).
[[nodiscard]] Chromosome encode(std::span<const double> params, std::size_t n_gen);

[[nodiscard]] Chromosome mutate(const Chromosome& c, double p_mut, double m_mut, Rng& rng);

/// Uniform crossover. Throws LengthMismatch on unequal parents.
[[nodiscard]] Chromosome crossover(const Chromosome& a, const Chromosome& b, Rng& rng);

/// Indices of `population` sorted by ascending fitness, ties by index.
[[nodiscard]] std::vector<std::size_t> rank(const Population& population);

/// One generation on a single island. `population` must be fully evaluated.
[[nodiscard]] Population epoch(const Population& population, const FitnessFunction& fitness, const GAConfig& config,
                               Rng& rng);

/**
 * Full island-model run. `initial_params` are injected, in order, over the
 * first members of island 0 (the remaining members are Uniform[-m_init,
 * m_init] genes). Throws InvalidConfig.
 */
[[nodiscard]] OptimizationReport run(const FitnessFunction& fitness, std::size_t arity, const GAConfig& config,
                                     std::span<const std::vector<double>> initial_params = {});

using IslandTraces = std::vector<std::vector<EpochStats>>;

/// One JSON object per line: {"epoch":e,"island":i,"best":b,"mean":m}.
void write_trace(const IslandTraces& traces, std::ostream& out);

}  // namespace hmeas
