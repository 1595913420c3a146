// Copyright 2026 The ehmin Authors - All rights reserved.
// SPDX-License-Identifier: Apache-2.0

#include <ehmin/ga.hpp>

#include <ehmin/error.hpp>

#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <ostream>
#include <string>
#include <thread>

namespace hmeas {

namespace {

constexpr std::uint32_t kIslandStreamTag = 0x15a1du;
constexpr std::uint32_t kMigrationStreamTag = 0x316a7u;

Rng make_stream(std::uint64_t seed, std::uint32_t tag, std::uint32_t index) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32), tag, index};
    return Rng(seq);
}

double sanitize(double f) { return std::isnan(f) ? std::numeric_limits<double>::infinity() : f; }

double evaluate(const FitnessFunction& fitness, const Chromosome& c, std::size_t n_gen) {
    const auto x = decode(c, n_gen);
    return sanitize(fitness(x));
}

EpochStats stats_of(const Population& pop) {
    double best = std::numeric_limits<double>::infinity();
    double sum = 0.0;
    for (const auto& ind : pop) {
        best = std::min(best, ind.fitness);
        sum += ind.fitness;
    }
    return {best, sum / static_cast<double>(pop.size())};
}

std::size_t best_index(const Population& pop) {
    std::size_t b = 0;
    for (std::size_t i = 1; i < pop.size(); ++i) {
        if (pop[i].fitness < pop[b].fitness) b = i;
    }
    return b;
}

std::size_t worst_index(const Population& pop) {
    std::size_t w = 0;
    for (std::size_t i = 1; i < pop.size(); ++i) {
        if (pop[i].fitness >= pop[w].fitness) w = i;
    }
    return w;
}

}  // namespace

void GAConfig::validate() const {
    auto fail = [](const std::string& msg) { throw Error(ErrorCode::InvalidConfig, msg); };
    if (n_gen < 1) fail("n_gen must be >= 1");
    if (n_population < 4) fail("n_population must be >= 4");
    if (n_bad >= n_population) fail("n_bad must be < n_population");
    if (!(p_mut >= 0.0 && p_mut <= 1.0)) fail("p_mut must lie in [0, 1]");
    if (!(p_mig >= 0.0 && p_mig <= 1.0)) fail("p_mig must lie in [0, 1]");
    if (!(m_mut > 0.0)) fail("m_mut must be > 0");
    if (!(m_init > 0.0)) fail("m_init must be > 0");
    if (!(epsilon >= 0.0)) fail("epsilon must be >= 0");
    if (n_term < 1) fail("n_term must be >= 1");
    if (n_islands < 1) fail("n_islands must be >= 1");
    if (workers < 1) fail("workers must be >= 1");
}

std::vector<double> decode(const Chromosome& c, std::size_t n_gen) {
    if (n_gen == 0 || c.genes.size() % n_gen != 0) {
        throw Error(ErrorCode::BadLength, "chromosome length " + std::to_string(c.genes.size()) +
                                              " is not a multiple of n_gen " + std::to_string(n_gen));
    }
    std::vector<double> x(c.genes.size() / n_gen);
    for (std::size_t p = 0; p < x.size(); ++p) {
        double acc = 0.0;
        double weight = 1.0;
        for (std::size_t j = 0; j < n_gen; ++j) {
            acc += weight * c.genes[p * n_gen + j];
            weight *= 0.1;
        }
        x[p] = acc;
    }
    return x;
}

Chromosome encode(std::span<const double> params, std::size_t n_gen) {
    Chromosome c;
    c.genes.assign(params.size() * n_gen, 0.0);
    for (std::size_t p = 0; p < params.size(); ++p) c.genes[p * n_gen] = params[p];
    return c;
}

Chromosome mutate(const Chromosome& c, double p_mut, double m_mut, Rng& rng) {
    Chromosome out = c;
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    std::uniform_real_distribution<double> shift(-m_mut, m_mut);
    for (auto& g : out.genes) {
        if (coin(rng) < p_mut) {
            g += m_mut > 0.0 ? shift(rng) : 0.0;
        }
    }
    return out;
}

Chromosome crossover(const Chromosome& a, const Chromosome& b, Rng& rng) {
    if (a.genes.size() != b.genes.size()) {
        throw Error(ErrorCode::LengthMismatch, "crossover parents differ in length");
    }
    std::bernoulli_distribution pick_first(0.5);
    Chromosome out;
    out.genes.resize(a.genes.size());
    for (std::size_t i = 0; i < out.genes.size(); ++i) {
        out.genes[i] = pick_first(rng) ? a.genes[i] : b.genes[i];
    }
    return out;
}

std::vector<std::size_t> rank(const Population& population) {
    std::vector<std::size_t> order(population.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) {
        return population[i].fitness < population[j].fitness;
    });
    return order;
}

Population epoch(const Population& population, const FitnessFunction& fitness, const GAConfig& config, Rng& rng) {
    const auto order = rank(population);
    const std::size_t pool = config.n_population - config.n_bad;
    std::uniform_int_distribution<std::size_t> draw(0, pool - 1);

    // Winner of a random pair; a member may meet itself.
    auto tournament = [&]() -> const Individual& {
        const std::size_t a = draw(rng);
        const std::size_t b = draw(rng);
        return population[order[std::min(a, b)]];
    };

    Population next;
    next.reserve(config.n_population);
    std::size_t fresh_from = 0;
    if (config.elitism) {
        next.push_back(population[order.front()]);
        fresh_from = 1;
    }
    while (next.size() < config.n_population) {
        const Individual& w1 = tournament();
        const Individual& w2 = tournament();
        next.push_back({crossover(w1.chromosome, w2.chromosome, rng), 0.0});
    }
    for (std::size_t i = fresh_from; i < next.size(); ++i) {
        next[i].chromosome = mutate(next[i].chromosome, config.p_mut, config.m_mut, rng);
        next[i].fitness = evaluate(fitness, next[i].chromosome, config.n_gen);
    }
    return next;
}

OptimizationReport run(const FitnessFunction& fitness, std::size_t arity, const GAConfig& config,
                       std::span<const std::vector<double>> initial_params) {
    config.validate();
    if (initial_params.size() > config.n_population) {
        throw Error(ErrorCode::InvalidConfig, "more injected points than island population");
    }
    for (const auto& p : initial_params) {
        if (p.size() != arity) throw Error(ErrorCode::ArityMismatch, "injected point has the wrong arity");
    }

    const std::size_t n_islands = config.n_islands;
    const std::size_t length = arity * config.n_gen;
    std::vector<Rng> streams;
    streams.reserve(n_islands);
    for (std::size_t k = 0; k < n_islands; ++k) {
        streams.push_back(make_stream(config.seed, kIslandStreamTag, static_cast<std::uint32_t>(k)));
    }
    Rng migration_rng = make_stream(config.seed, kMigrationStreamTag, 0);

    OptimizationReport report;
    report.island_traces.assign(n_islands, {});

    std::vector<Population> islands(n_islands);
    for (std::size_t k = 0; k < n_islands; ++k) {
        std::uniform_real_distribution<double> init(-config.m_init, config.m_init);
        auto& pop = islands[k];
        pop.reserve(config.n_population);
        for (std::size_t i = 0; i < config.n_population; ++i) {
            Chromosome c;
            if (k == 0 && i < initial_params.size()) {
                c = encode(initial_params[i], config.n_gen);
            } else {
                c.genes.resize(length);
                for (auto& g : c.genes) g = init(streams[k]);
            }
            const double f = evaluate(fitness, c, config.n_gen);
            pop.push_back({std::move(c), f});
        }
        report.evaluations += config.n_population;
    }

    auto record = [&]() {
        double global = std::numeric_limits<double>::infinity();
        for (std::size_t k = 0; k < n_islands; ++k) {
            const auto st = stats_of(islands[k]);
            report.island_traces[k].push_back(st);
            global = std::min(global, st.best);
        }
        report.best_trace.push_back(global);
    };
    record();

    const std::size_t per_epoch_evals = config.n_population - (config.elitism ? 1 : 0);
    const std::size_t workers = std::min(config.workers, n_islands);

    for (std::size_t e = 1; e <= config.n_epochs; ++e) {
        auto evolve = [&](std::size_t k) { islands[k] = epoch(islands[k], fitness, config, streams[k]); };
        if (workers <= 1) {
            for (std::size_t k = 0; k < n_islands; ++k) evolve(k);
        } else {
            std::vector<std::jthread> pool;
            pool.reserve(workers);
            for (std::size_t w = 0; w < workers; ++w) {
                pool.emplace_back([&, w] {
                    for (std::size_t k = w; k < n_islands; k += workers) evolve(k);
                });
            }
        }
        report.evaluations += per_epoch_evals * n_islands;

        if (n_islands > 1) {
            std::uniform_real_distribution<double> coin(0.0, 1.0);
            std::uniform_int_distribution<std::size_t> other(0, n_islands - 2);
            for (std::size_t k = 0; k < n_islands; ++k) {
                if (!(coin(migration_rng) < config.p_mig)) continue;
                std::size_t target = other(migration_rng);
                if (target >= k) ++target;
                const Individual migrant = islands[k][best_index(islands[k])];
                islands[target][worst_index(islands[target])] = migrant;
            }
        }

        record();
        report.epochs = e;

        const auto& h = report.best_trace;
        if (h.size() > config.n_term) {
            const auto window = std::span(h).last(config.n_term);
            const auto [lo, hi] = std::minmax_element(window.begin(), window.end());
            if (*hi - *lo < config.epsilon) {
                report.stagnated = true;
                break;
            }
        }
    }

    std::size_t best_island = 0;
    std::size_t best_member = best_index(islands[0]);
    for (std::size_t k = 1; k < n_islands; ++k) {
        const std::size_t b = best_index(islands[k]);
        if (islands[k][b].fitness < islands[best_island][best_member].fitness) {
            best_island = k;
            best_member = b;
        }
    }
    const auto& winner = islands[best_island][best_member];
    report.best_value = winner.fitness;
    report.best_chromosome = winner.chromosome;
    report.best_params = decode(winner.chromosome, config.n_gen);
    return report;
}

void write_trace(const IslandTraces& traces, std::ostream& out) {
    const std::size_t n_records = traces.empty() ? 0 : traces.front().size();
    for (std::size_t e = 0; e < n_records; ++e) {
        for (std::size_t k = 0; k < traces.size(); ++k) {
            const auto& st = traces[k][e];
            nlohmann::json line = {{"epoch", e}, {"island", k}, {"best", st.best}, {"mean", st.mean}};
            out << line.dump() << '\n';
        }
    }
}

}  // namespace hmeas
