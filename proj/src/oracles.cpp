// Copyright 2026 The ehmin Authors - All rights reserved.
// SPDX-License-Identifier: Apache-2.0

#include <ehmin/oracles.hpp>

#include <ehmin/error.hpp>

#include <gsl/gsl_errno.h>
#include <gsl/gsl_multimin.h>
#include <gsl/gsl_vector.h>

#include <algorithm>
#include <bit>
#include <cmath>
#include <functional>
#include <limits>
#include <memory>
#include <random>
#include <vector>

namespace hmeas {

namespace {

constexpr double kSupportFloor = 1e-12;
constexpr double kSimplexSizeTolerance = 1e-10;

double coefficient_entropy(std::span<const Complex> coeffs) {
    std::vector<double> p;
    p.reserve(coeffs.size());
    for (const auto& c : coeffs) p.push_back(std::norm(c));
    return shannon_entropy(p);
}

struct GslVectorDeleter {
    void operator()(gsl_vector* v) const { gsl_vector_free(v); }
};
struct GslMinimizerDeleter {
    void operator()(gsl_multimin_fminimizer* m) const { gsl_multimin_fminimizer_free(m); }
};

double trampoline(const gsl_vector* x, void* params) {
    const auto& f = *static_cast<const FitnessFunction*>(params);
    const double v = f(std::span<const double>(x->data, x->size));
    return std::isfinite(v) ? v : std::numeric_limits<double>::max();
}

}  // namespace

double bipartite_oracle(const PureState& s) {
    if (s.num_subsystems() != 2) {
        throw Error(ErrorCode::NotBipartite, "bipartite oracle needs exactly two subsystems");
    }
    return von_neumann_entropy(reduce(s, {0}));
}

double ghz_oracle(std::span<const Complex> coeffs) { return coefficient_entropy(coeffs); }

double w_oracle(std::span<const Complex> coeffs) { return coefficient_entropy(coeffs); }

double brute_min(const FitnessFunction& f, std::size_t arity, const BruteMinOptions& options) {
    if (arity == 0) return f({});

    gsl_set_error_handler_off();
    std::unique_ptr<gsl_vector, GslVectorDeleter> x(gsl_vector_alloc(arity));
    std::unique_ptr<gsl_vector, GslVectorDeleter> step(gsl_vector_alloc(arity));
    std::unique_ptr<gsl_multimin_fminimizer, GslMinimizerDeleter> minimizer(
        gsl_multimin_fminimizer_alloc(gsl_multimin_fminimizer_nmsimplex2, arity));

    gsl_multimin_function fn;
    fn.n = arity;
    fn.f = &trampoline;
    fn.params = const_cast<FitnessFunction*>(&f);

    std::mt19937_64 rng(options.seed);
    std::uniform_real_distribution<double> start(-options.start_range, options.start_range);
    double best = std::numeric_limits<double>::infinity();

    for (std::size_t r = 0; r < options.restarts; ++r) {
        for (std::size_t i = 0; i < arity; ++i) gsl_vector_set(x.get(), i, start(rng));
        gsl_vector_set_all(step.get(), options.initial_step);
        gsl_multimin_fminimizer_set(minimizer.get(), &fn, x.get(), step.get());
        for (std::size_t it = 0; it < options.local_steps; ++it) {
            if (gsl_multimin_fminimizer_iterate(minimizer.get()) != GSL_SUCCESS) break;
            const double size = gsl_multimin_fminimizer_size(minimizer.get());
            if (gsl_multimin_test_size(size, kSimplexSizeTolerance) == GSL_SUCCESS) break;
        }
        best = std::min(best, gsl_multimin_fminimizer_minimum(minimizer.get()));
    }
    return best;
}

double brute_min(const Objective& objective, const BruteMinOptions& options) {
    const FitnessFunction f = std::cref(objective);
    return brute_min(f, objective.arity(), options);
}

std::string to_string(OracleKind kind) {
    switch (kind) {
        case OracleKind::Bipartite: return "bipartite";
        case OracleKind::Ghz: return "ghz";
        case OracleKind::W: return "w";
    }
    return "unknown";
}

OracleMatch detect_oracle(const PureState& s) {
    const auto& dims = s.dims();
    const std::size_t n = dims.size();
    if (n == 2) {
        return {OracleKind::Bipartite, bipartite_oracle(s)};
    }
    if (n < 3) {
        throw Error(ErrorCode::NoOracleApplicable, "no closed form for a single subsystem");
    }

    auto supported = [&](std::size_t i) { return std::norm(s[i]) > kSupportFloor; };

    const bool uniform_dims = std::all_of(dims.begin(), dims.end(), [&](auto d) { return d == dims[0]; });
    if (uniform_dims) {
        const std::size_t d = dims[0];
        std::size_t step = 0;
        for (std::size_t j = 0, p = 1; j < n; ++j, p *= d) step += p;
        bool ghz = true;
        for (std::size_t i = 0; i < s.size() && ghz; ++i) {
            if (supported(i) && i % step != 0) ghz = false;
        }
        if (ghz) {
            std::vector<Complex> coeffs(d);
            for (std::size_t k = 0; k < d; ++k) coeffs[k] = s[k * step];
            return {OracleKind::Ghz, ghz_oracle(coeffs)};
        }
    }

    const bool qubits = std::all_of(dims.begin(), dims.end(), [](auto d) { return d == 2; });
    if (qubits) {
        bool w = true;
        for (std::size_t i = 0; i < s.size() && w; ++i) {
            if (supported(i) && std::popcount(i) != 1) w = false;
        }
        if (w) {
            std::vector<Complex> coeffs(n);
            for (std::size_t k = 0; k < n; ++k) coeffs[k] = s[std::size_t{1} << k];
            return {OracleKind::W, w_oracle(coeffs)};
        }
    }

    throw Error(ErrorCode::NoOracleApplicable, "state is neither bipartite, GHZ-shaped nor W-shaped");
}

}  // namespace hmeas
