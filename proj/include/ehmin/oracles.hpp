// Copyright 2026 The ehmin Authors - All rights reserved.
// SPDX-License-Identifier: Apache-2.0

/**
 * @file oracles.hpp
 * @brief Reference values that do not go through the genetic algorithm.
 */

#pragma once

#include <ehmin/ga.hpp>
#include <ehmin/objective.hpp>
#include <ehmin/state.hpp>

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>

namespace hmeas {

/// Reduced von Neumann entropy of a two-subsystem state. Throws NotBipartite.
[[nodiscard]] double bipartite_oracle(const PureState& s);

/// -Σ |c_i|² ln |c_i|² for generalized GHZ coefficients.
[[nodiscard]] double ghz_oracle(std::span<const Complex> coeffs);

/// -Σ |c_i|² ln |c_i|² for generalized W coefficients.
[[nodiscard]] double w_oracle(std::span<const Complex> coeffs);

struct BruteMinOptions {
    std::size_t restarts = 32;
    std::size_t local_steps = 2000;  ///< simplex iterations per restart
    std::uint64_t seed = 0;
    double start_range = 3.14159265358979323846;  ///< starts drawn from Uniform[-r, r]
    double initial_step = 0.5;
};

/// Multi-start Nelder-Mead minimum of an arbitrary function.
[[nodiscard]] double brute_min(const FitnessFunction& f, std::size_t arity, const BruteMinOptions& options = {});

[[nodiscard]] double brute_min(const Objective& objective, const BruteMinOptions& options = {});

enum class OracleKind { Bipartite, Ghz, W };

struct OracleMatch {
    OracleKind kind;
    double value;
};

[[nodiscard]] std::string to_string(OracleKind kind);

/**
 * Picks a closed-form oracle from the support pattern of the amplitudes:
 * two subsystems → bipartite; ≥ 3 equal-dimension subsystems supported only
 * on |i…i⟩ → GHZ; ≥ 3 qubits supported only on weight-one strings → W.
 * Throws NoOracleApplicable otherwise.
 */
[[nodiscard]] OracleMatch detect_oracle(const PureState& s);

}  // namespace hmeas
