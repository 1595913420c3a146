// Copyright 2026 The ehmin Authors - All rights reserved.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <ehmin/ga.hpp>
#include <ehmin/state.hpp>
#include <ehmin/unitary.hpp>

#include <cstddef>
#include <span>
#include <vector>

namespace hmeas {

/// Measurement entropy of a fixed state after the local unitaries encoded by
/// a parameter vector: f(x) = H_meas((⊗_j U(x_j)) |ψ⟩).
class Objective {
public:
    explicit Objective(PureState state);

    [[nodiscard]] const PureState& state() const noexcept { return state_; }
    [[nodiscard]] std::size_t arity() const noexcept { return arity_; }

    /// Throws ArityMismatch. Reentrant.
    [[nodiscard]] double evaluate(std::span<const double> x) const;
    [[nodiscard]] double operator()(std::span<const double> x) const { return evaluate(x); }

private:
    PureState state_;
    std::size_t arity_;
};

struct EhminResult {
    double value = 0.0;  ///< nats
    std::vector<double> params;
    std::size_t epochs = 0;
    std::size_t evaluations = 0;
    IslandTraces trace;
};

/// Minimum measurement entropy over local unitaries, found by the island GA.
/// The identity point x = 0 is always part of the initial population.
[[nodiscard]] EhminResult ehmin(const PureState& state, const GAConfig& config = {});

/// The state rotated by the local unitaries encoded in `params`.
[[nodiscard]] PureState rotated_state(const PureState& state, std::span<const double> params);

/// Outcome probabilities sorted in descending order. Used to compare
/// minimal-entropy representations up to a relabelling of outcomes.
[[nodiscard]] std::vector<double> canonical_probabilities(const PureState& state);

}  // namespace hmeas
