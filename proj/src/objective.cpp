// Copyright 2026 The ehmin Authors - All rights reserved.
// SPDX-License-Identifier: Apache-2.0

#include <ehmin/objective.hpp>

#include <ehmin/error.hpp>

#include <algorithm>
#include <functional>
#include <string>

namespace hmeas {

Objective::Objective(PureState state) : state_(std::move(state)), arity_(param_arity(state_.dims())) {}

double Objective::evaluate(std::span<const double> x) const {
    if (x.size() != arity_) {
        throw Error(ErrorCode::ArityMismatch,
                    "expected " + std::to_string(arity_) + " parameters, got " + std::to_string(x.size()));
    }
    const auto us = local_unitaries_from_params(state_.dims(), x);
    Eigen::VectorXcd v = state_.amplitudes();
    apply_local_inplace(v, state_.dims(), us);
    return meas_entropy(v);
}

EhminResult ehmin(const PureState& state, const GAConfig& config) {
    const Objective objective(state);
    const std::vector<std::vector<double>> identity{std::vector<double>(objective.arity(), 0.0)};
    auto report = run(std::cref(objective), objective.arity(), config, identity);

    EhminResult result;
    result.value = report.best_value;
    result.params = std::move(report.best_params);
    result.epochs = report.epochs;
    result.evaluations = report.evaluations;
    result.trace = std::move(report.island_traces);
    return result;
}

PureState rotated_state(const PureState& state, std::span<const double> params) {
    const auto us = local_unitaries_from_params(state.dims(), params);
    return apply_local(state, us);
}

std::vector<double> canonical_probabilities(const PureState& state) {
    auto p = probabilities(state);
    std::sort(p.begin(), p.end(), std::greater<>());
    return p;
}

}  // namespace hmeas
