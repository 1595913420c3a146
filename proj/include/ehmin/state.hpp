// Copyright 2026 The ehmin Authors - All rights reserved.
// SPDX-License-Identifier: Apache-2.0

/**
 * @file state.hpp
 * @brief Dense multipartite pure states and their elementary operations.
 *
 * Amplitudes are stored in row-major order over the multi-index
 * (i_0, ..., i_{n-1}) with subsystem 0 the most significant digit, i.e.
 *
 *     flat = ((i_0 * d_1 + i_1) * d_2 + i_2) ... * d_{n-1} + i_{n-1}.
 *
 * Subsystems are addressed by 0-based indices throughout. All entropies
 * are in nats.
 */

#pragma once

#include <Eigen/Dense>

#include <complex>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace hmeas {

using Complex = std::complex<double>;
using Dims = std::vector<std::size_t>;

/// Tolerance accepted on the input norm before renormalization.
inline constexpr double kNormInputTolerance = 1e-6;
/// Probabilities below this are treated as exact zeros in entropy sums.
inline constexpr double kProbabilityFloor = 1e-15;

/**
 * Normalized pure state on a tensor product of qudits with per-subsystem
 * dimensions. Immutable after construction.
 */
class PureState {
public:
    [[nodiscard]] const Dims& dims() const noexcept { return dims_; }
    [[nodiscard]] const Eigen::VectorXcd& amplitudes() const noexcept { return amps_; }
    [[nodiscard]] std::size_t num_subsystems() const noexcept { return dims_.size(); }
    [[nodiscard]] std::size_t size() const noexcept { return static_cast<std::size_t>(amps_.size()); }

    [[nodiscard]] Complex operator[](std::size_t i) const { return amps_[static_cast<Eigen::Index>(i)]; }

private:
    PureState(Dims dims, Eigen::VectorXcd amps) : dims_(std::move(dims)), amps_(std::move(amps)) {}

    friend PureState make_state(Dims dims, Eigen::VectorXcd amplitudes);

    Dims dims_;
    Eigen::VectorXcd amps_;
};

/// Reduced (or full) density matrix together with the dimensions of the
/// subsystems it lives on.
struct DensityMatrix {
    Dims dims;
    Eigen::MatrixXcd entries;
};

/// One outcome of a computational-basis measurement of a single subsystem.
struct MeasurementBranch {
    std::size_t outcome;
    double probability;
    PureState post_state;  ///< state of the remaining subsystems
};

/// Product of the dimensions; throws LengthMismatch on an invalid list.
[[nodiscard]] std::size_t total_dimension(const Dims& dims);

/**
 * Builds a state, renormalizing to exact unit norm.
 *
 * Throws LengthMismatch when the amplitude count differs from the product of
 * dims (or a dimension is < 2), ZeroVector when the norm is below 1e-12, and
 * NotNormalized when the norm is off by more than kNormInputTolerance.
 */
[[nodiscard]] PureState make_state(Dims dims, Eigen::VectorXcd amplitudes);
[[nodiscard]] PureState make_state(Dims dims, std::span<const Complex> amplitudes);

/// Computational basis vector |digits⟩.
[[nodiscard]] PureState basis_state(const Dims& dims, std::span<const std::size_t> digits);

[[nodiscard]] PureState tensor(const PureState& a, const PureState& b);

/// Shannon entropy -Σ p ln p of a probability list (0 ln 0 = 0).
[[nodiscard]] double shannon_entropy(std::span<const double> probabilities);

[[nodiscard]] std::vector<double> probabilities(const PureState& s);

/// Shannon entropy of the computational-basis outcome distribution.
[[nodiscard]] double meas_entropy(const PureState& s);

/// Amplitude-level variant used on hot paths: -Σ |a|² ln |a|².
[[nodiscard]] double meas_entropy(const Eigen::VectorXcd& amplitudes);

/// Partial trace of |ψ⟩⟨ψ| onto the subsystems in `keep`, in ascending order.
[[nodiscard]] DensityMatrix reduce(const PureState& s, std::vector<std::size_t> keep);

/// -Σ λ ln λ over the spectrum; eigenvalues below 1e-12 count as zero.
[[nodiscard]] double von_neumann_entropy(const DensityMatrix& rho);

/// Singular values (descending) of the amplitude matrix reshaped with the
/// subsystems in `part_a` as rows and the complement as columns.
[[nodiscard]] std::vector<double> schmidt_coefficients(const PureState& s, std::vector<std::size_t> part_a);

/// Amplitude matrix reshaped along the cut `part_a | complement`.
[[nodiscard]] Eigen::MatrixXcd matricize(const PureState& s, const std::vector<std::size_t>& part_a);

/// Σ_i c_i |i⟩^{⊗n} on n subsystems of dimension d.
[[nodiscard]] PureState ghz_state(std::size_t d, std::size_t n, std::span<const Complex> coeffs);

/// c_0|0…01⟩ + c_1|0…10⟩ + … + c_{n-1}|1…00⟩ on n qubits.
[[nodiscard]] PureState w_state(std::span<const Complex> coeffs);

/// Haar-random state from normalized i.i.d. complex Gaussians.
[[nodiscard]] PureState random_state(const Dims& dims, std::uint64_t seed);

/// Measures `subsystem` in the computational basis. Zero-probability
/// outcomes are omitted. Requires at least two subsystems.
[[nodiscard]] std::vector<MeasurementBranch> measure_subsystem(const PureState& s, std::size_t subsystem);

}  // namespace hmeas
