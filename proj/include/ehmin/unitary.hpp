// Copyright 2026 The ehmin Authors - All rights reserved.
// SPDX-License-Identifier: Apache-2.0

/**
 * @file unitary.hpp
 * @brief Real-vector parametrizations of local unitaries and their action on
 *        multipartite states.
 *
 * Qubits use the three-angle SU(2) form
 *
 *     U(β, δ, γ) = [ e^{-i(β+δ)} cos γ   -e^{-i(β-δ)} sin γ ]
 *                  [ e^{ i(β-δ)} sin γ    e^{ i(β+δ)} cos γ ]
 *
 * and every other dimension d uses U = exp(iH) with H Hermitian and built from
 * d² reals: the first d fill the diagonal, the remaining d(d-1) fill the
 * strict upper triangle as (re, im) pairs in row-major order.
 */

#pragma once

#include <ehmin/state.hpp>

#include <Eigen/Dense>

#include <cstddef>
#include <span>
#include <vector>

namespace hmeas {

using UnitaryMatrix = Eigen::MatrixXcd;

/// Number of real parameters used for a subsystem of dimension d.
[[nodiscard]] constexpr std::size_t param_arity(std::size_t d) noexcept { return d == 2 ? 3 : d * d; }

/// Total parameter count for a full set of local unitaries.
[[nodiscard]] std::size_t param_arity(const Dims& dims) noexcept;

[[nodiscard]] UnitaryMatrix qubit_unitary(double beta, double delta, double gamma);

[[nodiscard]] Eigen::MatrixXcd hermitian_from_params(std::size_t d, std::span<const double> params);

/// exp(iH) via the spectral decomposition of H. Throws NotHermitian or
/// EigenFailure.
[[nodiscard]] UnitaryMatrix unitary_exp(const Eigen::MatrixXcd& h);

/// exp(iH(params)) for a d-dimensional subsystem.
[[nodiscard]] UnitaryMatrix hermitian_unitary(std::size_t d, std::span<const double> params);

/// One unitary per subsystem; the qubit form for d = 2, exp(iH) otherwise.
[[nodiscard]] std::vector<UnitaryMatrix> local_unitaries_from_params(const Dims& dims, std::span<const double> x);

/// Applies U_0 ⊗ … ⊗ U_{n-1} axis by axis, never forming the full operator.
[[nodiscard]] PureState apply_local(const PureState& s, std::span<const UnitaryMatrix> us);

/// In-place variant on a raw amplitude vector laid out for `dims`.
void apply_local_inplace(Eigen::VectorXcd& amplitudes, const Dims& dims, std::span<const UnitaryMatrix> us);

[[nodiscard]] std::vector<UnitaryMatrix> adjoints(std::span<const UnitaryMatrix> us);

/// Largest entry of |U†U - I|.
[[nodiscard]] double unitarity_defect(const Eigen::MatrixXcd& u);

}  // namespace hmeas
