// Copyright 2026 The ehmin Authors - All rights reserved.
// SPDX-License-Identifier: Apache-2.0

/**
 * @file fermion.hpp
 * @brief Pure fermionic states on the Slater-determinant basis of Λⁿ Cᵖ.
 *
 * Basis elements are strictly increasing 0-based mode tuples i_0 < … < i_{n-1}
 * in lexicographic order. A one-particle basis change U acts on amplitudes
 * through its n-th compound matrix (the table of all n×n minors):
 *
 *     λ'_J = Σ_I det(U[J, I]) λ_I,
 *
 * rows J indexing new tuples and columns I old ones. For n = 1 this is plain
 * U·λ, and compound matrices multiply (Cauchy-Binet), so change_basis
 * composes like the operators it represents.
 *
 * Two-fermion Slater form pairs modes (0,1), (2,3), … .
 */

#pragma once

#include <ehmin/ga.hpp>
#include <ehmin/objective.hpp>
#include <ehmin/state.hpp>
#include <ehmin/unitary.hpp>

#include <Eigen/Dense>

#include <cstddef>
#include <memory>
#include <span>
#include <vector>

namespace hmeas {

namespace detail {
struct CompoundPlan;
}

using ModeTuple = std::vector<std::size_t>;

class FermionState {
public:
    [[nodiscard]] std::size_t modes() const noexcept { return p_; }
    [[nodiscard]] std::size_t particles() const noexcept { return n_; }
    [[nodiscard]] const Eigen::VectorXcd& amplitudes() const noexcept { return amps_; }

private:
    FermionState(std::size_t p, std::size_t n, Eigen::VectorXcd amps) : p_(p), n_(n), amps_(std::move(amps)) {}

    friend FermionState make_fermion_state(std::size_t p, std::size_t n, Eigen::VectorXcd amplitudes);

    std::size_t p_;
    std::size_t n_;
    Eigen::VectorXcd amps_;
};

struct MinorTable {
    std::size_t order = 0;
    Eigen::MatrixXcd entries;  ///< C(p,n) × C(p,n), lexicographic subsets
};

struct SlaterDecomposition {
    UnitaryMatrix basis_change;  ///< change_basis(f, basis_change) is in Slater form
    std::vector<double> weights;  ///< z_i ≥ 0, descending, one per mode pair
};

[[nodiscard]] std::size_t binomial(std::size_t p, std::size_t n) noexcept;

/// All C(p,n) increasing tuples in lexicographic order. Throws BadOrder.
[[nodiscard]] std::vector<ModeTuple> fermion_basis(std::size_t p, std::size_t n);

/// Position of a tuple in fermion_basis(p, n).
[[nodiscard]] std::size_t tuple_index(std::size_t p, std::span<const std::size_t> tuple);

/// Validates lengths and renormalizes (same tolerance as qudit states).
[[nodiscard]] FermionState make_fermion_state(std::size_t p, std::size_t n, Eigen::VectorXcd amplitudes);

/// Haar-random element of Λⁿ Cᵖ.
[[nodiscard]] FermionState random_fermion_state(std::size_t p, std::size_t n, std::uint64_t seed);

/**
 * All n×n minors of a square matrix, built order by order: each order-k minor
 * is a first-row Laplace expansion over cached order-(k-1) minors.
 */
[[nodiscard]] MinorTable minor_table(const Eigen::MatrixXcd& u, std::size_t n);

/// Throws DimMismatch when U is not p×p.
[[nodiscard]] FermionState change_basis(const FermionState& f, const Eigen::MatrixXcd& u);

[[nodiscard]] double meas_entropy(const FermionState& f);

/// Measurement entropy of f after the basis change exp(iH(x)), x ∈ R^{p²}.
class FermionObjective {
public:
    explicit FermionObjective(FermionState state);

    [[nodiscard]] const FermionState& state() const noexcept { return state_; }
    [[nodiscard]] std::size_t arity() const noexcept { return state_.modes() * state_.modes(); }

    [[nodiscard]] double evaluate(std::span<const double> x) const;
    [[nodiscard]] double operator()(std::span<const double> x) const { return evaluate(x); }

private:
    FermionState state_;
    std::shared_ptr<const detail::CompoundPlan> plan_;
};

[[nodiscard]] EhminResult ehmin_fermion(const FermionState& f, const GAConfig& config = {});

/**
 * Canonical two-fermion form. The antisymmetric coefficient matrix A
 * (A_ij = λ_ij for i < j) transforms as A → U A Uᵀ; its Youla form is read off
 * the eigenvectors of A A†: for a unit eigenvector u with eigenvalue z², the
 * pair (u, -A ū / z) spans an invariant block with weight z. Degenerate
 * eigenvectors are orthogonalized against already chosen pairs before use.
 *
 * Odd p leaves one unpaired mode of weight zero at the end. Throws
 * NotTwoFermion or ConvergenceFailure.
 */
[[nodiscard]] SlaterDecomposition slater_decompose(const FermionState& f);

/// -Σ z² ln z² of the Slater weights.
[[nodiscard]] double slater_entropy(const SlaterDecomposition& d);

/// True when the mass |λ|² outside pair slots (2k, 2k+1) is below tol.
/// Throws NotTwoFermion.
[[nodiscard]] bool is_slater_form(const FermionState& f, double tol);

}  // namespace hmeas
