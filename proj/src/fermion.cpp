// Copyright 2026 The ehmin Authors - All rights reserved.
// SPDX-License-Identifier: Apache-2.0

#include <ehmin/fermion.hpp>

#include <ehmin/error.hpp>

#include <array>
#include <cmath>
#include <functional>
#include <memory>
#include <random>
#include <string>

namespace hmeas {

namespace {

constexpr double kZeroNorm = 1e-12;
constexpr double kResidualFloor = 1e-6;
constexpr double kZeroWeightSquared = 1e-16;
constexpr double kSlaterCheckTolerance = 1e-8;

void check_order(std::size_t p, std::size_t n) {
    if (n < 1 || n > p) {
        throw Error(ErrorCode::BadOrder, "need 1 <= n <= p, got n=" + std::to_string(n) + " p=" + std::to_string(p));
    }
}

}  // namespace

namespace detail {

/**
 * Precomputed subset bookkeeping for compound matrices of order 1..n on p
 * modes. For every order-k subset S = (s_0 < … < s_{k-1}) we keep, for each
 * position t, the element s_t and the index of S \ {s_t} among order-(k-1)
 * subsets, so an order-k minor expands along its first row as
 *
 *     det U[R, C] = Σ_t (-1)^t U(r_0, c_t) · det U[R \ r_0, C \ c_t].
 */
struct CompoundPlan {
    struct Entry {
        std::size_t element;
        std::size_t rest;  // index of the subset without `element`, one order down
    };

    std::size_t p;
    std::size_t n;
    // levels[k-1][subset][t]
    std::vector<std::vector<std::vector<Entry>>> levels;

    CompoundPlan(std::size_t modes, std::size_t order) : p(modes), n(order) {
        check_order(p, n);
        levels.resize(n);
        for (std::size_t k = 1; k <= n; ++k) {
            const auto subsets = fermion_basis(p, k);
            auto& level = levels[k - 1];
            level.resize(subsets.size());
            for (std::size_t s = 0; s < subsets.size(); ++s) {
                const auto& tuple = subsets[s];
                level[s].resize(k);
                for (std::size_t t = 0; t < k; ++t) {
                    std::size_t rest = 0;
                    if (k > 1) {
                        ModeTuple smaller;
                        smaller.reserve(k - 1);
                        for (std::size_t q = 0; q < k; ++q) {
                            if (q != t) smaller.push_back(tuple[q]);
                        }
                        rest = tuple_index(p, smaller);
                    }
                    level[s][t] = {tuple[t], rest};
                }
            }
        }
    }

    [[nodiscard]] Eigen::MatrixXcd compound(const Eigen::MatrixXcd& u) const {
        if (static_cast<std::size_t>(u.rows()) != p || static_cast<std::size_t>(u.cols()) != p) {
            throw Error(ErrorCode::DimMismatch, "matrix must be " + std::to_string(p) + "x" + std::to_string(p));
        }
        Eigen::MatrixXcd prev = u;
        for (std::size_t k = 2; k <= n; ++k) {
            const auto& level = levels[k - 1];
            const auto m = static_cast<Eigen::Index>(level.size());
            Eigen::MatrixXcd cur(m, m);
            for (Eigen::Index r = 0; r < m; ++r) {
                const auto& row = level[static_cast<std::size_t>(r)];
                const auto r0 = static_cast<Eigen::Index>(row[0].element);
                const auto r_rest = static_cast<Eigen::Index>(row[0].rest);
                for (Eigen::Index c = 0; c < m; ++c) {
                    const auto& col = level[static_cast<std::size_t>(c)];
                    Complex acc = 0.0;
                    double sign = 1.0;
                    for (std::size_t t = 0; t < k; ++t) {
                        acc += sign * u(r0, static_cast<Eigen::Index>(col[t].element)) *
                               prev(r_rest, static_cast<Eigen::Index>(col[t].rest));
                        sign = -sign;
                    }
                    cur(r, c) = acc;
                }
            }
            prev = std::move(cur);
        }
        return prev;
    }
};

}  // namespace detail

namespace {

using detail::CompoundPlan;

Eigen::MatrixXcd antisymmetric_matrix(const FermionState& f) {
    const std::size_t p = f.modes();
    Eigen::MatrixXcd a = Eigen::MatrixXcd::Zero(static_cast<Eigen::Index>(p), static_cast<Eigen::Index>(p));
    Eigen::Index k = 0;
    for (std::size_t i = 0; i < p; ++i) {
        for (std::size_t j = i + 1; j < p; ++j, ++k) {
            a(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = f.amplitudes()[k];
            a(static_cast<Eigen::Index>(j), static_cast<Eigen::Index>(i)) = -f.amplitudes()[k];
        }
    }
    return a;
}

// Removes the components along `basis` columns [0, count) and returns the norm left.
double orthogonalize(Eigen::VectorXcd& v, const Eigen::MatrixXcd& basis, Eigen::Index count) {
    for (int pass = 0; pass < 2; ++pass) {
        for (Eigen::Index c = 0; c < count; ++c) {
            v -= basis.col(c) * basis.col(c).dot(v);
        }
    }
    return v.norm();
}

}  // namespace

std::size_t binomial(std::size_t p, std::size_t n) noexcept {
    if (n > p) return 0;
    n = std::min(n, p - n);
    std::size_t r = 1;
    for (std::size_t i = 1; i <= n; ++i) r = r * (p - n + i) / i;
    return r;
}

std::vector<ModeTuple> fermion_basis(std::size_t p, std::size_t n) {
    check_order(p, n);
    std::vector<ModeTuple> out;
    out.reserve(binomial(p, n));
    ModeTuple t(n);
    for (std::size_t i = 0; i < n; ++i) t[i] = i;
    while (true) {
        out.push_back(t);
        // Advance to the next combination in lexicographic order.
        std::size_t i = n;
        while (i > 0 && t[i - 1] == p - n + (i - 1)) --i;
        if (i == 0) break;
        ++t[i - 1];
        for (std::size_t j = i; j < n; ++j) t[j] = t[j - 1] + 1;
    }
    return out;
}

std::size_t tuple_index(std::size_t p, std::span<const std::size_t> tuple) {
    const std::size_t n = tuple.size();
    check_order(p, n);
    std::size_t index = 0;
    std::size_t next = 0;
    for (std::size_t i = 0; i < n; ++i) {
        if (tuple[i] < next || tuple[i] >= p) {
            throw Error(ErrorCode::BadOrder, "tuple must be strictly increasing and within range");
        }
        for (std::size_t j = next; j < tuple[i]; ++j) index += binomial(p - 1 - j, n - 1 - i);
        next = tuple[i] + 1;
    }
    return index;
}

FermionState make_fermion_state(std::size_t p, std::size_t n, Eigen::VectorXcd amplitudes) {
    check_order(p, n);
    const auto expected = binomial(p, n);
    if (static_cast<std::size_t>(amplitudes.size()) != expected) {
        throw Error(ErrorCode::LengthMismatch,
                    "expected " + std::to_string(expected) + " amplitudes, got " + std::to_string(amplitudes.size()));
    }
    const double norm = amplitudes.norm();
    if (!(norm >= kZeroNorm)) {
        throw Error(ErrorCode::ZeroVector, "amplitude vector has zero norm");
    }
    if (std::abs(norm - 1.0) > kNormInputTolerance) {
        throw Error(ErrorCode::NotNormalized, "norm " + std::to_string(norm) + " is not 1");
    }
    amplitudes /= norm;
    return FermionState(p, n, std::move(amplitudes));
}

FermionState random_fermion_state(std::size_t p, std::size_t n, std::uint64_t seed) {
    check_order(p, n);
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> gauss(0.0, 1.0);
    Eigen::VectorXcd v(static_cast<Eigen::Index>(binomial(p, n)));
    for (Eigen::Index i = 0; i < v.size(); ++i) {
        const double re = gauss(rng);
        const double im = gauss(rng);
        v[i] = Complex(re, im);
    }
    v.normalize();
    return make_fermion_state(p, n, std::move(v));
}

MinorTable minor_table(const Eigen::MatrixXcd& u, std::size_t n) {
    if (u.rows() != u.cols()) {
        throw Error(ErrorCode::DimMismatch, "minor table needs a square matrix");
    }
    const CompoundPlan plan(static_cast<std::size_t>(u.rows()), n);
    return {n, plan.compound(u)};
}

FermionState change_basis(const FermionState& f, const Eigen::MatrixXcd& u) {
    if (static_cast<std::size_t>(u.rows()) != f.modes() || static_cast<std::size_t>(u.cols()) != f.modes()) {
        throw Error(ErrorCode::DimMismatch, "basis change must be p x p");
    }
    const auto table = minor_table(u, f.particles());
    return make_fermion_state(f.modes(), f.particles(), table.entries * f.amplitudes());
}

double meas_entropy(const FermionState& f) { return meas_entropy(f.amplitudes()); }

FermionObjective::FermionObjective(FermionState state)
    : state_(std::move(state)),
      plan_(std::make_shared<const CompoundPlan>(state_.modes(), state_.particles())) {}

double FermionObjective::evaluate(std::span<const double> x) const {
    if (x.size() != arity()) {
        throw Error(ErrorCode::ArityMismatch,
                    "expected " + std::to_string(arity()) + " parameters, got " + std::to_string(x.size()));
    }
    const auto u = hermitian_unitary(state_.modes(), x);
    const Eigen::VectorXcd v = plan_->compound(u) * state_.amplitudes();
    return meas_entropy(v);
}

EhminResult ehmin_fermion(const FermionState& f, const GAConfig& config) {
    const FermionObjective objective(f);
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

SlaterDecomposition slater_decompose(const FermionState& f) {
    if (f.particles() != 2) {
        throw Error(ErrorCode::NotTwoFermion, "Slater decomposition needs exactly two fermions");
    }
    const auto p = static_cast<Eigen::Index>(f.modes());
    const Eigen::MatrixXcd a = antisymmetric_matrix(f);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(a * a.adjoint());
    if (solver.info() != Eigen::Success) {
        throw Error(ErrorCode::ConvergenceFailure, "eigendecomposition of A A^dagger failed");
    }

    // Columns of w are the new one-particle basis vectors.
    Eigen::MatrixXcd w = Eigen::MatrixXcd::Zero(p, p);
    Eigen::Index filled = 0;

    for (Eigen::Index k = p - 1; k >= 0 && filled + 1 < p; --k) {
        Eigen::VectorXcd u = solver.eigenvectors().col(k);
        if (orthogonalize(u, w, filled) < kResidualFloor) continue;
        u.normalize();
        const double z2 = (u.adjoint() * a * a.adjoint() * u)(0, 0).real();
        if (z2 <= kZeroWeightSquared) break;
        const double z = std::sqrt(z2);
        Eigen::VectorXcd partner = -(a * u.conjugate()) / z;
        w.col(filled) = u;
        if (orthogonalize(partner, w, filled + 1) < kResidualFloor) {
            throw Error(ErrorCode::ConvergenceFailure, "degenerate pairing could not be resolved");
        }
        w.col(filled + 1) = partner.normalized();
        filled += 2;
    }

    // Complete the kernel with any orthonormal vectors.
    for (Eigen::Index e = 0; e < p && filled < p; ++e) {
        Eigen::VectorXcd v = Eigen::VectorXcd::Unit(p, e);
        if (orthogonalize(v, w, filled) < kResidualFloor) continue;
        w.col(filled++) = v.normalized();
    }
    if (filled != p) {
        throw Error(ErrorCode::ConvergenceFailure, "could not complete the one-particle basis");
    }

    SlaterDecomposition d;
    d.basis_change = w.adjoint();
    const auto rotated = change_basis(f, d.basis_change);
    if (!is_slater_form(rotated, kSlaterCheckTolerance)) {
        throw Error(ErrorCode::ConvergenceFailure, "rotated state is not in Slater form");
    }
    for (std::size_t k = 0; 2 * k + 1 < f.modes(); ++k) {
        const std::array<std::size_t, 2> slot{2 * k, 2 * k + 1};
        d.weights.push_back(std::abs(rotated.amplitudes()[static_cast<Eigen::Index>(tuple_index(f.modes(), slot))]));
    }
    return d;
}

double slater_entropy(const SlaterDecomposition& d) {
    std::vector<double> p;
    p.reserve(d.weights.size());
    for (double z : d.weights) p.push_back(z * z);
    return shannon_entropy(p);
}

bool is_slater_form(const FermionState& f, double tol) {
    if (f.particles() != 2) {
        throw Error(ErrorCode::NotTwoFermion, "Slater form is defined for two fermions");
    }
    const std::size_t p = f.modes();
    double outside = 0.0;
    Eigen::Index k = 0;
    for (std::size_t i = 0; i < p; ++i) {
        for (std::size_t j = i + 1; j < p; ++j, ++k) {
            const bool slot = (i % 2 == 0) && (j == i + 1);
            if (!slot) outside += std::norm(f.amplitudes()[k]);
        }
    }
    return outside < tol;
}

}  // namespace hmeas
