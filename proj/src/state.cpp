// Copyright 2026 The ehmin Authors - All rights reserved.
// SPDX-License-Identifier: Apache-2.0

#include <ehmin/state.hpp>

#include <ehmin/error.hpp>

#include <algorithm>
#include <cmath>
#include <random>
#include <string>

namespace hmeas {

namespace {

constexpr double kZeroNorm = 1e-12;
constexpr double kHermitianTolerance = 1e-9;
constexpr double kEigenvalueFloor = 1e-12;

// Validates a subsystem subset and returns it sorted.
std::vector<std::size_t> normalize_subset(std::vector<std::size_t> part, std::size_t n, ErrorCode code) {
    std::sort(part.begin(), part.end());
    part.erase(std::unique(part.begin(), part.end()), part.end());
    if (part.empty() || part.size() >= n) {
        throw Error(code, "subset must be a nonempty proper subset of the subsystems");
    }
    if (part.back() >= n) {
        throw Error(code, "subsystem index " + std::to_string(part.back()) + " out of range");
    }
    return part;
}

}  // namespace

std::size_t total_dimension(const Dims& dims) {
    if (dims.empty()) {
        throw Error(ErrorCode::LengthMismatch, "at least one subsystem is required");
    }
    std::size_t total = 1;
    for (auto d : dims) {
        if (d < 2) {
            throw Error(ErrorCode::LengthMismatch, "subsystem dimensions must be >= 2");
        }
        total *= d;
    }
    return total;
}

PureState make_state(Dims dims, Eigen::VectorXcd amplitudes) {
    const auto expected = total_dimension(dims);
    if (static_cast<std::size_t>(amplitudes.size()) != expected) {
        throw Error(ErrorCode::LengthMismatch,
                    "expected " + std::to_string(expected) + " amplitudes, got " +
                        std::to_string(amplitudes.size()));
    }
    const double norm = amplitudes.norm();
    if (!(norm >= kZeroNorm)) {
        throw Error(ErrorCode::ZeroVector, "amplitude vector has zero norm");
    }
    if (std::abs(norm - 1.0) > kNormInputTolerance) {
        throw Error(ErrorCode::NotNormalized, "norm " + std::to_string(norm) + " is not 1");
    }
    amplitudes /= norm;
    return PureState(std::move(dims), std::move(amplitudes));
}

PureState make_state(Dims dims, std::span<const Complex> amplitudes) {
    Eigen::VectorXcd v(static_cast<Eigen::Index>(amplitudes.size()));
    std::copy(amplitudes.begin(), amplitudes.end(), v.data());
    return make_state(std::move(dims), std::move(v));
}

PureState basis_state(const Dims& dims, std::span<const std::size_t> digits) {
    const auto total = total_dimension(dims);
    if (digits.size() != dims.size()) {
        throw Error(ErrorCode::LengthMismatch, "one digit per subsystem is required");
    }
    std::size_t flat = 0;
    for (std::size_t j = 0; j < dims.size(); ++j) {
        if (digits[j] >= dims[j]) {
            throw Error(ErrorCode::LengthMismatch, "digit exceeds subsystem dimension");
        }
        flat = flat * dims[j] + digits[j];
    }
    Eigen::VectorXcd v = Eigen::VectorXcd::Zero(static_cast<Eigen::Index>(total));
    v[static_cast<Eigen::Index>(flat)] = 1.0;
    return make_state(dims, std::move(v));
}

PureState tensor(const PureState& a, const PureState& b) {
    Dims dims = a.dims();
    dims.insert(dims.end(), b.dims().begin(), b.dims().end());
    const auto nb = static_cast<Eigen::Index>(b.size());
    Eigen::VectorXcd v(static_cast<Eigen::Index>(a.size()) * nb);
    for (Eigen::Index i = 0; i < a.amplitudes().size(); ++i) {
        v.segment(i * nb, nb) = a.amplitudes()[i] * b.amplitudes();
    }
    return make_state(std::move(dims), std::move(v));
}

double shannon_entropy(std::span<const double> probabilities) {
    double h = 0.0;
    for (double p : probabilities) {
        if (p > kProbabilityFloor) {
            h -= p * std::log(p);
        }
    }
    return h;
}

std::vector<double> probabilities(const PureState& s) {
    std::vector<double> p(s.size());
    for (std::size_t i = 0; i < p.size(); ++i) {
        p[i] = std::norm(s[i]);
    }
    return p;
}

double meas_entropy(const Eigen::VectorXcd& amplitudes) {
    double h = 0.0;
    for (Eigen::Index i = 0; i < amplitudes.size(); ++i) {
        const double p = std::norm(amplitudes[i]);
        if (p > kProbabilityFloor) {
            h -= p * std::log(p);
        }
    }
    return h;
}

double meas_entropy(const PureState& s) { return meas_entropy(s.amplitudes()); }

Eigen::MatrixXcd matricize(const PureState& s, const std::vector<std::size_t>& part_a) {
    const auto& dims = s.dims();
    const std::size_t n = dims.size();
    std::vector<bool> in_a(n, false);
    for (auto j : part_a) in_a[j] = true;

    // Row-major strides of each subsystem within its side of the cut.
    std::vector<std::size_t> side_stride(n, 1);
    std::size_t rows = 1;
    std::size_t cols = 1;
    for (std::size_t j = n; j-- > 0;) {
        if (in_a[j]) {
            side_stride[j] = rows;
            rows *= dims[j];
        } else {
            side_stride[j] = cols;
            cols *= dims[j];
        }
    }

    Eigen::MatrixXcd m(static_cast<Eigen::Index>(rows), static_cast<Eigen::Index>(cols));
    std::vector<std::size_t> digits(n, 0);
    for (std::size_t flat = 0; flat < s.size(); ++flat) {
        std::size_t r = 0;
        std::size_t c = 0;
        for (std::size_t j = 0; j < n; ++j) {
            (in_a[j] ? r : c) += digits[j] * side_stride[j];
        }
        m(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = s[flat];
        // Increment the multi-index, least significant subsystem last.
        for (std::size_t j = n; j-- > 0;) {
            if (++digits[j] < dims[j]) break;
            digits[j] = 0;
        }
    }
    return m;
}

DensityMatrix reduce(const PureState& s, std::vector<std::size_t> keep) {
    keep = normalize_subset(std::move(keep), s.num_subsystems(), ErrorCode::BadSubsystemIndex);
    const Eigen::MatrixXcd m = matricize(s, keep);
    DensityMatrix rho;
    for (auto j : keep) rho.dims.push_back(s.dims()[j]);
    rho.entries = m * m.adjoint();
    return rho;
}

double von_neumann_entropy(const DensityMatrix& rho) {
    const auto& a = rho.entries;
    if (a.rows() != a.cols() || a.rows() == 0) {
        throw Error(ErrorCode::NotHermitian, "density matrix must be square and nonempty");
    }
    if ((a - a.adjoint()).cwiseAbs().maxCoeff() > kHermitianTolerance) {
        throw Error(ErrorCode::NotHermitian, "density matrix is not Hermitian");
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(a, Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success) {
        throw Error(ErrorCode::EigenFailure, "eigendecomposition did not converge");
    }
    double h = 0.0;
    for (Eigen::Index k = 0; k < solver.eigenvalues().size(); ++k) {
        const double lambda = solver.eigenvalues()[k];
        if (lambda > kEigenvalueFloor) {
            h -= lambda * std::log(lambda);
        }
    }
    return h;
}

std::vector<double> schmidt_coefficients(const PureState& s, std::vector<std::size_t> part_a) {
    part_a = normalize_subset(std::move(part_a), s.num_subsystems(), ErrorCode::BadCut);
    const Eigen::MatrixXcd m = matricize(s, part_a);
    Eigen::BDCSVD<Eigen::MatrixXcd> svd(m);
    const auto& sv = svd.singularValues();
    std::vector<double> out(sv.data(), sv.data() + sv.size());
    std::sort(out.begin(), out.end(), std::greater<>());
    return out;
}

PureState ghz_state(std::size_t d, std::size_t n, std::span<const Complex> coeffs) {
    if (coeffs.size() != d) {
        throw Error(ErrorCode::LengthMismatch, "GHZ state needs exactly d coefficients");
    }
    if (n == 0) {
        throw Error(ErrorCode::LengthMismatch, "GHZ state needs at least one party");
    }
    const Dims dims(n, d);
    Eigen::VectorXcd v = Eigen::VectorXcd::Zero(static_cast<Eigen::Index>(total_dimension(dims)));
    // |i…i⟩ sits at i * (1 + d + d² + … + d^{n-1}).
    std::size_t step = 0;
    for (std::size_t j = 0, p = 1; j < n; ++j, p *= d) step += p;
    for (std::size_t i = 0; i < d; ++i) {
        v[static_cast<Eigen::Index>(i * step)] = coeffs[i];
    }
    return make_state(dims, std::move(v));
}

PureState w_state(std::span<const Complex> coeffs) {
    const std::size_t n = coeffs.size();
    if (n == 0) {
        throw Error(ErrorCode::LengthMismatch, "W state needs at least one coefficient");
    }
    const Dims dims(n, 2);
    Eigen::VectorXcd v = Eigen::VectorXcd::Zero(static_cast<Eigen::Index>(std::size_t{1} << n));
    for (std::size_t k = 0; k < n; ++k) {
        v[static_cast<Eigen::Index>(std::size_t{1} << k)] = coeffs[k];
    }
    return make_state(dims, std::move(v));
}

PureState random_state(const Dims& dims, std::uint64_t seed) {
    const auto total = total_dimension(dims);
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> gauss(0.0, 1.0);
    Eigen::VectorXcd v(static_cast<Eigen::Index>(total));
    for (Eigen::Index i = 0; i < v.size(); ++i) {
        const double re = gauss(rng);
        const double im = gauss(rng);
        v[i] = Complex(re, im);
    }
    v.normalize();
    return make_state(dims, std::move(v));
}

std::vector<MeasurementBranch> measure_subsystem(const PureState& s, std::size_t subsystem) {
    const auto& dims = s.dims();
    if (dims.size() < 2 || subsystem >= dims.size()) {
        throw Error(ErrorCode::BadSubsystemIndex, "measurement needs a valid subsystem of a multipartite state");
    }
    const std::size_t d = dims[subsystem];
    std::size_t inner = 1;
    for (std::size_t j = subsystem + 1; j < dims.size(); ++j) inner *= dims[j];
    const std::size_t outer = s.size() / (d * inner);

    Dims rest;
    for (std::size_t j = 0; j < dims.size(); ++j) {
        if (j != subsystem) rest.push_back(dims[j]);
    }

    std::vector<MeasurementBranch> branches;
    for (std::size_t k = 0; k < d; ++k) {
        Eigen::VectorXcd slice(static_cast<Eigen::Index>(outer * inner));
        for (std::size_t o = 0; o < outer; ++o) {
            for (std::size_t i = 0; i < inner; ++i) {
                slice[static_cast<Eigen::Index>(o * inner + i)] = s[(o * d + k) * inner + i];
            }
        }
        const double p = slice.squaredNorm();
        if (p <= kProbabilityFloor) continue;
        slice /= std::sqrt(p);
        branches.push_back({k, p, make_state(rest, std::move(slice))});
    }
    return branches;
}

}  // namespace hmeas
