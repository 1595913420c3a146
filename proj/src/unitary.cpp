// Copyright 2026 The ehmin Authors - All rights reserved.
// SPDX-License-Identifier: Apache-2.0

#include <ehmin/unitary.hpp>

#include <ehmin/error.hpp>

#include <cmath>
#include <string>

namespace hmeas {

namespace {

constexpr double kHermitianTolerance = 1e-9;

}  // namespace

std::size_t param_arity(const Dims& dims) noexcept {
    std::size_t k = 0;
    for (auto d : dims) k += param_arity(d);
    return k;
}

UnitaryMatrix qubit_unitary(double beta, double delta, double gamma) {
    const double c = std::cos(gamma);
    const double s = std::sin(gamma);
    UnitaryMatrix u(2, 2);
    u(0, 0) = std::polar(c, -beta - delta);
    u(0, 1) = -std::polar(s, -beta + delta);
    u(1, 0) = std::polar(s, beta - delta);
    u(1, 1) = std::polar(c, beta + delta);
    return u;
}

Eigen::MatrixXcd hermitian_from_params(std::size_t d, std::span<const double> params) {
    if (params.size() != d * d) {
        throw Error(ErrorCode::LengthMismatch,
                    "Hermitian of dimension " + std::to_string(d) + " needs " + std::to_string(d * d) +
                        " parameters, got " + std::to_string(params.size()));
    }
    const auto n = static_cast<Eigen::Index>(d);
    Eigen::MatrixXcd h(n, n);
    for (Eigen::Index i = 0; i < n; ++i) {
        h(i, i) = params[static_cast<std::size_t>(i)];
    }
    std::size_t k = d;
    for (Eigen::Index i = 0; i < n; ++i) {
        for (Eigen::Index j = i + 1; j < n; ++j) {
            const Complex z(params[k], params[k + 1]);
            k += 2;
            h(i, j) = z;
            h(j, i) = std::conj(z);
        }
    }
    return h;
}

UnitaryMatrix unitary_exp(const Eigen::MatrixXcd& h) {
    if (h.rows() != h.cols()) {
        throw Error(ErrorCode::NotHermitian, "matrix is not square");
    }
    if ((h - h.adjoint()).cwiseAbs().maxCoeff() > kHermitianTolerance) {
        throw Error(ErrorCode::NotHermitian, "matrix is not Hermitian");
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(h);
    if (solver.info() != Eigen::Success) {
        throw Error(ErrorCode::EigenFailure, "Hermitian eigendecomposition failed");
    }
    const auto& v = solver.eigenvectors();
    Eigen::VectorXcd phases(h.rows());
    for (Eigen::Index k = 0; k < h.rows(); ++k) {
        phases[k] = std::polar(1.0, solver.eigenvalues()[k]);
    }
    return v * phases.asDiagonal() * v.adjoint();
}

UnitaryMatrix hermitian_unitary(std::size_t d, std::span<const double> params) {
    return unitary_exp(hermitian_from_params(d, params));
}

std::vector<UnitaryMatrix> local_unitaries_from_params(const Dims& dims, std::span<const double> x) {
    const auto expected = param_arity(dims);
    if (x.size() != expected) {
        throw Error(ErrorCode::LengthMismatch,
                    "expected " + std::to_string(expected) + " parameters, got " + std::to_string(x.size()));
    }
    std::vector<UnitaryMatrix> us;
    us.reserve(dims.size());
    std::size_t offset = 0;
    for (auto d : dims) {
        const auto k = param_arity(d);
        if (d == 2) {
            us.push_back(qubit_unitary(x[offset], x[offset + 1], x[offset + 2]));
        } else {
            us.push_back(hermitian_unitary(d, x.subspan(offset, k)));
        }
        offset += k;
    }
    return us;
}

void apply_local_inplace(Eigen::VectorXcd& amplitudes, const Dims& dims, std::span<const UnitaryMatrix> us) {
    if (us.size() != dims.size()) {
        throw Error(ErrorCode::DimMismatch, "one unitary per subsystem is required");
    }
    std::size_t total = 1;
    for (auto d : dims) total *= d;
    if (static_cast<std::size_t>(amplitudes.size()) != total) {
        throw Error(ErrorCode::DimMismatch, "amplitude vector does not match dims");
    }
    for (std::size_t j = 0; j < dims.size(); ++j) {
        if (static_cast<std::size_t>(us[j].rows()) != dims[j] || static_cast<std::size_t>(us[j].cols()) != dims[j]) {
            throw Error(ErrorCode::DimMismatch, "unitary " + std::to_string(j) + " has the wrong dimension");
        }
    }

    Complex* a = amplitudes.data();
    std::size_t outer = 1;
    std::vector<Complex> buf;
    for (std::size_t j = 0; j < dims.size(); ++j) {
        const std::size_t d = dims[j];
        const std::size_t inner = total / (outer * d);
        const auto& u = us[j];
        if (d == 2) {
            const Complex u00 = u(0, 0), u01 = u(0, 1), u10 = u(1, 0), u11 = u(1, 1);
            for (std::size_t o = 0; o < outer; ++o) {
                Complex* lo = a + o * 2 * inner;
                Complex* hi = lo + inner;
                for (std::size_t i = 0; i < inner; ++i) {
                    const Complex x0 = lo[i];
                    const Complex x1 = hi[i];
                    lo[i] = u00 * x0 + u01 * x1;
                    hi[i] = u10 * x0 + u11 * x1;
                }
            }
        } else {
            buf.resize(d);
            for (std::size_t o = 0; o < outer; ++o) {
                Complex* block = a + o * d * inner;
                for (std::size_t i = 0; i < inner; ++i) {
                    for (std::size_t b = 0; b < d; ++b) buf[b] = block[b * inner + i];
                    for (std::size_t r = 0; r < d; ++r) {
                        Complex acc = 0.0;
                        for (std::size_t b = 0; b < d; ++b) {
                            acc += u(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(b)) * buf[b];
                        }
                        block[r * inner + i] = acc;
                    }
                }
            }
        }
        outer *= d;
    }
}

PureState apply_local(const PureState& s, std::span<const UnitaryMatrix> us) {
    Eigen::VectorXcd v = s.amplitudes();
    apply_local_inplace(v, s.dims(), us);
    return make_state(s.dims(), std::move(v));
}

std::vector<UnitaryMatrix> adjoints(std::span<const UnitaryMatrix> us) {
    std::vector<UnitaryMatrix> out;
    out.reserve(us.size());
    for (const auto& u : us) out.emplace_back(u.adjoint());
    return out;
}

double unitarity_defect(const Eigen::MatrixXcd& u) {
    const auto n = u.cols();
    return (u.adjoint() * u - Eigen::MatrixXcd::Identity(n, n)).cwiseAbs().maxCoeff();
}

}  // namespace hmeas
