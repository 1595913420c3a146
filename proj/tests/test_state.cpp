// Copyright 2026 The ehmin Authors - All rights reserved.
// SPDX-License-Identifier: Apache-2.0

#include <ehmin/error.hpp>
#include <ehmin/state.hpp>

#include <doctest.h>

#include <cmath>
#include <numbers>
#include <vector>

using namespace hmeas;
using doctest::Approx;

namespace {

const double kInvSqrt2 = 1.0 / std::numbers::sqrt2;

PureState bell() {
    const std::vector<Complex> a{kInvSqrt2, 0.0, 0.0, kInvSqrt2};
    return make_state({2, 2}, a);
}

PureState ket(const Dims& dims, std::vector<std::size_t> digits) { return basis_state(dims, digits); }

double plogp_sum(const std::vector<double>& p) {
    double h = 0.0;
    for (double v : p) {
        if (v > 0.0) h -= v * std::log(v);
    }
    return h;
}

// Partial trace by explicit index loops, independent of matricize.
Eigen::MatrixXcd trace_out_last(const PureState& s, std::size_t d_keep, std::size_t d_drop) {
    Eigen::MatrixXcd rho = Eigen::MatrixXcd::Zero(static_cast<Eigen::Index>(d_keep), static_cast<Eigen::Index>(d_keep));
    for (std::size_t i = 0; i < d_keep; ++i) {
        for (std::size_t j = 0; j < d_keep; ++j) {
            Complex acc = 0.0;
            for (std::size_t k = 0; k < d_drop; ++k) acc += s[i * d_drop + k] * std::conj(s[j * d_drop + k]);
            rho(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = acc;
        }
    }
    return rho;
}

std::vector<double> diag_probs(const Eigen::MatrixXcd& rho) {
    std::vector<double> p(static_cast<std::size_t>(rho.rows()));
    for (Eigen::Index i = 0; i < rho.rows(); ++i) p[static_cast<std::size_t>(i)] = rho(i, i).real();
    return p;
}

}  // namespace

TEST_CASE("make_state accepts basis and Bell vectors") {
    const std::vector<Complex> a{1.0, 0.0, 0.0, 0.0};
    const auto s = make_state({2, 2}, a);
    CHECK(s.size() == 4);
    CHECK(s.num_subsystems() == 2);
    CHECK(std::abs(s[0] - Complex(1.0)) < 1e-15);

    const auto b = bell();
    CHECK(b.amplitudes().norm() == Approx(1.0).epsilon(1e-14));
}

TEST_CASE("make_state rejects bad input") {
    const std::vector<Complex> three{1.0, 0.0, 0.0};
    try {
        (void)make_state({2}, three);
        FAIL("expected LengthMismatch");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::LengthMismatch);
    }

    const std::vector<Complex> zero{0.0, 0.0};
    try {
        (void)make_state({2}, zero);
        FAIL("expected ZeroVector");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::ZeroVector);
    }

    const std::vector<Complex> big{2.0, 0.0};
    try {
        (void)make_state({2}, big);
        FAIL("expected NotNormalized");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::NotNormalized);
    }

    CHECK_THROWS_AS((void)make_state({1, 2}, std::vector<Complex>{1.0, 0.0}), Error);
}

TEST_CASE("make_state renormalizes rounded input") {
    const std::vector<Complex> a{0.7071068, 0.7071068};
    const auto s = make_state({2}, a);
    CHECK(std::abs(s.amplitudes().norm() - 1.0) < 1e-14);
}

TEST_CASE("tensor products") {
    const auto t = tensor(ket({2}, {0}), ket({2}, {1}));
    CHECK(t.dims() == Dims{2, 2});
    const std::vector<Complex> expect{0.0, 1.0, 0.0, 0.0};
    for (std::size_t i = 0; i < 4; ++i) CHECK(std::abs(t[i] - expect[i]) < 1e-15);

    const auto bz = tensor(bell(), ket({2}, {0}));
    CHECK(bz.dims() == Dims{2, 2, 2});
    const std::vector<Complex> expect3{kInvSqrt2, 0, 0, 0, 0, 0, kInvSqrt2, 0};
    for (std::size_t i = 0; i < 8; ++i) CHECK(std::abs(bz[i] - expect3[i]) < 1e-15);

    for (std::uint64_t seed = 0; seed < 5; ++seed) {
        const auto s = tensor(random_state({2, 3}, seed), random_state({3}, seed + 100));
        CHECK(std::abs(s.amplitudes().norm() - 1.0) < 1e-10);
    }
}

TEST_CASE("measurement entropy") {
    CHECK(meas_entropy(ket({2, 2}, {0, 0})) == 0.0);
    CHECK(meas_entropy(bell()) == Approx(std::log(2.0)).epsilon(1e-12));
    const std::vector<Complex> a{std::sqrt(0.3), std::sqrt(0.7)};
    CHECK(meas_entropy(make_state({2}, a)) == Approx(0.610864).epsilon(1e-6));

    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        const auto s = random_state({3, 2, 2}, seed);
        const double h = meas_entropy(s);
        CHECK(h >= 0.0);
        CHECK(h <= std::log(12.0) + 1e-12);
    }
}

TEST_CASE("Shannon additivity under tensor products") {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        const auto a = random_state({2, 3}, seed);
        const auto b = random_state({2}, seed + 50);
        CHECK(std::abs(meas_entropy(tensor(a, b)) - meas_entropy(a) - meas_entropy(b)) < 1e-10);
    }
}

TEST_CASE("reduce") {
    const auto rb = reduce(bell(), {0});
    CHECK((rb.entries - 0.5 * Eigen::MatrixXcd::Identity(2, 2)).cwiseAbs().maxCoeff() < 1e-14);

    const auto r0 = reduce(ket({2, 2}, {0, 0}), {0});
    CHECK(std::abs(r0.entries(0, 0) - Complex(1.0)) < 1e-15);
    CHECK(std::abs(r0.entries(1, 1)) < 1e-15);

    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        const auto s = random_state({2, 3, 2}, seed);
        for (const auto& keep : {std::vector<std::size_t>{0}, {1}, {2}, {0, 2}, {1, 2}}) {
            const auto rho = reduce(s, keep);
            CHECK(std::abs(rho.entries.trace() - Complex(1.0)) < 1e-10);
            CHECK((rho.entries - rho.entries.adjoint()).cwiseAbs().maxCoeff() < 1e-10);
            Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(rho.entries);
            CHECK(es.eigenvalues().minCoeff() >= -1e-9);
        }
    }

    const auto s = random_state({3, 4}, 9);
    const auto rho = reduce(s, {0});
    CHECK((rho.entries - trace_out_last(s, 3, 4)).cwiseAbs().maxCoeff() < 1e-12);
    CHECK(rho.dims == Dims{3});

    CHECK_THROWS_AS((void)reduce(bell(), {}), Error);
    CHECK_THROWS_AS((void)reduce(bell(), {0, 1}), Error);
    try {
        (void)reduce(bell(), {5});
        FAIL("expected BadSubsystemIndex");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::BadSubsystemIndex);
    }
}

TEST_CASE("von Neumann entropy") {
    DensityMatrix mixed{{2}, 0.5 * Eigen::MatrixXcd::Identity(2, 2)};
    CHECK(von_neumann_entropy(mixed) == Approx(std::log(2.0)).epsilon(1e-12));

    DensityMatrix pure{{2}, Eigen::MatrixXcd::Zero(2, 2)};
    pure.entries(0, 0) = 1.0;
    CHECK(von_neumann_entropy(pure) == 0.0);

    DensityMatrix d37{{2}, Eigen::MatrixXcd::Zero(2, 2)};
    d37.entries(0, 0) = 0.3;
    d37.entries(1, 1) = 0.7;
    CHECK(von_neumann_entropy(d37) == Approx(0.610864).epsilon(1e-6));

    DensityMatrix skew{{2}, Eigen::MatrixXcd::Zero(2, 2)};
    skew.entries(0, 1) = 0.5;
    try {
        (void)von_neumann_entropy(skew);
        FAIL("expected NotHermitian");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::NotHermitian);
    }
}

TEST_CASE("Schmidt coefficients") {
    const auto sb = schmidt_coefficients(bell(), {0});
    REQUIRE(sb.size() == 2);
    CHECK(sb[0] == Approx(kInvSqrt2).epsilon(1e-12));
    CHECK(sb[1] == Approx(kInvSqrt2).epsilon(1e-12));

    const auto s0 = schmidt_coefficients(ket({2, 2}, {0, 0}), {0});
    CHECK(s0[0] == Approx(1.0).epsilon(1e-12));
    CHECK(std::abs(s0[1]) < 1e-12);

    try {
        (void)schmidt_coefficients(bell(), {0, 1});
        FAIL("expected BadCut");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::BadCut);
    }
}

TEST_CASE("Schmidt and von Neumann entropies agree on both sides of every cut") {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        const auto s = random_state({2, 3, 2}, seed);
        const std::vector<std::vector<std::size_t>> cuts{{0}, {1}, {2}};
        for (const auto& a : cuts) {
            std::vector<std::size_t> b;
            for (std::size_t j = 0; j < 3; ++j) {
                if (j != a.front()) b.push_back(j);
            }
            std::vector<double> lam2;
            for (double l : schmidt_coefficients(s, a)) lam2.push_back(l * l);
            double sum = 0.0;
            for (double v : lam2) sum += v;
            CHECK(sum == Approx(1.0).epsilon(1e-9));
            const double h_schmidt = plogp_sum(lam2);
            CHECK(std::abs(von_neumann_entropy(reduce(s, a)) - h_schmidt) < 1e-8);
            CHECK(std::abs(von_neumann_entropy(reduce(s, b)) - h_schmidt) < 1e-8);
        }
    }
}

TEST_CASE("Lemma 1 diagonal entropy bounds") {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        const auto s = random_state({3, 2}, seed);
        const double h_a = plogp_sum(diag_probs(reduce(s, {0}).entries));
        const double h_b = plogp_sum(diag_probs(reduce(s, {1}).entries));
        const double h_ab = meas_entropy(s);
        CHECK(h_a <= h_ab + 1e-9);
        CHECK(h_ab <= h_a + h_b + 1e-9);
    }
}

TEST_CASE("Klein inequality on reduced states") {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        const auto s = random_state({2, 2, 3}, seed);
        for (const auto& keep : {std::vector<std::size_t>{0}, {2}, {0, 1}}) {
            const auto rho = reduce(s, keep);
            CHECK(plogp_sum(diag_probs(rho.entries)) >= von_neumann_entropy(rho) - 1e-9);
        }
    }
}

TEST_CASE("GHZ and W families") {
    const std::vector<Complex> u{kInvSqrt2, kInvSqrt2};
    const auto g = ghz_state(2, 3, u);
    CHECK(std::abs(g[0] - Complex(kInvSqrt2)) < 1e-15);
    CHECK(std::abs(g[7] - Complex(kInvSqrt2)) < 1e-15);
    CHECK(meas_entropy(g) == Approx(std::log(2.0)).epsilon(1e-12));

    const std::vector<Complex> e0{1.0, 0.0};
    const auto g1 = ghz_state(2, 1, e0);
    CHECK(g1.dims() == Dims{2});
    CHECK(std::abs(g1[0] - Complex(1.0)) < 1e-15);

    const std::vector<Complex> c3{std::sqrt(0.2), std::sqrt(0.5), std::sqrt(0.3)};
    const auto g3 = ghz_state(3, 3, c3);
    CHECK(std::abs(g3[13] - c3[1]) < 1e-15);
    CHECK(std::abs(g3[26] - c3[2]) < 1e-15);
    CHECK(meas_entropy(g3) == Approx(plogp_sum({0.2, 0.5, 0.3})).epsilon(1e-12));

    CHECK_THROWS_AS((void)ghz_state(3, 2, u), Error);

    const double r3 = 1.0 / std::sqrt(3.0);
    const std::vector<Complex> w3{r3, r3, r3};
    const auto w = w_state(w3);
    for (std::size_t i : {1u, 2u, 4u}) CHECK(std::abs(w[i] - Complex(r3)) < 1e-15);
    for (std::size_t i : {0u, 3u, 5u, 6u, 7u}) CHECK(std::abs(w[i]) < 1e-15);
    CHECK(meas_entropy(w) == Approx(std::log(3.0)).epsilon(1e-12));

    const auto w2 = w_state(e0);
    CHECK(std::abs(w2[1] - Complex(1.0)) < 1e-15);

    for (std::size_t n = 2; n <= 6; ++n) {
        const std::vector<Complex> c(n, 1.0 / std::sqrt(static_cast<double>(n)));
        CHECK(meas_entropy(w_state(c)) == Approx(std::log(static_cast<double>(n))).epsilon(1e-12));
    }
}

TEST_CASE("random states") {
    const auto a = random_state({2, 3}, 7);
    const auto b = random_state({2, 3}, 7);
    CHECK(a.amplitudes() == b.amplitudes());
    CHECK(std::abs(a.amplitudes().norm() - 1.0) < 1e-12);
    CHECK(a.amplitudes() != random_state({2, 3}, 8).amplitudes());

    const std::size_t samples = 10000;
    std::vector<double> mean(4, 0.0);
    for (std::uint64_t seed = 0; seed < samples; ++seed) {
        const auto s = random_state({2, 2}, seed);
        for (std::size_t i = 0; i < 4; ++i) mean[i] += std::norm(s[i]) / samples;
    }
    for (double m : mean) CHECK(std::abs(m - 0.25) < 0.05 * 0.25);
}

TEST_CASE("measuring one subsystem") {
    const auto branches = measure_subsystem(bell(), 0);
    REQUIRE(branches.size() == 2);
    CHECK(branches[0].probability == Approx(0.5).epsilon(1e-12));
    CHECK(std::abs(branches[0].post_state[0] - Complex(1.0)) < 1e-12);
    CHECK(std::abs(branches[1].post_state[1] - Complex(1.0)) < 1e-12);

    const auto s = random_state({2, 3, 2}, 3);
    const auto mid = measure_subsystem(s, 1);
    double total = 0.0;
    for (const auto& br : mid) {
        total += br.probability;
        CHECK(br.post_state.dims() == Dims{2, 2});
        for (std::size_t a = 0; a < 2; ++a) {
            for (std::size_t c = 0; c < 2; ++c) {
                const Complex expect = s[(a * 3 + br.outcome) * 2 + c] / std::sqrt(br.probability);
                CHECK(std::abs(br.post_state[a * 2 + c] - expect) < 1e-12);
            }
        }
    }
    CHECK(total == Approx(1.0).epsilon(1e-12));

    CHECK_THROWS_AS((void)measure_subsystem(s, 3), Error);
    CHECK_THROWS_AS((void)measure_subsystem(ket({2}, {0}), 0), Error);
}
