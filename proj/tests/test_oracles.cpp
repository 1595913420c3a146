// Copyright 2026 The ehmin Authors - All rights reserved.
// SPDX-License-Identifier: Apache-2.0

#include <ehmin/error.hpp>
#include <ehmin/objective.hpp>
#include <ehmin/oracles.hpp>

#include <doctest.h>

#include <cmath>
#include <numbers>
#include <vector>

using namespace hmeas;
using doctest::Approx;

namespace {

const double kR = 1.0 / std::numbers::sqrt2;

PureState bell() {
    const std::vector<Complex> a{kR, 0.0, 0.0, kR};
    return make_state({2, 2}, a);
}

}  // namespace

TEST_CASE("bipartite oracle") {
    CHECK(bipartite_oracle(bell()) == Approx(std::log(2.0)).epsilon(1e-12));
    CHECK(bipartite_oracle(basis_state({2, 2}, std::vector<std::size_t>{0, 0})) == Approx(0.0));

    const std::vector<Complex> sw{std::sqrt(0.3), 0.0, 0.0, std::sqrt(0.7)};
    CHECK(bipartite_oracle(make_state({2, 2}, sw)) == Approx(0.610864).epsilon(1e-6));

    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        const auto s = random_state({3, 4}, seed);
        const double a = von_neumann_entropy(reduce(s, {0}));
        const double b = von_neumann_entropy(reduce(s, {1}));
        CHECK(std::abs(a - b) < 1e-9);
        CHECK(std::abs(bipartite_oracle(s) - a) < 1e-12);
    }

    try {
        (void)bipartite_oracle(random_state({2, 2, 2}, 0));
        FAIL("expected NotBipartite");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::NotBipartite);
    }
}

TEST_CASE("GHZ oracle") {
    const std::vector<Complex> u{kR, kR};
    CHECK(ghz_oracle(u) == Approx(std::log(2.0)).epsilon(1e-15));
    const std::vector<Complex> e0{1.0, 0.0};
    CHECK(ghz_oracle(e0) == 0.0);
    const std::vector<Complex> c37{std::sqrt(0.3), std::sqrt(0.7)};
    CHECK(ghz_oracle(c37) == Approx(0.610864).epsilon(1e-6));
    for (std::size_t d = 2; d <= 6; ++d) {
        const std::vector<Complex> c(d, 1.0 / std::sqrt(static_cast<double>(d)));
        CHECK(std::abs(ghz_oracle(c) - std::log(static_cast<double>(d))) < 1e-14);
    }
}

TEST_CASE("W oracle") {
    const double r3 = 1.0 / std::sqrt(3.0);
    const std::vector<Complex> u{r3, r3, r3};
    CHECK(w_oracle(u) == Approx(1.098612).epsilon(1e-6));
    const std::vector<Complex> e0{1.0, 0.0, 0.0};
    CHECK(w_oracle(e0) == 0.0);
    const std::vector<Complex> c{std::sqrt(0.5), std::sqrt(0.25), std::sqrt(0.25)};
    CHECK(w_oracle(c) == Approx(1.039721).epsilon(1e-6));
}

TEST_CASE("brute_min on reference states") {
    BruteMinOptions opt;
    opt.seed = 1;
    CHECK(std::abs(brute_min(Objective(bell()), opt) - std::log(2.0)) < 1e-4);
    CHECK(brute_min(Objective(basis_state({2, 2}, std::vector<std::size_t>{0, 0})), opt) < 1e-6);

    const FitnessFunction shifted = [](std::span<const double> x) {
        return (x[0] - 1.0) * (x[0] - 1.0) + (x[1] + 0.5) * (x[1] + 0.5) + 2.0;
    };
    CHECK(std::abs(brute_min(shifted, 2, opt) - 2.0) < 1e-8);
}

TEST_CASE("brute_min respects the bipartite lower bound") {
    BruteMinOptions opt;
    opt.restarts = 8;
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        const auto s = random_state({2, 2}, 1000 + seed);
        CHECK(brute_min(Objective(s), opt) >= bipartite_oracle(s) - 1e-6);
    }
}

TEST_CASE("brute_min and the GA agree on random two-qubit states") {
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
        const auto s = random_state({2, 2}, 2000 + seed);
        GAConfig cfg;
        cfg.seed = seed;
        cfg.n_islands = 2;
        BruteMinOptions opt;
        opt.restarts = 8;
        opt.seed = seed;
        CHECK(std::abs(ehmin(s, cfg).value - brute_min(Objective(s), opt)) < 2e-3);
    }
}

TEST_CASE("oracle detection") {
    auto kind = [](const PureState& s) { return detect_oracle(s).kind; };
    CHECK(kind(random_state({3, 2}, 0)) == OracleKind::Bipartite);

    const std::vector<Complex> u{kR, kR};
    const auto ghz = detect_oracle(ghz_state(2, 4, u));
    CHECK(ghz.kind == OracleKind::Ghz);
    CHECK(ghz.value == Approx(std::log(2.0)));

    const std::vector<Complex> c3{std::sqrt(0.2), std::sqrt(0.5), std::sqrt(0.3)};
    CHECK(kind(ghz_state(3, 3, c3)) == OracleKind::Ghz);

    const double r3 = 1.0 / std::sqrt(3.0);
    const std::vector<Complex> w{r3, r3, r3};
    const auto wm = detect_oracle(w_state(w));
    CHECK(wm.kind == OracleKind::W);
    CHECK(wm.value == Approx(std::log(3.0)));

    CHECK(to_string(OracleKind::Bipartite) == "bipartite");
    CHECK(to_string(OracleKind::Ghz) == "ghz");
    CHECK(to_string(OracleKind::W) == "w");

    try {
        (void)detect_oracle(random_state({2, 2, 2}, 3));
        FAIL("expected NoOracleApplicable");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::NoOracleApplicable);
    }
    CHECK_THROWS_AS((void)detect_oracle(random_state({4}, 1)), Error);
}
