#include <doctest.h>

#include <cmath>
#include <complex>
#include <numbers>
#include <random>

#include "radgauge/error.hpp"
#include "radgauge/linalg.hpp"
#include "radgauge/numrange.hpp"
#include "support.hpp"

using namespace rg;

TEST_CASE("numerical_radius examples") {
    auto d = numerical_radius(ComplexMatrix::diagonal({-3, 2}));
    CHECK(d.lo <= 3 + 1e-12);
    CHECK(d.hi >= 3 - 1e-12);
    CHECK(d.hi - d.lo <= kRadiusTol);
    CHECK(std::abs(d.lo - 3) <= 1e-9);

    // oracle: shift has W = disk of radius 1/2
    ComplexMatrix sh{{0, 1}, {0, 0}};
    const double oracle = radius_brute_oracle(sh, 100000);
    CHECK(oracle >= 0.4999);
    CHECK(oracle <= 0.5 + 1e-12);
    auto w = numerical_radius(sh);
    CHECK(std::abs(w.lo - 0.5) <= 1e-8);
    CHECK(std::abs(w.hi - 0.5) <= 1e-8);

    ComplexMatrix s{{1.5, 0.5}, {0.5, 1.5}}, t = ComplexMatrix::scalar(2, 0.5);
    auto e = numerical_radius(s.adjoint() * t);
    CHECK(std::abs(e.lo * e.lo - 1) <= 1e-9);
    CHECK(std::abs(e.hi * e.hi - 1) <= 1e-9);
}

TEST_CASE("numerical_radius witness attains lo") {
    std::mt19937_64 g(31);
    for (int trial = 0; trial < 40; ++trial) {
        ComplexMatrix a = testing_support::gaussian(2 + trial % 5, g);
        auto b = numerical_radius(a);
        CHECK(std::abs(norm(b.witness) - 1) <= 1e-12);
        CHECK(std::abs(rayleigh(a, b.witness)) >= b.lo - 1e-12);
        CHECK(b.lo <= b.hi);
        CHECK(b.hi - b.lo <= kRadiusTol);
        // gauge: first nonzero component real nonnegative
        for (const auto& c : b.witness)
            if (std::abs(c) > 1e-14) {
                CHECK(std::abs(c.imag()) <= 1e-15);
                CHECK(c.real() > 0);
                break;
            }
    }
}

TEST_CASE("numerical_radius bracket properties") {
    std::mt19937_64 g(37);
    std::uniform_real_distribution<double> u(-2, 2);
    for (int trial = 0; trial < 60; ++trial) {
        const std::size_t n = 2 + trial % 4;
        ComplexMatrix a = testing_support::gaussian(n, g);
        auto b = numerical_radius(a);
        const double na = operator_norm(a);
        CHECK(0.5 * na - kRadiusTol <= b.hi);
        CHECK(b.lo <= na + 1e-12);
        if (n <= 3) CHECK(radius_brute_oracle(a, 2000) <= b.hi + 1e-12);

        for (int k : {2, 3}) CHECK(numerical_radius(matrix_power(a, k)).lo <= std::pow(b.hi, k) + 1e-9);

        const cplx c(u(g), u(g));
        auto bc = numerical_radius(c * a);
        CHECK(std::abs(bc.lo - std::abs(c) * b.lo) <= 2 * kRadiusTol * (1 + std::abs(c)));

        ComplexMatrix v = testing_support::random_unitary(n, g);
        std::vector<double> mags(n);
        ComplexMatrix diag(n);
        for (std::size_t i = 0; i < n; ++i) diag(i, i) = cplx(u(g), u(g));
        ComplexMatrix normal = v * diag * v.adjoint();
        auto bn = numerical_radius(normal);
        CHECK(std::abs(bn.lo - operator_norm(normal)) <= 2 * kRadiusTol);
    }
}

TEST_CASE("numerical_radius rejects a too-small tolerance") {
    try {
        numerical_radius(ComplexMatrix::identity(2), 1e-14);
        FAIL("expected BadParameters");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::BadParameters);
    }
}

TEST_CASE("rayleigh") {
    const double r = 1 / std::sqrt(2.0);
    CHECK(std::abs(rayleigh(ComplexMatrix::identity(2), {cplx(0.6), cplx(0, 0.8)}) - cplx(1)) <= 1e-15);
    CHECK(std::abs(rayleigh(ComplexMatrix::diagonal({1, -1}), {r, r})) <= 1e-15);
    CHECK(std::abs(rayleigh(ComplexMatrix{{0, 1}, {0, 0}}, {r, r}) - cplx(0.5)) <= 1e-15);
    try {
        rayleigh(ComplexMatrix::identity(2), {1, 1});
        FAIL("expected NotUnit");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::NotUnit);
    }
}

TEST_CASE("radius_brute_oracle trivial values") {
    CHECK(radius_brute_oracle(ComplexMatrix(3), 100) == 0);
    CHECK(radius_brute_oracle(ComplexMatrix::identity(3), 100) == doctest::Approx(1));
}
