#include <doctest.h>

#include <cmath>
#include <random>

#include "radgauge/error.hpp"
#include "radgauge/linalg.hpp"
#include "support.hpp"

using namespace rg;
using testing_support::dist;

namespace {

// roots of λ² − tr·λ + det for a 2×2 Hermitian matrix
std::pair<double, double> char_poly_roots(const ComplexMatrix& h) {
    const double tr = (h(0, 0) + h(1, 1)).real();
    const double det = (h(0, 0) * h(1, 1) - h(0, 1) * h(1, 0)).real();
    const double disc = std::sqrt(std::max(0.0, tr * tr - 4 * det));
    return {(tr - disc) / 2, (tr + disc) / 2};
}

double eig_residual(const ComplexMatrix& h, const SpectralDecomposition& s) {
    ComplexMatrix hv = h * s.vectors;
    ComplexMatrix vd = s.vectors * ComplexMatrix::diagonal(s.values);
    return operator_norm(hv - vd);
}

}  // namespace

TEST_CASE("hermitian_eig small examples") {
    auto d = hermitian_eig(ComplexMatrix::diagonal({3, 1}));
    CHECK(d.values[0] == doctest::Approx(1));
    CHECK(d.values[1] == doctest::Approx(3));

    ComplexMatrix h{{2.5, 1.5}, {1.5, 2.5}};
    auto [r0, r1] = char_poly_roots(h);
    CHECK(r0 == doctest::Approx(1).epsilon(1e-14));
    CHECK(r1 == doctest::Approx(4).epsilon(1e-14));
    auto e = hermitian_eig(h);
    CHECK(std::abs(e.values[0] - r0) < 1e-13);
    CHECK(std::abs(e.values[1] - r1) < 1e-13);

    auto sw = hermitian_eig(ComplexMatrix{{0, 1}, {1, 0}});
    CHECK(sw.values[0] == doctest::Approx(-1));
    CHECK(sw.values[1] == doctest::Approx(1));
}

TEST_CASE("hermitian_eig rejects non-Hermitian input") {
    ComplexMatrix a{{0, 1}, {0, 0}};
    try {
        hermitian_eig(a);
        FAIL("expected NotHermitian");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::NotHermitian);
    }
}

TEST_CASE("hermitian_eig residual and orthogonality on random input") {
    std::mt19937_64 g(11);
    for (int trial = 0; trial < 60; ++trial) {
        const std::size_t n = 1 + trial % 12;
        ComplexMatrix h = testing_support::random_hermitian(n, g);
        auto s = hermitian_eig(h);
        const double hn = operator_norm(h);
        CHECK(eig_residual(h, s) <= 1e-11 * hn);
        CHECK(operator_norm(adjoint_times(s.vectors, s.vectors) - ComplexMatrix::identity(n)) <= 1e-12);
        for (std::size_t k = 1; k < n; ++k) CHECK(s.values[k - 1] <= s.values[k]);
        if (n == 2) {
            auto [r0, r1] = char_poly_roots(h);
            CHECK(std::abs(s.values[0] - r0) <= 1e-12 * hn);
            CHECK(std::abs(s.values[1] - r1) <= 1e-12 * hn);
        }
    }
}

TEST_CASE("hermitian_eig handles repeated and zero spectra") {
    auto z = hermitian_eig(ComplexMatrix(3));
    for (double v : z.values) CHECK(v == 0);
    std::mt19937_64 g(3);
    ComplexMatrix u = testing_support::random_unitary(4, g);
    ComplexMatrix h = u * ComplexMatrix::diagonal({2, 2, 2, -1}) * u.adjoint();
    auto s = hermitian_eig(h);
    CHECK(s.values[0] == doctest::Approx(-1).epsilon(1e-13));
    for (int k = 1; k < 4; ++k) CHECK(s.values[k] == doctest::Approx(2).epsilon(1e-13));
    CHECK(eig_residual(h, s) <= 1e-12);
}

TEST_CASE("operator_norm examples and properties") {
    std::mt19937_64 g(5);
    CHECK(operator_norm(testing_support::random_unitary(4, g)) == doctest::Approx(1).epsilon(1e-13));
    CHECK(operator_norm(ComplexMatrix(3)) == 0);

    ComplexMatrix s{{1.5, 0.5}, {0.5, 1.5}};
    ComplexMatrix t{{0.5, 0}, {0, 0.5}};
    ComplexMatrix m = abs_power(s, 4) + abs_power(t, 4);
    CHECK(std::abs(operator_norm(m) - 16.0625) <= 1e-12);

    for (int trial = 0; trial < 50; ++trial) {
        const std::size_t n = 1 + trial % 6;
        ComplexMatrix a = testing_support::gaussian(n, g), b = testing_support::gaussian(n, g);
        CHECK(operator_norm(a * b) <= operator_norm(a) * operator_norm(b) + 1e-10);
        ComplexMatrix u = testing_support::random_unitary(n, g), w = testing_support::random_unitary(n, g);
        CHECK(std::abs(operator_norm(u * a * w) - operator_norm(a)) <= 1e-10);
        // ‖A‖ ≥ |⟨Ax, y⟩| for unit x, y
        CVector x = testing_support::random_unit(n, g), y = testing_support::random_unit(n, g);
        CHECK(std::abs(inner(a * x, y)) <= operator_norm(a) + 1e-12);
    }
}

TEST_CASE("abs_op examples") {
    ComplexMatrix p{{2, 1}, {1, 2}};
    CHECK(dist(abs_op(p), p) <= 1e-13);
    CHECK(dist(abs_op(ComplexMatrix{{0, 1}, {0, 0}}), ComplexMatrix::diagonal({0, 1})) <= 1e-14);
    ComplexMatrix t = ComplexMatrix::scalar(2, 0.5);
    CHECK(dist(abs_op(t), t) <= 1e-14);
}

TEST_CASE("abs_op square and idempotence") {
    std::mt19937_64 g(8);
    for (int trial = 0; trial < 40; ++trial) {
        const std::size_t n = 1 + trial % 7;
        ComplexMatrix a = testing_support::gaussian(n, g);
        ComplexMatrix r = abs_op(a);
        CHECK(lambda_min(r) >= -1e-12);
        CHECK(dist(r * r, adjoint_times(a, a)) <= 1e-10 * (1 + operator_norm(a) * operator_norm(a)));
        CHECK(dist(abs_op(r), r) <= 1e-10 * (1 + operator_norm(a)));
    }
}

TEST_CASE("matrix_function examples") {
    ComplexMatrix p = ComplexMatrix::diagonal({1, 2});
    CHECK(dist(matrix_function(p, ScalarFunction::power(1)), p) <= 1e-14);
    CHECK(dist(matrix_function(p, ScalarFunction::power(2)), ComplexMatrix::diagonal({1, 4})) <= 1e-13);
    CHECK(dist(matrix_function(ComplexMatrix::diagonal({4, 9}), ScalarFunction::power(0.5)),
               ComplexMatrix::diagonal({2, 3})) <= 1e-13);
    try {
        matrix_function(ComplexMatrix::diagonal({0, 1}), ScalarFunction::power(-1));
        FAIL("expected DomainError");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::DomainError);
    }
    try {
        matrix_function(ComplexMatrix::diagonal({-1, 1}), ScalarFunction::power(2));
        FAIL("expected DomainError");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::DomainError);
    }
}

TEST_CASE("matrix_function commutes with unitary conjugation") {
    std::mt19937_64 g(13);
    for (int trial = 0; trial < 40; ++trial) {
        const std::size_t n = 1 + trial % 6;
        ComplexMatrix p = testing_support::random_psd(n, g);
        ComplexMatrix v = testing_support::random_unitary(n, g);
        for (double r : {0.3, 1.0, 2.5}) {
            ScalarFunction f = ScalarFunction::power(r);
            ComplexMatrix fp = matrix_function(p, f);
            ComplexMatrix lhs = matrix_function(v * p * v.adjoint(), f);
            CHECK(dist(lhs, v * fp * v.adjoint()) <= 1e-9 * operator_norm(fp));
        }
    }
}

TEST_CASE("polar_decomposition examples") {
    std::mt19937_64 g(17);
    ComplexMatrix u = testing_support::random_unitary(3, g);
    auto pu = polar_decomposition(u);
    CHECK(dist(pu.U, u) <= 1e-12);
    CHECK(dist(pu.P, ComplexMatrix::identity(3)) <= 1e-12);

    ComplexMatrix sh{{0, 1}, {0, 0}};
    auto ps = polar_decomposition(sh);
    CHECK(dist(ps.U, sh) <= 1e-14);
    CHECK(dist(ps.P, ComplexMatrix::diagonal({0, 1})) <= 1e-14);
    CHECK(dist(ps.U * ps.P, sh) <= 1e-14);
    CHECK(dist(adjoint_times(ps.U, ps.U), ComplexMatrix::diagonal({0, 1})) <= 1e-14);

    auto p1 = polar_decomposition(ComplexMatrix{{-2}});
    CHECK(std::abs(p1.U(0, 0) - cplx(-1)) <= 1e-15);
    CHECK(std::abs(p1.P(0, 0) - cplx(2)) <= 1e-15);
}

TEST_CASE("polar_decomposition reconstruction and partial isometry") {
    std::mt19937_64 g(19);
    for (int trial = 0; trial < 100; ++trial) {
        const std::size_t n = 1 + trial % 8;
        ComplexMatrix a = testing_support::gaussian(n, g);
        if (trial % 5 == 0 && n > 1) {
            // rank deficient: kill one column
            for (std::size_t i = 0; i < n; ++i) a(i, 0) = 0;
        }
        auto p = polar_decomposition(a);
        CHECK(dist(p.U * p.P, a) <= 1e-10 * (1 + operator_norm(a)));
        CHECK(dist(p.P, abs_op(a)) <= 1e-10 * (1 + operator_norm(a)));
        // U*U restricted to ran P is the identity
        ComplexMatrix uu = adjoint_times(p.U, p.U);
        CHECK(dist(uu * p.P, p.P) <= 1e-9 * (1 + operator_norm(a)));
    }
}

TEST_CASE("weighted_means examples") {
    std::mt19937_64 g(23);
    ComplexMatrix t = testing_support::random_psd(3, g) + ComplexMatrix::identity(3);
    auto same = weighted_means(t, t, 0.3);
    CHECK(dist(same.nabla, t) <= 1e-12 * operator_norm(t));
    CHECK(dist(same.sharp, t) <= 1e-12 * operator_norm(t));

    auto sc = weighted_means(ComplexMatrix{{1}}, ComplexMatrix{{4}}, 0.5);
    CHECK(sc.nabla(0, 0).real() == doctest::Approx(2.5));
    CHECK(sc.sharp(0, 0).real() == doctest::Approx(2));

    auto d = weighted_means(ComplexMatrix::identity(2), ComplexMatrix::diagonal({4, 9}), 0.5);
    CHECK(dist(d.sharp, ComplexMatrix::diagonal({2, 3})) <= 1e-13);

    auto printed = weighted_means(ComplexMatrix{{1}}, ComplexMatrix{{4}}, 0.25, MeanConvention::AsPrinted);
    CHECK(printed.nabla(0, 0).real() == doctest::Approx(0.25 * 1 + 0.75 * 4));

    try {
        weighted_means(ComplexMatrix::diagonal({0, 1}), ComplexMatrix::identity(2), 0.5);
        FAIL("expected NotInvertible");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::NotInvertible);
    }
}

TEST_CASE("weighted_means scalar reduction and AM-GM ordering") {
    std::mt19937_64 g(29);
    std::uniform_real_distribution<double> u(0.05, 10), w(0, 1);
    for (int trial = 0; trial < 200; ++trial) {
        const double t = u(g), s = u(g), nu = w(g);
        auto m = weighted_means(ComplexMatrix{{t}}, ComplexMatrix{{s}}, nu);
        CHECK(std::abs(m.nabla(0, 0).real() - ((1 - nu) * t + nu * s)) <= 1e-12 * (1 + t + s));
        CHECK(std::abs(m.sharp(0, 0).real() - std::pow(t, 1 - nu) * std::pow(s, nu)) <= 1e-12 * (1 + t + s));
    }
    for (int trial = 0; trial < 40; ++trial) {
        const std::size_t n = 2 + trial % 4;
        ComplexMatrix t = testing_support::random_psd(n, g) + 0.1 * ComplexMatrix::identity(n);
        ComplexMatrix s = testing_support::random_psd(n, g);
        auto m = weighted_means(t, s, w(g));
        CHECK(lambda_min(m.nabla - m.sharp) >= -1e-10 * operator_norm(m.nabla));
    }
}

TEST_CASE("exp_r_scalar") {
    CHECK(exp_r_scalar(1, 3) == doctest::Approx(4));
    CHECK(exp_r_scalar(-1, 0.5) == doctest::Approx(2));
    try {
        exp_r_scalar(-1, 1);
        FAIL("expected Undefined");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::Undefined);
    }
    try {
        exp_r_scalar(0, 1);
        FAIL("expected BadParameters");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::BadParameters);
    }
    // r → 0 approaches e^x
    CHECK(exp_r_scalar(1e-8, 1.0) == doctest::Approx(std::exp(1.0)).epsilon(1e-6));
}

TEST_CASE("scalar functions carry derived flags") {
    auto p1 = ScalarFunction::power(1.5);
    CHECK(p1.flags().convex);
    CHECK(p1.flags().increasing);
    CHECK(p1.flags().nonnegative);
    CHECK_FALSE(p1.flags().superquadratic);
    CHECK(ScalarFunction::power(2).flags().superquadratic);
    CHECK_FALSE(ScalarFunction::power(0.5).flags().convex);
    CHECK(ScalarFunction::power(3)(2) == doctest::Approx(8));
    CHECK(ScalarFunction::power(3).derivative(2) == doctest::Approx(12));

    ScalarFunction::Flags f;
    f.nonnegative = f.increasing = f.convex = f.zero_at_zero = true;
    auto tab = ScalarFunction::table({0, 1, 2}, {0, 1, 4}, f);
    CHECK(tab(1.5) == doctest::Approx(2.5));
    CHECK(tab.derivative(1.5) == doctest::Approx(3));
    CHECK(tab.flags() == f);
    try {
        tab(3);
        FAIL("expected DomainError");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::DomainError);
    }
    auto ap = ScalarFunction::affine_power(2, 2, 1);
    CHECK(ap(3) == doctest::Approx(19));
    CHECK_FALSE(ap.flags().zero_at_zero);
}
