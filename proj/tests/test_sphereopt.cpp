#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "radgauge/error.hpp"
#include "radgauge/linalg.hpp"
#include "radgauge/sphereopt.hpp"
#include "support.hpp"

using namespace rg;
using testing_support::gaussian;
using testing_support::random_psd;
using testing_support::random_unit;

namespace {

// ξ = (e^{ic} cos a, e^{ib} sin a), coarse grid then zoom
double lattice3(const SphereFunctional& f, int n) {
    const double hp = 0.5 * std::numbers::pi, tp = 2 * std::numbers::pi;
    auto at = [](double a, double b, double c) { return CVector{std::polar(std::cos(a), c), std::polar(std::sin(a), b)}; };
    double best = INFINITY, ba = 0, bb = 0, bc = 0;
    for (int i = 0; i <= n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < 4; ++k) {
                const double a = hp * i / n, b = tp * j / n, c = tp * k / 4;
                const double v = f(at(a, b, c));
                if (v < best) best = v, ba = a, bb = b, bc = c;
            }
    double wa = hp / n, wb = tp / n;
    for (int round = 0; round < 8; ++round) {
        const double ca = ba, cb = bb;
        for (int i = -6; i <= 6; ++i)
            for (int j = -6; j <= 6; ++j) {
                const double a = std::clamp(ca + wa * i / 6, 0.0, hp), b = cb + wb * j / 6;
                const double v = f(at(a, b, bc));
                if (v < best) best = v, ba = a, bb = b;
            }
        wa /= 4;
        wb /= 4;
    }
    return best;
}

// closed-form 2×2 PSD square root
ComplexMatrix sqrt2(const ComplexMatrix& m) {
    const double det = std::max(0.0, (m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0)).real());
    const double s = std::sqrt(det);
    const double t = std::sqrt(m.trace().real() + 2 * s);
    ComplexMatrix r = m + ComplexMatrix::scalar(2, s);
    return (1 / t) * r;
}

InequalityCase schwarz_case(std::size_t n, int n_ops, int m, std::mt19937_64& g) {
    InequalityCase c;
    for (const char* name : {"X", "A", "B"})
        for (int i = 0; i < n_ops; ++i) {
            ComplexMatrix z = gaussian(n, g);
            c.families[name].push_back((1 / operator_norm(z)) * z);
        }
    c.params.n_ops = n_ops;
    c.params.m = m;
    c.psi = ScalarFunction::power(0.5);
    c.phi = ScalarFunction::power(0.5);
    return c;
}

InequalityCase four_op_case(std::size_t n, std::mt19937_64& g) {
    InequalityCase c;
    for (const char* name : {"A", "B", "C", "D"}) {
        ComplexMatrix z = gaussian(n, g);
        c.ops[name] = (1 / operator_norm(z)) * z;
        c.families[name].push_back(c.ops[name]);
    }
    c.params.m = 2;
    c.psi = ScalarFunction::power(2);
    return c;
}

std::vector<SphereFunctional> built_functionals(std::size_t n, std::mt19937_64& g) {
    std::vector<SphereFunctional> fs;
    InequalityCase s = schwarz_case(n, 2, 2, g);
    s.params.p = 3;
    s.params.q = 1.5;
    s.params.r = 1.5;
    s.params.k = 2;
    fs.push_back(build_correction_functional(FunctionalKind::RHO, s));
    fs.push_back(build_correction_functional(FunctionalKind::OMEGA_SCH2, s));
    InequalityCase c = four_op_case(n, g);
    fs.push_back(build_correction_functional(FunctionalKind::PSI_N1, c));
    c.params.k = 2;
    fs.push_back(build_correction_functional(FunctionalKind::ETA_N3, c));
    c.params.nu = 0.3;
    fs.push_back(build_correction_functional(FunctionalKind::GAMMA_PSI, c));
    fs.push_back(build_correction_functional(FunctionalKind::SUPQ_DEFICIT, c));
    return fs;
}

}  // namespace

TEST_CASE("sphereopt trivial infima") {
    auto id = make_custom_functional(3, [](const CVector& x) { return quad_form(ComplexMatrix::identity(3), x); });
    CHECK(std::abs(infimum_unit_sphere(id).value - 1) <= 1e-10);

    const ComplexMatrix d = ComplexMatrix::diagonal({1, 2});
    auto r = infimum_unit_sphere(make_custom_functional(2, [&](const CVector& x) { return quad_form(d, x); }));
    CHECK(std::abs(r.value - 1) <= 1e-8);
    CHECK(std::abs(std::abs(r.witness[0]) - 1) <= 1e-4);

    // same infimum through the analytic-gradient path
    SphereFunctional q;
    q.kind = FunctionalKind::SUPQ_DEFICIT;
    q.dim = 4;
    q.deficit = ComplexMatrix::diagonal({3, 1.25, 2, 5});
    CHECK(std::abs(infimum_unit_sphere(q).value - 1.25) <= 1e-8);
}

TEST_CASE("sphereopt identically zero functionals") {
    std::mt19937_64 g(5);
    InequalityCase c;
    c.families["X"] = {ComplexMatrix::identity(3)};
    c.families["B"] = {ComplexMatrix::identity(3)};
    c.families["A"] = {random_psd(3, g)};
    c.psi = ScalarFunction::power(0.5);
    c.phi = ScalarFunction::power(0.5);
    auto rho = build_correction_functional(FunctionalKind::RHO, c);
    for (int t = 0; t < 50; ++t) CHECK(std::abs(rho(random_unit(3, g))) <= 1e-12);

    auto supq = make_supq_deficit(ComplexMatrix::scalar(3, cplx(0, 2)), ScalarFunction::power(2));
    for (int t = 0; t < 50; ++t) CHECK(std::abs(supq(random_unit(3, g))) <= 1e-12);

    const ComplexMatrix p = random_psd(3, g);
    auto gam = make_gamma_functional(p, p, ScalarFunction::power(3));
    for (int t = 0; t < 50; ++t) CHECK(std::abs(gam(random_unit(3, g))) <= 1e-10);
}

TEST_CASE("RHO functional against a closed-form evaluation") {
    std::mt19937_64 g(17);
    for (int trial = 0; trial < 30; ++trial) {
        ComplexMatrix a = gaussian(2, g);
        InequalityCase c;
        c.families["X"] = {ComplexMatrix::identity(2)};
        c.families["B"] = {ComplexMatrix::identity(2)};
        c.families["A"] = {a};
        c.psi = ScalarFunction::power(0.5);
        c.phi = ScalarFunction::power(0.5);
        c.params.p = 4;
        c.params.q = 4.0 / 3;
        auto f = build_correction_functional(FunctionalKind::RHO, c);
        const ComplexMatrix s = sqrt2(a * a.adjoint()), t = sqrt2(a.adjoint() * a);
        for (int k = 0; k < 10; ++k) {
            const CVector x = random_unit(2, g);
            const double d = std::pow(quad_form(s, x), 2) - std::pow(quad_form(t, x), 2.0 / 3);
            CHECK(std::abs(f(x) - d * d) <= 1e-10 * (1 + d * d));
        }
    }
}

TEST_CASE("build_correction_functional rejects non-conjugate exponents") {
    std::mt19937_64 g(2);
    InequalityCase c = schwarz_case(2, 1, 1, g);
    c.params.p = 3;
    c.params.q = 2;
    CHECK_THROWS_AS(build_correction_functional(FunctionalKind::RHO, c), Error);
    CHECK_THROWS_AS(build_correction_functional(FunctionalKind::CUSTOM, c), Error);
}

TEST_CASE("analytic gradients match finite differences") {
    std::mt19937_64 g(23);
    for (const auto& f : built_functionals(3, g)) {
        for (int t = 0; t < 5; ++t) {
            const CVector x = random_unit(3, g);
            CVector grad;
            REQUIRE(f.gradient(x, grad));
            const double h = 1e-6;
            for (std::size_t i = 0; i < x.size(); ++i) {
                CVector xp = x, xm = x;
                xp[i] += h;
                xm[i] -= h;
                const double dre = (f(xp) - f(xm)) / (2 * h);
                xp = x;
                xm = x;
                xp[i] += cplx(0, h);
                xm[i] -= cplx(0, h);
                const double dim = (f(xp) - f(xm)) / (2 * h);
                CHECK(std::abs(grad[i].real() - dre) <= 1e-5 * (1 + std::abs(dre)));
                CHECK(std::abs(grad[i].imag() - dim) <= 1e-5 * (1 + std::abs(dim)));
            }
        }
    }
}

TEST_CASE("sphereopt result properties") {
    std::mt19937_64 g(41);
    for (std::size_t n : {2u, 3u, 4u}) {
        auto fs = built_functionals(n, g);
        for (std::size_t k = 0; k < fs.size(); ++k) {
            const auto& f = fs[k];
            SphereOptOptions o;
            o.restarts = 8;
            auto r = infimum_unit_sphere(f, o);
            CHECK(std::abs(norm(r.witness) - 1) <= 1e-12);
            CHECK(std::abs(f(r.witness) - r.value) <= 1e-10);
            if (f.kind != FunctionalKind::GAMMA_PSI) CHECK(r.value >= -1e-12);
            double probe_min = INFINITY;
            for (int t = 0; t < 10000; ++t) {
                const CVector x = random_unit(n, g);
                probe_min = std::min(probe_min, f(x));
                if (t < 20) {
                    CVector y = x;
                    const cplx ph = std::polar(1.0, 2.0 * t);
                    for (auto& v : y) v *= ph;
                    CHECK(std::abs(f(y) - f(x)) <= 1e-12 * (1 + std::abs(f(x))));
                }
            }
            CHECK(r.value <= probe_min + 1e-12);
        }
    }
}

TEST_CASE("sphereopt agrees with a three-angle lattice in dim 2") {
    std::mt19937_64 g(59);
    for (int trial = 0; trial < 12; ++trial) {
        for (const auto& f : built_functionals(2, g)) {
            auto r = infimum_unit_sphere(f);
            const double oracle = lattice3(f, 120);
            CHECK(r.value <= oracle + 1e-12);
            CHECK(std::abs(r.value - oracle) <= 1e-4 * (1 + std::abs(r.value)));
        }
    }
}

TEST_CASE("sphereopt is deterministic") {
    std::mt19937_64 g(3);
    auto f = built_functionals(3, g).front();
    auto a = infimum_unit_sphere(f), b = infimum_unit_sphere(f);
    CHECK(a.value == b.value);
    CHECK(a.evaluations == b.evaluations);
    CHECK_THROWS_AS(infimum_unit_sphere(f, SphereOptOptions{.restarts = 0}), Error);
}
