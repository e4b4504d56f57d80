#include "radgauge/scalar_lemmas.hpp"

#include <algorithm>
#include <cmath>

#include "radgauge/case.hpp"
#include "radgauge/error.hpp"

namespace rg {

ScalarCheck make_check(double lhs, double rhs) {
    const double slack = rhs - lhs;
    return {lhs, rhs, slack, slack >= -1e-12 * std::max(1.0, std::abs(rhs))};
}

namespace {

void require(bool ok, const char* what) {
    if (!ok) throw Error(Errc::DomainError, what);
}

}  // namespace

std::pair<ScalarCheck, ScalarCheck> jensen_chain(double sigma, double tau, double alpha, double r) {
    require(sigma > 0 && tau > 0, "σ, τ must be positive");
    require(alpha >= 0 && alpha <= 1, "α must lie in [0,1]");
    require(r >= 1, "r must be at least 1");
    const double arith = alpha * sigma + (1 - alpha) * tau;
    const double geo = std::pow(sigma, alpha) * std::pow(tau, 1 - alpha);
    const double power = std::pow(alpha * std::pow(sigma, r) + (1 - alpha) * std::pow(tau, r), 1 / r);
    return {make_check(geo, arith), make_check(arith, power)};
}

ScalarCheck young_refined(double sigma, double tau, double p, double q) {
    require_conjugate(p, q);
    require(sigma > 0 && tau > 0, "σ, τ must be positive");
    const double r0 = std::min(1 / p, 1 / q);
    const double d = std::pow(sigma, p / 2) - std::pow(tau, q / 2);
    return make_check(sigma * tau + r0 * d * d, std::pow(sigma, p) / p + std::pow(tau, q) / q);
}

ScalarCheck young_plain(double sigma, double tau, double p, double q) {
    require_conjugate(p, q);
    return make_check(sigma * tau, std::pow(sigma, p) / p + std::pow(tau, q) / q);
}

ScalarCheck young_generalized(double sigma, double tau, double p, double q, int m, double r) {
    require_conjugate(p, q);
    require(sigma > 0 && tau > 0, "σ, τ must be positive");
    require(m >= 1, "m must be a positive integer");
    require(r >= 1, "r must be at least 1");
    const double r0 = std::min(1 / p, 1 / q);
    const double d = std::pow(sigma, m / 2.0) - std::pow(tau, m / 2.0);
    const double lhs = std::pow(std::pow(sigma, 1 / p) * std::pow(tau, 1 / q), m) + std::pow(r0, m) * d * d;
    const double rhs = std::pow(std::pow(sigma, r) / p + std::pow(tau, r) / q, m / r);
    return make_check(lhs, rhs);
}

ScalarCheck young_generalized_half(double sigma, double tau, int m, double r) {
    return young_generalized(sigma, tau, 2, 2, m, r);
}

ScalarCheck young_generalized_simple(double sigma, double tau, double r) {
    return young_generalized(sigma, tau, 2, 2, 1, r);
}

ScalarCheck agm_refined(double mu, double nu, double delta, double Delta) {
    require(mu > 0 && nu > 0, "μ, ν must be positive");
    const double lo = std::min(mu, nu), hi = std::max(mu, nu);
    if (!(lo <= delta && delta + 1e-12 < Delta && Delta <= hi))
        throw Error(Errc::BadWindow, "need min(μ,ν) ≤ δ < Δ ≤ max(μ,ν)");
    const double lhs = (Delta + delta) / (2 * std::sqrt(delta * Delta)) * std::sqrt(mu * nu);
    return make_check(lhs, 0.5 * (mu + nu));
}

ScalarCheck power_sum_convexity(const std::vector<double>& sigma, double r) {
    require(!sigma.empty(), "empty sample");
    require(r >= 1, "r must be at least 1");
    double sum = 0, pw = 0;
    for (double s : sigma) {
        require(s > 0, "σᵢ must be positive");
        sum += s;
        pw += std::pow(s, r);
    }
    return make_check(std::pow(sum, r), std::pow(double(sigma.size()), r - 1) * pw);
}

ScalarCheck superquadratic_gap(const ScalarFunction& f, double t, double xi) {
    if (!f.flags().superquadratic) throw Error(Errc::NotSuperquadratic, f.describe() + " is not superquadratic");
    require(t >= 0 && xi >= 0, "t, ξ must be nonnegative");
    const double lhs = f(xi) + f.derivative(xi) * (t - xi) + f(std::abs(t - xi));
    return make_check(lhs, f(t));
}

ScalarCheck subadditivity_gap(const ScalarFunction& f, double alpha, double t) {
    const auto& fl = f.flags();
    if (!(fl.nonnegative && fl.increasing && fl.convex && fl.zero_at_zero))
        throw Error(Errc::BadFunction, f.describe() + " must be nonnegative, increasing, convex with f(0) = 0");
    require(alpha >= 0 && alpha <= 1, "α must lie in [0,1]");
    require(t >= 0, "t must be nonnegative");
    return make_check(f(alpha * t), alpha * f(t));
}

}  // namespace rg
