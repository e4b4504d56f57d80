#pragma once

#include <utility>
#include <vector>

#include "radgauge/scalar_function.hpp"

namespace rg {

struct ScalarCheck {
    double lhs = 0, rhs = 0, slack = 0;
    bool holds = true;
};

// slack = rhs − lhs, holds iff slack ≥ −1e−12·max(1,|rhs|)
ScalarCheck make_check(double lhs, double rhs);

// σ^α τ^{1−α} ≤ ασ + (1−α)τ ≤ (ασ^r + (1−α)τ^r)^{1/r}
std::pair<ScalarCheck, ScalarCheck> jensen_chain(double sigma, double tau, double alpha, double r);

// στ + r₀(σ^{p/2} − τ^{q/2})² ≤ σ^p/p + τ^q/q
ScalarCheck young_refined(double sigma, double tau, double p, double q);
// plain Young, for comparison
ScalarCheck young_plain(double sigma, double tau, double p, double q);

// (σ^{1/p}τ^{1/q})^m + r₀^m(σ^{m/2} − τ^{m/2})² ≤ (σ^r/p + τ^r/q)^{m/r}
ScalarCheck young_generalized(double sigma, double tau, double p, double q, int m, double r);
ScalarCheck young_generalized_half(double sigma, double tau, int m, double r);  // p = q = 2
ScalarCheck young_generalized_simple(double sigma, double tau, double r);       // p = q = 2, m = 1

// ((Δ+δ)/(2√(δΔ)))·√(μν) ≤ (μ+ν)/2 for min(μ,ν) ≤ δ < Δ ≤ max(μ,ν)
ScalarCheck agm_refined(double mu, double nu, double delta, double Delta);

// (Σσᵢ)^r ≤ n^{r−1}Σσᵢ^r
ScalarCheck power_sum_convexity(const std::vector<double>& sigma, double r);

// f(ξ) + f′(ξ)(t−ξ) + f(|t−ξ|) ≤ f(t)
ScalarCheck superquadratic_gap(const ScalarFunction& f, double t, double xi);

// f(αt) ≤ αf(t)
ScalarCheck subadditivity_gap(const ScalarFunction& f, double alpha, double t);

}  // namespace rg
