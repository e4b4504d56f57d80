#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "radgauge/matrix.hpp"
#include "radgauge/scalar_function.hpp"

namespace rg {

struct CaseParams {
    double r = 1;
    double p = 2, q = 2;
    int k = 1;
    int m = 1;
    int n_ops = 1;
    double nu = 0.5, lambda = 0.5, alpha = 0.5, beta = 0.5, mu = 0.5;
    std::optional<double> delta, Delta;  // δ < Δ window
    std::optional<double> m_lo, M_hi;    // m′ < M′ window
    std::optional<double> m_outer, M_outer;
    double r1 = -1, r2 = 1;  // exp_r exponents of the Furuta-type bounds

    double r0() const { return std::min(1 / p, 1 / q); }
    // h′ = M′/m′
    double h_prime() const;

    friend bool operator==(const CaseParams&, const CaseParams&) = default;
};

// Operators, vectors, parameters and functions feeding one bound.
struct InequalityCase {
    std::map<std::string, ComplexMatrix> ops;
    std::map<std::string, std::vector<ComplexMatrix>> families;
    std::map<std::string, CVector> vectors;
    CaseParams params;
    ScalarFunction psi, phi, f;

    std::size_t dim() const;
    const ComplexMatrix& op(const std::string& name) const;
    const std::vector<ComplexMatrix>& family(const std::string& name) const;
    const CVector& vec(const std::string& name) const;
    bool has_op(const std::string& name) const { return ops.count(name) != 0; }

    // shared dimension, family lengths = n_ops, conjugacy of (p, q)
    void validate() const;
};

void require_conjugate(double p, double q);

}  // namespace rg
