#pragma once

#include <cstdint>

#include "radgauge/matrix.hpp"

namespace rg {

inline constexpr double kRadiusTol = 1e-9;
inline constexpr int kRadiusGrid = 96;

struct RadiusBracket {
    double lo = 0;
    double hi = 0;
    double argmax_theta = 0;
    CVector witness;
    int evaluations = 0;
};

// w(A) = max_θ λ_max((e^{iθ}A + e^{−iθ}A*)/2). lo is attained by the witness;
// hi comes from the outer polygon cut out by the support lines evaluated so far.
RadiusBracket numerical_radius(const ComplexMatrix& a, double tol = kRadiusTol);

cplx rayleigh(const ComplexMatrix& a, const CVector& xi);

// Sampling lower bound on w(A), independent of numerical_radius: random probes
// (plus an angular lattice for dim 2) followed by a random-direction local ascent.
double radius_brute_oracle(const ComplexMatrix& a, int samples, std::uint64_t seed = 0x9e3779b97f4a7c15ULL);

// first nonzero component made real and nonnegative
void fix_phase(CVector& v);

}  // namespace rg
