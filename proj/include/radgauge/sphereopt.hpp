#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "radgauge/case.hpp"
#include "radgauge/matrix.hpp"
#include "radgauge/scalar_function.hpp"

namespace rg {

enum class FunctionalKind { RHO, PSI_N1, ETA_N3, OMEGA_SCH2, GAMMA_PSI, SUPQ_DEFICIT, CUSTOM };

std::string functional_name(FunctionalKind k);

// One squared gap (⟨Mξ,ξ⟩^a − ⟨Nξ,ξ⟩^b)², or the pair (M, N) of a γ(ψ) integrand.
struct FormPair {
    ComplexMatrix first, second;
    double exp_first = 1, exp_second = 1;
};

// Real-valued function on the complex unit sphere.
struct SphereFunctional {
    FunctionalKind kind = FunctionalKind::CUSTOM;
    std::size_t dim = 0;
    double scale = 1;
    std::vector<FormPair> pairs;
    ComplexMatrix deficit;  // SUPQ_DEFICIT: ψ(‖A‖I − |A|)
    ScalarFunction psi;     // GAMMA_PSI
    std::function<double(const CVector&)> custom;

    double operator()(const CVector& xi) const;
    // Real gradient packed as ∂/∂Re ξ + i ∂/∂Im ξ. Returns false for CUSTOM.
    bool gradient(const CVector& xi, CVector& g) const;
};

struct SphereOptOptions {
    int restarts = 32;
    double tol = 1e-8;
    int max_iter = 500;
    std::uint64_t seed = 0x5eed5eedULL;
    bool polish = true;
    bool lattice = true;  // dim-2 angular lattice
};

struct SphereOptResult {
    double value = 0;
    CVector witness;
    long evaluations = 0;
    bool converged = false;
};

// (ξ ↦ Σ_k scale·(⟨M_kξ,ξ⟩^a − ⟨N_kξ,ξ⟩^b)²)
SphereFunctional make_gap_functional(FunctionalKind kind, std::vector<FormPair> pairs, double scale);
// ψ(⟨Mξ,ξ⟩) + ψ(⟨Nξ,ξ⟩) − 2ψ((⟨Mξ,ξ⟩ + ⟨Nξ,ξ⟩)/2)
SphereFunctional make_gamma_functional(const ComplexMatrix& m, const ComplexMatrix& n, const ScalarFunction& psi);
// ⟨ψ(‖A‖I − |A|)ξ,ξ⟩
SphereFunctional make_supq_deficit(const ComplexMatrix& a, const ScalarFunction& psi);
SphereFunctional make_custom_functional(std::size_t dim, std::function<double(const CVector&)> f);

// Correction functional of the theorem owning `kind`, from the case's operators and parameters.
SphereFunctional build_correction_functional(FunctionalKind kind, const InequalityCase& c);

SphereOptResult infimum_unit_sphere(const SphereFunctional& f, const SphereOptOptions& opts = {});

}  // namespace rg
