#pragma once

#include <vector>

#include "radgauge/matrix.hpp"
#include "radgauge/scalar_function.hpp"

namespace rg {

// f(|M|)² = f(√(M*M))², one spectral pass
ComplexMatrix squared_function_of_abs(const ComplexMatrix& m, const ScalarFunction& f);

// S_{i,j} = X_i ψ²(|(A_i^j)*|) X_i*,  T_{i,j} = (A_i^{m−j}B_i)* φ²(|A_i^j|) A_i^{m−j}B_i
struct SchwarzTerm {
    int i = 0, j = 0;
    ComplexMatrix S, T;
};
std::vector<SchwarzTerm> schwarz_terms(const std::vector<ComplexMatrix>& x, const std::vector<ComplexMatrix>& a,
                                       const std::vector<ComplexMatrix>& b, int m, const ScalarFunction& psi,
                                       const ScalarFunction& phi);

// lower = C_i^j A_i, upper = D_i C_i^{m−j}
struct PowerTerm {
    int i = 0, j = 0;
    ComplexMatrix lower, upper;
};
std::vector<PowerTerm> power_terms(const std::vector<ComplexMatrix>& d, const std::vector<ComplexMatrix>& c,
                                   const std::vector<ComplexMatrix>& a, int m);

}  // namespace rg
