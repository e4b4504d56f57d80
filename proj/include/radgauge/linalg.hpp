#pragma once

#include <vector>

#include "radgauge/matrix.hpp"
#include "radgauge/scalar_function.hpp"

namespace rg {

inline constexpr double kHermTol = 1e-10;
inline constexpr double kEigTol = 1e-12;
inline constexpr int kMaxSweeps = 60;
inline constexpr double kPsdClipTol = 1e-10;
inline constexpr double kSingularCut = 1e-12;
inline constexpr double kInvTol = 1e-12;

struct SpectralDecomposition {
    std::vector<double> values;  // ascending
    ComplexMatrix vectors;       // columns
};

struct PolarFactors {
    ComplexMatrix U;
    ComplexMatrix P;
};

struct SingularValueDecomposition {
    std::vector<double> sigma;  // descending
    ComplexMatrix U, V;         // A = U diag(sigma) V*, columns of U zero where sigma = 0
};

struct WeightedMeans {
    ComplexMatrix nabla;
    ComplexMatrix sharp;
};

enum class MeanConvention { Corrected, AsPrinted };

SpectralDecomposition hermitian_eig(const ComplexMatrix& h);
// eigenvalues only, ascending
std::vector<double> hermitian_eigenvalues(const ComplexMatrix& h);
double lambda_max(const ComplexMatrix& h);
double lambda_min(const ComplexMatrix& h);

double operator_norm(const ComplexMatrix& a);
SingularValueDecomposition svd(const ComplexMatrix& a);

ComplexMatrix abs_op(const ComplexMatrix& a);
// |A|^e computed as (A*A)^{e/2} in one spectral pass
ComplexMatrix abs_power(const ComplexMatrix& a, double e);

ComplexMatrix matrix_function(const ComplexMatrix& p, const ScalarFunction& f);
ComplexMatrix psd_power(const ComplexMatrix& p, double e);
// V diag(d) V*
ComplexMatrix reconstruct(const ComplexMatrix& v, const std::vector<double>& d);

PolarFactors polar_decomposition(const ComplexMatrix& a);

WeightedMeans weighted_means(const ComplexMatrix& t, const ComplexMatrix& s, double nu,
                             MeanConvention conv = MeanConvention::Corrected);

double exp_r_scalar(double r, double x);

}  // namespace rg
