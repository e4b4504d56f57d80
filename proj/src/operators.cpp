#include "radgauge/operators.hpp"

#include <cmath>

#include "radgauge/error.hpp"
#include "radgauge/linalg.hpp"

namespace rg {

ComplexMatrix squared_function_of_abs(const ComplexMatrix& m, const ScalarFunction& f) {
    SpectralDecomposition s = hermitian_eig(adjoint_times(m, m));
    const double top = std::max(std::abs(s.values.front()), std::abs(s.values.back()));
    std::vector<double> d(s.values.size());
    for (std::size_t k = 0; k < d.size(); ++k) {
        if (s.values[k] < -kPsdClipTol * top) throw Error(Errc::NumericalBreakdown, "M*M is not positive");
        const double v = f(std::sqrt(std::max(0.0, s.values[k])));
        d[k] = v * v;
    }
    return reconstruct(s.vectors, d);
}

namespace {

void require_lengths(std::size_t a, std::size_t b, std::size_t c, int m) {
    if (a != b || b != c || a == 0) throw Error(Errc::BadParameters, "operator families differ in length");
    if (m < 1) throw Error(Errc::BadParameters, "m must be a positive integer");
}

}  // namespace

std::vector<SchwarzTerm> schwarz_terms(const std::vector<ComplexMatrix>& x, const std::vector<ComplexMatrix>& a,
                                       const std::vector<ComplexMatrix>& b, int m, const ScalarFunction& psi,
                                       const ScalarFunction& phi) {
    require_lengths(x.size(), a.size(), b.size(), m);
    std::vector<SchwarzTerm> out;
    for (std::size_t i = 0; i < a.size(); ++i) {
        std::vector<ComplexMatrix> pw(m + 1);
        pw[0] = ComplexMatrix::identity(a[i].dim());
        for (int k = 1; k <= m; ++k) pw[k] = pw[k - 1] * a[i];
        for (int j = 1; j <= m; ++j) {
            SchwarzTerm t;
            t.i = int(i) + 1;
            t.j = j;
            t.S = hermitian_part(x[i] * squared_function_of_abs(pw[j].adjoint(), psi) * x[i].adjoint());
            const ComplexMatrix tail = pw[m - j] * b[i];
            t.T = hermitian_part(adjoint_times(tail, squared_function_of_abs(pw[j], phi) * tail));
            out.push_back(std::move(t));
        }
    }
    return out;
}

std::vector<PowerTerm> power_terms(const std::vector<ComplexMatrix>& d, const std::vector<ComplexMatrix>& c,
                                   const std::vector<ComplexMatrix>& a, int m) {
    require_lengths(d.size(), c.size(), a.size(), m);
    std::vector<PowerTerm> out;
    for (std::size_t i = 0; i < c.size(); ++i) {
        std::vector<ComplexMatrix> pw(m + 1);
        pw[0] = ComplexMatrix::identity(c[i].dim());
        for (int k = 1; k <= m; ++k) pw[k] = pw[k - 1] * c[i];
        for (int j = 1; j <= m; ++j) out.push_back({int(i) + 1, j, pw[j] * a[i], d[i] * pw[m - j]});
    }
    return out;
}

}  // namespace rg
