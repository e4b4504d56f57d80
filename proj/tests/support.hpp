#pragma once

#include <cmath>
#include <random>

#include "radgauge/matrix.hpp"

namespace testing_support {

using rg::ComplexMatrix;
using rg::cplx;
using rg::CVector;

inline ComplexMatrix gaussian(std::size_t n, std::mt19937_64& g) {
    std::normal_distribution<double> nd;
    ComplexMatrix m(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m(i, j) = cplx(nd(g), nd(g));
    return m;
}

inline ComplexMatrix random_hermitian(std::size_t n, std::mt19937_64& g) {
    ComplexMatrix m = gaussian(n, g);
    return 0.5 * (m + m.adjoint());
}

inline ComplexMatrix random_psd(std::size_t n, std::mt19937_64& g) {
    ComplexMatrix m = gaussian(n, g);
    return m.adjoint() * m;
}

// Gram-Schmidt on a Gaussian matrix; test-side only
inline ComplexMatrix random_unitary(std::size_t n, std::mt19937_64& g) {
    ComplexMatrix m = gaussian(n, g);
    for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t k = 0; k < j; ++k) {
            cplx p = 0;
            for (std::size_t i = 0; i < n; ++i) p += std::conj(m(i, k)) * m(i, j);
            for (std::size_t i = 0; i < n; ++i) m(i, j) -= p * m(i, k);
        }
        double s = 0;
        for (std::size_t i = 0; i < n; ++i) s += std::norm(m(i, j));
        s = std::sqrt(s);
        for (std::size_t i = 0; i < n; ++i) m(i, j) /= s;
    }
    return m;
}

inline CVector random_unit(std::size_t n, std::mt19937_64& g) {
    std::normal_distribution<double> nd;
    CVector v(n);
    double s = 0;
    for (auto& c : v) {
        c = cplx(nd(g), nd(g));
        s += std::norm(c);
    }
    for (auto& c : v) c /= std::sqrt(s);
    return v;
}

inline double dist(const ComplexMatrix& a, const ComplexMatrix& b) { return (a - b).frobenius(); }

}  // namespace testing_support
