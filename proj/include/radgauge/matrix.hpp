#pragma once

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <vector>

namespace rg {

using cplx = std::complex<double>;
using CVector = std::vector<cplx>;

// Dense square complex matrix, row-major.
class ComplexMatrix {
public:
    ComplexMatrix() = default;
    explicit ComplexMatrix(std::size_t n) : n_(n), a_(n * n) {}
    ComplexMatrix(std::initializer_list<std::initializer_list<cplx>> rows);

    static ComplexMatrix identity(std::size_t n);
    static ComplexMatrix scalar(std::size_t n, cplx c);
    static ComplexMatrix diagonal(const std::vector<double>& d);

    std::size_t dim() const { return n_; }
    bool empty() const { return n_ == 0; }

    cplx& operator()(std::size_t i, std::size_t j) { return a_[i * n_ + j]; }
    const cplx& operator()(std::size_t i, std::size_t j) const { return a_[i * n_ + j]; }
    cplx* data() { return a_.data(); }
    const cplx* data() const { return a_.data(); }

    ComplexMatrix adjoint() const;
    cplx trace() const;
    double frobenius() const;
    bool is_finite() const;
    // ‖H − H*‖_F
    double hermitian_defect() const;
    CVector column(std::size_t j) const;

    ComplexMatrix& operator+=(const ComplexMatrix& o);
    ComplexMatrix& operator-=(const ComplexMatrix& o);
    ComplexMatrix& operator*=(cplx c);

private:
    std::size_t n_ = 0;
    std::vector<cplx> a_;
};

ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b);
ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b);
ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix operator*(ComplexMatrix a, cplx c);
ComplexMatrix operator*(cplx c, ComplexMatrix a);
CVector operator*(const ComplexMatrix& a, const CVector& x);

// a* b without forming the adjoint
ComplexMatrix adjoint_times(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix matrix_power(const ComplexMatrix& a, int k);
ComplexMatrix hermitian_part(const ComplexMatrix& a);

// ⟨x, y⟩ = Σ x_i conj(y_i)
cplx inner(const CVector& x, const CVector& y);
double norm(const CVector& x);
CVector normalized(CVector x);
// Re⟨Mξ, ξ⟩ for Hermitian M
double quad_form(const ComplexMatrix& m, const CVector& xi);

void require_same_dim(const ComplexMatrix& a, const ComplexMatrix& b, const char* where);

}  // namespace rg
