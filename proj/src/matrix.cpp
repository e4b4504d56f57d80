#include "radgauge/matrix.hpp"

#include <cmath>
#include <string>

#include "radgauge/error.hpp"

namespace rg {

ComplexMatrix::ComplexMatrix(std::initializer_list<std::initializer_list<cplx>> rows)
    : n_(rows.size()), a_(rows.size() * rows.size()) {
    std::size_t i = 0;
    for (const auto& row : rows) {
        if (row.size() != n_) throw Error(Errc::BadParameters, "matrix literal is not square");
        std::size_t j = 0;
        for (const auto& v : row) (*this)(i, j++) = v;
        ++i;
    }
}

ComplexMatrix ComplexMatrix::identity(std::size_t n) { return scalar(n, 1.0); }

ComplexMatrix ComplexMatrix::scalar(std::size_t n, cplx c) {
    ComplexMatrix m(n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = c;
    return m;
}

ComplexMatrix ComplexMatrix::diagonal(const std::vector<double>& d) {
    ComplexMatrix m(d.size());
    for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
    return m;
}

ComplexMatrix ComplexMatrix::adjoint() const {
    ComplexMatrix r(n_);
    for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t j = 0; j < n_; ++j) r(j, i) = std::conj((*this)(i, j));
    return r;
}

cplx ComplexMatrix::trace() const {
    cplx t = 0;
    for (std::size_t i = 0; i < n_; ++i) t += (*this)(i, i);
    return t;
}

double ComplexMatrix::frobenius() const {
    double s = 0;
    for (const auto& v : a_) s += std::norm(v);
    return std::sqrt(s);
}

bool ComplexMatrix::is_finite() const {
    for (const auto& v : a_)
        if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) return false;
    return true;
}

double ComplexMatrix::hermitian_defect() const {
    double s = 0;
    for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t j = i; j < n_; ++j) {
            double d = std::norm((*this)(i, j) - std::conj((*this)(j, i)));
            s += (i == j) ? d : 2 * d;
        }
    return std::sqrt(s);
}

CVector ComplexMatrix::column(std::size_t j) const {
    CVector c(n_);
    for (std::size_t i = 0; i < n_; ++i) c[i] = (*this)(i, j);
    return c;
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& o) {
    require_same_dim(*this, o, "+");
    for (std::size_t k = 0; k < a_.size(); ++k) a_[k] += o.a_[k];
    return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& o) {
    require_same_dim(*this, o, "-");
    for (std::size_t k = 0; k < a_.size(); ++k) a_[k] -= o.a_[k];
    return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(cplx c) {
    for (auto& v : a_) v *= c;
    return *this;
}

ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b) { return a += b; }
ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b) { return a -= b; }
ComplexMatrix operator*(ComplexMatrix a, cplx c) { return a *= c; }
ComplexMatrix operator*(cplx c, ComplexMatrix a) { return a *= c; }

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
    require_same_dim(a, b, "*");
    const std::size_t n = a.dim();
    ComplexMatrix c(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k) {
            const cplx aik = a(i, k);
            if (aik == cplx(0)) continue;
            const cplx* brow = b.data() + k * n;
            cplx* crow = c.data() + i * n;
            for (std::size_t j = 0; j < n; ++j) crow[j] += aik * brow[j];
        }
    return c;
}

ComplexMatrix adjoint_times(const ComplexMatrix& a, const ComplexMatrix& b) {
    require_same_dim(a, b, "adjoint_times");
    const std::size_t n = a.dim();
    ComplexMatrix c(n);
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t i = 0; i < n; ++i) {
            const cplx aki = std::conj(a(k, i));
            if (aki == cplx(0)) continue;
            const cplx* brow = b.data() + k * n;
            cplx* crow = c.data() + i * n;
            for (std::size_t j = 0; j < n; ++j) crow[j] += aki * brow[j];
        }
    return c;
}

CVector operator*(const ComplexMatrix& a, const CVector& x) {
    if (x.size() != a.dim()) throw Error(Errc::BadParameters, "matrix-vector dimension mismatch");
    const std::size_t n = a.dim();
    CVector y(n);
    for (std::size_t i = 0; i < n; ++i) {
        cplx s = 0;
        const cplx* row = a.data() + i * n;
        for (std::size_t j = 0; j < n; ++j) s += row[j] * x[j];
        y[i] = s;
    }
    return y;
}

ComplexMatrix matrix_power(const ComplexMatrix& a, int k) {
    if (k < 0) throw Error(Errc::BadParameters, "negative integer power");
    ComplexMatrix r = ComplexMatrix::identity(a.dim());
    ComplexMatrix base = a;
    while (k > 0) {
        if (k & 1) r = r * base;
        k >>= 1;
        if (k) base = base * base;
    }
    return r;
}

ComplexMatrix hermitian_part(const ComplexMatrix& a) {
    const std::size_t n = a.dim();
    ComplexMatrix h(n);
    for (std::size_t i = 0; i < n; ++i) {
        h(i, i) = a(i, i).real();
        for (std::size_t j = i + 1; j < n; ++j) {
            cplx v = 0.5 * (a(i, j) + std::conj(a(j, i)));
            h(i, j) = v;
            h(j, i) = std::conj(v);
        }
    }
    return h;
}

cplx inner(const CVector& x, const CVector& y) {
    if (x.size() != y.size()) throw Error(Errc::BadParameters, "inner product dimension mismatch");
    cplx s = 0;
    for (std::size_t i = 0; i < x.size(); ++i) s += x[i] * std::conj(y[i]);
    return s;
}

double norm(const CVector& x) {
    double s = 0;
    for (const auto& v : x) s += std::norm(v);
    return std::sqrt(s);
}

CVector normalized(CVector x) {
    double nx = norm(x);
    if (nx == 0) throw Error(Errc::NumericalBreakdown, "cannot normalize the zero vector");
    for (auto& v : x) v /= nx;
    return x;
}

double quad_form(const ComplexMatrix& m, const CVector& xi) {
    const std::size_t n = m.dim();
    double s = 0;
    for (std::size_t i = 0; i < n; ++i) {
        cplx row = 0;
        const cplx* mr = m.data() + i * n;
        for (std::size_t j = 0; j < n; ++j) row += mr[j] * xi[j];
        s += (row * std::conj(xi[i])).real();
    }
    return s;
}

void require_same_dim(const ComplexMatrix& a, const ComplexMatrix& b, const char* where) {
    if (a.dim() != b.dim())
        throw Error(Errc::BadParameters, std::string("dimension mismatch in ") + where + ": " +
                                             std::to_string(a.dim()) + " vs " + std::to_string(b.dim()));
}

}  // namespace rg
