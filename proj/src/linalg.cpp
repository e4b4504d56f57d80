#include "radgauge/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "radgauge/error.hpp"

namespace rg {

namespace {

void check_hermitian(const ComplexMatrix& h) {
    if (h.empty()) throw Error(Errc::BadParameters, "empty matrix");
    if (!h.is_finite()) throw Error(Errc::NotFinite, "matrix has non-finite entries");
    const double fro = h.frobenius();
    const double defect = h.hermitian_defect();
    if (defect > kHermTol * fro)
        throw Error(Errc::NotHermitian, "‖H − H*‖ = " + std::to_string(defect) + " vs ‖H‖ = " + std::to_string(fro));
}

double off_diagonal(const ComplexMatrix& a) {
    const std::size_t n = a.dim();
    double s = 0;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) s += 2 * std::norm(a(i, j));
    return std::sqrt(s);
}

// Cyclic complex Jacobi on a Hermitian copy; accumulates rotations into v when given.
std::vector<double> jacobi(ComplexMatrix a, ComplexMatrix* v) {
    const std::size_t n = a.dim();
    if (v) *v = ComplexMatrix::identity(n);
    std::vector<double> d(n);
    const double fro = a.frobenius();
    if (n == 1 || fro == 0) {
        for (std::size_t i = 0; i < n; ++i) d[i] = a(i, i).real();
        return d;
    }
    const double target = 1e-15 * fro;
    const double skip = 1e-18 * fro;
    int sweep = 0;
    for (; sweep < kMaxSweeps; ++sweep) {
        if (off_diagonal(a) <= target) break;
        for (std::size_t p = 0; p + 1 < n; ++p)
            for (std::size_t q = p + 1; q < n; ++q) {
                const cplx apq = a(p, q);
                const double r = std::abs(apq);
                if (r <= skip) continue;
                const double app = a(p, p).real(), aqq = a(q, q).real();
                const cplx e = apq / r;
                const double tau = (aqq - app) / (2 * r);
                const double t = (tau >= 0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1 + tau * tau));
                const double c = 1 / std::sqrt(1 + t * t);
                const double s = t * c;
                const cplx g00 = c, g01 = s, g10 = -s * std::conj(e), g11 = c * std::conj(e);
                for (std::size_t k = 0; k < n; ++k) {
                    const cplx akp = a(k, p), akq = a(k, q);
                    a(k, p) = akp * g00 + akq * g10;
                    a(k, q) = akp * g01 + akq * g11;
                }
                for (std::size_t k = 0; k < n; ++k) {
                    const cplx apk = a(p, k), aqk = a(q, k);
                    a(p, k) = std::conj(g00) * apk + std::conj(g10) * aqk;
                    a(q, k) = std::conj(g01) * apk + std::conj(g11) * aqk;
                }
                a(p, q) = a(q, p) = 0;
                a(p, p) = a(p, p).real();
                a(q, q) = a(q, q).real();
                if (v) {
                    ComplexMatrix& vv = *v;
                    for (std::size_t k = 0; k < n; ++k) {
                        const cplx vkp = vv(k, p), vkq = vv(k, q);
                        vv(k, p) = vkp * g00 + vkq * g10;
                        vv(k, q) = vkp * g01 + vkq * g11;
                    }
                }
            }
    }
    if (sweep == kMaxSweeps && off_diagonal(a) > kEigTol * fro)
        throw Error(Errc::NoConvergence, "Jacobi did not converge in " + std::to_string(kMaxSweeps) + " sweeps");
    for (std::size_t i = 0; i < n; ++i) d[i] = a(i, i).real();
    return d;
}

double eig2_max(const ComplexMatrix& h) {
    const double a = h(0, 0).real(), d = h(1, 1).real();
    const double m = 0.5 * (a + d), half = 0.5 * (a - d);
    return m + std::hypot(half, std::abs(h(0, 1)));
}

std::vector<double> clipped(const std::vector<double>& lam, const char* what) {
    double scale = 0;
    for (double l : lam) scale = std::max(scale, std::abs(l));
    std::vector<double> out(lam.size());
    for (std::size_t i = 0; i < lam.size(); ++i) {
        if (lam[i] < -kPsdClipTol * scale)
            throw Error(Errc::NumericalBreakdown, std::string(what) + " has eigenvalue " + std::to_string(lam[i]));
        out[i] = std::max(lam[i], 0.0);
    }
    return out;
}

}  // namespace

SpectralDecomposition hermitian_eig(const ComplexMatrix& h) {
    check_hermitian(h);
    ComplexMatrix v;
    std::vector<double> d = jacobi(hermitian_part(h), &v);
    const std::size_t n = d.size();
    std::vector<std::size_t> idx(n);
    std::iota(idx.begin(), idx.end(), 0);
    std::stable_sort(idx.begin(), idx.end(), [&](std::size_t i, std::size_t j) { return d[i] < d[j]; });
    SpectralDecomposition out{std::vector<double>(n), ComplexMatrix(n)};
    for (std::size_t k = 0; k < n; ++k) {
        out.values[k] = d[idx[k]];
        for (std::size_t i = 0; i < n; ++i) out.vectors(i, k) = v(i, idx[k]);
    }
    return out;
}

std::vector<double> hermitian_eigenvalues(const ComplexMatrix& h) {
    check_hermitian(h);
    std::vector<double> d = jacobi(hermitian_part(h), nullptr);
    std::sort(d.begin(), d.end());
    return d;
}

double lambda_max(const ComplexMatrix& h) {
    if (h.dim() == 2) {
        check_hermitian(h);
        return eig2_max(h);
    }
    return hermitian_eigenvalues(h).back();
}

double lambda_min(const ComplexMatrix& h) { return hermitian_eigenvalues(h).front(); }

double operator_norm(const ComplexMatrix& a) {
    if (a.empty()) throw Error(Errc::BadParameters, "empty matrix");
    if (!a.is_finite()) throw Error(Errc::NotFinite, "matrix has non-finite entries");
    if (a.dim() == 1) return std::abs(a(0, 0));
    return std::sqrt(std::max(0.0, lambda_max(adjoint_times(a, a))));
}

SingularValueDecomposition svd(const ComplexMatrix& a) {
    const std::size_t n = a.dim();
    SpectralDecomposition e = hermitian_eig(adjoint_times(a, a));
    SingularValueDecomposition out{std::vector<double>(n), ComplexMatrix(n), ComplexMatrix(n)};
    for (std::size_t k = 0; k < n; ++k) {
        const std::size_t src = n - 1 - k;
        out.sigma[k] = std::sqrt(std::max(0.0, e.values[src]));
        for (std::size_t i = 0; i < n; ++i) out.V(i, k) = e.vectors(i, src);
    }
    const double cut = kSingularCut * out.sigma[0];
    for (std::size_t k = 0; k < n; ++k) {
        if (out.sigma[k] <= cut || out.sigma[k] == 0) {
            out.sigma[k] = out.sigma[k] <= cut ? 0.0 : out.sigma[k];
            continue;
        }
        CVector u = a * out.V.column(k);
        for (std::size_t i = 0; i < n; ++i) out.U(i, k) = u[i] / out.sigma[k];
    }
    return out;
}

ComplexMatrix reconstruct(const ComplexMatrix& v, const std::vector<double>& d) {
    const std::size_t n = v.dim();
    ComplexMatrix r(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j) {
            cplx s = 0;
            for (std::size_t k = 0; k < n; ++k) s += v(i, k) * d[k] * std::conj(v(j, k));
            r(i, j) = s;
            r(j, i) = std::conj(s);
        }
    for (std::size_t i = 0; i < n; ++i) r(i, i) = r(i, i).real();
    return r;
}

ComplexMatrix abs_power(const ComplexMatrix& a, double e) {
    SpectralDecomposition s = hermitian_eig(adjoint_times(a, a));
    std::vector<double> lam = clipped(s.values, "A*A");
    for (double& l : lam) {
        if (l == 0 && e < 0) throw Error(Errc::DomainError, "negative power of a singular |A|");
        l = (e == 0) ? 1.0 : std::pow(l, 0.5 * e);
    }
    return reconstruct(s.vectors, lam);
}

ComplexMatrix abs_op(const ComplexMatrix& a) { return abs_power(a, 1.0); }

ComplexMatrix matrix_function(const ComplexMatrix& p, const ScalarFunction& f) {
    SpectralDecomposition s = hermitian_eig(p);
    std::vector<double> lam;
    try {
        lam = clipped(s.values, "P");
    } catch (const Error& err) {
        throw Error(Errc::DomainError, std::string("argument is not positive semidefinite: ") + err.what());
    }
    for (double& l : lam) l = f(l);
    return reconstruct(s.vectors, lam);
}

ComplexMatrix psd_power(const ComplexMatrix& p, double e) { return matrix_function(p, ScalarFunction::power(e)); }

PolarFactors polar_decomposition(const ComplexMatrix& a) {
    const std::size_t n = a.dim();
    SingularValueDecomposition s = svd(a);
    PolarFactors out{ComplexMatrix(n), reconstruct(s.V, s.sigma)};
    for (std::size_t k = 0; k < n; ++k) {
        if (s.sigma[k] == 0) continue;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) out.U(i, j) += s.U(i, k) * std::conj(s.V(j, k));
    }
    return out;
}

WeightedMeans weighted_means(const ComplexMatrix& t, const ComplexMatrix& s, double nu, MeanConvention conv) {
    require_same_dim(t, s, "weighted_means");
    if (!(nu >= 0 && nu <= 1)) throw Error(Errc::BadParameters, "weight must lie in [0,1]");
    SpectralDecomposition et = hermitian_eig(t);
    const double top = et.values.back();
    if (!(top > 0) || et.values.front() <= kInvTol * top)
        throw Error(Errc::NotInvertible, "λ_min(T) = " + std::to_string(et.values.front()));
    std::vector<double> sq(et.values.size()), isq(et.values.size());
    for (std::size_t i = 0; i < sq.size(); ++i) {
        sq[i] = std::sqrt(et.values[i]);
        isq[i] = 1 / sq[i];
    }
    const ComplexMatrix th = reconstruct(et.vectors, sq);
    const ComplexMatrix tih = reconstruct(et.vectors, isq);
    const ComplexMatrix inner_m = hermitian_part(tih * s * tih);
    WeightedMeans out;
    out.sharp = hermitian_part(th * psd_power(inner_m, nu) * th);
    out.nabla = conv == MeanConvention::Corrected ? (1 - nu) * t + nu * s : nu * t + (1 - nu) * s;
    out.nabla = hermitian_part(out.nabla);
    return out;
}

double exp_r_scalar(double r, double x) {
    if (!(r >= -1 && r <= 1) || r == 0) throw Error(Errc::BadParameters, "r must lie in [-1,1] without 0");
    const double base = 1 + r * x;
    if (!(base > 0)) throw Error(Errc::Undefined, "1 + r·x = " + std::to_string(base) + " is not positive");
    return std::pow(base, 1 / r);
}

}  // namespace rg
