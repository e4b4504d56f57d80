#include "radgauge/sphereopt.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "radgauge/error.hpp"
#include "radgauge/linalg.hpp"
#include "radgauge/numrange.hpp"
#include "radgauge/operators.hpp"
#include "radgauge/rng.hpp"

namespace rg {

std::string functional_name(FunctionalKind k) {
    switch (k) {
        case FunctionalKind::RHO: return "RHO";
        case FunctionalKind::PSI_N1: return "PSI_N1";
        case FunctionalKind::ETA_N3: return "ETA_N3";
        case FunctionalKind::OMEGA_SCH2: return "OMEGA_SCH2";
        case FunctionalKind::GAMMA_PSI: return "GAMMA_PSI";
        case FunctionalKind::SUPQ_DEFICIT: return "SUPQ_DEFICIT";
        case FunctionalKind::CUSTOM: return "CUSTOM";
    }
    return "?";
}

namespace {

// y = Mξ, returns Re⟨y, ξ⟩
double form_and_image(const ComplexMatrix& m, const CVector& xi, CVector& y) {
    const std::size_t n = m.dim();
    y.resize(n);
    double s = 0;
    for (std::size_t i = 0; i < n; ++i) {
        cplx acc = 0;
        const cplx* row = m.data() + i * n;
        for (std::size_t j = 0; j < n; ++j) acc += row[j] * xi[j];
        y[i] = acc;
        s += acc.real() * xi[i].real() + acc.imag() * xi[i].imag();
    }
    return s;
}

double safe_pow(double a, double e) { return e == 1 ? a : std::pow(std::max(a, 0.0), e); }

double dpow(double a, double e) {
    if (e == 1) return 1;
    return e * std::pow(std::max(a, 1e-300), e - 1);
}

bool is_gap_kind(FunctionalKind k) {
    return k == FunctionalKind::RHO || k == FunctionalKind::PSI_N1 || k == FunctionalKind::ETA_N3 ||
           k == FunctionalKind::OMEGA_SCH2;
}

}  // namespace

double SphereFunctional::operator()(const CVector& xi) const {
    if (kind == FunctionalKind::CUSTOM) return custom(xi);
    if (kind == FunctionalKind::SUPQ_DEFICIT) return quad_form(deficit, xi);
    if (kind == FunctionalKind::GAMMA_PSI) {
        const double a = std::max(0.0, quad_form(pairs[0].first, xi));
        const double b = std::max(0.0, quad_form(pairs[0].second, xi));
        return psi(a) + psi(b) - 2 * psi(0.5 * (a + b));
    }
    double s = 0;
    for (const auto& p : pairs) {
        const double d = safe_pow(quad_form(p.first, xi), p.exp_first) - safe_pow(quad_form(p.second, xi), p.exp_second);
        s += d * d;
    }
    return scale * s;
}

bool SphereFunctional::gradient(const CVector& xi, CVector& g) const {
    if (kind == FunctionalKind::CUSTOM) return false;
    const std::size_t n = xi.size();
    g.assign(n, 0.0);
    CVector y1, y2;
    if (kind == FunctionalKind::SUPQ_DEFICIT) {
        form_and_image(deficit, xi, y1);
        for (std::size_t i = 0; i < n; ++i) g[i] = 2.0 * y1[i];
        return true;
    }
    if (kind == FunctionalKind::GAMMA_PSI) {
        const double a = std::max(0.0, form_and_image(pairs[0].first, xi, y1));
        const double b = std::max(0.0, form_and_image(pairs[0].second, xi, y2));
        const double dm = psi.derivative(0.5 * (a + b));
        const double ca = psi.derivative(a) - dm, cb = psi.derivative(b) - dm;
        for (std::size_t i = 0; i < n; ++i) g[i] = 2.0 * (ca * y1[i] + cb * y2[i]);
        return true;
    }
    for (const auto& p : pairs) {
        const double a = form_and_image(p.first, xi, y1);
        const double b = form_and_image(p.second, xi, y2);
        const double d = safe_pow(a, p.exp_first) - safe_pow(b, p.exp_second);
        const double ca = 2 * scale * d * dpow(a, p.exp_first);
        const double cb = -2 * scale * d * dpow(b, p.exp_second);
        for (std::size_t i = 0; i < n; ++i) g[i] += 2.0 * (ca * y1[i] + cb * y2[i]);
    }
    return true;
}

SphereFunctional make_gap_functional(FunctionalKind kind, std::vector<FormPair> pairs, double scale) {
    if (!is_gap_kind(kind)) throw Error(Errc::BadKind, functional_name(kind) + " is not a squared-gap functional");
    if (pairs.empty()) throw Error(Errc::BadParameters, "no form pairs");
    SphereFunctional f;
    f.kind = kind;
    f.dim = pairs.front().first.dim();
    f.scale = scale;
    f.pairs = std::move(pairs);
    return f;
}

SphereFunctional make_gamma_functional(const ComplexMatrix& m, const ComplexMatrix& n, const ScalarFunction& psi) {
    require_same_dim(m, n, "gamma functional");
    SphereFunctional f;
    f.kind = FunctionalKind::GAMMA_PSI;
    f.dim = m.dim();
    f.pairs.push_back({m, n, 1, 1});
    f.psi = psi;
    return f;
}

SphereFunctional make_supq_deficit(const ComplexMatrix& a, const ScalarFunction& psi) {
    SpectralDecomposition s = hermitian_eig(adjoint_times(a, a));
    std::vector<double> sigma(s.values.size());
    for (std::size_t k = 0; k < sigma.size(); ++k) sigma[k] = std::sqrt(std::max(0.0, s.values[k]));
    const double top = sigma.back();
    std::vector<double> d(sigma.size());
    for (std::size_t k = 0; k < d.size(); ++k) d[k] = psi(std::max(0.0, top - sigma[k]));
    SphereFunctional f;
    f.kind = FunctionalKind::SUPQ_DEFICIT;
    f.dim = a.dim();
    f.deficit = reconstruct(s.vectors, d);
    f.psi = psi;
    return f;
}

SphereFunctional make_custom_functional(std::size_t dim, std::function<double(const CVector&)> fn) {
    SphereFunctional f;
    f.kind = FunctionalKind::CUSTOM;
    f.dim = dim;
    f.custom = std::move(fn);
    return f;
}

SphereFunctional build_correction_functional(FunctionalKind kind, const InequalityCase& c) {
    const CaseParams& p = c.params;
    switch (kind) {
        case FunctionalKind::RHO:
        case FunctionalKind::OMEGA_SCH2: {
            require_conjugate(p.p, p.q);
            auto terms = schwarz_terms(c.family("X"), c.family("A"), c.family("B"), p.m, c.psi, c.phi);
            std::vector<FormPair> pairs;
            const double n = double(c.family("A").size());
            if (kind == FunctionalKind::RHO) {
                for (const auto& t : terms) pairs.push_back({psd_power(t.S, p.r), psd_power(t.T, p.r), p.p / 2, p.q / 2});
                return make_gap_functional(kind, std::move(pairs), std::pow(n, 2 * p.r - 1) / p.m);
            }
            for (const auto& t : terms) pairs.push_back({psd_power(t.S, p.p), psd_power(t.T, p.q), p.k / 2.0, p.k / 2.0});
            return make_gap_functional(kind, std::move(pairs), std::pow(n, 2 * p.k - 1) / p.m);
        }
        case FunctionalKind::PSI_N1:
        case FunctionalKind::ETA_N3: {
            require_conjugate(p.p, p.q);
            auto terms = power_terms(c.family("D"), c.family("C"), c.family("A"), p.m);
            std::vector<FormPair> pairs;
            const double n = double(c.family("A").size());
            if (kind == FunctionalKind::PSI_N1) {
                for (const auto& t : terms)
                    pairs.push_back({abs_power(t.lower, 2), abs_power(t.upper.adjoint(), 2), p.p / 2, p.q / 2});
                return make_gap_functional(kind, std::move(pairs), n / p.m);
            }
            for (const auto& t : terms)
                pairs.push_back({abs_power(t.lower, 2 * p.p), abs_power(t.upper.adjoint(), 2 * p.q), p.k / 2.0, p.k / 2.0});
            return make_gap_functional(kind, std::move(pairs), std::pow(n, 2 * p.k - 1) / p.m);
        }
        case FunctionalKind::GAMMA_PSI: {
            if (!(p.nu > 0 && p.nu < 1)) throw Error(Errc::BadParameters, "ν must lie in (0,1)");
            const ComplexMatrix ba = c.op("B") * c.op("A");
            const ComplexMatrix dc = c.op("D") * c.op("C");
            return make_gamma_functional(abs_power(ba, 2 / (1 - p.nu)), abs_power(dc.adjoint(), 2 / p.nu), c.psi);
        }
        case FunctionalKind::SUPQ_DEFICIT: return make_supq_deficit(c.op("A"), c.psi);
        case FunctionalKind::CUSTOM: break;
    }
    throw Error(Errc::BadKind, "CUSTOM functionals are built with make_custom_functional");
}

namespace {

double real_dot(const CVector& a, const CVector& b) {
    double s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i].real() * b[i].real() + a[i].imag() * b[i].imag();
    return s;
}

class Search {
public:
    Search(const SphereFunctional& f, const SphereOptOptions& o) : f_(f), o_(o) {}

    double value(const CVector& x) {
        ++evals;
        return f_(x);
    }

    void gradient(const CVector& x, CVector& g) {
        if (f_.gradient(x, g)) {
            ++evals;
            return;
        }
        // forward differences on F∘normalize, already tangent
        const double h = 1e-6;
        const double f0 = value(x);
        g.assign(x.size(), 0.0);
        CVector y = x;
        for (std::size_t i = 0; i < x.size(); ++i) {
            for (int part = 0; part < 2; ++part) {
                y = x;
                y[i] += part == 0 ? cplx(h, 0) : cplx(0, h);
                const double d = (value(normalized(y)) - f0) / h;
                g[i] += part == 0 ? cplx(d, 0) : cplx(0, d);
            }
        }
    }

    // projected gradient descent with step halving; returns converged flag
    bool descend(CVector& x, double& fx) { return descend(x, fx, o_.tol, o_.max_iter); }

    bool descend(CVector& x, double& fx, double tol, int max_iter) {
        fx = value(x);
        double step = 0.25;
        CVector g, y(x.size());
        for (int it = 0; it < max_iter; ++it) {
            gradient(x, g);
            const double radial = real_dot(x, g);
            for (std::size_t i = 0; i < x.size(); ++i) g[i] -= radial * x[i];
            const double gn = norm(g);
            const double scale = 1 + std::abs(fx);
            if (gn * gn <= tol * 1e-2 * scale || gn == 0) return true;
            bool moved = false;
            while (step > 1e-15) {
                for (std::size_t i = 0; i < x.size(); ++i) y[i] = x[i] - (step / gn) * g[i];
                const double ny = norm(y);
                for (auto& v : y) v /= ny;
                const double fy = value(y);
                if (fy <= fx - 1e-4 * step * gn) {
                    const double drop = fx - fy;
                    x = y;
                    fx = fy;
                    step = std::min(2 * step, 1.0);
                    moved = true;
                    if (drop <= tol * 1e-3 * scale) return true;
                    break;
                }
                step *= 0.5;
            }
            if (!moved) return true;
        }
        return false;
    }

    // Nelder-Mead on the chart y ↦ normalize(x + y)
    void polish(CVector& x, double& fx) {
        const std::size_t n = x.size(), d = 2 * n;
        auto chart = [&](const std::vector<double>& y) {
            CVector z = x;
            for (std::size_t i = 0; i < n; ++i) z[i] += cplx(y[i], y[n + i]);
            return normalized(z);
        };
        std::vector<std::vector<double>> pts(d + 1, std::vector<double>(d, 0.0));
        std::vector<double> vals(d + 1);
        for (std::size_t k = 1; k <= d; ++k) pts[k][k - 1] = 1e-3;
        for (std::size_t k = 0; k <= d; ++k) vals[k] = value(chart(pts[k]));
        const int budget = int(100 * d);
        for (int it = 0; it < budget; ++it) {
            std::vector<std::size_t> idx(d + 1);
            for (std::size_t k = 0; k <= d; ++k) idx[k] = k;
            std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) { return vals[a] < vals[b]; });
            const std::size_t best = idx.front(), worst = idx.back(), second = idx[d - 1];
            if (vals[worst] - vals[best] <= 1e-15 * (1 + std::abs(vals[best]))) break;
            std::vector<double> cen(d, 0.0);
            for (std::size_t k = 0; k <= d; ++k)
                if (k != worst)
                    for (std::size_t c = 0; c < d; ++c) cen[c] += pts[k][c] / double(d);
            auto along = [&](double t) {
                std::vector<double> p(d);
                for (std::size_t c = 0; c < d; ++c) p[c] = cen[c] + t * (pts[worst][c] - cen[c]);
                return p;
            };
            auto refl = along(-1);
            const double fr = value(chart(refl));
            if (fr < vals[best]) {
                auto exp = along(-2);
                const double fe = value(chart(exp));
                if (fe < fr) {
                    pts[worst] = exp;
                    vals[worst] = fe;
                } else {
                    pts[worst] = refl;
                    vals[worst] = fr;
                }
            } else if (fr < vals[second]) {
                pts[worst] = refl;
                vals[worst] = fr;
            } else {
                auto con = along(0.5);
                const double fc = value(chart(con));
                if (fc < vals[worst]) {
                    pts[worst] = con;
                    vals[worst] = fc;
                } else {
                    for (std::size_t k = 0; k <= d; ++k) {
                        if (k == best) continue;
                        for (std::size_t c = 0; c < d; ++c) pts[k][c] = pts[best][c] + 0.5 * (pts[k][c] - pts[best][c]);
                        vals[k] = value(chart(pts[k]));
                    }
                }
            }
        }
        std::size_t best = 0;
        for (std::size_t k = 1; k <= d; ++k)
            if (vals[k] < vals[best]) best = k;
        if (vals[best] < fx) {
            x = chart(pts[best]);
            fx = value(x);
        }
    }

    // ξ = (cos a, e^{ib} sin a) with zoom refinement
    CVector lattice(double& fbest) {
        const double half_pi = 0.5 * std::numbers::pi, two_pi = 2 * std::numbers::pi;
        auto at = [](double a, double b) { return CVector{std::cos(a), std::polar(std::sin(a), b)}; };
        double ba = 0, bb = 0;
        fbest = INFINITY;
        const int na = 200, nb = 200;
        for (int i = 0; i <= na; ++i)
            for (int j = 0; j < nb; ++j) {
                const double a = half_pi * i / na, b = two_pi * j / nb;
                const double v = value(at(a, b));
                if (v < fbest) {
                    fbest = v;
                    ba = a;
                    bb = b;
                }
            }
        double wa = half_pi / na, wb = two_pi / nb;
        for (int round = 0; round < 6; ++round) {
            const double ca = ba, cb = bb;
            for (int i = -10; i <= 10; ++i)
                for (int j = -10; j <= 10; ++j) {
                    const double a = std::clamp(ca + wa * i / 10.0, 0.0, half_pi), b = cb + wb * j / 10.0;
                    const double v = value(at(a, b));
                    if (v < fbest) {
                        fbest = v;
                        ba = a;
                        bb = b;
                    }
                }
            wa /= 5;
            wb /= 5;
        }
        return at(ba, bb);
    }

    long evals = 0;

private:
    const SphereFunctional& f_;
    const SphereOptOptions& o_;
};

}  // namespace

SphereOptResult infimum_unit_sphere(const SphereFunctional& f, const SphereOptOptions& opts) {
    if (opts.restarts < 1) throw Error(Errc::BadParameters, "restarts must be at least 1");
    if (f.dim == 0) throw Error(Errc::BadParameters, "functional has no dimension");
    const std::size_t n = f.dim;
    Search search(f, opts);
    SphereOptResult best;
    best.value = INFINITY;
    auto consider = [&](CVector x, double fx, bool conv) {
        if (fx < best.value) {
            best.value = fx;
            best.witness = std::move(x);
            best.converged = conv;
        }
    };
    if (n == 1) {
        CVector x{1.0};
        consider(x, search.value(x), true);
    } else {
        if (n == 2 && opts.lattice) {
            double fl;
            CVector x = search.lattice(fl);
            double fx;
            bool conv = search.descend(x, fx);
            consider(x, fx, conv);
        }
        for (int r = 0; r < opts.restarts; ++r) {
            Rng rng(splitmix64(opts.seed + std::uint64_t(r)));
            CVector x(n);
            for (auto& c : x) c = rng.complex_normal();
            x = normalized(x);
            double fx;
            bool conv = search.descend(x, fx);
            consider(x, fx, conv);
        }
        if (opts.polish) {
            search.polish(best.witness, best.value);
            // tight final descent from the winner
            CVector x = best.witness;
            double fx;
            search.descend(x, fx, 1e-6 * opts.tol, 10 * opts.max_iter);
            if (fx < best.value) consider(x, fx, best.converged);
        }
    }
    fix_phase(best.witness);
    best.value = search.value(best.witness);
    best.evaluations = search.evals;
    return best;
}

}  // namespace rg
