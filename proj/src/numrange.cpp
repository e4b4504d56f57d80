#include "radgauge/numrange.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include "radgauge/error.hpp"
#include "radgauge/linalg.hpp"

namespace rg {

namespace {

constexpr double kTwoPi = 2 * std::numbers::pi;
constexpr std::size_t kMaxAngles = 1 << 17;

struct Support {
    double theta;
    double h;
};

class SupportFunction {
public:
    explicit SupportFunction(const ComplexMatrix& a) : re_(hermitian_part(a)), im_(a.dim()) {
        const std::size_t n = a.dim();
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) im_(i, j) = cplx(0, 0.5) * (a(i, j) - std::conj(a(j, i)));
    }

    ComplexMatrix at(double theta) const {
        const double c = std::cos(theta), s = std::sin(theta);
        ComplexMatrix h(re_.dim());
        for (std::size_t k = 0; k < re_.dim() * re_.dim(); ++k) h.data()[k] = c * re_.data()[k] + s * im_.data()[k];
        return h;
    }

    double operator()(double theta) const {
        ++evals;
        return lambda_max(at(theta));
    }

    mutable int evals = 0;

private:
    ComplexMatrix re_, im_;
};

// Upper bound for h on [t1, t2]: the vertex of the two support lines, capped by the Lipschitz estimate.
double gap_bound(const Support& a, const Support& b, double lip) {
    const double gap = b.theta - a.theta;
    double bound = 0.5 * (a.h + b.h) + 0.5 * lip * gap;
    const double det = std::sin(gap);
    if (gap < std::numbers::pi && det > 1e-9) {
        const double s1 = std::sin(a.theta), c1 = std::cos(a.theta);
        const double s2 = std::sin(b.theta), c2 = std::cos(b.theta);
        const double x = (a.h * s2 - b.h * s1) / det;
        const double y = (c2 * a.h - c1 * b.h) / det;
        bound = std::min(bound, std::hypot(x, y));
    }
    return bound;
}

}  // namespace

void fix_phase(CVector& v) {
    for (std::size_t i = 0; i < v.size(); ++i) {
        const double m = std::abs(v[i]);
        if (m <= 1e-14) continue;
        const cplx ph = std::conj(v[i]) / m;
        for (auto& x : v) x *= ph;
        v[i] = m;
        return;
    }
}

RadiusBracket numerical_radius(const ComplexMatrix& a, double tol) {
    if (!(tol >= 1e-13)) throw Error(Errc::BadParameters, "radius tolerance below 1e-13");
    if (a.empty()) throw Error(Errc::BadParameters, "empty matrix");
    if (!a.is_finite()) throw Error(Errc::NotFinite, "matrix has non-finite entries");
    const std::size_t n = a.dim();
    RadiusBracket out;
    out.witness.assign(n, 0.0);
    out.witness[0] = 1.0;
    if (n == 1) {
        out.lo = out.hi = std::abs(a(0, 0));
        out.argmax_theta = out.lo > 0 ? std::fmod(-std::arg(a(0, 0)) + kTwoPi, kTwoPi) : 0.0;
        return out;
    }
    const double lip = operator_norm(a);
    if (lip == 0) return out;

    SupportFunction h(a);
    std::vector<Support> pts(kRadiusGrid);
    for (int k = 0; k < kRadiusGrid; ++k) {
        const double th = kTwoPi * k / kRadiusGrid;
        pts[k] = {th, h(th)};
    }
    double lo = 0, hi = 0, arg = 0;
    for (;;) {
        lo = -1;
        for (const auto& p : pts)
            if (p.h > lo) {
                lo = p.h;
                arg = p.theta;
            }
        const std::size_t m = pts.size();
        std::vector<double> bounds(m);
        hi = lo;
        for (std::size_t k = 0; k < m; ++k) {
            Support next = pts[(k + 1) % m];
            if (k + 1 == m) next.theta += kTwoPi;
            bounds[k] = gap_bound(pts[k], next, lip);
            hi = std::max(hi, bounds[k]);
        }
        if (hi - lo <= tol || m >= kMaxAngles) break;
        std::vector<Support> refined;
        refined.reserve(m * 2);
        for (std::size_t k = 0; k < m; ++k) {
            refined.push_back(pts[k]);
            if (bounds[k] - lo > 0.5 * tol) {
                const double t1 = pts[k].theta;
                const double t2 = (k + 1 == m) ? pts[0].theta + kTwoPi : pts[k + 1].theta;
                const double mid = 0.5 * (t1 + t2);
                if (mid > t1 && mid < t2) refined.push_back({mid, h(mid)});
            }
        }
        if (refined.size() == m) break;
        pts = std::move(refined);
    }
    out.lo = std::max(lo, 0.0);
    out.hi = std::max(hi, out.lo);
    out.argmax_theta = std::fmod(arg, kTwoPi);
    SpectralDecomposition top = hermitian_eig(h.at(arg));
    out.witness = top.vectors.column(n - 1);
    fix_phase(out.witness);
    out.evaluations = h.evals;
    return out;
}

cplx rayleigh(const ComplexMatrix& a, const CVector& xi) {
    if (xi.size() != a.dim()) throw Error(Errc::BadParameters, "vector dimension mismatch");
    const double nx = norm(xi);
    if (std::abs(nx - 1) > 1e-12) throw Error(Errc::NotUnit, "‖ξ‖ = " + std::to_string(nx));
    return inner(a * xi, xi);
}

double radius_brute_oracle(const ComplexMatrix& a, int samples, std::uint64_t seed) {
    const std::size_t n = a.dim();
    std::mt19937_64 gen(seed);
    std::normal_distribution<double> nd;
    auto value = [&](const CVector& v) {
        const double nv = norm(v);
        return nv == 0 ? 0.0 : std::abs(inner(a * v, v)) / (nv * nv);
    };
    // a few of the best samples seed the local ascent below
    constexpr std::size_t kSeeds = 8;
    std::vector<std::pair<double, CVector>> top;
    auto probe = [&](const CVector& v) {
        const double f = value(v);
        if (top.size() == kSeeds && f <= top.back().first) return;
        if (top.size() == kSeeds) top.pop_back();
        top.emplace(std::upper_bound(top.begin(), top.end(), f, [](double x, const auto& e) { return x > e.first; }), f,
                    v);
    };
    CVector xi(n);
    for (int s = 0; s < samples; ++s) {
        for (auto& c : xi) c = cplx(nd(gen), nd(gen));
        probe(xi);
    }
    if (n == 2) {
        const int na = 256, nb = 512;
        for (int i = 0; i <= na; ++i) {
            const double t = 0.5 * std::numbers::pi * i / na;
            for (int j = 0; j < nb; ++j) {
                const double p = kTwoPi * j / nb;
                xi[0] = std::cos(t);
                xi[1] = std::polar(std::sin(t), p);
                probe(xi);
            }
        }
    }
    if (top.empty()) return 0;

    // random-direction ascent; every accepted value is attained, so the result stays a lower bound
    double best = top.front().first;
    for (auto& [f, v] : top) {
        const double nv = norm(v);
        if (nv == 0) continue;
        for (auto& c : v) c /= nv;
        for (double step = 0.1; step > 1e-9; step *= 0.5) {
            for (int tries = 0; tries < 12 * int(n); ++tries) {
                CVector w = v;
                for (auto& c : w) c += step * cplx(nd(gen), nd(gen));
                const double fw = value(w);
                if (fw > f) {
                    const double nw = norm(w);
                    for (auto& c : w) c /= nw;
                    v = std::move(w);
                    f = fw;
                    tries = -1;
                }
            }
        }
        best = std::max(best, f);
    }
    return best;
}

}  // namespace rg
