// Vector and operator lemmas behind the main bounds.

#include <cmath>

#include "bound_kit.hpp"
#include "radgauge/error.hpp"

namespace rg::kit {

namespace {

double form(const ComplexMatrix& t, const CVector& x) { return quad_form(hermitian_part(t), x); }

double sq(double x) { return x * x; }

Sampler psd_with_unit(double lo, double hi, double r_lo, double r_hi) {
    return [=](std::size_t n, Rng& g, std::optional<EnsembleKind>) {
        InequalityCase c;
        c.ops["T"] = random_psd(n, g, lo, hi);
        c.vectors["xi"] = random_unit_vector(n, g);
        c.params.r = g.uniform(r_lo, r_hi);
        return c;
    };
}

std::optional<std::string> hm_pre(const InequalityCase& c, bool definite, bool r_ok) {
    const double r = c.params.r;
    return Pre()
        .need(definite ? is_pd(c.op("T")) : is_psd(c.op("T")), definite ? "T is not positive definite" : "T is not positive")
        .need(is_unit(c.vec("xi")), "ξ is not a unit vector")
        .need(r_ok, "r = " + num(r) + " outside its range")
        .done();
}

// Sandwich windows of the Furuta-type bounds.
struct Window {
    double m, mp, Mp, M;
};

std::optional<std::string> furuta_pre(const InequalityCase& c, bool lower) {
    const auto& p = c.params;
    Pre pre;
    pre.need(p.m_outer && p.m_lo && p.M_hi && p.M_outer, "m, m′, M′, M must all be given");
    if (auto f = pre.done()) return f;
    const Window w{*p.m_outer, *p.m_lo, *p.M_hi, *p.M_outer};
    pre.need(0 < w.m && w.m <= w.mp && w.mp < w.Mp && w.Mp <= w.M, "need 0 < m ≤ m′ < M′ ≤ M");
    pre.need(p.nu >= 0 && p.nu <= 1, "ν outside [0,1]");
    if (lower)
        pre.need(p.r1 >= -1 && p.r1 < 0, "r₁ outside [−1,0)");
    else
        pre.need(p.r2 > 0 && p.r2 <= 1, "r₂ outside (0,1]");
    const ComplexMatrix &t = c.op("T"), &s = c.op("S");
    pre.need(t.hermitian_defect() <= 1e-10 * (1 + t.frobenius()) && s.hermitian_defect() <= 1e-10 * (1 + s.frobenius()),
             "T, S must be Hermitian");
    if (auto f = pre.done()) return f;
    const auto et = hermitian_eigenvalues(hermitian_part(t)), es = hermitian_eigenvalues(hermitian_part(s));
    const double tol = 1e-12 * w.M;
    auto inside = [&](const std::vector<double>& e, double lo, double hi) {
        return e.front() >= lo - tol && e.back() <= hi + tol;
    };
    const bool first = inside(et, w.m, w.mp) && inside(es, w.Mp, w.M);
    const bool second = inside(es, w.m, w.mp) && inside(et, w.Mp, w.M);
    pre.need(first || second, "spectra of T, S [" + num(et.front()) + ", " + num(et.back()) + "], [" +
                                  num(es.front()) + ", " + num(es.back()) + "] do not fit the window");
    return pre.done();
}

// exp_r(ν(1−ν)/2 · g²)
double furuta_constant(const InequalityCase& c, double r, double g) {
    const double nu = c.params.nu;
    return exp_r_scalar(r, nu * (1 - nu) / 2 * g * g);
}

double h_outer(const InequalityCase& c) { return *c.params.M_outer / *c.params.m_outer; }

double furuta_lower(const InequalityCase& c, double gap) {
    const WeightedMeans wm = weighted_means(c.op("T"), c.op("S"), c.params.nu);
    return loewner_ratio(scaled(furuta_constant(c, c.params.r1, gap), wm.sharp), wm.nabla);
}

double furuta_upper(const InequalityCase& c, double gap) {
    const WeightedMeans wm = weighted_means(c.op("T"), c.op("S"), c.params.nu);
    return loewner_ratio(wm.nabla, scaled(furuta_constant(c, c.params.r2, gap), wm.sharp));
}

InequalityCase furuta_sample(std::size_t n, Rng& g) {
    InequalityCase c;
    auto& p = c.params;
    const double m = g.uniform(0.2, 1), mp = m * g.uniform(1, 3), Mp = mp * g.uniform(1.05, 4), M = Mp * g.uniform(1, 3);
    p.m_outer = m;
    p.m_lo = mp;
    p.M_hi = Mp;
    p.M_outer = M;
    p.nu = g.uniform(0, 1);
    p.r1 = g.uniform(-1, -1e-3);
    p.r2 = g.uniform(1e-3, 1);
    ComplexMatrix low = random_psd(n, g, m, mp), high = random_psd(n, g, Mp, M);
    if (g.coin()) std::swap(low, high);
    c.ops["T"] = low;
    c.ops["S"] = high;
    return c;
}

double inprod_lhs(const InequalityCase& c) {
    const CVector &x = c.vec("xi"), &z = c.vec("zeta"), &e = c.vec("eta");
    return std::norm(inner(e, x)) + std::norm(inner(e, z));
}

InequalityCase vectors_sample(std::size_t n, Rng& g) {
    InequalityCase c;
    for (const char* name : {"xi", "zeta", "eta"}) {
        CVector v = random_unit_vector(n, g);
        const double s = g.log_uniform(0.3, 3);
        for (auto& x : v) x *= s;
        c.vectors[name] = v;
    }
    return c;
}

}  // namespace

void add_lemma_bounds(std::vector<Bound>& out) {
    out.push_back({.id = "LEM-INPROD",
                   .anchor = "Bombieri-type inequality for two vectors",
                   .display = "|⟨η,ξ⟩|² + |⟨η,ζ⟩|² ≤ ‖η‖²(max{‖ξ‖², ‖ζ‖²} + |⟨ξ,ζ⟩|)",
                   .arity = "vectors ξ, ζ, η",
                   .lhs = inprod_lhs,
                   .rhs =
                       [](const InequalityCase& c) {
                           const CVector &x = c.vec("xi"), &z = c.vec("zeta"), &e = c.vec("eta");
                           return sq(norm(e)) * (std::max(sq(norm(x)), sq(norm(z))) + std::abs(inner(x, z)));
                       },
                   .sample = [](std::size_t n, Rng& g, std::optional<EnsembleKind>) { return vectors_sample(n, g); }});

    out.push_back({.id = "LEM-INPROD-PRINTED",
                   .anchor = "Bombieri-type inequality, printed form",
                   .display = "|⟨η,ξ⟩|² + |⟨η,ζ⟩|² ≤ ‖η‖² max{‖ξ‖², ‖ζ‖²} + |⟨ξ,ζ⟩|",
                   .arity = "vectors ξ, ζ, η",
                   .exempt = true,
                   .lhs = inprod_lhs,
                   .rhs =
                       [](const InequalityCase& c) {
                           const CVector &x = c.vec("xi"), &z = c.vec("zeta"), &e = c.vec("eta");
                           return sq(norm(e)) * std::max(sq(norm(x)), sq(norm(z))) + std::abs(inner(x, z));
                       },
                   .sample = [](std::size_t n, Rng& g, std::optional<EnsembleKind>) { return vectors_sample(n, g); }});

    out.push_back({.id = "LEM-D1",
                   .anchor = "Cauchy–Schwarz for DCBA",
                   .display = "|⟨DCBAξ,ζ⟩|² ≤ ⟨|BA|²ξ,ξ⟩⟨|(DC)*|²ζ,ζ⟩",
                   .arity = "A, B, C, D; vectors ξ, ζ",
                   .lhs =
                       [](const InequalityCase& c) {
                           const ComplexMatrix t = c.op("D") * c.op("C") * c.op("B") * c.op("A");
                           return std::norm(inner(t * c.vec("xi"), c.vec("zeta")));
                       },
                   .rhs =
                       [](const InequalityCase& c) {
                           const ComplexMatrix ba = c.op("B") * c.op("A"), dc = c.op("D") * c.op("C");
                           return form(adjoint_times(ba, ba), c.vec("xi")) * form(dc * dc.adjoint(), c.vec("zeta"));
                       },
                   .diagnose =
                       [](const InequalityCase& c) {
                           const CVector u = c.op("B") * c.op("A") * c.vec("xi");
                           const CVector v = (c.op("D") * c.op("C")).adjoint() * c.vec("zeta");
                           const double nu = norm(u), nv = norm(v);
                           if (nu == 0 || nv == 0) return std::string("BAξ or C*D*ζ vanishes: equality");
                           const double cosine = std::abs(inner(u, v)) / (nu * nv);
                           return std::string(cosine >= 1 - 1e-12 ? "BAξ ∥ C*D*ζ: equality expected"
                                                                  : "|cos∠(BAξ, C*D*ζ)| = " + num(cosine));
                       },
                   .sample = [](std::size_t n, Rng& g, std::optional<EnsembleKind>) {
                       InequalityCase c;
                       for (const char* name : {"A", "B", "C", "D"}) c.ops[name] = op(n, g);
                       c.vectors["xi"] = random_vector(n, g);
                       c.vectors["zeta"] = random_vector(n, g);
                       return c;
                   }});

    out.push_back({.id = "LEM-HM-i",
                   .anchor = "Hölder–McCarthy, r ≥ 1",
                   .display = "⟨Tξ,ξ⟩^r ≤ ⟨T^rξ,ξ⟩",
                   .arity = "T ≥ 0; unit ξ; r ≥ 1",
                   .precondition = [](const InequalityCase& c) { return hm_pre(c, false, c.params.r >= 1); },
                   .lhs = [](const InequalityCase& c) {
                       return std::pow(std::max(0.0, form(c.op("T"), c.vec("xi"))), c.params.r);
                   },
                   .rhs = [](const InequalityCase& c) { return form(pw(c.op("T"), c.params.r), c.vec("xi")); },
                   .sample = psd_with_unit(0, 2, 1, 4)});

    out.push_back({.id = "LEM-HM-ii",
                   .anchor = "Hölder–McCarthy, 0 < r ≤ 1",
                   .display = "⟨T^rξ,ξ⟩ ≤ ⟨Tξ,ξ⟩^r",
                   .arity = "T ≥ 0; unit ξ; 0 < r ≤ 1",
                   .precondition =
                       [](const InequalityCase& c) { return hm_pre(c, false, c.params.r > 0 && c.params.r <= 1); },
                   .lhs = [](const InequalityCase& c) { return form(pw(c.op("T"), c.params.r), c.vec("xi")); },
                   .rhs = [](const InequalityCase& c) {
                       return std::pow(std::max(0.0, form(c.op("T"), c.vec("xi"))), c.params.r);
                   },
                   .sample = psd_with_unit(0, 2, 0.05, 1)});

    out.push_back({.id = "LEM-HM-iii",
                   .anchor = "Hölder–McCarthy, r < 0",
                   .display = "⟨Tξ,ξ⟩^r ≤ ⟨T^rξ,ξ⟩",
                   .arity = "T > 0; unit ξ; r < 0",
                   .precondition = [](const InequalityCase& c) { return hm_pre(c, true, c.params.r < 0); },
                   .lhs = [](const InequalityCase& c) { return std::pow(form(c.op("T"), c.vec("xi")), c.params.r); },
                   .rhs = [](const InequalityCase& c) { return form(pw(c.op("T"), c.params.r), c.vec("xi")); },
                   .sample = psd_with_unit(0.1, 2, -2, -0.05)});

    out.push_back({.id = "LEM-MP",
                   .anchor = "Mond–Pečarić inequality",
                   .display = "f(⟨Tξ,ξ⟩) ≤ ⟨f(T)ξ,ξ⟩",
                   .arity = "T ≥ 0; unit ξ; convex f",
                   .precondition =
                       [](const InequalityCase& c) {
                           return Pre()
                               .need(is_psd(c.op("T")), "T is not positive")
                               .need(is_unit(c.vec("xi")), "ξ is not a unit vector")
                               .need(c.f.flags().convex, "f is not convex")
                               .done();
                       },
                   .lhs = [](const InequalityCase& c) { return c.f(std::max(0.0, form(c.op("T"), c.vec("xi")))); },
                   .rhs = [](const InequalityCase& c) { return form(fn(c.op("T"), c.f), c.vec("xi")); },
                   .sample = [](std::size_t n, Rng& g, std::optional<EnsembleKind>) {
                       InequalityCase c;
                       c.ops["T"] = random_psd(n, g, 0, 2);
                       c.vectors["xi"] = random_unit_vector(n, g);
                       c.f = g.coin() ? convex_power(g, 4)
                                      : ScalarFunction::affine_power(g.uniform(0.1, 2), g.uniform(1, 3), g.uniform(-1, 1));
                       return c;
                   }});

    out.push_back({.id = "LEM-AS",
                   .anchor = "Aujla–Silva inequality",
                   .display = "‖f(μT + (1−μ)S)‖ ≤ ‖μf(T) + (1−μ)f(S)‖",
                   .arity = "T, S ≥ 0; μ; f",
                   .precondition =
                       [](const InequalityCase& c) {
                           return Pre()
                               .need(is_psd(c.op("T")) && is_psd(c.op("S")), "T, S must be positive")
                               .need(c.params.mu >= 0 && c.params.mu <= 1, "μ outside [0,1]")
                               .need(convex_increasing(c.f), "f must be nonnegative, increasing and convex")
                               .done();
                       },
                   .lhs =
                       [](const InequalityCase& c) {
                           const double mu = c.params.mu;
                           const ComplexMatrix mix = hermitian_part(scaled(mu, c.op("T")) + scaled(1 - mu, c.op("S")));
                           return nrm(fn(mix, c.f));
                       },
                   .rhs =
                       [](const InequalityCase& c) {
                           const double mu = c.params.mu;
                           return nrm(scaled(mu, fn(c.op("T"), c.f)) + scaled(1 - mu, fn(c.op("S"), c.f)));
                       },
                   .sample = [](std::size_t n, Rng& g, std::optional<EnsembleKind>) {
                       InequalityCase c;
                       c.ops["T"] = random_psd(n, g, 0, 2);
                       c.ops["S"] = random_psd(n, g, 0, 2);
                       c.params.mu = g.uniform(0, 1);
                       c.f = convex_power(g, 4);
                       return c;
                   }});

    out.push_back({.id = "LEM-MC",
                   .anchor = "mixed Schwarz inequality",
                   .display = "|⟨Aξ,ζ⟩| ≤ ‖ψ(|A|)ξ‖‖φ(|A*|)ζ‖",
                   .arity = "A; vectors ξ, ζ; ψφ = t",
                   .precondition = [](const InequalityCase& c) {
                       return Pre().need(multiplies_to_identity(c.psi, c.phi), "ψ(t)φ(t) ≠ t").done();
                   },
                   .lhs = [](const InequalityCase& c) { return std::abs(inner(c.op("A") * c.vec("xi"), c.vec("zeta"))); },
                   .rhs =
                       [](const InequalityCase& c) {
                           const ComplexMatrix& a = c.op("A");
                           return norm(fn(ap(a, 1), c.psi) * c.vec("xi")) * norm(fn(aps(a, 1), c.phi) * c.vec("zeta"));
                       },
                   .sample = [](std::size_t n, Rng& g, std::optional<EnsembleKind>) {
                       InequalityCase c;
                       c.ops["A"] = op(n, g);
                       c.vectors["xi"] = random_vector(n, g);
                       c.vectors["zeta"] = random_vector(n, g);
                       power_pair(c, g);
                       return c;
                   }});

    const std::string furuta_arity = "T, S > 0; m ≤ m′ < M′ ≤ M; ν, r₁, r₂";
    auto sample = [](std::size_t n, Rng& g, std::optional<EnsembleKind>) { return furuta_sample(n, g); };
    auto one = [](const InequalityCase&) { return 1.0; };

    out.push_back({.id = "LEM-FURUTA",
                   .anchor = "Kantorovich-type reverse of the weighted AM-GM, lower half",
                   .display = "exp_{r₁}(ν(1−ν)/2 (1−1/h′)²) T♯_νS ≤ T∇_νS",
                   .arity = furuta_arity,
                   .precondition = [](const InequalityCase& c) { return furuta_pre(c, true); },
                   .lhs = [](const InequalityCase& c) { return furuta_lower(c, 1 - 1 / c.params.h_prime()); },
                   .rhs = one,
                   .sample = sample});

    out.push_back({.id = "LEM-FURUTA-U",
                   .anchor = "Kantorovich-type reverse of the weighted AM-GM, upper half",
                   .display = "T∇_νS ≤ exp_{r₂}(ν(1−ν)/2 (h−1)²) T♯_νS",
                   .arity = furuta_arity,
                   .precondition = [](const InequalityCase& c) { return furuta_pre(c, false); },
                   .lhs = [](const InequalityCase& c) { return furuta_upper(c, h_outer(c) - 1); },
                   .rhs = one,
                   .sample = sample});

    out.push_back({.id = "LEM-FURUTA-PRINTED",
                   .anchor = "weighted AM-GM reverse, lower half, printed form",
                   .display = "exp_{r₁}(ν(1−ν)/2 ((h−1)/h)²) T♯_νS ≤ T∇_νS",
                   .arity = furuta_arity,
                   .exempt = true,
                   .precondition = [](const InequalityCase& c) { return furuta_pre(c, true); },
                   .lhs = [](const InequalityCase& c) { return furuta_lower(c, 1 - 1 / h_outer(c)); },
                   .rhs = one,
                   .sample = sample});

    out.push_back({.id = "LEM-FURUTA-U-PRINTED",
                   .anchor = "weighted AM-GM reverse, upper half, printed form",
                   .display = "T∇_νS ≤ exp_{r₂}(ν(1−ν)/2 (h′−1)²) T♯_νS",
                   .arity = furuta_arity,
                   .exempt = true,
                   .precondition = [](const InequalityCase& c) { return furuta_pre(c, false); },
                   .lhs = [](const InequalityCase& c) { return furuta_upper(c, c.params.h_prime() - 1); },
                   .rhs = one,
                   .sample = sample});
}

}  // namespace rg::kit
