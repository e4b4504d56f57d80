// Bounds for products DCBA and their polar-decomposition corollaries.

#include <cmath>

#include "bound_kit.hpp"
#include "radgauge/error.hpp"

namespace rg::kit {

namespace {

ComplexMatrix dcba(const InequalityCase& c) { return c.op("D") * c.op("C") * c.op("B") * c.op("A"); }
ComplexMatrix ba(const InequalityCase& c) { return c.op("B") * c.op("A"); }
ComplexMatrix dc(const InequalityCase& c) { return c.op("D") * c.op("C"); }
// |BA|² and |(DC)*|²
ComplexMatrix lower_sq(const InequalityCase& c) { return ap(ba(c), 2); }
ComplexMatrix upper_sq(const InequalityCase& c) { return aps(dc(c), 2); }

Sampler four(std::function<void(InequalityCase&, Rng&)> setup) {
    return [setup](std::size_t n, Rng& g, std::optional<EnsembleKind>) {
        InequalityCase c;
        for (const char* name : {"A", "B", "C", "D"}) c.ops[name] = op(n, g);
        setup(c, g);
        return c;
    };
}

// ½(‖X + Y‖ + ‖X − Y‖)
double half_sum_diff(const ComplexMatrix& x, const ComplexMatrix& y) { return 0.5 * (nrm(x + y) + nrm(x - y)); }

double a1_rhs(const InequalityCase& c, const ComplexMatrix& inner_prod, bool radius_product) {
    const ComplexMatrix &a = c.op("A"), &b = c.op("B"), &cc = c.op("C"), &d = c.op("D");
    const ComplexMatrix p = adjoint_times(a, b), q = cc * d.adjoint();
    const ComplexMatrix bsa = adjoint_times(b, a), dcs = d * cc.adjoint();
    const double last = radius_product ? w_hi(bsa) * w_hi(dcs) : nrm(bsa) * nrm(dcs);
    return half_sum_diff(adjoint_times(p, p), adjoint_times(q, q)) + w_hi(inner_prod) + 2 * last;
}

double sandwich_constant(double lo, double hi) { return std::sqrt(lo * hi) / (lo + hi); }

std::optional<std::string> window_pre(const InequalityCase& c, const ComplexMatrix& x, const ComplexMatrix& y,
                                      const std::optional<double>& lo, const std::optional<double>& hi) {
    if (!lo || !hi) return std::string("window ends are missing");
    const SandwichMargins m = sandwich_margins(x, y, *lo, *hi);
    (void)c;
    if (m.pass) return std::nullopt;
    return m.describe();
}

std::optional<std::string> psi_pre(const InequalityCase& c, bool zero_at_zero) {
    return Pre()
        .need(convex_increasing(c.psi), "ψ must be nonnegative, increasing and convex")
        .need(!zero_at_zero || c.psi.flags().zero_at_zero, "ψ(0) ≠ 0")
        .done();
}

// U|T|^β U|T|^α with T = U|T|
ComplexMatrix polar_product(const ComplexMatrix& t, double alpha, double beta) {
    const PolarFactors pf = polar_decomposition(t);
    return pf.U * ap(t, beta) * pf.U * ap(t, alpha);
}

InequalityCase sandwich_sample(std::size_t n, Rng& g) {
    const double lo = g.uniform(0.05, 1), hi = lo * g.uniform(1.05, 4);
    InequalityCase c = make_sandwich_case(n, lo, hi, g);
    return g.coin() ? swap_sandwich_roles(c) : c;
}

// singular values in a narrow band so that |T|^{2β} and |T*|^{2α} separate
InequalityCase cor_prof1_sample(std::size_t n, Rng& g) {
    for (int attempt = 0; attempt < 1000; ++attempt) {
        const double alpha = g.uniform(0.05, 2);
        const double beta = std::max(g.uniform(0.05, 2), 1 - alpha + 0.01);
        const double s0 = g.log_uniform(0.2, 3), rho = g.uniform(1, 1.3);
        std::vector<double> s(n);
        for (auto& x : s) x = s0 * g.uniform(1, rho);
        const auto [mn, mx] = std::minmax_element(s.begin(), s.end());
        double low = std::pow(*mx, 2 * beta), high = std::pow(*mn, 2 * alpha);
        if (!(low < high * (1 - 1e-3))) {
            low = std::pow(*mx, 2 * alpha);
            high = std::pow(*mn, 2 * beta);
            if (!(low < high * (1 - 1e-3))) continue;
        }
        InequalityCase c;
        const double delta = low + (high - low) * g.uniform(0.01, 0.5);
        c.params.delta = delta;
        c.params.Delta = delta + (high - delta) * g.uniform(0.1, 0.99);
        c.params.alpha = alpha;
        c.params.beta = beta;
        c.ops["T"] = haar_unitary(n, g) * ComplexMatrix::diagonal(s) * haar_unitary(n, g);
        c.psi = convex_power(g, 3);
        return c;
    }
    throw Error(Errc::BadWindow, "could not place a window between |T|^{2β} and |T*|^{2α}");
}

std::optional<std::string> alpha_beta_pre(const InequalityCase& c, double sum_min) {
    const auto& p = c.params;
    return Pre()
        .need(p.alpha >= 0 && p.beta >= 0, "α, β must be nonnegative")
        .need(p.alpha + p.beta >= sum_min, "α + β = " + num(p.alpha + p.beta) + " < " + num(sum_min))
        .done();
}

std::optional<std::string> nu_pre(const InequalityCase& c) {
    return Pre().need(c.params.nu > 0 && c.params.nu < 1, "ν outside (0,1)").done();
}

// (1−ν)ψ(M) + νψ(N) and its correction r·inf γ
double mohmmm_rhs(const ComplexMatrix& m, const ComplexMatrix& n, const InequalityCase& c) {
    const double nu = c.params.nu;
    return nrm(scaled(1 - nu, fn(m, c.psi)) + scaled(nu, fn(n, c.psi)));
}

double mohmmm_correction(const ComplexMatrix& m, const ComplexMatrix& n, const InequalityCase& c,
                         const SphereOptOptions& o) {
    const double nu = c.params.nu;
    return std::min(nu, 1 - nu) * infimum_unit_sphere(make_gamma_functional(m, n, c.psi), o).value;
}

InequalityCase maka_sample(std::size_t n, Rng& g, double sum_min) {
    InequalityCase c;
    c.ops["T"] = op(n, g);
    c.params.alpha = g.uniform(0, 2);
    c.params.beta = std::max(g.uniform(0, 2), sum_min - c.params.alpha + g.uniform(0, 0.5));
    c.params.nu = g.uniform(0.2, 0.8);
    c.psi = convex_power(g, 2);
    return c;
}

// pairs (M, N) of the polar corollaries
std::pair<ComplexMatrix, ComplexMatrix> maka1_pair(const InequalityCase& c) {
    const auto& p = c.params;
    const ComplexMatrix& t = c.op("T");
    return {ap(t, 2 * p.beta / (1 - p.nu)), aps(t, 2 * p.alpha / p.nu)};
}

std::pair<ComplexMatrix, ComplexMatrix> maka2_pair(const InequalityCase& c) {
    const auto& p = c.params;
    const ComplexMatrix& t = c.op("T");
    return {ap(t, 2 * p.beta / (1 - p.nu)), ap(t, 2 * p.alpha / p.nu)};
}

std::pair<ComplexMatrix, ComplexMatrix> maka3_pair(const InequalityCase& c) {
    const auto& p = c.params;
    const ComplexMatrix& t = c.op("T");
    const ComplexMatrix ta = ap(t, p.alpha);
    const ComplexMatrix inner_m = hermitian_part(ta * t * t.adjoint() * ta);
    return {ap(t, (2 * p.beta + 2) / (1 - p.nu)), pw(inner_m, 1 / p.nu)};
}

template <class PairFn>
Bound maka_bound(std::string id, std::string anchor, std::string display, double sum_min, PairFn pair,
                 std::function<ComplexMatrix(const InequalityCase&)> inside) {
    return {.id = std::move(id),
            .anchor = std::move(anchor),
            .display = std::move(display),
            .arity = "T; α, β, ν, ψ",
            .precondition = [sum_min](const InequalityCase& c) {
                return both(both(alpha_beta_pre(c, sum_min), nu_pre(c)), psi_pre(c, false));
            },
            .lhs = [inside](const InequalityCase& c) { return c.psi(std::pow(w_lo(inside(c)), 2)); },
            .rhs =
                [pair](const InequalityCase& c) {
                    auto [m, n] = pair(c);
                    return mohmmm_rhs(m, n, c);
                },
            .correction =
                [pair](const InequalityCase& c, const SphereOptOptions& o) {
                    auto [m, n] = pair(c);
                    return mohmmm_correction(m, n, c, o);
                },
            .sample = [sum_min](std::size_t n, Rng& g, std::optional<EnsembleKind>) { return maka_sample(n, g, sum_min); }};
}

InequalityCase boshra_printed_sample(std::size_t n, Rng& g) {
    InequalityCase c;
    const ComplexMatrix x = random_psd(n, g, 0.2, 1.5);
    const ComplexMatrix y = hermitian_part(x + random_psd(n, g, 0, 1));
    const double lo = lambda_min(x) * g.uniform(0.5, 1), hi = lambda_max(y) * g.uniform(1, 2);
    c.ops["A"] = pw(x, 0.5);
    c.ops["B"] = eye(n);
    c.ops["C"] = eye(n);
    c.ops["D"] = pw(y, 0.5);
    c.params.m_lo = lo;
    c.params.M_hi = std::max(hi, lo * 1.01);
    c.psi = convex_power(g, 3);
    return c;
}

double boshra_rhs(const InequalityCase& c) {
    const double hp = c.params.h_prime();
    const double gamma = exp_r_scalar(-1, 0.125 * std::pow(1 - 1 / hp, 2));
    return nrm(fn(lower_sq(c), c.psi) + fn(upper_sq(c), c.psi)) / (2 * gamma);
}

}  // namespace

void add_product_bounds(std::vector<Bound>& out) {
    const Sampler four_ops = four([](InequalityCase&, Rng&) {});

    // D C* A* B
    auto cross = [](const InequalityCase& c) {
        return c.op("D") * c.op("C").adjoint() * c.op("A").adjoint() * c.op("B");
    };
    auto a1_lhs = [](const InequalityCase& c) {
        return std::pow(nrm(adjoint_times(c.op("B"), c.op("A")) + c.op("D") * c.op("C").adjoint()), 2);
    };

    out.push_back({.id = "TH-A1",
                   .anchor = "norm of B*A + DC*",
                   .display = "‖B*A + DC*‖² ≤ ½(‖|A*B|² + |CD*|²‖ + ‖|A*B|² − |CD*|²‖) + w(DC*A*B) + 2‖B*A‖‖DC*‖",
                   .arity = "A, B, C, D",
                   .lhs = a1_lhs,
                   .rhs = [cross](const InequalityCase& c) { return a1_rhs(c, cross(c), false); },
                   .sample = four_ops});

    out.push_back({.id = "TH-A1-PRINTED",
                   .anchor = "norm of B*A + DC*, printed cross term",
                   .display = "‖B*A + DC*‖² ≤ ½(‖|A*B|² + |CD*|²‖ + ‖|A*B|² − |CD*|²‖) + w(CD*A*B) + 2‖B*A‖‖DC*‖",
                   .arity = "A, B, C, D",
                   .exempt = true,
                   .lhs = a1_lhs,
                   .rhs = [](const InequalityCase& c) {
                       return a1_rhs(c, c.op("C") * c.op("D").adjoint() * c.op("A").adjoint() * c.op("B"), false);
                   },
                   .sample = four_ops});

    out.push_back({.id = "COR-A1S",
                   .anchor = "norm of S*S + SS*",
                   .display = "‖S*S + SS*‖² ≤ ½(‖|S|⁴ + |S*|⁴‖ + ‖|S|⁴ − |S*|⁴‖) + w(|S*|⁴) + 2‖S‖⁴",
                   .arity = "S",
                   .lhs = [](const InequalityCase& c) {
                       const ComplexMatrix& s = c.op("S");
                       return std::pow(nrm(adjoint_times(s, s) + s * s.adjoint()), 2);
                   },
                   .rhs = [](const InequalityCase& c) {
                       const ComplexMatrix& s = c.op("S");
                       const ComplexMatrix l = ap(s, 4), u = aps(s, 4);
                       return half_sum_diff(l, u) + w_hi(u) + 2 * nrm(ap(s, 2)) * nrm(aps(s, 2));
                   },
                   .sample = [](std::size_t n, Rng& g, std::optional<EnsembleKind> kind) {
                       InequalityCase c;
                       c.ops["S"] = kind ? scaled(g.uniform(0.5, 1.5), draw_matrix(*kind, n, g)) : op(n, g);
                       return c;
                   },
                   .single_operator = true});

    out.push_back({.id = "COR-A1W",
                   .anchor = "numerical radius of B*A + DC*",
                   .display = "w(B*A + DC*)² ≤ ½(‖|A*B|² + |CD*|²‖ + ‖|A*B|² − |CD*|²‖) + w(DC*A*B) + 2w(B*A)w(DC*)",
                   .arity = "A, B, C, D",
                   .lhs = [](const InequalityCase& c) {
                       return std::pow(w_lo(adjoint_times(c.op("B"), c.op("A")) + c.op("D") * c.op("C").adjoint()), 2);
                   },
                   .rhs = [cross](const InequalityCase& c) { return a1_rhs(c, cross(c), true); },
                   .sample = four_ops});

    auto mu_pre = [](const InequalityCase& c) {
        return Pre().need(c.params.mu > 0 && c.params.mu < 1, "μ outside (0,1)").done();
    };
    auto mu_sample = [](bool with_psi, bool with_r) {
        return four([with_psi, with_r](InequalityCase& c, Rng& g) {
            c.params.mu = g.uniform(0.15, 0.85);
            if (with_psi) c.psi = convex_power(g, 2.5);
            if (with_r) c.params.r = g.uniform(1, 2.5);
        });
    };
    // ‖μ f(|BA|^{2e/μ}) + (1−μ) f(|(DC)*|^{2e/(1−μ)})‖
    auto weighted = [](const InequalityCase& c, double e, const ScalarFunction* f) {
        const double mu = c.params.mu;
        ComplexMatrix x = ap(ba(c), 2 * e / mu), y = aps(dc(c), 2 * e / (1 - mu));
        if (f) {
            x = fn(x, *f);
            y = fn(y, *f);
        }
        return nrm(scaled(mu, x) + scaled(1 - mu, y));
    };

    out.push_back({.id = "TH-RAHMA1-T1",
                   .anchor = "convex function of the radius of DCBA",
                   .display = "ψ(w(DCBA)²) ≤ ‖μψ(|BA|^{2/μ}) + (1−μ)ψ(|(DC)*|^{2/(1−μ)})‖",
                   .arity = "A, B, C, D; μ, ψ",
                   .precondition = [mu_pre](const InequalityCase& c) { return both(mu_pre(c), psi_pre(c, false)); },
                   .lhs = [](const InequalityCase& c) { return c.psi(std::pow(w_lo(dcba(c)), 2)); },
                   .rhs = [weighted](const InequalityCase& c) { return weighted(c, 1, &c.psi); },
                   .sample = mu_sample(true, false)});

    out.push_back({.id = "TH-RAHMA1-T2",
                   .anchor = "power of the radius of DCBA",
                   .display = "w(DCBA)^{2r} ≤ ‖μ|BA|^{2r/μ} + (1−μ)|(DC)*|^{2r/(1−μ)}‖",
                   .arity = "A, B, C, D; μ, r",
                   .precondition = [mu_pre](const InequalityCase& c) {
                       return both(mu_pre(c), Pre().need(c.params.r >= 1, "r = " + num(c.params.r) + " < 1").done());
                   },
                   .lhs = [](const InequalityCase& c) { return std::pow(w_lo(dcba(c)), 2 * c.params.r); },
                   .rhs = [weighted](const InequalityCase& c) { return weighted(c, c.params.r, nullptr); },
                   .sample = mu_sample(false, true)});

    out.push_back({.id = "TH-RAHMA1-T3",
                   .anchor = "square of the radius of DCBA",
                   .display = "w(DCBA)² ≤ ‖μ|BA|^{2/μ} + (1−μ)|(DC)*|^{2/(1−μ)}‖",
                   .arity = "A, B, C, D; μ",
                   .precondition = mu_pre,
                   .lhs = [](const InequalityCase& c) { return std::pow(w_lo(dcba(c)), 2); },
                   .rhs = [weighted](const InequalityCase& c) { return weighted(c, 1, nullptr); },
                   .sample = mu_sample(false, false)});

    auto prof1_pre = [](const InequalityCase& c) {
        return both(window_pre(c, lower_sq(c), upper_sq(c), c.params.delta, c.params.Delta), psi_pre(c, true));
    };
    auto k_of = [](const InequalityCase& c) { return sandwich_constant(*c.params.delta, *c.params.Delta); };

    out.push_back({.id = "TH-PROF1",
                   .anchor = "sandwich bound for DCBA",
                   .display = "ψ(w(DCBA)) ≤ (√(δΔ)/(δ+Δ))‖ψ(|BA|²) + ψ(|(DC)*|²)‖",
                   .arity = "A, B, C, D; δ, Δ, ψ",
                   .precondition = prof1_pre,
                   .lhs = [](const InequalityCase& c) { return c.psi(w_lo(dcba(c))); },
                   .rhs = [k_of](const InequalityCase& c) {
                       return k_of(c) * nrm(fn(lower_sq(c), c.psi) + fn(upper_sq(c), c.psi));
                   },
                   .sample = [](std::size_t n, Rng& g, std::optional<EnsembleKind>) {
                       InequalityCase c = sandwich_sample(n, g);
                       c.psi = convex_power(g, 3);
                       return c;
                   }});

    out.push_back({.id = "COR-PROF1",
                   .anchor = "sandwich bound for the polar product",
                   .display = "ψ(w(U|T|^βU|T|^α)) ≤ (√(δΔ)/(δ+Δ))‖ψ(|T|^{2β}) + ψ(|T*|^{2α})‖",
                   .arity = "T; α, β, δ, Δ, ψ",
                   .precondition = [](const InequalityCase& c) {
                       const auto& p = c.params;
                       const ComplexMatrix& t = c.op("T");
                       return both(both(alpha_beta_pre(c, 1), psi_pre(c, true)),
                                   window_pre(c, ap(t, 2 * p.beta), aps(t, 2 * p.alpha), p.delta, p.Delta));
                   },
                   .lhs = [](const InequalityCase& c) {
                       return c.psi(w_lo(polar_product(c.op("T"), c.params.alpha, c.params.beta)));
                   },
                   .rhs = [k_of](const InequalityCase& c) {
                       const ComplexMatrix& t = c.op("T");
                       return k_of(c) * nrm(fn(ap(t, 2 * c.params.beta), c.psi) + fn(aps(t, 2 * c.params.alpha), c.psi));
                   },
                   .sample = [](std::size_t n, Rng& g, std::optional<EnsembleKind>) { return cor_prof1_sample(n, g); }});

    auto r_pre = [](const InequalityCase& c) {
        return Pre().need(c.params.r >= 1, "r = " + num(c.params.r) + " < 1").done();
    };

    out.push_back({.id = "REM-R23-i",
                   .anchor = "sandwich bound for powers of the radius of DCBA",
                   .display = "w(DCBA)^r ≤ (√(δΔ)/(δ+Δ))‖|BA|^{2r} + |(DC)*|^{2r}‖",
                   .arity = "A, B, C, D; δ, Δ, r",
                   .precondition = [r_pre](const InequalityCase& c) {
                       return both(r_pre(c), window_pre(c, lower_sq(c), upper_sq(c), c.params.delta, c.params.Delta));
                   },
                   .lhs = [](const InequalityCase& c) { return std::pow(w_lo(dcba(c)), c.params.r); },
                   .rhs = [k_of](const InequalityCase& c) {
                       return k_of(c) * nrm(ap(ba(c), 2 * c.params.r) + aps(dc(c), 2 * c.params.r));
                   },
                   .sample = [](std::size_t n, Rng& g, std::optional<EnsembleKind>) {
                       InequalityCase c = sandwich_sample(n, g);
                       c.params.r = g.uniform(1, 3);
                       return c;
                   }});

    out.push_back({.id = "REM-R23-ii",
                   .anchor = "sandwich bound for T*S",
                   .display = "w(T*S)^r ≤ (√(δΔ)/(δ+Δ))‖|T|^{2r} + |S|^{2r}‖",
                   .arity = "S, T; δ, Δ, r",
                   .precondition = [r_pre](const InequalityCase& c) {
                       return both(r_pre(c), window_pre(c, ap(c.op("T"), 2), ap(c.op("S"), 2), c.params.delta, c.params.Delta));
                   },
                   .lhs = [](const InequalityCase& c) {
                       return std::pow(w_lo(adjoint_times(c.op("T"), c.op("S"))), c.params.r);
                   },
                   .rhs = [k_of](const InequalityCase& c) {
                       return k_of(c) * nrm(ap(c.op("T"), 2 * c.params.r) + ap(c.op("S"), 2 * c.params.r));
                   },
                   .sample = [](std::size_t n, Rng& g, std::optional<EnsembleKind>) {
                       const InequalityCase s = sandwich_sample(n, g);
                       InequalityCase c;
                       ComplexMatrix t = ba(s), u = dc(s).adjoint();
                       if (g.coin()) std::swap(t, u);
                       c.ops["T"] = t;
                       c.ops["S"] = u;
                       c.params.delta = s.params.delta;
                       c.params.Delta = s.params.Delta;
                       c.params.r = g.uniform(1, 3);
                       return c;
                   }});

    out.push_back({.id = "REM-R23-iii",
                   .anchor = "sandwich bound against the identity",
                   .display = "w(T)^r ≤ (√(δΔ)/(δ+Δ))‖|T|^{2r} + I‖",
                   .arity = "T; δ, Δ, r",
                   .precondition = [r_pre](const InequalityCase& c) {
                       const ComplexMatrix& t = c.op("T");
                       return both(r_pre(c), window_pre(c, ap(t, 2), eye(c.dim()), c.params.delta, c.params.Delta));
                   },
                   .lhs = [](const InequalityCase& c) { return std::pow(w_lo(c.op("T")), c.params.r); },
                   .rhs = [k_of](const InequalityCase& c) {
                       return k_of(c) * nrm(ap(c.op("T"), 2 * c.params.r) + eye(c.dim()));
                   },
                   .sample = [](std::size_t n, Rng& g, std::optional<EnsembleKind>) {
                       InequalityCase c;
                       std::vector<double> s(n);
                       double lo, hi;
                       if (g.coin()) {
                           lo = g.uniform(0.05, 0.9);
                           hi = g.uniform(lo * 1.01, 1);
                           for (auto& x : s) x = std::sqrt(lo) * (1 - 1e-3) * g.uniform(0.3, 1);
                       } else {
                           lo = g.uniform(1, 2);
                           hi = g.uniform(lo * 1.01, 3);
                           for (auto& x : s) x = std::sqrt(hi) * (1 + 1e-3) * g.uniform(1, 1.5);
                       }
                       c.ops["T"] = haar_unitary(n, g) * ComplexMatrix::diagonal(s) * haar_unitary(n, g);
                       c.params.delta = lo;
                       c.params.Delta = hi;
                       c.params.r = g.uniform(1, 3);
                       return c;
                   }});

    auto boshra_lhs = [](const InequalityCase& c) { return c.psi(w_lo(dcba(c))); };

    out.push_back({.id = "TH-BOSHRA22",
                   .anchor = "Kantorovich-type sandwich bound for DCBA",
                   .display = "ψ(w(DCBA)) ≤ (1/(2γ))‖ψ(|BA|²) + ψ(|(DC)*|²)‖, γ = exp_{−1}((1 − 1/h′)²/8)",
                   .arity = "A, B, C, D; m′, M′, ψ",
                   .precondition = [](const InequalityCase& c) {
                       return both(window_pre(c, lower_sq(c), upper_sq(c), c.params.m_lo, c.params.M_hi), psi_pre(c, true));
                   },
                   .lhs = boshra_lhs,
                   .rhs = boshra_rhs,
                   .sample = [](std::size_t n, Rng& g, std::optional<EnsembleKind>) {
                       InequalityCase c = sandwich_sample(n, g);
                       c.params.m_lo = c.params.delta;
                       c.params.M_hi = c.params.Delta;
                       c.params.delta.reset();
                       c.params.Delta.reset();
                       c.psi = convex_power(g, 3);
                       return c;
                   }});

    out.push_back({.id = "TH-BOSHRA22-PRINTED",
                   .anchor = "Kantorovich-type bound, ordered reading",
                   .display = "ψ(w(DCBA)) ≤ (1/(2γ))‖ψ(|BA|²) + ψ(|(DC)*|²)‖ for m′ ≤ |BA|² ≤ |(DC)*|² ≤ M′",
                   .arity = "A, B, C, D; m′, M′, ψ",
                   .exempt = true,
                   .precondition = [](const InequalityCase& c) {
                       const auto& p = c.params;
                       if (!p.m_lo || !p.M_hi) return std::optional<std::string>("m′ and M′ are required");
                       const ComplexMatrix x = lower_sq(c), y = upper_sq(c);
                       return both(Pre()
                                       .need(*p.m_lo > 0 && *p.m_lo < *p.M_hi, "need 0 < m′ < M′")
                                       .need(lambda_min(hermitian_part(x)) >= *p.m_lo, "|BA|² is not above m′")
                                       .need(is_psd(hermitian_part(y - x)), "|BA|² ≤ |(DC)*|² fails")
                                       .need(lambda_max(hermitian_part(y)) <= *p.M_hi, "|(DC)*|² is not below M′")
                                       .done(),
                                   psi_pre(c, true));
                   },
                   .lhs = boshra_lhs,
                   .rhs = boshra_rhs,
                   .sample = [](std::size_t n, Rng& g, std::optional<EnsembleKind>) { return boshra_printed_sample(n, g); }});

    auto mohmmm_pair = [](const InequalityCase& c) {
        const double nu = c.params.nu;
        return std::pair{ap(ba(c), 2 / (1 - nu)), aps(dc(c), 2 / nu)};
    };
    out.push_back({.id = "TH-MOHMMM",
                   .anchor = "refined convex bound for DCBA",
                   .display = "ψ(w(DCBA)²) ≤ ‖(1−ν)ψ(|BA|^{2/(1−ν)}) + νψ(|(DC)*|^{2/ν})‖ − min(ν,1−ν) inf γ",
                   .arity = "A, B, C, D; ν, ψ",
                   .precondition = [](const InequalityCase& c) { return both(nu_pre(c), psi_pre(c, false)); },
                   .lhs = [](const InequalityCase& c) { return c.psi(std::pow(w_lo(dcba(c)), 2)); },
                   .rhs = [mohmmm_pair](const InequalityCase& c) {
                       auto [m, n] = mohmmm_pair(c);
                       return mohmmm_rhs(m, n, c);
                   },
                   .correction = [](const InequalityCase& c, const SphereOptOptions& o) {
                       const double nu = c.params.nu;
                       return std::min(nu, 1 - nu) *
                              infimum_unit_sphere(build_correction_functional(FunctionalKind::GAMMA_PSI, c), o).value;
                   },
                   .sample = four([](InequalityCase& c, Rng& g) {
                       c.params.nu = g.uniform(0.15, 0.85);
                       c.psi = convex_power(g, 2.5);
                   })});

    out.push_back(maka_bound("COR-MAKA1", "refined bound for the polar product",
                             "ψ(w(U|T|^βU|T|^α)²) ≤ ‖(1−ν)ψ(|T|^{2β/(1−ν)}) + νψ(|T*|^{2α/ν})‖ − r inf γ", 1,
                             maka1_pair, [](const InequalityCase& c) {
                                 return polar_product(c.op("T"), c.params.alpha, c.params.beta);
                             }));
    out.push_back(maka_bound("COR-MAKA2", "refined bound for T*|T*|^{α+β−2}T",
                             "ψ(w(T*|T*|^{α+β−2}T)²) ≤ ‖(1−ν)ψ(|T|^{2β/(1−ν)}) + νψ(|T|^{2α/ν})‖ − r inf γ", 2,
                             maka2_pair, [](const InequalityCase& c) {
                                 const ComplexMatrix& t = c.op("T");
                                 return t.adjoint() * aps(t, c.params.alpha + c.params.beta - 2) * t;
                             }));
    out.push_back(maka_bound("COR-MAKA3", "refined bound for |T|^αT²|T|^β",
                             "ψ(w(|T|^αT²|T|^β)²) ≤ ‖(1−ν)ψ(|T|^{(2β+2)/(1−ν)}) + νψ((|T|^αTT*|T|^α)^{1/ν})‖ − r inf γ",
                             0, maka3_pair, [](const InequalityCase& c) {
                                 const ComplexMatrix& t = c.op("T");
                                 return ap(t, c.params.alpha) * t * t * ap(t, c.params.beta);
                             }));

    auto supq_sample = [](bool power_only) {
        return [power_only](std::size_t n, Rng& g, std::optional<EnsembleKind> kind) {
            InequalityCase c;
            const EnsembleKind k = kind ? *kind : EnsembleKind::Ginibre;
            c.ops["A"] = scaled(g.uniform(0.5, 1.5), draw_matrix(k, n, g));
            c.params.r = g.uniform(2, 4);
            if (!power_only) c.psi = ScalarFunction::power(c.params.r);
            return c;
        };
    };

    out.push_back({.id = "TH-SUPQAD",
                   .anchor = "superquadratic refinement of the norm bound",
                   .display = "ψ(w(A)) ≤ ‖ψ(|A|)‖ − inf_ξ ⟨ψ(‖A‖ − |A|)ξ,ξ⟩",
                   .arity = "A; ψ",
                   .precondition = [](const InequalityCase& c) {
                       const auto& f = c.psi.flags();
                       return Pre()
                           .need(f.nonnegative && f.superquadratic, "ψ must be nonnegative and superquadratic")
                           .need(f.increasing, "ψ must be increasing")
                           .done();
                   },
                   .lhs = [](const InequalityCase& c) { return c.psi(w_lo(c.op("A"))); },
                   .rhs = [](const InequalityCase& c) { return nrm(fn(ap(c.op("A"), 1), c.psi)); },
                   .correction = [](const InequalityCase& c, const SphereOptOptions& o) {
                       return infimum_unit_sphere(build_correction_functional(FunctionalKind::SUPQ_DEFICIT, c), o).value;
                   },
                   .sample = supq_sample(false),
                   .single_operator = true});

    out.push_back({.id = "COR-SUPQAD",
                   .anchor = "superquadratic refinement for powers",
                   .display = "w(A)^r ≤ ‖A‖^r − inf_ξ ⟨(‖A‖ − |A|)^rξ,ξ⟩",
                   .arity = "A; r",
                   .precondition = [](const InequalityCase& c) {
                       return Pre().need(c.params.r >= 2, "r = " + num(c.params.r) + " < 2").done();
                   },
                   .lhs = [](const InequalityCase& c) { return std::pow(w_lo(c.op("A")), c.params.r); },
                   .rhs = [](const InequalityCase& c) { return std::pow(nrm(c.op("A")), c.params.r); },
                   .correction = [](const InequalityCase& c, const SphereOptOptions& o) {
                       return infimum_unit_sphere(make_supq_deficit(c.op("A"), ScalarFunction::power(c.params.r)), o).value;
                   },
                   .sample = supq_sample(true),
                   .single_operator = true});
}

}  // namespace rg::kit
