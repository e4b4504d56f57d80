// Classical numerical radius bounds for one or two operators.

#include <cmath>

#include "bound_kit.hpp"

namespace rg::kit {

namespace {

constexpr EnsembleKind kMix[] = {EnsembleKind::Ginibre, EnsembleKind::Normal, EnsembleKind::Nilpotent,
                                 EnsembleKind::Hermitian};

using Setup = std::function<void(InequalityCase&, Rng&)>;

// A drawn from the override kind or a mix of ensembles, then `setup` fills the rest.
Sampler single(Setup setup = {}) {
    return [setup](std::size_t n, Rng& g, std::optional<EnsembleKind> kind) {
        InequalityCase c;
        const EnsembleKind k = kind ? *kind : kMix[g.integer(0, 3)];
        c.ops["A"] = scaled(g.uniform(0.5, 1.5), draw_matrix(k, n, g));
        if (setup) setup(c, g);
        return c;
    };
}

Sampler ops(std::vector<std::string> names, Setup setup = {}) {
    return [names, setup](std::size_t n, Rng& g, std::optional<EnsembleKind>) {
        InequalityCase c;
        for (const auto& name : names) c.ops[name] = op(n, g);
        if (setup) setup(c, g);
        return c;
    };
}

std::optional<std::string> r_at_least_one(const InequalityCase& c) {
    return Pre().need(c.params.r >= 1, "r = " + num(c.params.r) + " < 1").done();
}

void draw_r(InequalityCase& c, Rng& g) { c.params.r = g.uniform(1, 3); }

double watfa2_rhs(const InequalityCase& c) {
    const auto& p = c.params;
    // E = X φ²(|A^{j*}|) X*, W = (A^{m−j}B)* ψ²(|A^j|) A^{m−j}B
    auto terms = schwarz_terms(c.family("X"), c.family("A"), c.family("B"), p.m, c.phi, c.psi);
    std::vector<ComplexMatrix> per_j(p.m, ComplexMatrix(c.dim()));
    for (const auto& t : terms) per_j[t.j - 1] += pw(t.S, p.r) + pw(t.T, p.r);
    double s = 0;
    for (const auto& m : per_j) s += nrm(m);
    const double n = c.family("A").size();
    return std::pow(n, 2 * p.r - 1) / (2 * p.m) * s;
}

}  // namespace

void add_norm_bounds(std::vector<Bound>& out) {
    out.push_back({.id = "B-N1-SANDWICH",
                   .anchor = "norm equivalence, upper half",
                   .display = "w(A) ≤ ‖A‖",
                   .arity = "A",
                   .lhs = [](const InequalityCase& c) { return w_lo(c.op("A")); },
                   .rhs = [](const InequalityCase& c) { return nrm(c.op("A")); },
                   .sample = single(),
                   .single_operator = true});

    out.push_back({.id = "B-N1-SANDWICH-L",
                   .anchor = "norm equivalence, lower half",
                   .display = "½‖A‖ ≤ w(A)",
                   .arity = "A",
                   .lhs = [](const InequalityCase& c) { return 0.5 * nrm(c.op("A")); },
                   .rhs = [](const InequalityCase& c) { return w_hi(c.op("A")); },
                   .sample = single(),
                   .single_operator = true});

    out.push_back({.id = "B-POWER",
                   .anchor = "power inequality",
                   .display = "w(A^k) ≤ w(A)^k",
                   .arity = "A; k",
                   .precondition = [](const InequalityCase& c) {
                       return Pre().need(c.params.k >= 1, "k = " + std::to_string(c.params.k) + " < 1").done();
                   },
                   .lhs = [](const InequalityCase& c) { return w_lo(matrix_power(c.op("A"), c.params.k)); },
                   .rhs = [](const InequalityCase& c) { return std::pow(w_hi(c.op("A")), c.params.k); },
                   .sample = single([](InequalityCase& c, Rng& g) { c.params.k = g.integer(2, 4); }),
                   .single_operator = true});

    out.push_back({.id = "B-MUNA6",
                   .anchor = "Kittaneh absolute-value bound",
                   .display = "w(A) ≤ ½‖|A| + |A*|‖",
                   .arity = "A",
                   .lhs = [](const InequalityCase& c) { return w_lo(c.op("A")); },
                   .rhs = [](const InequalityCase& c) { return 0.5 * nrm(ap(c.op("A"), 1) + aps(c.op("A"), 1)); },
                   .sample = single(),
                   .single_operator = true});

    out.push_back({.id = "B-MUNA6-CHAIN",
                   .anchor = "Kittaneh absolute-value bound, second link",
                   .display = "½‖|A| + |A*|‖ ≤ ½(‖A‖ + ‖A²‖^{1/2})",
                   .arity = "A",
                   .lhs = [](const InequalityCase& c) { return 0.5 * nrm(ap(c.op("A"), 1) + aps(c.op("A"), 1)); },
                   .rhs =
                       [](const InequalityCase& c) {
                           const ComplexMatrix& a = c.op("A");
                           return 0.5 * (nrm(a) + std::sqrt(nrm(a * a)));
                       },
                   .sample = single(),
                   .single_operator = true});

    out.push_back({.id = "B-MUNA6-PRINTED",
                   .anchor = "Kittaneh absolute-value bound, printed form",
                   .display = "w(A) ≤ ½‖|A|² + |A*|‖",
                   .arity = "A",
                   .exempt = true,
                   .lhs = [](const InequalityCase& c) { return w_lo(c.op("A")); },
                   .rhs = [](const InequalityCase& c) { return 0.5 * nrm(ap(c.op("A"), 2) + aps(c.op("A"), 1)); },
                   .sample =
                       [](std::size_t n, Rng& g, std::optional<EnsembleKind> kind) {
                           InequalityCase c;
                           const EnsembleKind k = kind ? *kind : kMix[g.integer(0, 3)];
                           c.ops["A"] = scaled(g.log_uniform(0.05, 2), draw_matrix(k, n, g));
                           return c;
                       },
                   .single_operator = true});

    out.push_back({.id = "B-MUNA7-L",
                   .anchor = "Kittaneh quadratic bounds, lower half",
                   .display = "¼‖A*A + AA*‖ ≤ w²(A)",
                   .arity = "A",
                   .lhs =
                       [](const InequalityCase& c) {
                           const ComplexMatrix& a = c.op("A");
                           return 0.25 * nrm(adjoint_times(a, a) + a * a.adjoint());
                       },
                   .rhs = [](const InequalityCase& c) { return std::pow(w_hi(c.op("A")), 2); },
                   .sample = single(),
                   .single_operator = true});

    out.push_back({.id = "B-MUNA7-U",
                   .anchor = "Kittaneh quadratic bounds, upper half",
                   .display = "w²(A) ≤ ½‖A*A + AA*‖",
                   .arity = "A",
                   .lhs = [](const InequalityCase& c) { return std::pow(w_lo(c.op("A")), 2); },
                   .rhs =
                       [](const InequalityCase& c) {
                           const ComplexMatrix& a = c.op("A");
                           return 0.5 * nrm(adjoint_times(a, a) + a * a.adjoint());
                       },
                   .sample = single(),
                   .single_operator = true});

    out.push_back({.id = "B-MUNA7.5",
                   .anchor = "norm of a sum",
                   .display = "‖A + B‖² ≤ ‖|A|² + |B|²‖ + ‖|A*|² + |B*|²‖",
                   .arity = "A, B",
                   .lhs = [](const InequalityCase& c) { return std::pow(nrm(c.op("A") + c.op("B")), 2); },
                   .rhs =
                       [](const InequalityCase& c) {
                           const ComplexMatrix &a = c.op("A"), &b = c.op("B");
                           return nrm(ap(a, 2) + ap(b, 2)) + nrm(aps(a, 2) + aps(b, 2));
                       },
                   .sample = ops({"A", "B"})});

    auto lambda_r = [](InequalityCase& c, Rng& g) {
        c.params.lambda = g.uniform(0.05, 0.95);
        c.params.r = g.uniform(1, 3);
    };
    auto lambda_r_pre = [](const InequalityCase& c) {
        return Pre()
            .need(c.params.r >= 1, "r = " + num(c.params.r) + " < 1")
            .need(c.params.lambda >= 0 && c.params.lambda <= 1, "λ outside [0,1]")
            .done();
    };

    out.push_back({.id = "B-MUNA8a",
                   .anchor = "mixed Schwarz power bound",
                   .display = "w^r(A) ≤ ½‖|A|^{2rλ} + |A*|^{2r(1−λ)}‖",
                   .arity = "A; λ, r",
                   .precondition = lambda_r_pre,
                   .lhs = [](const InequalityCase& c) { return std::pow(w_lo(c.op("A")), c.params.r); },
                   .rhs =
                       [](const InequalityCase& c) {
                           const double r = c.params.r, l = c.params.lambda;
                           return 0.5 * nrm(ap(c.op("A"), 2 * r * l) + aps(c.op("A"), 2 * r * (1 - l)));
                       },
                   .sample = single(lambda_r),
                   .single_operator = true});

    out.push_back({.id = "B-MUNA8b",
                   .anchor = "weighted power bound",
                   .display = "w^{2r}(A) ≤ ‖λ|A|^{2r} + (1−λ)|A*|^{2r}‖",
                   .arity = "A; λ, r",
                   .precondition = lambda_r_pre,
                   .lhs = [](const InequalityCase& c) { return std::pow(w_lo(c.op("A")), 2 * c.params.r); },
                   .rhs =
                       [](const InequalityCase& c) {
                           const double r = c.params.r, l = c.params.lambda;
                           return nrm(scaled(l, ap(c.op("A"), 2 * r)) + scaled(1 - l, aps(c.op("A"), 2 * r)));
                       },
                   .sample = single(lambda_r),
                   .single_operator = true});

    out.push_back({.id = "B-MUNA9",
                   .anchor = "generalized mixed Schwarz bound for ATB + CSD",
                   .display = "w(ATB + CSD) ≤ ½‖A|T*|^{2(1−α)}A* + B*|T|^{2α}B + C|S*|^{2(1−α)}C* + D*|S|^{2α}D‖",
                   .arity = "A, B, C, D, S, T; α",
                   .precondition = [](const InequalityCase& c) {
                       return Pre().need(c.params.alpha >= 0 && c.params.alpha <= 1, "α outside [0,1]").done();
                   },
                   .lhs =
                       [](const InequalityCase& c) {
                           return w_lo(c.op("A") * c.op("T") * c.op("B") + c.op("C") * c.op("S") * c.op("D"));
                       },
                   .rhs =
                       [](const InequalityCase& c) {
                           const double al = c.params.alpha;
                           const ComplexMatrix &a = c.op("A"), &b = c.op("B"), &cc = c.op("C"), &d = c.op("D");
                           const ComplexMatrix &s = c.op("S"), &t = c.op("T");
                           ComplexMatrix sum = a * aps(t, 2 * (1 - al)) * a.adjoint();
                           sum += adjoint_times(b, ap(t, 2 * al) * b);
                           sum += cc * aps(s, 2 * (1 - al)) * cc.adjoint();
                           sum += adjoint_times(d, ap(s, 2 * al) * d);
                           return 0.5 * nrm(sum);
                       },
                   .sample = ops({"A", "B", "C", "D", "S", "T"},
                                 [](InequalityCase& c, Rng& g) { c.params.alpha = g.uniform(0.05, 0.95); })});

    out.push_back({.id = "B-PRODUCT-4",
                   .anchor = "product bound, general operators",
                   .display = "w(AB) ≤ 4w(A)w(B)",
                   .arity = "A, B",
                   .lhs = [](const InequalityCase& c) { return w_lo(c.op("A") * c.op("B")); },
                   .rhs = [](const InequalityCase& c) { return 4 * w_hi(c.op("A")) * w_hi(c.op("B")); },
                   .sample = ops({"A", "B"})});

    out.push_back({.id = "B-PRODUCT-2",
                   .anchor = "product bound, commuting operators",
                   .display = "AB = BA ⇒ w(AB) ≤ 2w(A)w(B)",
                   .arity = "A, B",
                   .precondition = [](const InequalityCase& c) {
                       return Pre().need(commute(c.op("A"), c.op("B")), "A and B do not commute").done();
                   },
                   .lhs = [](const InequalityCase& c) { return w_lo(c.op("A") * c.op("B")); },
                   .rhs = [](const InequalityCase& c) { return 2 * w_hi(c.op("A")) * w_hi(c.op("B")); },
                   .sample =
                       [](std::size_t n, Rng& g, std::optional<EnsembleKind>) {
                           return generate_case({EnsembleKind::CommutingPair}, n, g);
                       }});

    out.push_back({.id = "B-PRODUCT-1",
                   .anchor = "product bound, normal operators",
                   .display = "A, B normal ⇒ w(AB) ≤ w(A)w(B)",
                   .arity = "A, B",
                   .precondition = [](const InequalityCase& c) {
                       return Pre()
                           .need(is_normal(c.op("A")), "A is not normal")
                           .need(is_normal(c.op("B")), "B is not normal")
                           .done();
                   },
                   .lhs = [](const InequalityCase& c) { return w_lo(c.op("A") * c.op("B")); },
                   .rhs = [](const InequalityCase& c) { return w_hi(c.op("A")) * w_hi(c.op("B")); },
                   .sample =
                       [](std::size_t n, Rng& g, std::optional<EnsembleKind>) {
                           return generate_case({EnsembleKind::NormalPair}, n, g);
                       }});

    out.push_back({.id = "B-WATFA1",
                   .anchor = "power bound for B*A",
                   .display = "w^r(B*A) ≤ ½‖|A|^{2r} + |B|^{2r}‖",
                   .arity = "A, B; r",
                   .precondition = r_at_least_one,
                   .lhs = [](const InequalityCase& c) {
                       return std::pow(w_lo(adjoint_times(c.op("B"), c.op("A"))), c.params.r);
                   },
                   .rhs =
                       [](const InequalityCase& c) {
                           const double r = c.params.r;
                           return 0.5 * nrm(ap(c.op("A"), 2 * r) + ap(c.op("B"), 2 * r));
                       },
                   .sample = ops({"A", "B"}, draw_r)});

    out.push_back({.id = "B-WATFA1-PRINTED",
                   .anchor = "power bound for B*A, printed form",
                   .display = "w^r(B*A) ≤ ½‖|A|^{2r} + |B*|^{2r}‖",
                   .arity = "A, B; r",
                   .exempt = true,
                   .precondition = r_at_least_one,
                   .lhs = [](const InequalityCase& c) {
                       return std::pow(w_lo(adjoint_times(c.op("B"), c.op("A"))), c.params.r);
                   },
                   .rhs =
                       [](const InequalityCase& c) {
                           const double r = c.params.r;
                           return 0.5 * nrm(ap(c.op("A"), 2 * r) + aps(c.op("B"), 2 * r));
                       },
                   .sample = ops({"A", "B"}, draw_r)});

    out.push_back({.id = "B-SHAB1",
                   .anchor = "power bound for A*XB",
                   .display = "w^r(A*XB) ≤ ½‖(A*|X*|^{2ν}A)^r + (B*|X|^{2(1−ν)}B)^r‖",
                   .arity = "A, X, B; ν, r",
                   .precondition = [](const InequalityCase& c) {
                       return Pre()
                           .need(c.params.r >= 1, "r = " + num(c.params.r) + " < 1")
                           .need(c.params.nu >= 0 && c.params.nu <= 1, "ν outside [0,1]")
                           .done();
                   },
                   .lhs = [](const InequalityCase& c) {
                       return std::pow(w_lo(adjoint_times(c.op("A"), c.op("X") * c.op("B"))), c.params.r);
                   },
                   .rhs =
                       [](const InequalityCase& c) {
                           const double r = c.params.r, nu = c.params.nu;
                           const ComplexMatrix &a = c.op("A"), &x = c.op("X"), &b = c.op("B");
                           const ComplexMatrix left = hermitian_part(adjoint_times(a, aps(x, 2 * nu) * a));
                           const ComplexMatrix right = hermitian_part(adjoint_times(b, ap(x, 2 * (1 - nu)) * b));
                           return 0.5 * nrm(pw(left, r) + pw(right, r));
                       },
                   .sample = ops({"A", "X", "B"},
                                 [](InequalityCase& c, Rng& g) {
                                     c.params.nu = g.uniform(0.05, 0.95);
                                     c.params.r = g.uniform(1, 3);
                                 })});

    out.push_back({.id = "B-WATFA2",
                   .anchor = "mixed Schwarz bound for Σ X_i A_i^m B_i",
                   .display = "w^r(Σ X_iA_i^mB_i) ≤ n^{2r−1}/(2m) Σ_j ‖Σ_i E_{i,j}^r + W_{i,j}^r‖",
                   .arity = "X_i, A_i, B_i; m, r, ψ, φ",
                   .precondition = [](const InequalityCase& c) {
                       return Pre()
                           .need(c.params.r >= 1, "r = " + num(c.params.r) + " < 1")
                           .need(c.params.m >= 1, "m < 1")
                           .need(multiplies_to_identity(c.psi, c.phi), "ψ(t)φ(t) ≠ t")
                           .done();
                   },
                   .lhs = [](const InequalityCase& c) {
                       return std::pow(w_lo(sum_xamb(c.family("X"), c.family("A"), c.family("B"), c.params.m)),
                                       c.params.r);
                   },
                   .rhs = watfa2_rhs,
                   .sample = [](std::size_t n, Rng& g, std::optional<EnsembleKind>) {
                       InequalityCase c;
                       c.params.n_ops = g.integer(1, 3);
                       c.params.m = g.integer(1, 3);
                       c.params.r = g.uniform(1, 2.5);
                       for (const char* name : {"X", "A", "B"}) fill_family(c, name, n, g);
                       power_pair(c, g);
                       return c;
                   }});
}

}  // namespace rg::kit
