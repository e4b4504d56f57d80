// Bounds for sums Σ D_i C_i^m A_i and Σ X_i A_i^m B_i.

#include <cmath>

#include "bound_kit.hpp"
#include "radgauge/operators.hpp"

namespace rg::kit {

namespace {

using Setup = std::function<void(InequalityCase&, Rng&)>;

// families `names` with n_ops ∈ [1,3] members, m ∈ [1,3], r ∈ [1,2], conjugate p, q
Sampler families(std::vector<std::string> names, Setup setup = {}) {
    return [names, setup](std::size_t n, Rng& g, std::optional<EnsembleKind>) {
        InequalityCase c;
        c.params.n_ops = int(g.integer(1, 3));
        c.params.m = int(g.integer(1, 3));
        c.params.r = g.uniform(1, 2);
        conjugate_pair(c.params, g);
        for (const auto& name : names) fill_family(c, name, n, g);
        if (setup) setup(c, g);
        return c;
    };
}

Sampler single_power(Setup setup = {}) {
    return [setup](std::size_t n, Rng& g, std::optional<EnsembleKind> kind) {
        InequalityCase c;
        c.ops["A"] = kind ? scaled(g.uniform(0.5, 1.5), draw_matrix(*kind, n, g)) : op(n, g);
        c.params.m = int(g.integer(1, 3));
        c.params.r = g.uniform(1, 2);
        conjugate_pair(c.params, g);
        if (setup) setup(c, g);
        return c;
    };
}

double n_of(const InequalityCase& c, const char* family) { return double(c.family(family).size()); }

ComplexMatrix dcma(const InequalityCase& c) { return sum_xamb(c.family("D"), c.family("C"), c.family("A"), c.params.m); }
ComplexMatrix xamb(const InequalityCase& c) { return sum_xamb(c.family("X"), c.family("A"), c.family("B"), c.params.m); }

std::vector<PowerTerm> pterms(const InequalityCase& c) {
    return power_terms(c.family("D"), c.family("C"), c.family("A"), c.params.m);
}

// Σ_j ‖Σ_i f(term)‖
template <class Term, class F>
double sum_over_j_of_norms(const std::vector<Term>& terms, int m, std::size_t dim, F f) {
    std::vector<ComplexMatrix> per_j(m, ComplexMatrix(dim));
    for (const auto& t : terms) per_j[t.j - 1] += f(t);
    double s = 0;
    for (const auto& x : per_j) s += nrm(x);
    return s;
}

// Σ_j Σ_i ‖f(term)‖^e
template <class Term, class F>
double sum_of_norm_powers(const std::vector<Term>& terms, double e, F f) {
    double s = 0;
    for (const auto& t : terms) s += std::pow(nrm(f(t)), e);
    return s;
}

std::optional<std::string> r_pre(const InequalityCase& c) {
    return Pre().need(c.params.r >= 1, "r = " + num(c.params.r) + " < 1").done();
}

std::optional<std::string> pq2_k1_pre(const InequalityCase& c) {
    const auto& p = c.params;
    return Pre()
        .need(p.r >= 1, "r = " + num(p.r) + " < 1")
        .need(p.k == 1, "k = " + std::to_string(p.k) + ", need 1")
        .need(p.p == 2 && p.q == 2, "need p = q = 2")
        .done();
}

std::optional<std::string> schwarz_pre(const InequalityCase& c) {
    return Pre()
        .need(c.params.r >= 1, "r = " + num(c.params.r) + " < 1")
        .need(c.psi.flags().nonnegative && c.phi.flags().nonnegative, "ψ and φ must be nonnegative")
        .need(multiplies_to_identity(c.psi, c.phi), "ψ(t)φ(t) ≠ t")
        .done();
}

std::optional<std::string> lambda_pre(const InequalityCase& c) {
    const double l = c.params.lambda;
    return Pre()
        .need(c.params.r >= 1, "r = " + num(c.params.r) + " < 1")
        .need(l > 0 && l < 1, "λ outside (0,1)")
        .done();
}

// S, T pairs of the Schwarz-type bounds, assembled into rhs and correction
struct SchwarzSum {
    std::vector<SchwarzTerm> terms;
    double n = 1;
};

double sch1_rhs(const SchwarzSum& s, const CaseParams& p, std::size_t dim) {
    const double sum = sum_over_j_of_norms(s.terms, p.m, dim, [&](const SchwarzTerm& t) {
        return scaled(1 / p.p, pw(t.S, p.p * p.r)) + scaled(1 / p.q, pw(t.T, p.q * p.r));
    });
    return std::pow(s.n, 2 * p.r - 1) / p.m * sum;
}

double sch1_correction(const SchwarzSum& s, const CaseParams& p, const SphereOptOptions& o) {
    std::vector<FormPair> pairs;
    for (const auto& t : s.terms) pairs.push_back({pw(t.S, p.r), pw(t.T, p.r), p.p / 2, p.q / 2});
    return p.r0() *
           infimum_unit_sphere(make_gap_functional(FunctionalKind::RHO, std::move(pairs), std::pow(s.n, 2 * p.r - 1) / p.m), o)
               .value;
}

SchwarzSum ok1_terms(const InequalityCase& c) {
    const auto &x = c.family("X"), &a = c.family("A"), &b = c.family("B");
    const int m = c.params.m;
    const double l = c.params.lambda;
    SchwarzSum s{{}, double(a.size())};
    for (std::size_t i = 0; i < a.size(); ++i)
        for (int j = 1; j <= m; ++j) {
            const ComplexMatrix aj = matrix_power(a[i], j), tail = matrix_power(a[i], m - j) * b[i];
            s.terms.push_back({int(i) + 1, j, hermitian_part(x[i] * aps(aj, 2 * l) * x[i].adjoint()),
                               hermitian_part(tail.adjoint() * ap(aj, 2 * (1 - l)) * tail)});
        }
    return s;
}

SchwarzSum ok2_terms(const InequalityCase& c) {
    const auto& a = c.family("A");
    const std::vector<ComplexMatrix> id(a.size(), ComplexMatrix::identity(c.dim()));
    return {schwarz_terms(id, a, id, c.params.m, c.psi, c.phi), double(a.size())};
}

SchwarzSum ok3_terms(const InequalityCase& c) {
    const ComplexMatrix& a = c.op("A");
    const int m = c.params.m;
    const double l = c.params.lambda;
    SchwarzSum s;
    for (int j = 1; j <= m; ++j) {
        const ComplexMatrix aj = matrix_power(a, j), tail = matrix_power(a, m - j);
        s.terms.push_back({1, j, aps(aj, 2 * l), hermitian_part(tail.adjoint() * ap(aj, 2 * (1 - l)) * tail)});
    }
    return s;
}

SchwarzSum sch_terms(const InequalityCase& c) {
    return {schwarz_terms(c.family("X"), c.family("A"), c.family("B"), c.params.m, c.psi, c.phi), n_of(c, "A")};
}

void schwarz_functions(InequalityCase& c, Rng& g) { power_pair(c, g); }

}  // namespace

void add_sum_bounds(std::vector<Bound>& out) {
    const Sampler dca = families({"D", "C", "A"});

    auto th31_rhs = [](const InequalityCase& c) {
        const auto& p = c.params;
        const double s = sum_over_j_of_norms(pterms(c), p.m, c.dim(), [&](const PowerTerm& t) {
            return ap(t.lower, 2 * p.r) + aps(t.upper, 2 * p.r);
        });
        return std::pow(n_of(c, "A"), p.r - 1) / (2 * p.m) * s;
    };

    out.push_back({.id = "TH-3.1",
                   .anchor = "power sum bound for Σ D_iC_i^mA_i",
                   .display = "w^r(Σ D_iC_i^mA_i) ≤ (n^{r−1}/(2m)) Σ_j ‖Σ_i |C_i^jA_i|^{2r} + |(D_iC_i^{m−j})*|^{2r}‖",
                   .arity = "families A, C, D; m, r",
                   .precondition = r_pre,
                   .lhs = [](const InequalityCase& c) { return std::pow(w_lo(dcma(c)), c.params.r); },
                   .rhs = th31_rhs,
                   .sample = dca});

    out.push_back({.id = "COR-3.2",
                   .anchor = "power sum bound for Σ C_i^m",
                   .display = "w^r(Σ C_i^m) ≤ (n^{r−1}/(2m)) Σ_j ‖Σ_i |C_i^j|^{2r} + |(C_i^{m−j})*|^{2r}‖",
                   .arity = "family C; m, r",
                   .precondition = r_pre,
                   .lhs = [](const InequalityCase& c) {
                       ComplexMatrix s(c.dim());
                       for (const auto& ci : c.family("C")) s += matrix_power(ci, c.params.m);
                       return std::pow(w_lo(s), c.params.r);
                   },
                   .rhs = [](const InequalityCase& c) {
                       const auto& p = c.params;
                       const auto& fam = c.family("C");
                       double s = 0;
                       for (int j = 1; j <= p.m; ++j) {
                           ComplexMatrix t(c.dim());
                           for (const auto& ci : fam)
                               t += ap(matrix_power(ci, j), 2 * p.r) + aps(matrix_power(ci, p.m - j), 2 * p.r);
                           s += nrm(t);
                       }
                       return std::pow(double(fam.size()), p.r - 1) / (2 * p.m) * s;
                   },
                   .sample = families({"C"})});

    out.push_back({.id = "COR-POWERS",
                   .anchor = "power bound for C^m",
                   .display = "w^r(C^m) ≤ (1/(2m)) Σ_j ‖|C^j|^{2r} + |(C^{m−j})*|^{2r}‖",
                   .arity = "C; m, r",
                   .precondition = r_pre,
                   .lhs = [](const InequalityCase& c) {
                       return std::pow(w_lo(matrix_power(c.op("C"), c.params.m)), c.params.r);
                   },
                   .rhs = [](const InequalityCase& c) {
                       const auto& p = c.params;
                       const ComplexMatrix& cm = c.op("C");
                       double s = 0;
                       for (int j = 1; j <= p.m; ++j)
                           s += nrm(ap(matrix_power(cm, j), 2 * p.r) + aps(matrix_power(cm, p.m - j), 2 * p.r));
                       return s / (2 * p.m);
                   },
                   .sample = [](std::size_t n, Rng& g, std::optional<EnsembleKind> kind) {
                       InequalityCase c = single_power()(n, g, kind);
                       c.ops["C"] = c.ops.at("A");
                       c.ops.erase("A");
                       return c;
                   },
                   .single_operator = true});

    auto alpha_rhs = [](double denom) {
        return [denom](const InequalityCase& c) {
            const auto& p = c.params;
            const double s = sum_of_norm_powers(pterms(c), 1 / (2 * p.r), [&](const PowerTerm& t) {
                return scaled(p.alpha, ap(t.lower, 2 * p.r / p.alpha)) +
                       scaled(1 - p.alpha, aps(t.upper, 2 * p.r / (1 - p.alpha)));
            });
            return s / (denom * p.m);
        };
    };
    auto alpha_pre = [](const InequalityCase& c) {
        return Pre()
            .need(c.params.r >= 1, "r = " + num(c.params.r) + " < 1")
            .need(c.params.alpha > 0 && c.params.alpha < 1, "α outside (0,1)")
            .done();
    };
    const Sampler alpha_sample = families({"D", "C", "A"}, [](InequalityCase& c, Rng& g) {
        c.params.alpha = g.uniform(0.15, 0.85);
    });
    auto sum_lhs = [](const InequalityCase& c) { return w_lo(dcma(c)); };

    out.push_back({.id = "TH-ALPHA",
                   .anchor = "weighted bound for Σ D_iC_i^mA_i",
                   .display = "w(Σ D_iC_i^mA_i) ≤ (1/m) Σ_j Σ_i ‖α|C_i^jA_i|^{2r/α} + (1−α)|(D_iC_i^{m−j})*|^{2r/(1−α)}‖^{1/(2r)}",
                   .arity = "families A, C, D; m, r, α",
                   .precondition = alpha_pre,
                   .lhs = sum_lhs,
                   .rhs = alpha_rhs(1),
                   .sample = alpha_sample});

    out.push_back({.id = "TH-ALPHA-PRINTED",
                   .anchor = "weighted bound, halved constant",
                   .display = "w(Σ D_iC_i^mA_i) ≤ (1/(2m)) Σ_j Σ_i ‖α|C_i^jA_i|^{2r/α} + (1−α)|(D_iC_i^{m−j})*|^{2r/(1−α)}‖^{1/(2r)}",
                   .arity = "families A, C, D; m, r, α",
                   .exempt = true,
                   .precondition = alpha_pre,
                   .lhs = sum_lhs,
                   .rhs = alpha_rhs(2),
                   .sample = alpha_sample});

    auto n1_rhs = [](bool with_n) {
        return [with_n](const InequalityCase& c) {
            const auto& p = c.params;
            const double s = sum_over_j_of_norms(pterms(c), p.m, c.dim(), [&](const PowerTerm& t) {
                return scaled(1 / p.p, ap(t.lower, 2 * p.p)) + scaled(1 / p.q, aps(t.upper, 2 * p.q));
            });
            return (with_n ? n_of(c, "A") : 1.0) / p.m * s;
        };
    };
    auto sq_lhs = [](const InequalityCase& c) { return std::pow(w_lo(dcma(c)), 2); };

    out.push_back({.id = "TH-N1",
                   .anchor = "refined Young bound for Σ D_iC_i^mA_i",
                   .display = "w²(Σ D_iC_i^mA_i) ≤ (n/m) Σ_j ‖Σ_i (1/p)|C_i^jA_i|^{2p} + (1/q)|(D_iC_i^{m−j})*|^{2q}‖ − r₀ inf ψ",
                   .arity = "families A, C, D; m, p, q",
                   .lhs = sq_lhs,
                   .rhs = n1_rhs(true),
                   .correction = [](const InequalityCase& c, const SphereOptOptions& o) {
                       return c.params.r0() * infimum_unit_sphere(build_correction_functional(FunctionalKind::PSI_N1, c), o).value;
                   },
                   .sample = dca});

    out.push_back({.id = "TH-N1-PRINTED",
                   .anchor = "refined Young bound, unscaled form",
                   .display = "w²(Σ D_iC_i^mA_i) ≤ (1/m) Σ_j ‖Σ_i (1/p)|C_i^jA_i|^{2p} + (1/q)|(D_iC_i^{m−j})*|^{2q}‖ − r₀ inf ψ, ψ with |(D_iC_i^{m−j})*|",
                   .arity = "families A, C, D; m, p, q",
                   .exempt = true,
                   .lhs = sq_lhs,
                   .rhs = n1_rhs(false),
                   .correction = [](const InequalityCase& c, const SphereOptOptions& o) {
                       const auto& p = c.params;
                       std::vector<FormPair> pairs;
                       for (const auto& t : pterms(c)) pairs.push_back({ap(t.lower, 2), aps(t.upper, 1), p.p / 2, p.q / 2});
                       const auto f = make_gap_functional(FunctionalKind::PSI_N1, std::move(pairs), n_of(c, "A") / p.m);
                       return p.r0() * infimum_unit_sphere(f, o).value;
                   },
                   .sample = dca});

    auto k_lhs = [](const InequalityCase& c) { return std::pow(w_lo(dcma(c)), 2 * c.params.k); };

    out.push_back({.id = "TH-N3",
                   .anchor = "refined Young bound, even powers",
                   .display = "w^{2k}(Σ D_iC_i^mA_i) ≤ (n^{2k−1}/m) Σ_j Σ_i ‖(1/p)|C_i^jA_i|^{2rp} + (1/q)|(D_iC_i^{m−j})*|^{2qr}‖^{k/r} − r₀^k inf η",
                   .arity = "families A, C, D; m, k, p, q, r",
                   .precondition = [](const InequalityCase& c) {
                       return Pre()
                           .need(c.params.r >= 1, "r = " + num(c.params.r) + " < 1")
                           .need(c.params.k >= 1, "k must be a positive integer")
                           .done();
                   },
                   .lhs = k_lhs,
                   .rhs = [](const InequalityCase& c) {
                       const auto& p = c.params;
                       const double s = sum_of_norm_powers(pterms(c), p.k / p.r, [&](const PowerTerm& t) {
                           return scaled(1 / p.p, ap(t.lower, 2 * p.r * p.p)) + scaled(1 / p.q, aps(t.upper, 2 * p.q * p.r));
                       });
                       return std::pow(n_of(c, "A"), 2 * p.k - 1) / p.m * s;
                   },
                   .correction = [](const InequalityCase& c, const SphereOptOptions& o) {
                       return std::pow(c.params.r0(), c.params.k) *
                              infimum_unit_sphere(build_correction_functional(FunctionalKind::ETA_N3, c), o).value;
                   },
                   .sample = families({"D", "C", "A"}, [](InequalityCase& c, Rng& g) { c.params.k = int(g.integer(1, 3)); })});

    out.push_back({.id = "COR-N3",
                   .anchor = "refined Young bound, k = 1 and p = q = 2",
                   .display = "w²(Σ D_iC_i^mA_i) ≤ (n2^{−1/r}/m) Σ_j Σ_i ‖|C_i^jA_i|^{4r} + |(D_iC_i^{m−j})*|^{4r}‖^{1/r} − ½ inf η",
                   .arity = "families A, C, D; m, r",
                   .precondition = pq2_k1_pre,
                   .lhs = sq_lhs,
                   .rhs = [](const InequalityCase& c) {
                       const auto& p = c.params;
                       const double s = sum_of_norm_powers(pterms(c), 1 / p.r, [&](const PowerTerm& t) {
                           return ap(t.lower, 4 * p.r) + aps(t.upper, 4 * p.r);
                       });
                       return n_of(c, "A") * std::pow(2.0, -1 / p.r) / p.m * s;
                   },
                   .correction = [](const InequalityCase& c, const SphereOptOptions& o) {
                       std::vector<FormPair> pairs;
                       for (const auto& t : pterms(c)) pairs.push_back({ap(t.lower, 4), aps(t.upper, 4), 0.5, 0.5});
                       const auto f = make_gap_functional(FunctionalKind::ETA_N3, std::move(pairs), n_of(c, "A") / c.params.m);
                       return 0.5 * infimum_unit_sphere(f, o).value;
                   },
                   .sample = families({"D", "C", "A"}, [](InequalityCase& c, Rng&) {
                       c.params.k = 1;
                       c.params.p = c.params.q = 2;
                   })});

    const Sampler xab = families({"X", "A", "B"}, schwarz_functions);
    auto sch_lhs = [](const InequalityCase& c) { return std::pow(w_lo(xamb(c)), 2 * c.params.r); };

    out.push_back({.id = "TH-SCH1",
                   .anchor = "mixed Schwarz bound for Σ X_iA_i^mB_i",
                   .display = "w^{2r}(Σ X_iA_i^mB_i) ≤ (n^{2r−1}/m) Σ_j ‖Σ_i (1/p)S_{ij}^{pr} + (1/q)T_{ij}^{qr}‖ − r₀ inf ρ",
                   .arity = "families A, B, X; m, p, q, r, ψ, φ",
                   .precondition = schwarz_pre,
                   .lhs = sch_lhs,
                   .rhs = [](const InequalityCase& c) { return sch1_rhs(sch_terms(c), c.params, c.dim()); },
                   .correction = [](const InequalityCase& c, const SphereOptOptions& o) {
                       return c.params.r0() * infimum_unit_sphere(build_correction_functional(FunctionalKind::RHO, c), o).value;
                   },
                   .sample = xab});

    out.push_back({.id = "COR-OK1",
                   .anchor = "mixed Schwarz bound with power functions",
                   .display = "w^{2r}(Σ X_iA_i^mB_i) ≤ (n^{2r−1}/m) Σ_j ‖Σ_i (1/p)S_{ij}^{pr} + (1/q)T_{ij}^{qr}‖ − r₀ inf ρ, S_{ij} = X_i|A_i^{j*}|^{2λ}X_i*",
                   .arity = "families A, B, X; m, p, q, r, λ",
                   .precondition = lambda_pre,
                   .lhs = sch_lhs,
                   .rhs = [](const InequalityCase& c) { return sch1_rhs(ok1_terms(c), c.params, c.dim()); },
                   .correction = [](const InequalityCase& c, const SphereOptOptions& o) {
                       return sch1_correction(ok1_terms(c), c.params, o);
                   },
                   .sample = xab});

    out.push_back({.id = "COR-OK2",
                   .anchor = "mixed Schwarz bound for Σ A_i^m",
                   .display = "w^{2r}(Σ A_i^m) ≤ (n^{2r−1}/m) Σ_j ‖Σ_i (1/p)S_{ij}^{pr} + (1/q)T_{ij}^{qr}‖ − r₀ inf ρ, S_{ij} = ψ²(|(A_i^j)*|)",
                   .arity = "family A; m, p, q, r, ψ, φ",
                   .precondition = schwarz_pre,
                   .lhs = [](const InequalityCase& c) {
                       ComplexMatrix s(c.dim());
                       for (const auto& a : c.family("A")) s += matrix_power(a, c.params.m);
                       return std::pow(w_lo(s), 2 * c.params.r);
                   },
                   .rhs = [](const InequalityCase& c) { return sch1_rhs(ok2_terms(c), c.params, c.dim()); },
                   .correction = [](const InequalityCase& c, const SphereOptOptions& o) {
                       return sch1_correction(ok2_terms(c), c.params, o);
                   },
                   .sample = families({"A"}, schwarz_functions)});

    out.push_back({.id = "COR-OK3",
                   .anchor = "mixed Schwarz bound for A^m",
                   .display = "w^{2r}(A^m) ≤ (1/m) Σ_j ‖(1/p)S_j^{pr} + (1/q)T_j^{qr}‖ − r₀ inf ρ, S_j = |(A^j)*|^{2λ}",
                   .arity = "A; m, p, q, r, λ",
                   .precondition = lambda_pre,
                   .lhs = [](const InequalityCase& c) {
                       return std::pow(w_lo(matrix_power(c.op("A"), c.params.m)), 2 * c.params.r);
                   },
                   .rhs = [](const InequalityCase& c) { return sch1_rhs(ok3_terms(c), c.params, c.dim()); },
                   .correction = [](const InequalityCase& c, const SphereOptOptions& o) {
                       return sch1_correction(ok3_terms(c), c.params, o);
                   },
                   .sample = single_power([](InequalityCase& c, Rng& g) { c.params.lambda = g.uniform(0.1, 0.9); }),
                   .single_operator = true});

    auto xk_lhs = [](const InequalityCase& c) { return std::pow(w_lo(xamb(c)), 2 * c.params.k); };

    out.push_back({.id = "TH-SCH2",
                   .anchor = "mixed Schwarz bound, even powers",
                   .display = "w^{2k}(Σ X_iA_i^mB_i) ≤ (n^{2k−1}/m) Σ_j Σ_i ‖(1/p)S_{ij}^{pr} + (1/q)T_{ij}^{qr}‖^{k/r} − r₀^k inf ω",
                   .arity = "families A, B, X; m, k, p, q, r, ψ, φ",
                   .precondition = [](const InequalityCase& c) {
                       return both(schwarz_pre(c), Pre().need(c.params.k >= 1, "k must be a positive integer").done());
                   },
                   .lhs = xk_lhs,
                   .rhs = [](const InequalityCase& c) {
                       const auto& p = c.params;
                       const double s = sum_of_norm_powers(sch_terms(c).terms, p.k / p.r, [&](const SchwarzTerm& t) {
                           return scaled(1 / p.p, pw(t.S, p.p * p.r)) + scaled(1 / p.q, pw(t.T, p.q * p.r));
                       });
                       return std::pow(n_of(c, "A"), 2 * p.k - 1) / p.m * s;
                   },
                   .correction = [](const InequalityCase& c, const SphereOptOptions& o) {
                       return std::pow(c.params.r0(), c.params.k) *
                              infimum_unit_sphere(build_correction_functional(FunctionalKind::OMEGA_SCH2, c), o).value;
                   },
                   .sample = families({"X", "A", "B"}, [](InequalityCase& c, Rng& g) {
                       schwarz_functions(c, g);
                       c.params.k = int(g.integer(1, 3));
                   })});

    out.push_back({.id = "COR-SCH2",
                   .anchor = "mixed Schwarz bound, k = 1 and p = q = 2",
                   .display = "w²(Σ X_iA_i^mB_i) ≤ (n/(m2^{1/r})) Σ_j Σ_i ‖S_{ij}^{2r} + T_{ij}^{2r}‖^{1/r} − ½ inf ω",
                   .arity = "families A, B, X; m, r, ψ, φ",
                   .precondition = [](const InequalityCase& c) { return both(schwarz_pre(c), pq2_k1_pre(c)); },
                   .lhs = xk_lhs,
                   .rhs = [](const InequalityCase& c) {
                       const auto& p = c.params;
                       const double s = sum_of_norm_powers(sch_terms(c).terms, 1 / p.r, [&](const SchwarzTerm& t) {
                           return pw(t.S, 2 * p.r) + pw(t.T, 2 * p.r);
                       });
                       return n_of(c, "A") / (p.m * std::pow(2.0, 1 / p.r)) * s;
                   },
                   .correction = [](const InequalityCase& c, const SphereOptOptions& o) {
                       std::vector<FormPair> pairs;
                       for (const auto& t : sch_terms(c).terms) pairs.push_back({pw(t.S, 2), pw(t.T, 2), 0.5, 0.5});
                       const auto f = make_gap_functional(FunctionalKind::OMEGA_SCH2, std::move(pairs), n_of(c, "A") / c.params.m);
                       return 0.5 * infimum_unit_sphere(f, o).value;
                   },
                   .sample = families({"X", "A", "B"}, [](InequalityCase& c, Rng& g) {
                       schwarz_functions(c, g);
                       c.params.k = 1;
                       c.params.p = c.params.q = 2;
                   })});
}

}  // namespace rg::kit
