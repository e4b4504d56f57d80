// acceptance: one PASS/FAIL line per acceptance criterion.
//   acceptance            all criteria
//   acceptance 3 5        selected criteria
// Exit status is 0 only when every selected criterion passes.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <numbers>
#include <string>
#include <vector>

#include "radgauge/ensembles.hpp"
#include "radgauge/harness.hpp"
#include "radgauge/linalg.hpp"
#include "radgauge/numrange.hpp"
#include "radgauge/scalar_lemmas.hpp"
#include "radgauge/sphereopt.hpp"

using namespace rg;

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
    bool pass;
    std::string detail;
};

std::string fmt(const char* f, auto... args) {
    char buf[512];
    std::snprintf(buf, sizeof buf, f, args...);
    return buf;
}

// ---- 1: the 2x2 example ----

Outcome example() {
    const ExampleReport r = measure_example_2x2();
    std::string d;
    for (const auto& c : r.checks)
        d += fmt("%s=%.9g (|diff| %.2g, tol %.0e)%s; ", c.name.c_str(), c.measured, std::abs(c.measured - c.expected),
                 c.tolerance, c.pass ? "" : " MISS");
    d += fmt("%.2f ms", r.wall_ms);
    return {r.passed() && r.wall_ms < 1000, d};
}

// ---- 2: radius against the sampling oracle ----

Outcome radius() {
    double worst = 0;
    int above = 0;
    for (int i = 0; i < 200; ++i) {
        Rng g = Rng::keyed(2, "acceptance-radius", i);
        const ComplexMatrix a = ginibre(2 + i % 2, g);
        const RadiusBracket b = numerical_radius(a);
        const double o = radius_brute_oracle(a, 100000, 1000 + i);
        worst = std::max(worst, std::abs(b.hi - o));
        if (o > b.hi) ++above;
    }
    const RadiusBracket sh = numerical_radius(ComplexMatrix{{0, 1}, {0, 0}});
    const double shift_err = std::max(std::abs(sh.lo - 0.5), std::abs(sh.hi - 0.5));
    return {worst <= 1e-3 && above == 0 && shift_err <= 1e-8,
            fmt("max |hi - oracle| %.3g over 200 matrices, oracle above hi %d times, shift |w - 0.5| %.2g", worst, above,
                shift_err)};
}

// ---- 3: full soundness sweep ----

Outcome sweep() {
    SuiteConfig cfg;
    cfg.trials = 500;
    cfg.dims = {2, 3, 4, 5, 6};
    cfg.seed = 2024;
    const Report r = run_suite(cfg);
    int violations = 0, short_bounds = 0;
    std::string bad;
    for (const auto& s : r.summaries) {
        violations += s.violations;
        if (s.holds + s.violations != s.trials) {
            ++short_bounds;
            bad += " " + s.bound_id + fmt("(pre %d, failed %d)", s.pre_failed, s.failures);
        }
        if (s.violations) bad += " " + s.bound_id + fmt("(violations %d)", s.violations);
    }
    const double secs = r.wall_ms / 1000;
    return {violations == 0 && short_bounds == 0 && secs <= 600,
            fmt("%zu bounds x 500 trials, dims 2-6: %d violations, %d bounds short of 500 evaluated trials, %.0f s",
                r.summaries.size(), violations, short_bounds, secs) +
                bad};
}

// ---- 4: scalar lemma fuzz ----

Outcome scalars() {
    constexpr int kSamples = 100000;
    Rng g = Rng::keyed(4, "acceptance-scalar", 0);
    std::vector<std::pair<std::string, int>> bad;
    auto run = [&](const char* name, const std::function<bool()>& sample) {
        int v = 0;
        for (int i = 0; i < kSamples; ++i)
            if (!sample()) ++v;
        bad.emplace_back(name, v);
    };
    auto ok = [](const ScalarCheck& c) { return c.slack >= -1e-12 * std::max(1.0, std::abs(c.rhs)) && c.holds; };
    auto pos = [&] { return g.log_uniform(1e-3, 1e3); };
    auto conj = [&](double& p, double& q) {
        p = g.uniform(1.05, 8);
        q = p / (p - 1);
    };
    run("jensen_chain", [&] {
        auto [a, b] = jensen_chain(pos(), pos(), g.uniform(), g.uniform(1, 6));
        return ok(a) && ok(b);
    });
    run("young_refined", [&] {
        double p, q;
        conj(p, q);
        return ok(young_refined(g.log_uniform(1e-2, 1e2), g.log_uniform(1e-2, 1e2), p, q));
    });
    run("young_generalized", [&] {
        double p, q;
        conj(p, q);
        return ok(young_generalized(g.log_uniform(1e-2, 1e2), g.log_uniform(1e-2, 1e2), p, q, g.integer(1, 5),
                                    g.uniform(1, 4)));
    });
    run("young_generalized_half", [&] {
        return ok(young_generalized_half(g.log_uniform(1e-2, 1e2), g.log_uniform(1e-2, 1e2), g.integer(1, 5),
                                         g.uniform(1, 4)));
    });
    run("young_generalized_simple",
        [&] { return ok(young_generalized_simple(g.log_uniform(1e-2, 1e2), g.log_uniform(1e-2, 1e2), g.uniform(1, 4))); });
    run("agm_refined", [&] {
        double mu = pos(), nu = pos();
        while (nu == mu) nu = pos();
        double d = g.uniform(std::min(mu, nu), std::max(mu, nu)), e = g.uniform(std::min(mu, nu), std::max(mu, nu));
        if (d > e) std::swap(d, e);
        if (d == e) return true;
        return ok(agm_refined(mu, nu, d, e));
    });
    run("power_sum_convexity", [&] {
        std::vector<double> s(std::size_t(g.integer(1, 6)));
        for (auto& x : s) x = g.log_uniform(1e-2, 1e2);
        return ok(power_sum_convexity(s, g.uniform(1, 5)));
    });
    run("superquadratic_gap", [&] {
        return ok(superquadratic_gap(ScalarFunction::power(g.uniform(2, 5)), g.uniform(0, 10), g.uniform(0, 10)));
    });
    run("subadditivity_gap", [&] {
        return ok(subadditivity_gap(ScalarFunction::power(g.uniform(1, 5)), g.uniform(), g.uniform(0, 10)));
    });

    // documented equality cases
    std::vector<double> eq{
        jensen_chain(5, 5, 0.3, 4).first.slack,
        jensen_chain(5, 5, 0.3, 4).second.slack,
        jensen_chain(3, 7, 0.2, 1).second.slack,
        young_refined(2.5, 0.7, 2, 2).slack,
        young_refined(1, 1, 3, 1.5).slack,
        young_generalized(3, 0.4, 2, 2, 1, 1).slack,
        young_generalized(1, 1, 2, 2, 2, 2.5).slack,
        agm_refined(1, 4, 1, 4).slack,
        power_sum_convexity({2, 2, 2}, 2.5).slack / std::pow(2, 2.5),
        power_sum_convexity({1, 5, 2}, 1).slack,
        superquadratic_gap(ScalarFunction::power(2), 3, 1.25).slack,
        superquadratic_gap(ScalarFunction::power(3), 1.7, 1.7).slack,
        subadditivity_gap(ScalarFunction::power(2), 1, 3).slack,
        subadditivity_gap(ScalarFunction::power(2), 0, 3).slack,
    };
    double worst_eq = 0;
    for (double s : eq) worst_eq = std::max(worst_eq, std::abs(s));

    int total = 0;
    std::string d;
    for (const auto& [name, v] : bad) {
        total += v;
        if (v) d += fmt(" %s:%d", name.c_str(), v);
    }
    return {total == 0 && worst_eq <= 1e-12,
            fmt("%zu operations x %d samples: %d violations; equality cases max |slack| %.2g", bad.size(), kSamples,
                total, worst_eq) +
                d};
}

// ---- 5: correction terms ----

double lattice_oracle(const SphereFunctional& f, int n) {
    const double hp = 0.5 * std::numbers::pi, tp = 2 * std::numbers::pi;
    // (cos a·e^{ic}, sin a·e^{ib}); c is redundant for phase-invariant functionals but cheap at 4 values
    auto at = [](double a, double b, double c) { return CVector{std::polar(std::cos(a), c), std::polar(std::sin(a), b)}; };
    double best = INFINITY, ba = 0, bb = 0, bc = 0;
    for (int i = 0; i <= n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < 4; ++k) {
                const double a = hp * i / n, b = tp * j / n, c = tp * k / 4;
                const double v = f(at(a, b, c));
                if (v < best) best = v, ba = a, bb = b, bc = c;
            }
    double wa = hp / n, wb = tp / n;
    for (int round = 0; round < 10; ++round) {
        const double ca = ba, cb = bb;
        for (int i = -6; i <= 6; ++i)
            for (int j = -6; j <= 6; ++j) {
                const double a = std::clamp(ca + wa * i / 6, 0.0, hp), b = cb + wb * j / 6;
                const double v = f(at(a, b, bc));
                if (v < best) best = v, ba = a, bb = b;
            }
        wa /= 4;
        wb /= 4;
    }
    return best;
}

Outcome corrections() {
    const std::vector<std::pair<const char*, FunctionalKind>> owners{
        {"TH-SCH1", FunctionalKind::RHO},          {"TH-N1", FunctionalKind::PSI_N1},
        {"TH-N3", FunctionalKind::ETA_N3},         {"TH-SCH2", FunctionalKind::OMEGA_SCH2},
        {"TH-MOHMMM", FunctionalKind::GAMMA_PSI}, {"TH-SUPQAD", FunctionalKind::SUPQ_DEFICIT}};
    int negative = 0, loose = 0, cases = 0;
    double min_corr = INFINITY;
    for (const auto& [id, kind] : owners) {
        const Bound& b = find_bound(id);
        for (int k = 0; k < 200; ++k) {
            Rng g = Rng::keyed(5, id, k);
            const CheckResult r = evaluate_bound(b, b.sample(2 + k % 3, g, std::nullopt));
            ++cases;
            min_corr = std::min(min_corr, r.correction);
            if (r.correction < -1e-12) ++negative;
            if (r.rhs_net < r.lhs - 1e-8 * std::max(1.0, std::abs(r.rhs_net))) ++loose;
        }
    }
    int mismatched = 0;
    double worst = 0;
    for (int k = 0; k < 50; ++k) {
        const auto& [id, kind] = owners[k % owners.size()];
        Rng g = Rng::keyed(55, id, k);
        const SphereFunctional f = build_correction_functional(kind, find_bound(id).sample(2, g, std::nullopt));
        const double v = infimum_unit_sphere(f).value, o = lattice_oracle(f, 120);
        const double rel = std::abs(v - o) / std::max(1.0, std::abs(o));
        worst = std::max(worst, rel);
        if (rel > 1e-4) ++mismatched;
    }
    return {negative == 0 && loose == 0 && mismatched == 0,
            fmt("%d cases: min correction %.3g, %d below -1e-12, %d with rhs_net < lhs; dim-2 lattice: worst relative "
                "gap %.2g over 50 functionals, %d above 1e-4",
                cases, min_corr, negative, loose, worst, mismatched)};
}

// ---- 6: reductions ----

Outcome reductions() {
    double worst = 0;
    int status_mismatch = 0;
    auto compare = [&](const CheckResult& a, const CheckResult& b) {
        const double s = std::max(1.0, std::abs(b.rhs_raw));
        for (double d : {a.lhs - b.lhs, a.rhs_raw - b.rhs_raw, a.correction - b.correction, a.rhs_net - b.rhs_net,
                         a.slack - b.slack})
            worst = std::max(worst, std::abs(d) / s);
        if (a.status != b.status) ++status_mismatch;
    };
    for (int k = 0; k < 100; ++k) {
        const std::size_t n = 2 + k % 3;
        Rng g = Rng::keyed(6, "acceptance-reduction", k);

        InequalityCase ok2 = find_bound("COR-OK2").sample(n, g, std::nullopt);
        InequalityCase sch1 = ok2;
        sch1.families["X"].assign(ok2.params.n_ops, ComplexMatrix::identity(n));
        sch1.families["B"].assign(ok2.params.n_ops, ComplexMatrix::identity(n));
        compare(evaluate_bound("COR-OK2", ok2), evaluate_bound("TH-SCH1", sch1));

        InequalityCase c32 = find_bound("COR-3.2").sample(n, g, std::nullopt);
        InequalityCase t31 = c32;
        t31.families["D"].assign(c32.params.n_ops, ComplexMatrix::identity(n));
        t31.families["A"].assign(c32.params.n_ops, ComplexMatrix::identity(n));
        compare(evaluate_bound("COR-3.2", c32), evaluate_bound("TH-3.1", t31));

        InequalityCase pw = find_bound("COR-POWERS").sample(n, g, std::nullopt);
        InequalityCase one = pw;
        one.params.n_ops = 1;
        one.families["C"] = {pw.op("C")};
        one.ops.clear();
        compare(evaluate_bound("COR-POWERS", pw), evaluate_bound("COR-3.2", one));

        InequalityCase t2 = find_bound("TH-RAHMA1-T2").sample(n, g, std::nullopt);
        InequalityCase t1 = t2;
        t1.psi = ScalarFunction::power(t2.params.r);
        compare(evaluate_bound("TH-RAHMA1-T2", t2), evaluate_bound("TH-RAHMA1-T1", t1));
    }
    return {worst <= 1e-10 && status_mismatch == 0,
            fmt("4 reductions x 100 cases: max field difference %.2g (relative to max(1,|rhs|)), %d status mismatches",
                worst, status_mismatch)};
}

// ---- 7: determinism across thread counts ----

Outcome determinism() {
    SuiteConfig cfg;
    cfg.trials = 50;
    cfg.seed = 7;
    auto run_with = [&](const char* threads) {
        ::setenv("RG_THREADS", threads, 1);
        Report r = run_suite(cfg);
        ::unsetenv("RG_THREADS");
        return r;
    };
    const Report a = run_with("1"), b = run_with("8");
    int differ = 0;
    bool same_size = a.records.size() == b.records.size();
    for (std::size_t i = 0; same_size && i < a.records.size(); ++i) {
        const auto &x = a.records[i], &y = b.records[i];
        if (x.digest != y.digest || x.result.slack != y.result.slack || x.error != y.error) ++differ;
    }
    return {same_size && differ == 0 && a.threads_used == 1 && b.threads_used == 8,
            fmt("%zu trials, threads %u vs %u: %d records differ in digest or slack", a.records.size(), a.threads_used,
                b.threads_used, differ)};
}

// ---- 8: kernels ----

Outcome kernels() {
    double worst_polar = 0, worst_eig = 0;
    for (int i = 0; i < 1000; ++i) {
        Rng g = Rng::keyed(8, "acceptance-kernel", i);
        const std::size_t n = 2 + std::size_t(i % 15);
        const ComplexMatrix a = ginibre(n, g);
        const PolarFactors pf = polar_decomposition(a);
        worst_polar = std::max(worst_polar, operator_norm(pf.U * pf.P - a) / (1 + operator_norm(a)));

        const ComplexMatrix h = random_hermitian(n, g);
        const SpectralDecomposition e = hermitian_eig(h);
        ComplexMatrix vl = e.vectors;
        for (std::size_t c = 0; c < n; ++c)
            for (std::size_t r = 0; r < n; ++r) vl(r, c) *= e.values[c];
        worst_eig = std::max(worst_eig, operator_norm(h * e.vectors - vl) / operator_norm(h));
    }
    return {worst_polar <= 1e-10 && worst_eig <= 1e-11,
            fmt("1000 matrices, dims 2-16: max ||UP - A||/(1+||A||) %.2g, max ||HV - VL||/||H|| %.2g", worst_polar,
                worst_eig)};
}

}  // namespace

int main(int argc, char** argv) {
    const std::vector<std::pair<const char*, Outcome (*)()>> criteria{
        {"2x2 example reproduction", example},   {"radius oracle agreement", radius},
        {"full soundness sweep", sweep},           {"scalar lemma fuzz", scalars},
        {"correction-term guarantees", corrections}, {"reduction regressions", reductions},
        {"determinism across thread counts", determinism}, {"kernel accuracy", kernels}};
    std::vector<int> pick;
    for (int i = 1; i < argc; ++i) {
        const int k = std::atoi(argv[i]);
        if (k < 1 || k > int(criteria.size())) {
            std::fprintf(stderr, "usage: acceptance [1-%zu ...]\n", criteria.size());
            return 1;
        }
        pick.push_back(k);
    }
    if (pick.empty())
        for (int k = 1; k <= int(criteria.size()); ++k) pick.push_back(k);

    bool all = true;
    for (int k : pick) {
        const auto t0 = Clock::now();
        Outcome o;
        try {
            o = criteria[std::size_t(k - 1)].second();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        const double s = std::chrono::duration<double>(Clock::now() - t0).count();
        std::printf("%s criterion %d (%s): %s [%.1f s]\n", o.pass ? "PASS" : "FAIL", k, criteria[std::size_t(k - 1)].first,
                    o.detail.c_str(), s);
        std::fflush(stdout);
        all = all && o.pass;
    }
    return all ? 0 : 1;
}
