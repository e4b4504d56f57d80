#include <doctest.h>

#include <cmath>
#include <set>

#include "radgauge/catalog.hpp"
#include "radgauge/error.hpp"
#include "radgauge/io.hpp"
#include "radgauge/linalg.hpp"
#include "radgauge/numrange.hpp"

using namespace rg;

namespace {

ComplexMatrix mat2(cplx a, cplx b, cplx c, cplx d) {
    ComplexMatrix m(2);
    m(0, 0) = a;
    m(0, 1) = b;
    m(1, 0) = c;
    m(1, 1) = d;
    return m;
}

// S = [[3/2,1/2],[1/2,3/2]], T = ½I in the roles D = S*, A = T, B = C = I
InequalityCase example_case() {
    const ComplexMatrix s = mat2(1.5, 0.5, 0.5, 1.5), t = mat2(0.5, 0, 0, 0.5);
    InequalityCase c;
    c.ops["A"] = t;
    c.ops["B"] = ComplexMatrix::identity(2);
    c.ops["C"] = ComplexMatrix::identity(2);
    c.ops["D"] = s.adjoint();
    c.params.delta = 0.3;
    c.params.Delta = 0.4;
    c.psi = ScalarFunction::power(2);
    return c;
}

InequalityCase four(const ComplexMatrix& a, const ComplexMatrix& b, const ComplexMatrix& cc, const ComplexMatrix& d) {
    InequalityCase c;
    c.ops["A"] = a;
    c.ops["B"] = b;
    c.ops["C"] = cc;
    c.ops["D"] = d;
    return c;
}

ComplexMatrix e12() { return mat2(0, 1, 0, 0); }

void same_result(const CheckResult& a, const CheckResult& b, double tol) {
    CHECK(a.lhs == doctest::Approx(b.lhs).epsilon(tol));
    CHECK(a.rhs_raw == doctest::Approx(b.rhs_raw).epsilon(tol));
    CHECK(std::abs(a.correction - b.correction) <= tol * std::max(1.0, std::abs(b.rhs_raw)));
    CHECK(a.status == b.status);
}

}  // namespace

TEST_CASE("registry ids are unique and cover the published list") {
    std::set<std::string> ids;
    for (const auto& b : registry()) {
        CHECK(ids.insert(b.id).second);
        CHECK(b.lhs);
        CHECK(b.rhs);
        CHECK(b.sample);
        CHECK(!b.anchor.empty());
    }
    for (const char* id :
         {"B-N1-SANDWICH", "B-POWER", "B-MUNA6", "B-MUNA7-L", "B-MUNA7-U", "B-MUNA7.5", "B-MUNA8a", "B-MUNA8b", "B-MUNA9",
          "B-PRODUCT-4", "B-PRODUCT-2", "B-PRODUCT-1", "B-WATFA1", "B-SHAB1", "B-WATFA2", "LEM-INPROD", "LEM-D1",
          "LEM-HM-i", "LEM-HM-ii", "LEM-HM-iii", "LEM-MP", "LEM-AS", "LEM-MC", "LEM-FURUTA", "TH-A1", "COR-A1S", "COR-A1W",
          "TH-RAHMA1-T1", "TH-RAHMA1-T2", "TH-RAHMA1-T3", "TH-PROF1", "COR-PROF1", "REM-R23-i", "REM-R23-ii", "REM-R23-iii",
          "TH-BOSHRA22", "TH-MOHMMM", "COR-MAKA1", "COR-MAKA2", "COR-MAKA3", "TH-SUPQAD", "COR-SUPQAD", "TH-3.1", "COR-3.2",
          "COR-POWERS", "TH-ALPHA", "TH-N1", "TH-N3", "COR-N3", "TH-SCH1", "COR-OK1", "COR-OK2", "COR-OK3", "TH-SCH2",
          "COR-SCH2"})
        CHECK_MESSAGE(ids.count(id) == 1, id);
}

TEST_CASE("resolve_bound_ids expands all without the printed variants") {
    const auto all = resolve_bound_ids({"all"});
    for (const auto& id : all) CHECK(!find_bound(id).exempt);
    CHECK(std::find(all.begin(), all.end(), "B-MUNA6-PRINTED") == all.end());
    CHECK(resolve_bound_ids({"TH-A1", "TH-A1"}).size() == 1);
    CHECK(resolve_bound_ids({"B-MUNA6-PRINTED"}).size() == 1);
    CHECK_THROWS_AS(resolve_bound_ids({"NO-SUCH"}), Error);
    try {
        find_bound("NO-SUCH");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::UnknownBound);
    }
}

TEST_CASE("2x2 example under the sandwich bound") {
    const InequalityCase c = example_case();
    const CheckResult r = evaluate_bound("TH-PROF1", c);
    CHECK(r.status == Status::Holds);
    CHECK(r.lhs == doctest::Approx(1).epsilon(1e-9));
    // |T|⁴ = 1/16 I, |S|⁴ has eigenvalues 16 and 1
    const double oracle = std::sqrt(0.3 * 0.4) / 0.7 * 16.0625;
    CHECK(r.rhs_raw == doctest::Approx(oracle).epsilon(1e-10));
    CHECK(r.rhs_raw == doctest::Approx(7.94888).epsilon(1e-6));
    CHECK(r.correction == 0);
    CHECK(r.slack == doctest::Approx(r.rhs_net - r.lhs));
}

TEST_CASE("norm of B*A + DC* at the identity is an equality") {
    const ComplexMatrix i = ComplexMatrix::identity(3);
    const CheckResult r = evaluate_bound("TH-A1", four(i, i, i, i));
    CHECK(r.lhs == doctest::Approx(4).epsilon(1e-12));
    CHECK(r.rhs_raw == doctest::Approx(4).epsilon(1e-9));
    CHECK(r.status == Status::Holds);
}

TEST_CASE("printed cross term fails on a nilpotent pair while the primary form is sharp") {
    // A = D = I, B = C = E12: lhs ‖2E21‖² = 4; CD*A*B = E12² = 0 leaves 1 + 0 + 2
    const ComplexMatrix i = ComplexMatrix::identity(2);
    const InequalityCase c = four(i, e12(), e12(), i);
    const CheckResult printed = evaluate_bound("TH-A1-PRINTED", c);
    CHECK(printed.lhs == doctest::Approx(4).epsilon(1e-12));
    CHECK(printed.rhs_raw == doctest::Approx(3).epsilon(1e-9));
    CHECK(printed.status == Status::Violated);
    const CheckResult primary = evaluate_bound("TH-A1", c);
    CHECK(primary.rhs_raw == doctest::Approx(4).epsilon(1e-9));
    CHECK(primary.status == Status::Holds);
}

TEST_CASE("mixed Schwarz bound is sharp for a positive diagonal") {
    InequalityCase c;
    c.params.n_ops = 1;
    c.params.m = 1;
    c.params.r = 1;
    c.families["X"] = {ComplexMatrix::identity(2)};
    c.families["B"] = {ComplexMatrix::identity(2)};
    c.families["A"] = {ComplexMatrix::diagonal({2, 1})};
    c.psi = ScalarFunction::power(0.5);
    c.phi = ScalarFunction::power(0.5);
    const CheckResult r = evaluate_bound("TH-SCH1", c);
    CHECK(r.lhs == doctest::Approx(4).epsilon(1e-9));
    CHECK(r.rhs_raw == doctest::Approx(4).epsilon(1e-12));
    CHECK(std::abs(r.correction) <= 1e-10);
    CHECK(r.status == Status::Holds);
}

TEST_CASE("shift attains the lower quarter bound") {
    InequalityCase c;
    c.ops["A"] = e12();
    const CheckResult r = evaluate_bound("B-MUNA7-L", c);
    CHECK(r.lhs == doctest::Approx(0.25).epsilon(1e-12));
    CHECK(r.rhs_raw == doctest::Approx(0.25).epsilon(1e-8));
    CHECK(r.status == Status::Holds);
}

TEST_CASE("failed hypotheses give precondition-failed, never a violation") {
    InequalityCase c = example_case();
    c.params.delta = 0.2;
    c.params.Delta = 0.22;  // λ_max(|T|²) = 0.25 > 0.2
    const CheckResult r = evaluate_bound("TH-PROF1", c);
    CHECK(r.status == Status::PreconditionFailed);
    CHECK(!r.note.empty());
    EvalOptions strict;
    strict.throw_on_precondition = true;
    try {
        evaluate_bound("TH-PROF1", c, strict);
        FAIL("expected PreconditionFailed");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::PreconditionFailed);
    }
    InequalityCase r23;
    r23.ops["T"] = e12();
    r23.params.r = 0.5;
    r23.params.delta = 0.3;
    r23.params.Delta = 0.4;
    CHECK(evaluate_bound("REM-R23-iii", r23).status == Status::PreconditionFailed);
}

TEST_CASE("check_sandwich reads the window spectrally") {
    const InequalityCase c = example_case();
    const SandwichMargins m = check_sandwich(c, 0.3, 0.4);
    CHECK(m.pass);
    CHECK(m.branch == 1);
    CHECK(m.below == doctest::Approx(0.05));
    CHECK(m.above == doctest::Approx(0.6));

    const ComplexMatrix i = ComplexMatrix::identity(2);
    const SandwichMargins f = check_sandwich(four(i, i, i, i), 0.5, 2);
    CHECK(!f.pass);
    CHECK(f.below == doctest::Approx(-0.5));

    CHECK(!check_sandwich(c, 0.4, 0.3).pass);
    CHECK(!check_sandwich(c, 0.3, 0.3).window_ok);
    // swapped roles take the second branch
    const SandwichMargins s = check_sandwich(swap_sandwich_roles(c), 0.3, 0.4);
    CHECK(s.pass);
    CHECK(s.branch == 2);
}

TEST_CASE("make_sandwich_case satisfies its window") {
    for (std::size_t n = 1; n <= 6; ++n)
        for (int k = 0; k < 10; ++k) {
            Rng g = Rng::keyed(11, "sandwich", n * 100 + k);
            const double lo = g.uniform(0.01, 2), hi = lo * g.uniform(1.01, 5);
            const InequalityCase c = make_sandwich_case(n, lo, hi, g);
            const SandwichMargins m = check_sandwich(c, lo, hi);
            CHECK(m.pass);
            CHECK(m.below >= 1e-10);
            CHECK(m.above >= 1e-10);
            CHECK(*c.params.delta == lo);
        }
    Rng g = Rng::keyed(1, "x", 0);
    CHECK_THROWS_AS(make_sandwich_case(2, 0.3, 0.3, g), Error);
    CHECK_THROWS_AS(make_sandwich_case(2, 0, 0.3, g), Error);
}

TEST_CASE("compare_tightness ratios") {
    const auto t = compare_tightness(example_case(), {"TH-PROF1", "REM-R23-i"});
    REQUIRE(t.size() == 2);
    for (std::size_t k = 1; k < t.size(); ++k) CHECK(t[k - 1].ratio >= t[k].ratio);
    for (const auto& e : t)
        if (e.id == "TH-PROF1") CHECK(e.ratio == doctest::Approx(0.7 / (std::sqrt(0.12) * 16.0625)).epsilon(1e-9));

    // A = −B: lhs 0 against a positive right side
    InequalityCase z;
    z.ops["A"] = e12();
    z.ops["B"] = cplx(-1) * e12();
    const auto zr = compare_tightness(z, {"B-MUNA7.5"});
    REQUIRE(zr.size() == 1);
    CHECK(zr[0].ratio == 0);

    InequalityCase zero;
    zero.ops["A"] = ComplexMatrix(2);
    CHECK(compare_tightness(zero, {"B-N1-SANDWICH"}).empty());

    const ComplexMatrix i = ComplexMatrix::identity(2);
    const auto eq = compare_tightness(four(i, i, i, i), {"TH-A1"});
    REQUIRE(eq.size() == 1);
    CHECK(eq[0].ratio == doctest::Approx(1).epsilon(1e-9));
}

TEST_CASE("corollaries reduce to their parent theorems") {
    for (int k = 0; k < 20; ++k) {
        const std::size_t n = 2 + k % 3;
        Rng g = Rng::keyed(5, "reduction", k);

        InequalityCase ok2 = find_bound("COR-OK2").sample(n, g, std::nullopt);
        InequalityCase sch1 = ok2;
        sch1.families["X"].assign(ok2.params.n_ops, ComplexMatrix::identity(n));
        sch1.families["B"].assign(ok2.params.n_ops, ComplexMatrix::identity(n));
        same_result(evaluate_bound("COR-OK2", ok2), evaluate_bound("TH-SCH1", sch1), 1e-12);

        InequalityCase c32 = find_bound("COR-3.2").sample(n, g, std::nullopt);
        InequalityCase t31 = c32;
        t31.families["D"].assign(c32.params.n_ops, ComplexMatrix::identity(n));
        t31.families["A"].assign(c32.params.n_ops, ComplexMatrix::identity(n));
        same_result(evaluate_bound("COR-3.2", c32), evaluate_bound("TH-3.1", t31), 1e-12);

        InequalityCase pw = find_bound("COR-POWERS").sample(n, g, std::nullopt);
        InequalityCase one = pw;
        one.params.n_ops = 1;
        one.families["C"] = {pw.op("C")};
        one.ops.clear();
        same_result(evaluate_bound("COR-POWERS", pw), evaluate_bound("COR-3.2", one), 1e-12);

        InequalityCase t2 = find_bound("TH-RAHMA1-T2").sample(n, g, std::nullopt);
        InequalityCase t1 = t2;
        t1.psi = ScalarFunction::power(t2.params.r);
        same_result(evaluate_bound("TH-RAHMA1-T2", t2), evaluate_bound("TH-RAHMA1-T1", t1), 1e-10);
    }
}

TEST_CASE("Cauchy-Schwarz for DCBA is an equality for parallel vectors") {
    for (int k = 0; k < 20; ++k) {
        const std::size_t n = 2 + k % 4;
        Rng g = Rng::keyed(9, "d1", k);
        InequalityCase c = find_bound("LEM-D1").sample(n, g, std::nullopt);
        // C = I and D unitary give (DC)* = D*, so ζ = D·(BAξ)·s makes (DC)*ζ ∥ BAξ
        const ComplexMatrix u = haar_unitary(n, g);
        c.ops["C"] = ComplexMatrix::identity(n);
        c.ops["D"] = u;
        const CVector bax = c.op("B") * c.op("A") * c.vec("xi");
        const cplx s = std::polar(g.uniform(0.3, 2), g.uniform(0, 6.28));
        CVector zeta = u * bax;
        for (auto& z : zeta) z *= s;
        c.vectors["zeta"] = zeta;
        const CheckResult r = evaluate_bound("LEM-D1", c);
        CHECK(std::abs(r.slack) <= 1e-9 * std::max(1.0, r.rhs_raw));
        CHECK(r.note.find("equality") != std::string::npos);
    }
}

TEST_CASE("corrections are nonnegative and never loosen the bound") {
    for (const char* id : {"TH-SCH1", "TH-N1", "TH-N3", "TH-SCH2", "TH-MOHMMM", "TH-SUPQAD", "COR-MAKA1", "COR-N3"}) {
        const Bound& b = find_bound(id);
        for (int k = 0; k < 10; ++k) {
            Rng g = Rng::keyed(3, id, k);
            const CheckResult r = evaluate_bound(b, b.sample(2 + k % 3, g, std::nullopt));
            CHECK(r.correction_estimated);
            CHECK(r.correction >= -1e-12);
            CHECK(r.rhs_net <= r.rhs_raw + 1e-12 * std::max(1.0, r.rhs_raw));
            CHECK(r.status == Status::Holds);
        }
    }
}

TEST_CASE("every printed variant is falsified by its own sampler") {
    for (const auto& b : registry()) {
        if (!b.exempt) continue;
        bool found = false;
        for (int k = 0; k < 3000 && !found; ++k) {
            Rng g = Rng::keyed(21, b.id, k);
            found = evaluate_bound(b, b.sample(2 + k % 3, g, std::nullopt)).status == Status::Violated;
        }
        if (b.id == "TH-A1-PRINTED") continue;  // covered by the nilpotent pair above
        CHECK_MESSAGE(found, b.id);
    }
}

TEST_CASE("short soundness sweep over the registry") {
    for (const auto& b : registry()) {
        if (b.exempt) continue;
        for (int k = 0; k < 15; ++k) {
            Rng g = Rng::keyed(17, b.id, k);
            const CheckResult r = evaluate_bound(b, b.sample(2 + k % 5, g, std::nullopt));
            CHECK_MESSAGE(r.status == Status::Holds, b.id << " trial " << k << " slack " << r.slack << " " << r.note);
        }
    }
}

TEST_CASE("samplers are deterministic in the keyed stream") {
    for (const auto& b : registry()) {
        Rng g1 = Rng::keyed(4, b.id, 3), g2 = Rng::keyed(4, b.id, 3);
        const InequalityCase a = b.sample(3, g1, std::nullopt), c = b.sample(3, g2, std::nullopt);
        CHECK(case_digest(a) == case_digest(c));
        CHECK(a.params == c.params);
    }
}

TEST_CASE("single-operator samplers honour the ensemble override") {
    for (const auto& b : registry()) {
        if (!b.single_operator) continue;
        Rng g = Rng::keyed(8, b.id, 0);
        const InequalityCase c = b.sample(3, g, EnsembleKind::Hermitian);
        for (const auto& [name, m] : c.ops) CHECK_MESSAGE(m.hermitian_defect() <= 1e-12, b.id);
    }
}

TEST_CASE("ensembles") {
    Rng g = Rng::keyed(2, "ens", 0);
    const ComplexMatrix u = haar_unitary(3, g);
    CHECK((adjoint_times(u, u) - ComplexMatrix::identity(3)).frobenius() <= 1e-12);

    const ComplexMatrix nil = random_nilpotent(2, g);
    CHECK(nil(0, 0) == cplx(0));
    CHECK(nil(1, 0) == cplx(0));
    CHECK(nil(1, 1) == cplx(0));
    CHECK(std::abs(nil(0, 1)) > 0);

    const ComplexMatrix nrm = random_normal(4, g);
    CHECK((adjoint_times(nrm, nrm) - nrm * nrm.adjoint()).frobenius() <= 1e-12);
    CHECK(hermitian_eigenvalues(random_psd(4, g)).front() >= -1e-14);

    const InequalityCase sw = generate_case(parse_ensemble("sandwich(0.3,0.4)"), 2, g);
    CHECK(check_sandwich(sw, 0.3, 0.4).pass);

    const InequalityCase cp = generate_case(parse_ensemble("commuting-pair"), 3, g);
    CHECK((cp.op("A") * cp.op("B") - cp.op("B") * cp.op("A")).frobenius() <= 1e-12);
    const InequalityCase np = generate_case(parse_ensemble("normal-pair"), 3, g);
    for (const char* name : {"A", "B"}) {
        const ComplexMatrix& m = np.op(name);
        CHECK((adjoint_times(m, m) - m * m.adjoint()).frobenius() <= 1e-12);
    }

    for (const char* name : {"ginibre", "hermitian", "psd", "unitary", "normal", "nilpotent", "commuting-pair", "normal-pair"})
        CHECK(ensemble_name(parse_ensemble(name)) == name);
    CHECK(ensemble_name(parse_ensemble("sandwich(0.3,0.4)")) == "sandwich(0.3,0.4)");
    try {
        parse_ensemble("sandwich(0.4,0.3)");
        FAIL("accepted an empty window");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::BadWindow);
    }
    for (const char* bad : {"gauss", "sandwich(0.3)", "sandwich[0.3,0.4]", ""}) {
        try {
            parse_ensemble(bad);
            FAIL("accepted " << bad);
        } catch (const Error& e) {
            CHECK(e.code() == Errc::BadKind);
        }
    }
}
