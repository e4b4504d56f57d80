#include <doctest.h>

#include <cmath>
#include <cstdlib>

#include "radgauge/error.hpp"
#include "radgauge/harness.hpp"
#include "radgauge/io.hpp"
#include "support.hpp"

using namespace rg;

namespace {

SuiteConfig small(std::vector<std::string> ids, int trials, std::uint64_t seed) {
    SuiteConfig c;
    c.bounds = std::move(ids);
    c.trials = trials;
    c.seed = seed;
    c.threads = 1;
    return c;
}

Errc code_of(const std::function<void()>& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.code();
    }
    FAIL("no error raised");
    return Errc::Io;
}

}  // namespace

TEST_CASE("ten trials of the norm sandwich all hold") {
    const Report r = run_suite(small({"B-N1-SANDWICH"}, 10, 42));
    REQUIRE(r.summaries.size() == 1);
    CHECK(r.summaries[0].trials == 10);
    CHECK(r.summaries[0].holds == 10);
    CHECK(r.violations.empty());
    CHECK(exit_code(r) == 0);
}

TEST_CASE("invalid suite configurations are rejected") {
    CHECK(code_of([] { validate_config(small({"all"}, 0, 1)); }) == Errc::BadParameters);
    SuiteConfig c = small({"all"}, 5, 1);
    c.dims = {2, 65};
    CHECK(code_of([&] { validate_config(c); }) == Errc::BadParameters);
    c.dims = {};
    CHECK(code_of([&] { validate_config(c); }) == Errc::BadParameters);
    c = small({"NOPE"}, 5, 1);
    CHECK(code_of([&] { validate_config(c); }) == Errc::UnknownBound);
    c = small({"TH-A1"}, 5, 1);
    c.kinds["TH-A1"] = EnsembleKind::Normal;
    CHECK(code_of([&] { validate_config(c); }) == Errc::BadKind);
    c = small({"B-MUNA6"}, 5, 1);
    c.kinds["B-MUNA6"] = EnsembleKind::Sandwich;
    CHECK(code_of([&] { validate_config(c); }) == Errc::BadKind);
    CHECK(code_of([] { run_suite(small({"all"}, 0, 1)); }) == Errc::BadParameters);
}

TEST_CASE("records regenerate from seed and index") {
    const SuiteConfig cfg = small({"B-MUNA6", "TH-SCH1", "TH-PROF1"}, 6, 9);
    const Report r = run_suite(cfg);
    for (const auto& t : r.records) {
        CHECK(t.error.empty());
        CHECK(case_digest(suite_case(find_bound(t.bound_id), cfg, t.index)) == t.digest);
        CHECK(t.dim == cfg.dims[t.index % cfg.dims.size()]);
    }
}

TEST_CASE("reports do not depend on the thread count") {
    SuiteConfig cfg = small({"B-MUNA6", "TH-A1", "TH-SCH1", "B-MUNA6-PRINTED"}, 12, 5);
    const std::string one = report_to_json(run_suite(cfg), false).dump();
    cfg.threads = 4;
    const Report four = run_suite(cfg);
    CHECK(four.threads_used == 4);
    CHECK(report_to_json(four, false).dump() == one);
    CHECK(summary_csv(four, false) == summary_csv(run_suite(cfg), false));
}

TEST_CASE("a falsified printed variant flips the exit code") {
    const Report r = run_suite(small({"B-MUNA6", "B-MUNA6-PRINTED"}, 40, 3));
    CHECK(r.summaries[0].violations == 0);
    REQUIRE(r.summaries[1].violations > 0);
    CHECK(exit_code(r) == 2);
    CHECK(int(r.violations.size()) == r.summaries[1].violations);
    for (const auto& v : r.violations) {
        const InequalityCase c = case_from_json(v.case_json);
        CHECK(case_digest(c) == v.record.digest);
        CHECK(evaluate_bound(v.record.bound_id, c).status == Status::Violated);
    }
    const auto j = report_to_json(r);
    CHECK(j["violations"].size() == r.violations.size());
    CHECK(j["totals"]["exit_code"] == 2);
    CHECK(j["version"] == kToolkitVersion);
}

TEST_CASE("exit code precedence") {
    Report r;
    r.summaries = {BoundSummary{.bound_id = "X", .trials = 1, .holds = 1}};
    CHECK(exit_code(r) == 0);
    r.summaries.push_back(BoundSummary{.bound_id = "Y", .trials = 1, .failures = 1});
    CHECK(exit_code(r) == 3);
    r.summaries.push_back(BoundSummary{.bound_id = "Z", .trials = 1, .violations = 1});
    CHECK(exit_code(r) == 2);
}

TEST_CASE("csv summary layout") {
    const Report r = run_suite(small({"B-MUNA6"}, 3, 1));
    const std::string csv = summary_csv(r, false);
    CHECK(csv.rfind("bound_id,trials,holds,violations,pre_failed,min_slack,max_ratio,wall_ms\n", 0) == 0);
    CHECK(csv.find("\nB-MUNA6,3,3,0,0,") != std::string::npos);
}

TEST_CASE("unwritable output path raises an io error") {
    SuiteConfig c = small({"B-MUNA6"}, 1, 1);
    c.out_json = "/nonexistent-dir/report.json";
    CHECK(code_of([&] { run_suite(c); }) == Errc::Io);
}

TEST_CASE("generator override reaches single-operator bounds") {
    SuiteConfig c = small({"B-MUNA6"}, 4, 2);
    c.kinds["*"] = EnsembleKind::Hermitian;
    for (std::uint64_t i = 0; i < 4; ++i) {
        const auto a = suite_case(find_bound("B-MUNA6"), c, i).op("A");
        CHECK((a - a.adjoint()).frobenius() <= 1e-14);
    }
}

TEST_CASE("RG_THREADS caps the pool") {
    ::setenv("RG_THREADS", "3", 1);
    CHECK(resolve_threads(0) == 3);
    CHECK(resolve_threads(8) == 3);
    CHECK(resolve_threads(2) == 2);
    ::setenv("RG_THREADS", "junk", 1);
    CHECK(resolve_threads(5) == 5);
    ::unsetenv("RG_THREADS");
    CHECK(resolve_threads(0) >= 1);
}

TEST_CASE("two by two example measurements") {
    const ExampleReport r = measure_example_2x2();
    REQUIRE(r.checks.size() == 3);
    CHECK(r.checks[0].pass);
    CHECK(r.checks[1].pass);
    // eigenvalues of S are 2 and 1, so ‖|S|⁴ + |T|⁴‖ = 16 + 1/16
    CHECK(r.checks[1].measured == doctest::Approx(16.0625).epsilon(1e-12));
    const double oracle = std::sqrt(0.12) / 0.7 * 16.0625;
    CHECK(r.checks[2].measured == doctest::Approx(oracle).epsilon(1e-12));
    // the formula evaluates to 7.9489, outside 5e-3 of the printed 7.94
    CHECK(!r.checks[2].pass);
    CHECK(!r.passed());
    CHECK(r.wall_ms < 1000);
    CHECK(code_of([] { reproduce_example_2x2(); }) == Errc::AssertionFailure);
    const auto j = example_to_json(r);
    CHECK(j["checks"].size() == 3);
    CHECK(j["passed"] == false);
}

TEST_CASE("example inputs are validated and perturbations show up") {
    ExampleInputs in;
    in.Delta = 0.3;
    CHECK(code_of([&] { measure_example_2x2(in); }) == Errc::BadWindow);

    ExampleInputs p;
    p.S(0, 0) += 1e-3;
    const ExampleReport r = measure_example_2x2(p);
    CHECK(!r.checks[0].pass);
    CHECK(!r.checks[1].pass);
    CHECK(std::abs(r.checks[1].measured - 16.0625) > 1e-3);
    try {
        reproduce_example_2x2(p);
        FAIL("expected AssertionFailure");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::AssertionFailure);
        CHECK(std::string(e.what()).find("measured") != std::string::npos);
    }
}

TEST_CASE("prospecting finds the equality case of the mixed Schwarz bound") {
    std::mt19937_64 g(11);
    InequalityCase c;
    c.params.n_ops = 1;
    c.families["X"] = {ComplexMatrix::identity(2)};
    c.families["B"] = {ComplexMatrix::identity(2)};
    c.families["A"] = {testing_support::random_psd(2, g)};
    c.psi = ScalarFunction::power(0.5);
    c.phi = ScalarFunction::power(0.5);
    ProspectConfig pc;
    pc.budget = 30;
    pc.seed_case = c;
    const ProspectResult r = prospect("TH-SCH1", pc);
    CHECK(r.ratio >= 1 - 1e-8);
    CHECK(r.best.error.empty());
}

TEST_CASE("prospecting normal operators for the norm sandwich") {
    ProspectConfig pc;
    pc.budget = 60;
    pc.kind = EnsembleKind::Normal;
    const ProspectResult r = prospect("B-N1-SANDWICH", pc);
    CHECK(r.ratio == doctest::Approx(1).epsilon(1e-8));
}

TEST_CASE("prospecting the quarter bound on 2x2 nilpotents") {
    ProspectConfig pc;
    pc.budget = 40;
    pc.dims = {2};
    pc.kind = EnsembleKind::Nilpotent;
    const ProspectResult r = prospect("B-MUNA7-L", pc);
    CHECK(r.ratio >= 1 - 1e-8);
    CHECK(r.ratio <= 1 + 1e-8);
}

TEST_CASE("prospecting is deterministic and never exceeds its budget") {
    ProspectConfig pc;
    pc.budget = 50;
    pc.seed = 4;
    const ProspectResult a = prospect("B-MUNA6", pc), b = prospect("B-MUNA6", pc);
    CHECK(a.best.digest == b.best.digest);
    CHECK(a.ratio == b.ratio);
    CHECK(a.evaluations <= 50);
    CHECK(a.ratio <= 1 + 1e-8);
}
