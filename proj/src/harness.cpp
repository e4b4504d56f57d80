#include "radgauge/harness.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <thread>

#include "radgauge/error.hpp"
#include "radgauge/io.hpp"
#include "radgauge/linalg.hpp"
#include "radgauge/numrange.hpp"

namespace rg {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0) { return std::chrono::duration<double, std::milli>(Clock::now() - t0).count(); }

std::optional<EnsembleKind> override_for(const Bound& b, const std::map<std::string, EnsembleKind>& kinds) {
    if (auto it = kinds.find(b.id); it != kinds.end()) return it->second;
    if (!b.single_operator) return std::nullopt;
    if (auto it = kinds.find("*"); it != kinds.end()) return it->second;
    return std::nullopt;
}

bool single_operator_kind(EnsembleKind k) {
    return k != EnsembleKind::Sandwich && k != EnsembleKind::CommutingPair && k != EnsembleKind::NormalPair;
}

std::string fmt(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

nlohmann::json opt_json(const std::optional<double>& x) { return x ? nlohmann::json(*x) : nlohmann::json(nullptr); }

nlohmann::json result_json(const TrialRecord& t, bool timing) {
    nlohmann::json j{{"bound_id", t.bound_id}, {"index", t.index}, {"dim", t.dim}, {"digest", t.digest}};
    if (!t.error.empty()) {
        j["status"] = "failed";
        j["error"] = t.error;
    } else {
        const CheckResult& r = t.result;
        j["status"] = status_name(r.status);
        j["lhs"] = r.lhs;
        j["rhs_raw"] = r.rhs_raw;
        j["correction"] = r.correction;
        j["rhs_net"] = r.rhs_net;
        j["slack"] = r.slack;
        j["ratio"] = opt_json(t.ratio());
        j["correction_estimated"] = r.correction_estimated;
        j["note"] = r.note;
    }
    j["wall_ms"] = timing ? t.wall_ms : 0.0;
    return j;
}

}  // namespace

std::optional<double> TrialRecord::ratio() const {
    if (!error.empty() || result.status == Status::PreconditionFailed || !(result.rhs_net > 0)) return std::nullopt;
    return result.lhs / result.rhs_net;
}

void validate_config(const SuiteConfig& cfg) {
    if (cfg.trials < 1) throw Error(Errc::BadParameters, "trials must be at least 1, got " + std::to_string(cfg.trials));
    if (cfg.dims.empty()) throw Error(Errc::BadParameters, "no dimensions given");
    for (auto d : cfg.dims)
        if (d < 1 || d > 64) throw Error(Errc::BadParameters, "dimension " + std::to_string(d) + " outside [1, 64]");
    if (!(cfg.rel_tol >= 0)) throw Error(Errc::BadParameters, "rel_tol must be nonnegative");
    if (cfg.bounds.empty()) throw Error(Errc::BadParameters, "no bounds selected");
    const auto ids = resolve_bound_ids(cfg.bounds);
    for (const auto& [id, kind] : cfg.kinds) {
        if (!single_operator_kind(kind))
            throw Error(Errc::BadKind, ensemble_name(kind) + " cannot override a bound's operator");
        if (id == "*") continue;
        if (!find_bound(id).single_operator)
            throw Error(Errc::BadKind, id + " draws several operators; its generator cannot be overridden");
    }
}

unsigned resolve_threads(unsigned requested) {
    unsigned n = requested;
    std::optional<unsigned> cap;
    if (const char* env = std::getenv("RG_THREADS")) {
        char* end = nullptr;
        const long v = std::strtol(env, &end, 10);
        if (end != env && *end == '\0' && v > 0) cap = unsigned(v);
    }
    if (n == 0) n = cap ? *cap : std::max(1u, std::thread::hardware_concurrency());
    if (cap) n = std::min(n, *cap);
    return std::max(1u, n);
}

InequalityCase suite_case(const Bound& b, const SuiteConfig& cfg, std::uint64_t index) {
    Rng g = Rng::keyed(cfg.seed, b.id, index);
    const std::size_t dim = cfg.dims[index % cfg.dims.size()];
    return b.sample(dim, g, override_for(b, cfg.kinds));
}

Report run_suite(const SuiteConfig& cfg) {
    validate_config(cfg);
    const auto t0 = Clock::now();
    Report rep;
    rep.config = cfg;
    rep.bound_ids = resolve_bound_ids(cfg.bounds);
    std::vector<const Bound*> bounds;
    for (const auto& id : rep.bound_ids) bounds.push_back(&find_bound(id));

    EvalOptions opts;
    opts.rel_tol = cfg.rel_tol;
    opts.sphere = cfg.sphere;

    const std::size_t per = std::size_t(cfg.trials), total = bounds.size() * per;
    rep.records.resize(total);
    std::atomic<std::size_t> next{0};
    auto work = [&] {
        for (std::size_t k; (k = next.fetch_add(1)) < total;) {
            const Bound& b = *bounds[k / per];
            TrialRecord& t = rep.records[k];
            t.bound_id = b.id;
            t.index = k % per;
            t.dim = cfg.dims[t.index % cfg.dims.size()];
            const auto start = Clock::now();
            try {
                const InequalityCase c = suite_case(b, cfg, t.index);
                t.digest = case_digest(c);
                t.result = evaluate_bound(b, c, opts);
            } catch (const std::exception& e) {
                t.error = e.what();
            }
            t.wall_ms = ms_since(start);
        }
    };
    rep.threads_used = unsigned(std::min<std::size_t>(resolve_threads(cfg.threads), std::max<std::size_t>(1, total)));
    if (rep.threads_used == 1) {
        work();
    } else {
        std::vector<std::thread> pool;
        for (unsigned i = 0; i < rep.threads_used; ++i) pool.emplace_back(work);
        for (auto& th : pool) th.join();
    }

    for (std::size_t bi = 0; bi < bounds.size(); ++bi) {
        BoundSummary s;
        s.bound_id = bounds[bi]->id;
        for (std::size_t k = bi * per; k < (bi + 1) * per; ++k) {
            const TrialRecord& t = rep.records[k];
            ++s.trials;
            s.wall_ms += t.wall_ms;
            if (!t.error.empty()) {
                ++s.failures;
                continue;
            }
            switch (t.result.status) {
                case Status::Holds: ++s.holds; break;
                case Status::Violated: ++s.violations; break;
                case Status::PreconditionFailed: ++s.pre_failed; continue;
            }
            s.min_slack = std::min(s.min_slack.value_or(t.result.slack), t.result.slack);
            if (auto r = t.ratio()) s.max_ratio = std::max(s.max_ratio.value_or(*r), *r);
            if (t.result.status == Status::Violated)
                rep.violations.push_back({t, case_to_json(suite_case(*bounds[bi], cfg, t.index))});
        }
        rep.summaries.push_back(s);
    }
    rep.wall_ms = ms_since(t0);
    if (!cfg.out_json.empty() || !cfg.out_csv.empty()) write_report(rep);
    return rep;
}

nlohmann::json report_to_json(const Report& r, bool timing) {
    const SuiteConfig& c = r.config;
    nlohmann::json kinds = nlohmann::json::object();
    for (const auto& [id, k] : c.kinds) kinds[id] = ensemble_name(k);
    nlohmann::json j;
    j["tool"] = "radgauge";
    j["version"] = kToolkitVersion;
    j["config"] = {{"bounds", c.bounds},     {"resolved_bounds", r.bound_ids}, {"trials", c.trials},
                   {"dims", c.dims},         {"seed", c.seed},                 {"rel_tol", c.rel_tol},
                   {"kinds", kinds},         {"sphere_restarts", c.sphere.restarts}};
    int trials = 0, holds = 0, violations = 0, pre = 0, failures = 0;
    nlohmann::json bounds = nlohmann::json::array();
    for (const auto& s : r.summaries) {
        trials += s.trials;
        holds += s.holds;
        violations += s.violations;
        pre += s.pre_failed;
        failures += s.failures;
        bounds.push_back({{"bound_id", s.bound_id},
                          {"trials", s.trials},
                          {"holds", s.holds},
                          {"violations", s.violations},
                          {"pre_failed", s.pre_failed},
                          {"failures", s.failures},
                          {"min_slack", opt_json(s.min_slack)},
                          {"max_ratio", opt_json(s.max_ratio)},
                          {"wall_ms", timing ? s.wall_ms : 0.0}});
    }
    j["totals"] = {{"trials", trials},         {"holds", holds},         {"violations", violations},
                   {"pre_failed", pre},        {"failures", failures},   {"exit_code", exit_code(r)}};
    j["bounds"] = bounds;
    nlohmann::json recs = nlohmann::json::array();
    for (const auto& t : r.records) recs.push_back(result_json(t, timing));
    j["trials"] = recs;
    nlohmann::json viol = nlohmann::json::array();
    for (const auto& v : r.violations) {
        nlohmann::json e = result_json(v.record, timing);
        e["case"] = v.case_json;
        viol.push_back(e);
    }
    j["violations"] = viol;
    j["runtime"] = {{"threads", timing ? r.threads_used : 0u}, {"wall_ms", timing ? r.wall_ms : 0.0}};
    return j;
}

std::string summary_csv(const Report& r, bool timing) {
    std::ostringstream out;
    out << "bound_id,trials,holds,violations,pre_failed,min_slack,max_ratio,wall_ms\n";
    for (const auto& s : r.summaries)
        out << s.bound_id << ',' << s.trials << ',' << s.holds << ',' << s.violations << ',' << s.pre_failed << ','
            << (s.min_slack ? fmt(*s.min_slack) : "") << ',' << (s.max_ratio ? fmt(*s.max_ratio) : "") << ','
            << fmt(timing ? s.wall_ms : 0.0) << '\n';
    return out.str();
}

void write_report(const Report& r, bool timing) {
    auto put = [](const std::string& path, const std::string& text) {
        std::ofstream f(path, std::ios::binary);
        if (!f) throw Error(Errc::Io, "cannot open " + path + " for writing");
        f << text;
        if (!f) throw Error(Errc::Io, "write to " + path + " failed");
    };
    if (!r.config.out_json.empty()) put(r.config.out_json, report_to_json(r, timing).dump(2) + "\n");
    if (!r.config.out_csv.empty()) put(r.config.out_csv, summary_csv(r, timing));
}

int exit_code(const Report& r) {
    bool failed = false;
    for (const auto& s : r.summaries) {
        if (s.violations > 0) return 2;
        failed = failed || s.failures > 0;
    }
    return failed ? 3 : 0;
}

// ---- 2x2 example ----

ExampleInputs::ExampleInputs() : S(2), T(2) {
    S(0, 0) = S(1, 1) = 1.5;
    S(0, 1) = S(1, 0) = 0.5;
    T(0, 0) = T(1, 1) = 0.5;
}

bool ExampleReport::passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const auto& c) { return c.pass; });
}

std::string ExampleReport::describe() const {
    std::string s;
    for (const auto& c : checks) {
        char buf[256];
        std::snprintf(buf, sizeof buf, "%-28s measured %.12g expected %.12g |diff| %.3g tol %.3g %s\n", c.name.c_str(),
                      c.measured, c.expected, std::abs(c.measured - c.expected), c.tolerance, c.pass ? "ok" : "FAILED");
        s += buf;
    }
    return s;
}

ExampleReport measure_example_2x2(const ExampleInputs& in) {
    const auto t0 = Clock::now();
    if (!(in.delta < in.Delta))
        throw Error(Errc::BadWindow, "need δ < Δ, got δ = " + fmt(in.delta) + ", Δ = " + fmt(in.Delta));
    ExampleReport rep;
    auto add = [&](std::string name, double measured, double expected, double tol) {
        rep.checks.push_back({std::move(name), measured, expected, tol, std::abs(measured - expected) <= tol});
    };
    const double w = numerical_radius(in.S.adjoint() * in.T).lo;
    add("w^2(S*T)", w * w, 1, 1e-9);
    add("norm of |S|^4 + |T|^4", operator_norm(abs_power(in.S, 4) + abs_power(in.T, 4)), 16.0625, 1e-9);

    InequalityCase c;
    c.ops["A"] = in.T;
    c.ops["B"] = ComplexMatrix::identity(2);
    c.ops["C"] = ComplexMatrix::identity(2);
    c.ops["D"] = in.S.adjoint();
    c.params.delta = in.delta;
    c.params.Delta = in.Delta;
    c.psi = ScalarFunction::power(2);
    EvalOptions strict;
    strict.throw_on_precondition = true;
    add("sandwich bound, right side", evaluate_bound("TH-PROF1", c, strict).rhs_raw, 7.94, 5e-3);
    rep.wall_ms = ms_since(t0);
    return rep;
}

ExampleReport reproduce_example_2x2(const ExampleInputs& in) {
    ExampleReport rep = measure_example_2x2(in);
    if (!rep.passed()) throw Error(Errc::AssertionFailure, "example check failed\n" + rep.describe());
    return rep;
}

nlohmann::json example_to_json(const ExampleReport& r) {
    nlohmann::json checks = nlohmann::json::array();
    for (const auto& c : r.checks)
        checks.push_back({{"name", c.name},
                          {"measured", c.measured},
                          {"expected", c.expected},
                          {"abs_error", std::abs(c.measured - c.expected)},
                          {"tolerance", c.tolerance},
                          {"pass", c.pass}});
    return {{"example", "example-2x2"}, {"passed", r.passed()}, {"checks", checks}, {"wall_ms", r.wall_ms}};
}

// ---- prospecting ----

namespace {

struct Scored {
    CheckResult result;
    double ratio;
};

std::optional<Scored> score(const Bound& b, const InequalityCase& c, const EvalOptions& opts) {
    try {
        const CheckResult r = evaluate_bound(b, c, opts);
        if (r.status == Status::PreconditionFailed || !(r.rhs_net > 0)) return std::nullopt;
        return Scored{r, r.lhs / r.rhs_net};
    } catch (const Error&) {
        return std::nullopt;
    }
}

// every perturbable complex entry of a case
std::vector<cplx*> coordinates(InequalityCase& c) {
    std::vector<cplx*> out;
    auto add = [&](ComplexMatrix& m) {
        for (std::size_t i = 0; i < m.dim(); ++i)
            for (std::size_t j = 0; j < m.dim(); ++j) out.push_back(&m(i, j));
    };
    for (auto& [name, m] : c.ops) add(m);
    for (auto& [name, fam] : c.families)
        for (auto& m : fam) add(m);
    for (auto& [name, v] : c.vectors)
        for (auto& z : v) out.push_back(&z);
    return out;
}

double entry_scale(InequalityCase& c) {
    double s = 0;
    std::size_t n = 0;
    for (cplx* z : coordinates(c)) {
        s += std::abs(*z);
        ++n;
    }
    return n ? std::max(s / double(n), 1e-3) : 1;
}

}  // namespace

ProspectResult prospect(const std::string& id, const ProspectConfig& cfg) {
    const Bound& b = find_bound(id);
    if (cfg.dims.empty()) throw Error(Errc::BadParameters, "no dimensions given");
    EvalOptions opts = cfg.eval;
    opts.throw_on_precondition = false;

    ProspectResult res;
    std::optional<Scored> best;
    auto consider = [&](const InequalityCase& c, std::uint64_t index, std::size_t dim) {
        ++res.evaluations;
        auto s = score(b, c, opts);
        if (!s || (best && s->ratio <= best->ratio)) return false;
        if (best) ++res.improvements;
        best = s;
        res.best_case = c;
        res.best.index = index;
        res.best.dim = dim;
        return true;
    };

    if (cfg.seed_case) consider(*cfg.seed_case, 0, cfg.seed_case->dim());
    const int random_phase = std::max(1, cfg.seed_case ? cfg.budget / 4 : cfg.budget / 2);
    for (int i = 0; i < random_phase && res.evaluations < cfg.budget; ++i) {
        Rng g = Rng::keyed(cfg.seed, b.id, std::uint64_t(i));
        const std::size_t dim = cfg.dims[std::size_t(i) % cfg.dims.size()];
        try {
            consider(b.sample(dim, g, cfg.kind), std::uint64_t(i), dim);
        } catch (const Error&) {
            ++res.evaluations;
        }
    }

    if (best) {
        Rng g = Rng::keyed(cfg.seed, b.id + "/climb", 0);
        InequalityCase cur = res.best_case;
        double step = 0.1 * entry_scale(cur);
        const double floor = 1e-7 * step;
        while (res.evaluations < cfg.budget && step > floor) {
            bool moved = false;
            const std::size_t n = coordinates(cur).size();
            for (std::size_t k = 0; k < n && res.evaluations < cfg.budget; ++k) {
                for (const cplx dir : {cplx(1, 0), cplx(-1, 0), cplx(0, 1), cplx(0, -1)}) {
                    if (res.evaluations >= cfg.budget) break;
                    InequalityCase trial = cur;
                    *coordinates(trial)[k] += step * dir * (0.5 + g.uniform());
                    if (consider(trial, res.best.index, res.best.dim)) {
                        cur = trial;
                        moved = true;
                        break;
                    }
                }
            }
            if (!moved) step *= 0.5;
        }
    }

    res.best.bound_id = b.id;
    if (!best) {
        res.best.error = "no sampled case had a positive right side under the hypotheses";
        return res;
    }
    res.best.result = best->result;
    res.best.digest = case_digest(res.best_case);
    res.ratio = best->ratio;
    return res;
}

}  // namespace rg
