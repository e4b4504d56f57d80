// rgauge: command line front end for the radgauge bound catalog.

#include <CLI11.hpp>
#include <cstdio>
#include <fstream>
#include <iostream>

#include "radgauge/error.hpp"
#include "radgauge/harness.hpp"
#include "radgauge/io.hpp"
#include "radgauge/numrange.hpp"

using namespace rg;

namespace {

nlohmann::json read_json(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw Error(Errc::Io, "cannot open " + path);
    try {
        return nlohmann::json::parse(f);
    } catch (const nlohmann::json::exception& e) {
        throw Error(Errc::Io, path + ": " + e.what());
    }
}

std::vector<std::size_t> parse_dims(const std::string& s) {
    std::vector<std::size_t> out;
    std::size_t pos = 0;
    while (pos <= s.size()) {
        const auto comma = std::min(s.find(',', pos), s.size());
        const std::string tok = s.substr(pos, comma - pos);
        const auto dash = tok.find('-');
        try {
            if (dash != std::string::npos && dash > 0) {
                const auto a = std::stoul(tok.substr(0, dash)), b = std::stoul(tok.substr(dash + 1));
                for (auto d = a; d <= b; ++d) out.push_back(d);
            } else {
                out.push_back(std::stoul(tok));
            }
        } catch (const std::logic_error&) {
            throw Error(Errc::BadParameters, "bad dimension list '" + s + "'");
        }
        pos = comma + 1;
    }
    return out;
}

std::vector<std::string> split_ids(const std::vector<std::string>& raw) {
    std::vector<std::string> out;
    for (const auto& r : raw) {
        std::size_t pos = 0;
        while (pos <= r.size()) {
            const auto comma = std::min(r.find(',', pos), r.size());
            if (comma > pos) out.push_back(r.substr(pos, comma - pos));
            pos = comma + 1;
        }
    }
    return out;
}

// "ID=kind" or plain "kind" for every single-operator bound
void add_kind(std::map<std::string, EnsembleKind>& kinds, const std::string& spec) {
    const auto eq = spec.find('=');
    const std::string id = eq == std::string::npos ? "*" : spec.substr(0, eq);
    kinds[id] = parse_ensemble(eq == std::string::npos ? spec : spec.substr(eq + 1)).kind;
}

void print_summary(const Report& r) {
    std::printf("%-24s %6s %6s %6s %6s %6s %14s %10s\n", "bound", "trials", "holds", "viol", "pre", "fail",
                "min_slack", "max_ratio");
    for (const auto& s : r.summaries) {
        std::printf("%-24s %6d %6d %6d %6d %6d ", s.bound_id.c_str(), s.trials, s.holds, s.violations, s.pre_failed,
                    s.failures);
        if (s.min_slack) std::printf("%14.6g ", *s.min_slack);
        else std::printf("%14s ", "-");
        if (s.max_ratio) std::printf("%10.6f\n", *s.max_ratio);
        else std::printf("%10s\n", "-");
    }
    std::printf("%zu violation(s), %u thread(s), %.1f s\n", r.violations.size(), r.threads_used, r.wall_ms / 1000);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"rgauge: numerical checks of numerical radius inequalities"};
    app.set_version_flag("--version", std::string(kToolkitVersion));
    app.require_subcommand(1);

    SuiteConfig cfg;
    std::vector<std::string> bound_args{"all"}, kind_args;
    std::string dims_arg = "2,3,4";
    bool no_timing = false, quiet = false;
    auto* verify = app.add_subcommand("verify", "run randomized trials for a set of bounds");
    verify->add_option("--bounds", bound_args, "bound ids, comma separated, or 'all'")->delimiter(',');
    verify->add_option("--trials", cfg.trials, "trials per bound")->capture_default_str();
    verify->add_option("--dims", dims_arg, "dimensions, e.g. 2,3,4 or 2-6")->capture_default_str();
    verify->add_option("--seed", cfg.seed)->capture_default_str();
    verify->add_option("--rel-tol", cfg.rel_tol)->capture_default_str();
    verify->add_option("--out", cfg.out_json, "JSON report path");
    verify->add_option("--csv", cfg.out_csv, "CSV summary path");
    verify->add_option("--kind", kind_args, "generator override, 'kind' or 'ID=kind'");
    verify->add_option("--threads", cfg.threads, "worker threads (0: RG_THREADS or hardware)");
    verify->add_option("--restarts", cfg.sphere.restarts, "sphere optimizer restarts")->capture_default_str();
    verify->add_flag("--no-timing", no_timing, "zero wall-clock fields in the outputs");
    verify->add_flag("--quiet,-q", quiet, "no summary table");

    std::string example;
    std::string example_out;
    auto* reproduce = app.add_subcommand("reproduce", "recompute the 2x2 example");
    reproduce->add_option("example", example)->required()->check(CLI::IsMember({"example-2x2"}));
    reproduce->add_option("--out", example_out, "JSON output path");

    std::string p_bound, p_case, p_dims = "2,3", p_kind, p_out;
    ProspectConfig pcfg;
    auto* prospect_cmd = app.add_subcommand("prospect", "search for cases where a bound is nearly tight");
    prospect_cmd->add_option("--bound", p_bound)->required();
    prospect_cmd->add_option("--budget", pcfg.budget)->capture_default_str()->check(CLI::PositiveNumber);
    prospect_cmd->add_option("--seed", pcfg.seed)->capture_default_str();
    prospect_cmd->add_option("--dims", p_dims)->capture_default_str();
    prospect_cmd->add_option("--kind", p_kind, "generator override");
    prospect_cmd->add_option("--case", p_case, "JSON case to start the climb from");
    prospect_cmd->add_option("--out", p_out, "write the best case here");

    bool list_all = false;
    auto* list = app.add_subcommand("list-bounds", "print the catalog");
    list->add_flag("--all", list_all, "include printed variants");

    std::string c_bound, c_case;
    auto* check = app.add_subcommand("check", "evaluate one bound on a case file");
    check->add_option("--bound", c_bound)->required();
    check->add_option("--case", c_case)->required();

    std::string m_path;
    double m_tol = kRadiusTol;
    auto* radius = app.add_subcommand("radius", "numerical radius of a matrix file");
    radius->add_option("--matrix", m_path)->required();
    radius->add_option("--tol", m_tol)->capture_default_str();

    CLI11_PARSE(app, argc, argv);

    try {
        if (*verify) {
            cfg.bounds = split_ids(bound_args);
            cfg.dims = parse_dims(dims_arg);
            for (const auto& k : kind_args) add_kind(cfg.kinds, k);
            validate_config(cfg);
            auto out_json = cfg.out_json, out_csv = cfg.out_csv;
            cfg.out_json.clear();
            cfg.out_csv.clear();
            Report r = run_suite(cfg);
            r.config.out_json = out_json;
            r.config.out_csv = out_csv;
            write_report(r, !no_timing);
            if (!quiet) print_summary(r);
            return exit_code(r);
        }
        if (*reproduce) {
            const ExampleReport r = measure_example_2x2();
            std::fputs(r.describe().c_str(), stdout);
            if (!example_out.empty()) std::ofstream(example_out) << example_to_json(r).dump(2) << "\n";
            if (!r.passed()) {
                std::fflush(stdout);
                std::fprintf(stderr, "example-2x2: FAILED\n");
                return 2;
            }
            std::printf("example-2x2: ok (%.2f ms)\n", r.wall_ms);
            return 0;
        }
        if (*prospect_cmd) {
            pcfg.dims = parse_dims(p_dims);
            if (!p_kind.empty()) pcfg.kind = parse_ensemble(p_kind).kind;
            if (!p_case.empty()) pcfg.seed_case = case_from_json(read_json(p_case));
            const ProspectResult r = prospect(p_bound, pcfg);
            if (!r.best.error.empty()) {
                std::fprintf(stderr, "%s: %s\n", p_bound.c_str(), r.best.error.c_str());
                return 3;
            }
            std::printf("%s: best ratio %.12f after %d evaluations (%d improvements), dim %zu, digest %s\n",
                        p_bound.c_str(), r.ratio, r.evaluations, r.improvements, r.best.dim, r.best.digest.c_str());
            std::printf("lhs %.12g  rhs_net %.12g  correction %.3g\n", r.best.result.lhs, r.best.result.rhs_net,
                        r.best.result.correction);
            if (!p_out.empty()) std::ofstream(p_out) << case_to_json(r.best_case).dump(2) << "\n";
            return 0;
        }
        if (*list) {
            for (const auto& b : registry()) {
                if (b.exempt && !list_all) continue;
                std::printf("%-24s %-8s %s%s\n", b.id.c_str(), b.arity.c_str(), b.display.c_str(),
                            b.exempt ? "  [printed form]" : "");
            }
            return 0;
        }
        if (*check) {
            const CheckResult r = evaluate_bound(c_bound, case_from_json(read_json(c_case)));
            std::printf("%s: %s\n  lhs %.15g\n  rhs %.15g\n  correction %.6g%s\n  rhs_net %.15g\n  slack %.6g\n",
                        c_bound.c_str(), status_name(r.status).c_str(), r.lhs, r.rhs_raw, r.correction,
                        r.correction_estimated ? " (estimate)" : "", r.rhs_net, r.slack);
            if (!r.note.empty()) std::printf("  %s\n", r.note.c_str());
            return r.status == Status::Violated ? 2 : 0;
        }
        if (*radius) {
            const auto b = numerical_radius(load_matrix(m_path), m_tol);
            std::printf("w in [%.15g, %.15g], theta %.9f\n", b.lo, b.hi, b.argmax_theta);
            return 0;
        }
    } catch (const Error& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
    return 0;
}
