#pragma once

#include <cstdint>
#include <json.hpp>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "radgauge/catalog.hpp"

namespace rg {

inline constexpr const char* kToolkitVersion = "0.3.0";

struct SuiteConfig {
    std::vector<std::string> bounds{"all"};
    int trials = 100;
    std::vector<std::size_t> dims{2, 3, 4};
    std::uint64_t seed = 0;
    double rel_tol = 1e-8;
    // ensemble overrides, by bound id; "*" applies to every single-operator bound
    std::map<std::string, EnsembleKind> kinds;
    std::string out_json, out_csv;
    // 0: RG_THREADS if set, else the hardware count
    unsigned threads = 0;
    SphereOptOptions sphere{};
};

// rejects trials < 1, dims outside [1, 64], unknown ids and misplaced overrides
void validate_config(const SuiteConfig& cfg);

struct TrialRecord {
    std::string bound_id;
    std::uint64_t index = 0;
    std::size_t dim = 0;
    std::string digest;
    CheckResult result;
    double wall_ms = 0;
    // generation or evaluation failure; result is meaningless when set
    std::string error;
    // lhs/rhs_net, absent when rhs_net ≤ 0
    std::optional<double> ratio() const;
};

struct BoundSummary {
    std::string bound_id;
    int trials = 0, holds = 0, violations = 0, pre_failed = 0, failures = 0;
    std::optional<double> min_slack, max_ratio;
    double wall_ms = 0;
};

struct Violation {
    TrialRecord record;
    nlohmann::json case_json;
};

struct Report {
    SuiteConfig config;
    std::vector<std::string> bound_ids;  // resolved
    std::vector<BoundSummary> summaries;
    std::vector<TrialRecord> records;  // bound order, then trial index
    std::vector<Violation> violations;
    unsigned threads_used = 1;
    double wall_ms = 0;
};

// thread count after the RG_THREADS cap
unsigned resolve_threads(unsigned requested);

Report run_suite(const SuiteConfig& cfg);
// the case trial `index` of a suite draws
InequalityCase suite_case(const Bound& b, const SuiteConfig& cfg, std::uint64_t index);

// timing = false zeroes every wall-clock field so reports can be diffed
nlohmann::json report_to_json(const Report& r, bool timing = true);
std::string summary_csv(const Report& r, bool timing = true);
void write_report(const Report& r, bool timing = true);
// 0 all holds, 2 any violation, 3 any generation failure without violations
int exit_code(const Report& r);

// Reproduction of the 2×2 sandwich example.
struct ExampleInputs {
    ComplexMatrix S, T;
    double delta = 0.3, Delta = 0.4;
    ExampleInputs();
};

struct ExampleCheck {
    std::string name;
    double measured = 0, expected = 0, tolerance = 0;
    bool pass = false;
};

struct ExampleReport {
    std::vector<ExampleCheck> checks;
    double wall_ms = 0;
    bool passed() const;
    std::string describe() const;
};

// measures without asserting; BadWindow when δ ≥ Δ
ExampleReport measure_example_2x2(const ExampleInputs& in = {});
// throws AssertionFailure listing the measured values when a check fails
ExampleReport reproduce_example_2x2(const ExampleInputs& in = {});
nlohmann::json example_to_json(const ExampleReport& r);

struct ProspectConfig {
    int budget = 400;
    std::uint64_t seed = 0;
    std::vector<std::size_t> dims{2, 3};
    std::optional<EnsembleKind> kind;
    std::optional<InequalityCase> seed_case;
    EvalOptions eval{};
};

struct ProspectResult {
    TrialRecord best;
    InequalityCase best_case;
    double ratio = 0;
    int evaluations = 0;
    int improvements = 0;
};

// random search, then coordinate-wise complex perturbation hill-climb on lhs/rhs_net
ProspectResult prospect(const std::string& id, const ProspectConfig& cfg);

}  // namespace rg
