#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "radgauge/case.hpp"
#include "radgauge/ensembles.hpp"
#include "radgauge/rng.hpp"
#include "radgauge/sphereopt.hpp"

namespace rg {

enum class Status { Holds, Violated, PreconditionFailed };
std::string status_name(Status s);

struct EvalOptions {
    double rel_tol = 1e-8;
    SphereOptOptions sphere{};
    // raise PreconditionFailed instead of reporting the status
    bool throw_on_precondition = false;
};

struct CheckResult {
    std::string bound_id;
    double lhs = 0;
    double rhs_raw = 0;
    double correction = 0;
    double rhs_net = 0;
    double slack = 0;
    Status status = Status::Holds;
    // correction rests on a numerical infimum, i.e. an upper estimate of the true one
    bool correction_estimated = false;
    std::string note;
};

using Sampler = std::function<InequalityCase(std::size_t dim, Rng& g, std::optional<EnsembleKind> kind)>;

struct Bound {
    std::string id;
    std::string anchor;
    std::string display;
    std::string arity;
    // printed form with known counterexamples; left out of "all"
    bool exempt = false;
    // nullopt when satisfied, otherwise the failing margins
    std::function<std::optional<std::string>(const InequalityCase&)> precondition;
    std::function<double(const InequalityCase&)> lhs, rhs;
    // empty when the bound has no correction term
    std::function<double(const InequalityCase&, const SphereOptOptions&)> correction;
    std::function<std::string(const InequalityCase&)> diagnose;
    Sampler sample;
    // the sampler honours an ensemble override for its single operator
    bool single_operator = false;
};

const std::vector<Bound>& registry();
const Bound& find_bound(const std::string& id);
// expands "all" to every non-exempt id; rejects unknown ids
std::vector<std::string> resolve_bound_ids(const std::vector<std::string>& ids);

CheckResult evaluate_bound(const Bound& b, const InequalityCase& c, const EvalOptions& opts = {});
CheckResult evaluate_bound(const std::string& id, const InequalityCase& c, const EvalOptions& opts = {});

// Spectral reading of 0 < X ≤ lo < hi ≤ Y, in either order of X and Y.
struct SandwichMargins {
    bool window_ok = false;  // lo < hi
    int branch = 0;          // 1: X below, 2: Y below, 0: neither
    double below = 0;        // lo − λ_max(lower operator)
    double above = 0;        // λ_min(upper operator) − hi
    double floor = 0;        // λ_min(lower operator)
    bool pass = false;
    std::string describe() const;
};

SandwichMargins sandwich_margins(const ComplexMatrix& x, const ComplexMatrix& y, double lo, double hi);
// X = |BA|², Y = |(DC)*|²
SandwichMargins check_sandwich(const InequalityCase& c, double lo, double hi);
// BA with singular values in (0, √δ(1−10⁻³)], (DC)* with singular values ≥ √Δ(1+10⁻³)
InequalityCase make_sandwich_case(std::size_t dim, double delta, double Delta, Rng& g);
// exchanges the roles of BA and (DC)*
InequalityCase swap_sandwich_roles(const InequalityCase& c);

struct TightnessEntry {
    std::string id;
    double lhs = 0, rhs_net = 0, ratio = 0;
};
std::vector<TightnessEntry> compare_tightness(const InequalityCase& c, const std::vector<std::string>& ids,
                                              const EvalOptions& opts = {});

}  // namespace rg
