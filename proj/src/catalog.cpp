#include "radgauge/catalog.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <set>

#include "bound_kit.hpp"
#include "radgauge/error.hpp"
#include "radgauge/linalg.hpp"

namespace rg {

namespace kit {

double loewner_ratio(const ComplexMatrix& x, const ComplexMatrix& y) {
    const ComplexMatrix yi = psd_power(y, -0.5);
    return lambda_max(hermitian_part(yi * x * yi));
}

bool is_psd(const ComplexMatrix& p) {
    if (p.hermitian_defect() > 1e-10 * (1 + p.frobenius())) return false;
    return lambda_min(hermitian_part(p)) >= -1e-12 * std::max(1.0, p.frobenius());
}

bool is_pd(const ComplexMatrix& p) {
    if (p.hermitian_defect() > 1e-10 * (1 + p.frobenius())) return false;
    return lambda_min(hermitian_part(p)) > 0;
}

bool is_unit(const CVector& v) { return std::abs(norm(v) - 1) <= 1e-10; }

bool is_normal(const ComplexMatrix& a) {
    const double f = a.frobenius();
    return (adjoint_times(a, a) - a * a.adjoint()).frobenius() <= 1e-9 * std::max(1.0, f * f);
}

bool commute(const ComplexMatrix& a, const ComplexMatrix& b) {
    return (a * b - b * a).frobenius() <= 1e-9 * std::max(1.0, a.frobenius() * b.frobenius());
}

bool multiplies_to_identity(const ScalarFunction& psi, const ScalarFunction& phi) {
    for (double t : {0.0, 0.25, 1.0, 3.0})
        if (std::abs(psi(t) * phi(t) - t) > 1e-12 * std::max(1.0, t)) return false;
    return true;
}

bool convex_increasing(const ScalarFunction& f) {
    const auto& fl = f.flags();
    return fl.nonnegative && fl.increasing && fl.convex;
}

std::string num(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6g", x);
    return buf;
}

std::optional<std::string> Pre::done() const {
    if (fails_.empty()) return std::nullopt;
    std::string s;
    for (const auto& f : fails_) s += (s.empty() ? "" : "; ") + f;
    return s;
}

ComplexMatrix sum_xamb(const std::vector<ComplexMatrix>& x, const std::vector<ComplexMatrix>& a,
                       const std::vector<ComplexMatrix>& b, int m) {
    ComplexMatrix s(a.front().dim());
    for (std::size_t i = 0; i < a.size(); ++i) s += x[i] * matrix_power(a[i], m) * b[i];
    return s;
}

ComplexMatrix op(std::size_t n, Rng& g) { return scaled(g.uniform(0.5, 1.5), unit_ginibre(n, g)); }

void fill_family(InequalityCase& c, const std::string& name, std::size_t n, Rng& g) {
    auto& fam = c.families[name];
    fam.clear();
    for (int i = 0; i < c.params.n_ops; ++i) fam.push_back(op(n, g));
}

void conjugate_pair(CaseParams& p, Rng& g) {
    p.p = g.uniform(1.2, 4);
    p.q = p.p / (p.p - 1);
}

ScalarFunction convex_power(Rng& g, double hi) { return ScalarFunction::power(g.uniform(1, hi)); }

void power_pair(InequalityCase& c, Rng& g) {
    c.params.lambda = g.uniform(0.1, 0.9);
    c.psi = ScalarFunction::power(c.params.lambda);
    c.phi = ScalarFunction::power(1 - c.params.lambda);
}

}  // namespace kit

std::string status_name(Status s) {
    switch (s) {
        case Status::Holds: return "holds";
        case Status::Violated: return "violated";
        case Status::PreconditionFailed: return "precondition-failed";
    }
    return "?";
}

const std::vector<Bound>& registry() {
    static const std::vector<Bound> reg = [] {
        std::vector<Bound> out;
        kit::add_norm_bounds(out);
        kit::add_lemma_bounds(out);
        kit::add_product_bounds(out);
        kit::add_sum_bounds(out);
        return out;
    }();
    return reg;
}

const Bound& find_bound(const std::string& id) {
    for (const auto& b : registry())
        if (b.id == id) return b;
    throw Error(Errc::UnknownBound, "no bound '" + id + "'");
}

std::vector<std::string> resolve_bound_ids(const std::vector<std::string>& ids) {
    std::vector<std::string> out;
    std::set<std::string> seen;
    auto add = [&](const std::string& id) {
        if (seen.insert(id).second) out.push_back(id);
    };
    for (const auto& id : ids) {
        if (id == "all") {
            for (const auto& b : registry())
                if (!b.exempt) add(b.id);
        } else {
            add(find_bound(id).id);
        }
    }
    return out;
}

CheckResult evaluate_bound(const Bound& b, const InequalityCase& c, const EvalOptions& opts) {
    CheckResult r;
    r.bound_id = b.id;
    c.validate();
    if (auto fail = b.precondition ? b.precondition(c) : std::nullopt) {
        if (opts.throw_on_precondition) throw Error(Errc::PreconditionFailed, b.id + ": " + *fail);
        r.status = Status::PreconditionFailed;
        r.note = *fail;
        return r;
    }
    r.lhs = b.lhs(c);
    r.rhs_raw = b.rhs(c);
    if (b.correction) {
        r.correction = b.correction(c, opts.sphere);
        r.correction_estimated = true;
    }
    r.rhs_net = r.rhs_raw - r.correction;
    r.slack = r.rhs_net - r.lhs;
    if (!std::isfinite(r.lhs) || !std::isfinite(r.rhs_raw) || !std::isfinite(r.correction))
        throw Error(Errc::NotFinite, b.id + ": non-finite side (lhs " + kit::num(r.lhs) + ", rhs " +
                                         kit::num(r.rhs_raw) + ", correction " + kit::num(r.correction) + ")");
    r.status = r.slack >= -opts.rel_tol * std::max(1.0, std::abs(r.rhs_net)) ? Status::Holds : Status::Violated;
    if (b.diagnose) r.note = b.diagnose(c);
    return r;
}

CheckResult evaluate_bound(const std::string& id, const InequalityCase& c, const EvalOptions& opts) {
    return evaluate_bound(find_bound(id), c, opts);
}

std::string SandwichMargins::describe() const {
    if (!window_ok) return "window is empty (lower end ≥ upper end)";
    if (branch == 0) return "no ordering of the operators fits the window";
    return "branch " + std::to_string(branch) + ": below " + kit::num(below) + ", above " + kit::num(above) +
           ", floor " + kit::num(floor);
}

SandwichMargins sandwich_margins(const ComplexMatrix& x, const ComplexMatrix& y, double lo, double hi) {
    SandwichMargins best;
    best.window_ok = lo < hi;
    if (!best.window_ok) return best;
    const std::vector<double> ex = hermitian_eigenvalues(hermitian_part(x));
    const std::vector<double> ey = hermitian_eigenvalues(hermitian_part(y));
    auto branch = [&](int id, const std::vector<double>& low, const std::vector<double>& up) {
        SandwichMargins m;
        m.window_ok = true;
        m.branch = id;
        m.below = lo - low.back();
        m.above = up.front() - hi;
        m.floor = low.front();
        m.pass = m.below >= 0 && m.above >= 0 && m.floor > 0;
        return m;
    };
    const SandwichMargins a = branch(1, ex, ey), b = branch(2, ey, ex);
    if (a.pass) return a;
    if (b.pass) return b;
    SandwichMargins fail = std::min(a.below, a.above) >= std::min(b.below, b.above) ? a : b;
    fail.branch = 0;
    return fail;
}

SandwichMargins check_sandwich(const InequalityCase& c, double lo, double hi) {
    const ComplexMatrix ba = c.op("B") * c.op("A");
    const ComplexMatrix dc = c.op("D") * c.op("C");
    return sandwich_margins(adjoint_times(ba, ba), dc * dc.adjoint(), lo, hi);
}

namespace {

ComplexMatrix with_singular_values(const std::vector<double>& s, std::size_t n, Rng& g) {
    const ComplexMatrix u = haar_unitary(n, g), v = haar_unitary(n, g);
    return u * ComplexMatrix::diagonal(s) * v.adjoint();
}

// (L, R) with L·R = target and L well conditioned
std::pair<ComplexMatrix, ComplexMatrix> split(const ComplexMatrix& target, Rng& g) {
    const std::size_t n = target.dim();
    std::vector<double> d(n), di(n);
    for (std::size_t i = 0; i < n; ++i) {
        d[i] = g.uniform(0.5, 2);
        di[i] = 1 / d[i];
    }
    const ComplexMatrix w1 = haar_unitary(n, g), w2 = haar_unitary(n, g);
    ComplexMatrix left = w1 * ComplexMatrix::diagonal(d) * w2;
    ComplexMatrix right = w2.adjoint() * ComplexMatrix::diagonal(di) * w1.adjoint() * target;
    return {left, right};
}

}  // namespace

InequalityCase make_sandwich_case(std::size_t dim, double delta, double Delta, Rng& g) {
    if (!(delta > 0 && delta < Delta)) throw Error(Errc::BadWindow, "need 0 < δ < Δ, got δ = " + kit::num(delta) + ", Δ = " + kit::num(Delta));
    if (dim == 0) throw Error(Errc::BadParameters, "dimension must be positive");
    constexpr double margin = 1e-3;
    const double top = std::sqrt(delta) * (1 - margin), bottom = std::sqrt(Delta) * (1 + margin);
    std::vector<double> s(dim), t(dim);
    for (auto& x : s) x = top * g.uniform(0.3, 1);
    for (auto& x : t) x = bottom * g.uniform(1, 2);
    InequalityCase c;
    auto [b, a] = split(with_singular_values(s, dim, g), g);
    auto [d, cc] = split(with_singular_values(t, dim, g), g);
    c.ops["A"] = a;
    c.ops["B"] = b;
    c.ops["C"] = cc;
    c.ops["D"] = d;
    c.params.delta = delta;
    c.params.Delta = Delta;
    return c;
}

InequalityCase swap_sandwich_roles(const InequalityCase& c) {
    InequalityCase s = c;
    s.ops["A"] = c.op("D").adjoint();
    s.ops["B"] = c.op("C").adjoint();
    s.ops["C"] = c.op("B").adjoint();
    s.ops["D"] = c.op("A").adjoint();
    return s;
}

std::vector<TightnessEntry> compare_tightness(const InequalityCase& c, const std::vector<std::string>& ids,
                                              const EvalOptions& opts) {
    EvalOptions strict = opts;
    strict.throw_on_precondition = true;
    std::vector<TightnessEntry> out;
    for (const auto& id : ids) {
        const CheckResult r = evaluate_bound(id, c, strict);
        if (!(r.rhs_net > 0)) continue;
        out.push_back({id, r.lhs, r.rhs_net, r.lhs / r.rhs_net});
    }
    std::stable_sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.ratio > b.ratio; });
    return out;
}

}  // namespace rg
