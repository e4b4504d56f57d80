#include "radgauge/ensembles.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <cstdlib>

#include "radgauge/catalog.hpp"
#include "radgauge/error.hpp"
#include "radgauge/linalg.hpp"

namespace rg {

namespace {

struct Named {
    EnsembleKind kind;
    const char* name;
};

constexpr Named kNames[] = {
    {EnsembleKind::Ginibre, "ginibre"},     {EnsembleKind::Hermitian, "hermitian"},
    {EnsembleKind::Psd, "psd"},             {EnsembleKind::Unitary, "unitary"},
    {EnsembleKind::Normal, "normal"},       {EnsembleKind::Nilpotent, "nilpotent"},
    {EnsembleKind::Sandwich, "sandwich"},   {EnsembleKind::CommutingPair, "commuting-pair"},
    {EnsembleKind::NormalPair, "normal-pair"},
};

ComplexMatrix unit_norm(ComplexMatrix m) {
    const double s = operator_norm(m);
    return s > 0 ? (1 / s) * m : m;
}

ComplexMatrix polynomial(const ComplexMatrix& m, Rng& g) {
    const std::size_t n = m.dim();
    const ComplexMatrix m2 = m * m;
    ComplexMatrix p = ComplexMatrix::scalar(n, g.complex_normal());
    p += g.complex_normal() * m;
    p += g.complex_normal() * m2;
    return p;
}

}  // namespace

std::string ensemble_name(EnsembleKind k) {
    for (const auto& e : kNames)
        if (e.kind == k) return e.name;
    return "?";
}

std::string ensemble_name(const EnsembleSpec& s) {
    if (s.kind != EnsembleKind::Sandwich) return ensemble_name(s.kind);
    // shortest text that reads back to the same doubles
    auto text = [](double x) {
        char buf[32];
        return std::string(buf, std::to_chars(buf, buf + sizeof buf, x).ptr);
    };
    return "sandwich(" + text(s.delta) + "," + text(s.Delta) + ")";
}

EnsembleSpec parse_ensemble(const std::string& text) {
    EnsembleSpec s;
    if (text.rfind("sandwich", 0) == 0) {
        s.kind = EnsembleKind::Sandwich;
        const std::string rest = text.substr(8);
        if (rest.empty()) return s;
        char* end = nullptr;
        if (rest.front() != '(' || rest.back() != ')') throw Error(Errc::BadKind, "malformed '" + text + "'");
        const char* p = rest.c_str() + 1;
        s.delta = std::strtod(p, &end);
        if (end == p || *end != ',') throw Error(Errc::BadKind, "malformed '" + text + "'");
        p = end + 1;
        s.Delta = std::strtod(p, &end);
        if (end == p || *end != ')') throw Error(Errc::BadKind, "malformed '" + text + "'");
        if (!(s.delta > 0 && s.delta < s.Delta)) throw Error(Errc::BadWindow, "need 0 < δ < Δ in '" + text + "'");
        return s;
    }
    for (const auto& e : kNames)
        if (text == e.name) {
            s.kind = e.kind;
            return s;
        }
    throw Error(Errc::BadKind, "unknown generator '" + text + "'");
}

ComplexMatrix ginibre(std::size_t n, Rng& g) {
    ComplexMatrix m(n);
    const double s = std::sqrt(0.5);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m(i, j) = s * g.complex_normal();
    return m;
}

ComplexMatrix unit_ginibre(std::size_t n, Rng& g) { return unit_norm(ginibre(n, g)); }

ComplexMatrix haar_unitary(std::size_t n, Rng& g) {
    ComplexMatrix z = ginibre(n, g);
    std::vector<CVector> q;
    for (std::size_t j = 0; j < n; ++j) {
        CVector v = z.column(j);
        // two Gram–Schmidt passes keep ‖Q*Q − I‖ at rounding level
        for (int pass = 0; pass < 2; ++pass)
            for (const auto& u : q) {
                const cplx c = inner(v, u);
                for (std::size_t i = 0; i < n; ++i) v[i] -= c * u[i];
            }
        q.push_back(normalized(std::move(v)));
    }
    ComplexMatrix u(n);
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t i = 0; i < n; ++i) u(i, j) = q[j][i];
    return u;
}

ComplexMatrix random_hermitian(std::size_t n, Rng& g) {
    const ComplexMatrix z = ginibre(n, g);
    return unit_norm(hermitian_part(z));
}

ComplexMatrix random_psd(std::size_t n, Rng& g, double lo, double hi) {
    std::vector<double> d(n);
    for (auto& x : d) x = g.uniform(lo, hi);
    return hermitian_part(reconstruct(haar_unitary(n, g), d));
}

ComplexMatrix random_normal(std::size_t n, Rng& g) {
    const ComplexMatrix u = haar_unitary(n, g);
    ComplexMatrix d(n);
    for (std::size_t i = 0; i < n; ++i) d(i, i) = g.complex_normal();
    return unit_norm(u * d * u.adjoint());
}

ComplexMatrix random_nilpotent(std::size_t n, Rng& g) {
    ComplexMatrix m(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) m(i, j) = g.complex_normal();
    return unit_norm(m);
}

CVector random_vector(std::size_t n, Rng& g) {
    CVector v(n);
    for (auto& x : v) x = g.complex_normal();
    return v;
}

CVector random_unit_vector(std::size_t n, Rng& g) { return normalized(random_vector(n, g)); }

ComplexMatrix draw_matrix(EnsembleKind k, std::size_t n, Rng& g) {
    switch (k) {
        case EnsembleKind::Ginibre: return unit_ginibre(n, g);
        case EnsembleKind::Hermitian: return random_hermitian(n, g);
        case EnsembleKind::Psd: return random_psd(n, g);
        case EnsembleKind::Unitary: return haar_unitary(n, g);
        case EnsembleKind::Normal: return random_normal(n, g);
        case EnsembleKind::Nilpotent: return random_nilpotent(n, g);
        default: break;
    }
    throw Error(Errc::BadKind, ensemble_name(k) + " does not describe a single operator");
}

InequalityCase generate_case(const EnsembleSpec& spec, std::size_t dim, Rng& g) {
    if (dim == 0) throw Error(Errc::BadParameters, "dimension must be positive");
    InequalityCase c;
    switch (spec.kind) {
        case EnsembleKind::Sandwich: return make_sandwich_case(dim, spec.delta, spec.Delta, g);
        case EnsembleKind::CommutingPair: {
            const ComplexMatrix m = ginibre(dim, g);
            c.ops["A"] = unit_norm(polynomial(m, g));
            c.ops["B"] = unit_norm(polynomial(m, g));
            return c;
        }
        case EnsembleKind::NormalPair:
            c.ops["A"] = random_normal(dim, g);
            c.ops["B"] = random_normal(dim, g);
            return c;
        default: c.ops["A"] = draw_matrix(spec.kind, dim, g); return c;
    }
}

}  // namespace rg
