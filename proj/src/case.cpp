#include "radgauge/case.hpp"

#include <cmath>

#include "radgauge/error.hpp"

namespace rg {

double CaseParams::h_prime() const {
    if (!m_lo || !M_hi) throw Error(Errc::BadParameters, "h′ needs both m′ and M′");
    if (!(*m_lo > 0)) throw Error(Errc::BadParameters, "m′ must be positive");
    return *M_hi / *m_lo;
}

std::size_t InequalityCase::dim() const {
    if (!ops.empty()) return ops.begin()->second.dim();
    for (const auto& [name, fam] : families)
        if (!fam.empty()) return fam.front().dim();
    if (!vectors.empty()) return vectors.begin()->second.size();
    return 0;
}

const ComplexMatrix& InequalityCase::op(const std::string& name) const {
    auto it = ops.find(name);
    if (it == ops.end()) throw Error(Errc::BadParameters, "case has no operator '" + name + "'");
    return it->second;
}

const std::vector<ComplexMatrix>& InequalityCase::family(const std::string& name) const {
    auto it = families.find(name);
    if (it == families.end()) throw Error(Errc::BadParameters, "case has no operator family '" + name + "'");
    return it->second;
}

const CVector& InequalityCase::vec(const std::string& name) const {
    auto it = vectors.find(name);
    if (it == vectors.end()) throw Error(Errc::BadParameters, "case has no vector '" + name + "'");
    return it->second;
}

void require_conjugate(double p, double q) {
    if (!(p > 1 && q > 1) || std::abs(1 / p + 1 / q - 1) > 1e-12)
        throw Error(Errc::NotConjugate, "1/p + 1/q = " + std::to_string(1 / p + 1 / q));
}

void InequalityCase::validate() const {
    const std::size_t n = dim();
    if (n == 0) throw Error(Errc::BadParameters, "case has no operators");
    auto check = [&](const ComplexMatrix& m, const std::string& name) {
        if (m.dim() != n) throw Error(Errc::BadParameters, "operator '" + name + "' has the wrong dimension");
        if (!m.is_finite()) throw Error(Errc::NotFinite, "operator '" + name + "' has non-finite entries");
    };
    for (const auto& [name, m] : ops) check(m, name);
    for (const auto& [name, fam] : families) {
        if (int(fam.size()) != params.n_ops)
            throw Error(Errc::BadParameters, "family '" + name + "' length differs from n_ops");
        for (const auto& m : fam) check(m, name);
    }
    for (const auto& [name, v] : vectors)
        if (v.size() != n) throw Error(Errc::BadParameters, "vector '" + name + "' has the wrong dimension");
    require_conjugate(params.p, params.q);
}

}  // namespace rg
