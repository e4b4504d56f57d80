#pragma once

// Shared pieces of the bound registry.

#include <cmath>
#include <optional>
#include <string>
#include <vector>

#include "radgauge/catalog.hpp"
#include "radgauge/ensembles.hpp"
#include "radgauge/linalg.hpp"
#include "radgauge/numrange.hpp"
#include "radgauge/operators.hpp"

namespace rg::kit {

// left-hand sides use the attained value, right-hand sides the certified upper end
inline double w_lo(const ComplexMatrix& m) { return numerical_radius(m).lo; }
inline double w_hi(const ComplexMatrix& m) { return numerical_radius(m).hi; }
inline double nrm(const ComplexMatrix& m) { return operator_norm(m); }
// |M|^e and |M*|^e
inline ComplexMatrix ap(const ComplexMatrix& m, double e) { return abs_power(m, e); }
inline ComplexMatrix aps(const ComplexMatrix& m, double e) { return abs_power(m.adjoint(), e); }
inline ComplexMatrix pw(const ComplexMatrix& p, double e) { return psd_power(p, e); }
inline ComplexMatrix fn(const ComplexMatrix& p, const ScalarFunction& f) { return matrix_function(p, f); }
inline ComplexMatrix eye(std::size_t n) { return ComplexMatrix::identity(n); }
inline ComplexMatrix scaled(double s, const ComplexMatrix& m) { return cplx(s) * m; }

// λ_max(Y^{-1/2} X Y^{-1/2}); ≤ 1 iff X ≤ Y
double loewner_ratio(const ComplexMatrix& x, const ComplexMatrix& y);

bool is_psd(const ComplexMatrix& p);
bool is_pd(const ComplexMatrix& p);
bool is_unit(const CVector& v);
bool is_normal(const ComplexMatrix& a);
bool commute(const ComplexMatrix& a, const ComplexMatrix& b);
// ψ(t)φ(t) = t on a few probe points
bool multiplies_to_identity(const ScalarFunction& psi, const ScalarFunction& phi);
bool convex_increasing(const ScalarFunction& f);

std::string num(double x);

class Pre {
public:
    Pre& need(bool ok, const std::string& what) {
        if (!ok) fails_.push_back(what);
        return *this;
    }
    std::optional<std::string> done() const;

private:
    std::vector<std::string> fails_;
};

// joins two precondition outcomes
inline std::optional<std::string> both(std::optional<std::string> a, std::optional<std::string> b) {
    if (a && b) return *a + "; " + *b;
    return a ? a : b;
}

// n_ops operators and the sum Σ_i X_i A_i^m B_i
ComplexMatrix sum_xamb(const std::vector<ComplexMatrix>& x, const std::vector<ComplexMatrix>& a,
                       const std::vector<ComplexMatrix>& b, int m);

// sampling
ComplexMatrix op(std::size_t n, Rng& g);  // unit Ginibre times a factor in [0.5, 1.5]
void fill_family(InequalityCase& c, const std::string& name, std::size_t n, Rng& g);
void conjugate_pair(CaseParams& p, Rng& g);
ScalarFunction convex_power(Rng& g, double hi = 3);
void power_pair(InequalityCase& c, Rng& g);

// registry sections
void add_norm_bounds(std::vector<Bound>& out);
void add_lemma_bounds(std::vector<Bound>& out);
void add_product_bounds(std::vector<Bound>& out);
void add_sum_bounds(std::vector<Bound>& out);

}  // namespace rg::kit
