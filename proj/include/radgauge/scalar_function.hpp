#pragma once

#include <string>
#include <vector>

namespace rg {

// Scalar function applied through the functional calculus.
// Built-in kinds carry derived flags; tables carry whatever the caller asserts.
class ScalarFunction {
public:
    enum class Kind { Power, AffinePower, Table };

    struct Flags {
        bool nonnegative = false;
        bool increasing = false;
        bool convex = false;
        bool superquadratic = false;
        bool zero_at_zero = false;

        friend bool operator==(const Flags&, const Flags&) = default;
    };

    // identity t ↦ t
    ScalarFunction() = default;

    static ScalarFunction power(double r);
    // a·t^r + b, a ≥ 0
    static ScalarFunction affine_power(double a, double r, double b);
    // piecewise linear through (t_i, f_i), t strictly increasing
    static ScalarFunction table(std::vector<double> t, std::vector<double> f, Flags asserted);

    double operator()(double t) const;
    double derivative(double t) const;

    Kind kind() const { return kind_; }
    double exponent() const { return r_; }
    double coefficient() const { return a_; }
    double offset() const { return b_; }
    const Flags& flags() const { return flags_; }
    const std::vector<double>& nodes() const { return t_; }
    const std::vector<double>& values() const { return f_; }

    bool is_power() const { return kind_ == Kind::Power; }
    // defined at t = 0
    bool defined_at_zero() const;
    std::string describe() const;

    friend bool operator==(const ScalarFunction&, const ScalarFunction&) = default;

private:
    Kind kind_ = Kind::Power;
    double r_ = 1, a_ = 1, b_ = 0;
    std::vector<double> t_, f_;
    Flags flags_{true, true, true, false, true};
};

}  // namespace rg
