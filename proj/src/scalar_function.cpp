#include "radgauge/scalar_function.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "radgauge/error.hpp"

namespace rg {

ScalarFunction ScalarFunction::power(double r) {
    if (!std::isfinite(r)) throw Error(Errc::BadParameters, "non-finite exponent");
    ScalarFunction f;
    f.kind_ = Kind::Power;
    f.r_ = r;
    f.a_ = 1;
    f.b_ = 0;
    f.flags_ = {};
    f.flags_.nonnegative = true;
    f.flags_.increasing = r > 0;
    f.flags_.convex = r >= 1 || r <= 0;
    f.flags_.superquadratic = r >= 2;
    f.flags_.zero_at_zero = r > 0;
    return f;
}

ScalarFunction ScalarFunction::affine_power(double a, double r, double b) {
    if (!(a >= 0) || !std::isfinite(a) || !std::isfinite(r) || !std::isfinite(b))
        throw Error(Errc::BadParameters, "affine power needs finite a >= 0");
    ScalarFunction f = power(r);
    f.kind_ = Kind::AffinePower;
    f.a_ = a;
    f.b_ = b;
    f.flags_.nonnegative = b >= 0;
    f.flags_.increasing = a > 0 && r > 0;
    f.flags_.convex = a == 0 || r >= 1 || r <= 0;
    f.flags_.zero_at_zero = b == 0 && (r > 0 || a == 0);
    f.flags_.superquadratic = b == 0 && (r >= 2 || a == 0);
    return f;
}

ScalarFunction ScalarFunction::table(std::vector<double> t, std::vector<double> v, Flags asserted) {
    if (t.size() < 2 || t.size() != v.size())
        throw Error(Errc::BadParameters, "table needs at least two matching nodes");
    for (std::size_t i = 0; i < t.size(); ++i) {
        if (!std::isfinite(t[i]) || !std::isfinite(v[i])) throw Error(Errc::BadParameters, "non-finite table entry");
        if (i && !(t[i] > t[i - 1])) throw Error(Errc::BadParameters, "table nodes must increase strictly");
    }
    ScalarFunction f;
    f.kind_ = Kind::Table;
    f.r_ = 0;
    f.a_ = 0;
    f.b_ = 0;
    f.t_ = std::move(t);
    f.f_ = std::move(v);
    f.flags_ = asserted;
    return f;
}

bool ScalarFunction::defined_at_zero() const {
    switch (kind_) {
        case Kind::Power:
        case Kind::AffinePower: return r_ >= 0 || a_ == 0;
        case Kind::Table: return t_.front() <= 0 && t_.back() >= 0;
    }
    return false;
}

double ScalarFunction::operator()(double t) const {
    switch (kind_) {
        case Kind::Power:
        case Kind::AffinePower: {
            if (t < 0) throw Error(Errc::DomainError, "negative argument " + std::to_string(t));
            if (t == 0 && r_ < 0 && a_ != 0) throw Error(Errc::DomainError, "t^r with r < 0 at t = 0");
            double p = (r_ == 0) ? 1.0 : std::pow(t, r_);
            return a_ * p + b_;
        }
        case Kind::Table: {
            if (t < t_.front() || t > t_.back())
                throw Error(Errc::DomainError, "argument " + std::to_string(t) + " outside table range");
            auto it = std::upper_bound(t_.begin(), t_.end(), t);
            std::size_t k = (it == t_.end()) ? t_.size() - 1 : std::size_t(it - t_.begin());
            if (k == 0) k = 1;
            double w = (t - t_[k - 1]) / (t_[k] - t_[k - 1]);
            return f_[k - 1] + w * (f_[k] - f_[k - 1]);
        }
    }
    return 0;
}

double ScalarFunction::derivative(double t) const {
    switch (kind_) {
        case Kind::Power:
        case Kind::AffinePower: {
            if (t < 0) throw Error(Errc::DomainError, "negative argument");
            if (r_ == 0 || a_ == 0) return 0;
            if (r_ == 1) return a_;
            if (t == 0) {
                if (r_ > 1) return 0;
                throw Error(Errc::DomainError, "derivative of t^r, r < 1, at t = 0");
            }
            return a_ * r_ * std::pow(t, r_ - 1);
        }
        case Kind::Table: {
            if (t < t_.front() || t > t_.back()) throw Error(Errc::DomainError, "argument outside table range");
            auto it = std::upper_bound(t_.begin(), t_.end(), t);
            std::size_t k = (it == t_.end()) ? t_.size() - 1 : std::size_t(it - t_.begin());
            if (k == 0) k = 1;
            return (f_[k] - f_[k - 1]) / (t_[k] - t_[k - 1]);
        }
    }
    return 0;
}

std::string ScalarFunction::describe() const {
    std::ostringstream os;
    os.precision(17);
    switch (kind_) {
        case Kind::Power: os << "t^" << r_; break;
        case Kind::AffinePower: os << a_ << "*t^" << r_ << "+" << b_; break;
        case Kind::Table: os << "table(" << t_.size() << " nodes)"; break;
    }
    return os.str();
}

}  // namespace rg
