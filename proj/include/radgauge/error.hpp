#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace rg {

enum class Errc {
    NotHermitian,
    NoConvergence,
    NumericalBreakdown,
    DomainError,
    NotInvertible,
    Undefined,
    NotUnit,
    NotFinite,
    BadParameters,
    NotConjugate,
    BadWindow,
    NotSuperquadratic,
    BadFunction,
    PreconditionFailed,
    BadKind,
    UnknownBound,
    AssertionFailure,
    Io,
};

std::string_view errc_name(Errc c);

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& what)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

    Errc code() const noexcept { return code_; }

private:
    Errc code_;
};

}  // namespace rg
