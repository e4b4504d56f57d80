#include "radgauge/error.hpp"

namespace rg {

std::string_view errc_name(Errc c) {
    switch (c) {
        case Errc::NotHermitian: return "NotHermitian";
        case Errc::NoConvergence: return "NoConvergence";
        case Errc::NumericalBreakdown: return "NumericalBreakdown";
        case Errc::DomainError: return "DomainError";
        case Errc::NotInvertible: return "NotInvertible";
        case Errc::Undefined: return "Undefined";
        case Errc::NotUnit: return "NotUnit";
        case Errc::NotFinite: return "NotFinite";
        case Errc::BadParameters: return "BadParameters";
        case Errc::NotConjugate: return "NotConjugate";
        case Errc::BadWindow: return "BadWindow";
        case Errc::NotSuperquadratic: return "NotSuperquadratic";
        case Errc::BadFunction: return "BadFunction";
        case Errc::PreconditionFailed: return "PreconditionFailed";
        case Errc::BadKind: return "BadKind";
        case Errc::UnknownBound: return "UnknownBound";
        case Errc::AssertionFailure: return "AssertionFailure";
        case Errc::Io: return "Io";
    }
    return "Unknown";
}

}  // namespace rg
