#include "exittime/error.hpp"

namespace exittime {

std::string_view to_string(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::InvalidArgument: return "InvalidArgument";
        case ErrorKind::DomainError: return "DomainError";
        case ErrorKind::Divergent: return "Divergent";
        case ErrorKind::ToleranceUnreachable: return "ToleranceUnreachable";
        case ErrorKind::DegenerateMap: return "DegenerateMap";
        case ErrorKind::BasePointOutside: return "BasePointOutside";
        case ErrorKind::UnsupportedParameter: return "UnsupportedParameter";
        case ErrorKind::StartOutsideDomain: return "StartOutsideDomain";
        case ErrorKind::IneligibleDomain: return "IneligibleDomain";
        case ErrorKind::MissingDerivative: return "MissingDerivative";
        case ErrorKind::UnknownDomain: return "UnknownDomain";
    }
    return "Unknown";
}

}  // namespace exittime
