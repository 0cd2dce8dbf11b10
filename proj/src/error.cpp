#include "cliqueowf/error.hpp"

namespace cliqueowf {

std::string_view to_string(ErrorCode code) noexcept {
    switch (code) {
        case ErrorCode::NotPowerOfTwo: return "NotPowerOfTwo";
        case ErrorCode::TooSmall: return "TooSmall";
        case ErrorCode::TooLarge: return "TooLarge";
        case ErrorCode::StringTooShort: return "StringTooShort";
        case ErrorCode::OutOfRange: return "OutOfRange";
        case ErrorCode::NotStrictlyOrdered: return "NotStrictlyOrdered";
        case ErrorCode::NotEnoughTriples: return "NotEnoughTriples";
        case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
        case ErrorCode::LengthMismatch: return "LengthMismatch";
        case ErrorCode::MalformedSolution: return "MalformedSolution";
        case ErrorCode::UnqueryableVariant: return "UnqueryableVariant";
        case ErrorCode::GuardExceeded: return "GuardExceeded";
        case ErrorCode::DomainError: return "DomainError";
        case ErrorCode::ParseError: return "ParseError";
        case ErrorCode::InvalidArgument: return "InvalidArgument";
    }
    return "Unknown";
}

}  // namespace cliqueowf
