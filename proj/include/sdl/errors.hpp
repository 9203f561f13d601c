#pragma once

#include <stdexcept>
#include <string>

namespace sdl {

enum class ErrorCode {
    NonReflexiveInput,
    NotAPartialOrder,
    NotALattice,
    NotSemidistributive,
    NotClosed,
    ElementNotInSet,
    NotAForcingUpset,
    NotComparable,
    NotAnInterval,
    NoArrow,
    SizeLimitExceeded,
    InvalidSystem,
    KindMismatch,
    InvalidInput,
    InternalInconsistency,
};

inline const char* error_code_name(ErrorCode c) {
    switch (c) {
        case ErrorCode::NonReflexiveInput: return "NonReflexiveInput";
        case ErrorCode::NotAPartialOrder: return "NotAPartialOrder";
        case ErrorCode::NotALattice: return "NotALattice";
        case ErrorCode::NotSemidistributive: return "NotSemidistributive";
        case ErrorCode::NotClosed: return "NotClosed";
        case ErrorCode::ElementNotInSet: return "ElementNotInSet";
        case ErrorCode::NotAForcingUpset: return "NotAForcingUpset";
        case ErrorCode::NotComparable: return "NotComparable";
        case ErrorCode::NotAnInterval: return "NotAnInterval";
        case ErrorCode::NoArrow: return "NoArrow";
        case ErrorCode::SizeLimitExceeded: return "SizeLimitExceeded";
        case ErrorCode::InvalidSystem: return "InvalidSystem";
        case ErrorCode::KindMismatch: return "KindMismatch";
        case ErrorCode::InvalidInput: return "InvalidInput";
        case ErrorCode::InternalInconsistency: return "InternalInconsistency";
    }
    return "Unknown";
}

class DomainError : public std::runtime_error {
public:
    DomainError(ErrorCode code, const std::string& msg)
        : std::runtime_error(std::string(error_code_name(code)) + ": " + msg), code_(code) {}
    ErrorCode code() const { return code_; }

private:
    ErrorCode code_;
};

} // namespace sdl
