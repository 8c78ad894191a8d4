#pragma once

#include <stdexcept>
#include <string>

namespace lcgauss {

enum class ErrorKind {
    ZeroVector,
    DegeneratePlane,
    DegenerateNormalPlane,
    NotSpacelike,
    DomainError,
    ParseError,
    DegenerateCloud,
    DegenerateFit,
    ArcLengthViolation,
    ConstraintViolation,
    BlowUp,
    InvalidArgument,
};

const char* to_string(ErrorKind kind);

/// Single exception type for the library; `kind()` distinguishes failure modes.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& message)
        : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

    /// True for failures that mean "the geometry does not satisfy a precondition"
    /// as opposed to malformed user input.
    bool is_geometric() const noexcept {
        switch (kind_) {
            case ErrorKind::ZeroVector:
            case ErrorKind::DegeneratePlane:
            case ErrorKind::DegenerateNormalPlane:
            case ErrorKind::NotSpacelike:
            case ErrorKind::DegenerateCloud:
            case ErrorKind::DegenerateFit:
            case ErrorKind::ArcLengthViolation:
            case ErrorKind::BlowUp:
                return true;
            default:
                return false;
        }
    }

private:
    ErrorKind kind_;
};

inline const char* to_string(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::ZeroVector: return "ZeroVector";
        case ErrorKind::DegeneratePlane: return "DegeneratePlane";
        case ErrorKind::DegenerateNormalPlane: return "DegenerateNormalPlane";
        case ErrorKind::NotSpacelike: return "NotSpacelike";
        case ErrorKind::DomainError: return "DomainError";
        case ErrorKind::ParseError: return "ParseError";
        case ErrorKind::DegenerateCloud: return "DegenerateCloud";
        case ErrorKind::DegenerateFit: return "DegenerateFit";
        case ErrorKind::ArcLengthViolation: return "ArcLengthViolation";
        case ErrorKind::ConstraintViolation: return "ConstraintViolation";
        case ErrorKind::BlowUp: return "BlowUp";
        case ErrorKind::InvalidArgument: return "InvalidArgument";
    }
    return "Unknown";
}

}  // namespace lcgauss
