#pragma once

#include <stdexcept>
#include <string>

namespace latpoly {

enum class ErrorKind {
    Parse,
    InvalidArgument,
    PrecisionExhausted,
    PoleCollision,
    NotConverged,
    DenominatorZero,
    RationalAlpha,
    NotCoprime,
    NotPairwiseCoprime,
    DegenerateSimplex,
    InsufficientData,
    InterpolationInconsistent,
    Internal,
};

struct Error : std::runtime_error {
    ErrorKind kind;
    Error(ErrorKind k, const std::string& msg) : std::runtime_error(msg), kind(k) {}
};

[[noreturn]] inline void raise(ErrorKind k, const std::string& msg) { throw Error(k, msg); }

inline const char* error_kind_name(ErrorKind k) {
    switch (k) {
        case ErrorKind::Parse: return "Parse";
        case ErrorKind::InvalidArgument: return "InvalidArgument";
        case ErrorKind::PrecisionExhausted: return "PrecisionExhausted";
        case ErrorKind::PoleCollision: return "PoleCollision";
        case ErrorKind::NotConverged: return "NotConverged";
        case ErrorKind::DenominatorZero: return "DenominatorZero";
        case ErrorKind::RationalAlpha: return "RationalAlpha";
        case ErrorKind::NotCoprime: return "NotCoprime";
        case ErrorKind::NotPairwiseCoprime: return "NotPairwiseCoprime";
        case ErrorKind::DegenerateSimplex: return "DegenerateSimplex";
        case ErrorKind::InsufficientData: return "InsufficientData";
        case ErrorKind::InterpolationInconsistent: return "InterpolationInconsistent";
        case ErrorKind::Internal: return "Internal";
    }
    return "Unknown";
}

} // namespace latpoly
