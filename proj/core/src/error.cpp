#include "lastsq/error.hpp"

namespace lastsq {

std::string_view to_string(ErrorCode code) noexcept {
    switch (code) {
    case ErrorCode::EmptyBoard: return "EmptyBoard";
    case ErrorCode::FirstCellNotBlack: return "FirstCellNotBlack";
    case ErrorCode::LastCellBlack: return "LastCellBlack";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::SizeLimitExceeded: return "SizeLimitExceeded";
    case ErrorCode::RangeError: return "RangeError";
    case ErrorCode::InvalidFilter: return "InvalidFilter";
    case ErrorCode::NonIntegralResult: return "NonIntegralResult";
    case ErrorCode::NotPlusClass: return "NotPlusClass";
    case ErrorCode::OutsideDomain: return "OutsideDomain";
    case ErrorCode::ParityMismatch: return "ParityMismatch";
    case ErrorCode::InternalInvariantViolation: return "InternalInvariantViolation";
    }
    return "Unknown";
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

ParseError::ParseError(std::size_t offset, const std::string& message)
    : Error(ErrorCode::ParseError, message + " at byte " + std::to_string(offset)), offset_(offset) {}

void throw_invariant(const std::string& what) {
    throw Error(ErrorCode::InternalInvariantViolation, what);
}

} // namespace lastsq
