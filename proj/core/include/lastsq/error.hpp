#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace lastsq {

enum class ErrorCode {
    EmptyBoard,
    FirstCellNotBlack,
    LastCellBlack,
    ParseError,
    SizeLimitExceeded,
    RangeError,
    InvalidFilter,
    NonIntegralResult,
    NotPlusClass,
    OutsideDomain,
    ParityMismatch,
    InternalInvariantViolation,
};

std::string_view to_string(ErrorCode code) noexcept;

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message);

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

/// Raised by the text decoders; `offset()` is the byte position of the first
/// character that does not fit the grammar.
class ParseError : public Error {
public:
    ParseError(std::size_t offset, const std::string& message);

    std::size_t offset() const noexcept { return offset_; }

private:
    std::size_t offset_;
};

[[noreturn]] void throw_invariant(const std::string& what);

} // namespace lastsq
