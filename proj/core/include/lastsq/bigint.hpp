#pragma once

#include "lastsq/error.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace lastsq {

/// Signed exact integer. Intermediate values (e.g. the (-1)^{r+1} correction)
/// may be negative; anything used as a cardinality is non-negative.
using BigInt = boost::multiprecision::cpp_int;
using BigCount = BigInt;
using Rational = boost::multiprecision::cpp_rational;

inline BigInt pow2(long long exponent) {
    if (exponent < 0) {
        throw Error(ErrorCode::RangeError, "negative power of two: " + std::to_string(exponent));
    }
    BigInt value = 1;
    value <<= static_cast<unsigned>(exponent);
    return value;
}

/// (-1)^e as an exact integer.
inline BigInt sign_power(long long exponent) { return (exponent % 2 == 0) ? BigInt(1) : BigInt(-1); }

inline std::string to_decimal(const BigInt& value) { return value.str(); }

} // namespace lastsq
