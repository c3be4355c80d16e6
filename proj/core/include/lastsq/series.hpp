#pragma once

#include "lastsq/bigint.hpp"

#include <cstddef>
#include <vector>

namespace lastsq {

/// Truncated formal power series with exact integer coefficients. A series
/// knows its coefficients for x^0 .. x^truncation(); products and shifts
/// never report terms beyond the smaller truncation of their operands.
class Series {
public:
    /// The zero series, known up to x^truncation.
    explicit Series(std::size_t truncation);
    /// Coefficients for x^0 .. x^(size-1); size must be at least 1.
    explicit Series(std::vector<BigInt> coefficients);

    /// 1 / (1 - ratio x)
    static Series geometric(const BigInt& ratio, std::size_t truncation);

    std::size_t truncation() const noexcept { return coefficients_.size() - 1; }
    const BigInt& operator[](std::size_t power) const { return coefficients_.at(power); }
    const std::vector<BigInt>& coefficients() const noexcept { return coefficients_; }

    /// Multiply by x^k, keeping the truncation degree.
    Series shifted(std::size_t k) const;

    friend Series operator*(const Series& a, const Series& b);
    friend Series operator+(const Series& a, const Series& b);
    friend bool operator==(const Series&, const Series&) = default;

private:
    std::vector<BigInt> coefficients_;
};

} // namespace lastsq
