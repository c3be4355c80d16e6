#include "lastsq/series.hpp"

#include "lastsq/error.hpp"

#include <algorithm>

namespace lastsq {

Series::Series(std::size_t truncation) : coefficients_(truncation + 1, BigInt(0)) {}

Series::Series(std::vector<BigInt> coefficients) : coefficients_(std::move(coefficients)) {
    if (coefficients_.empty()) {
        throw Error(ErrorCode::RangeError, "series needs at least the constant coefficient");
    }
}

Series Series::geometric(const BigInt& ratio, std::size_t truncation) {
    std::vector<BigInt> c(truncation + 1);
    BigInt term = 1;
    for (std::size_t j = 0; j <= truncation; ++j) {
        c[j] = term;
        term *= ratio;
    }
    return Series(std::move(c));
}

Series Series::shifted(std::size_t k) const {
    Series out(truncation());
    for (std::size_t j = 0; j + k <= truncation(); ++j) out.coefficients_[j + k] = coefficients_[j];
    return out;
}

Series operator*(const Series& a, const Series& b) {
    const std::size_t t = std::min(a.truncation(), b.truncation());
    Series out(t);
    for (std::size_t i = 0; i <= t; ++i) {
        if (a.coefficients_[i] == 0) continue;
        for (std::size_t j = 0; i + j <= t; ++j) out.coefficients_[i + j] += a.coefficients_[i] * b.coefficients_[j];
    }
    return out;
}

Series operator+(const Series& a, const Series& b) {
    const std::size_t t = std::min(a.truncation(), b.truncation());
    Series out(t);
    for (std::size_t i = 0; i <= t; ++i) out.coefficients_[i] = a.coefficients_[i] + b.coefficients_[i];
    return out;
}

} // namespace lastsq
