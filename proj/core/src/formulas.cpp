#include "lastsq/formulas.hpp"

#include "lastsq/error.hpp"
#include "lastsq/series.hpp"

#include <mutex>
#include <shared_mutex>
#include <string>

namespace lastsq {

namespace {

// Pascal rows are built once and shared; beyond kMaxCachedRow the
// multiplicative formula is used instead.
constexpr long long kMaxCachedRow = 640;

class PascalCache {
public:
    BigInt get(long long a, long long b) {
        {
            std::shared_lock lock(mutex_);
            if (a < static_cast<long long>(rows_.size())) return rows_[a][b];
        }
        std::unique_lock lock(mutex_);
        while (static_cast<long long>(rows_.size()) <= a) {
            const std::size_t k = rows_.size();
            std::vector<BigInt> row(k + 1);
            row[0] = 1;
            row[k] = 1;
            for (std::size_t j = 1; j < k; ++j) row[j] = rows_[k - 1][j - 1] + rows_[k - 1][j];
            rows_.push_back(std::move(row));
        }
        return rows_[a][b];
    }

private:
    std::shared_mutex mutex_;
    std::vector<std::vector<BigInt>> rows_;
};

PascalCache& pascal() {
    static PascalCache cache;
    return cache;
}

void require_nr(long long n, long long r, const char* name) {
    if (n < 1 || r < 0 || r >= n) {
        throw Error(ErrorCode::RangeError, std::string(name) + " needs n >= 1 and 0 <= r <= n-1, got n=" +
                                               std::to_string(n) + " r=" + std::to_string(r));
    }
}

} // namespace

BigInt binom(long long a, long long b) {
    if (b < 0) return 0;
    if (b == 0) return 1;
    if (a < 0 || a < b) return 0;
    if (b > a - b) b = a - b;
    if (a <= kMaxCachedRow) return pascal().get(a, b);
    BigInt value = 1;
    for (long long i = 1; i <= b; ++i) {
        value *= a - b + i;
        value /= i;
    }
    return value;
}

BigCount eval_S(long long m, long long r) {
    if (m < 1 || r < 0) {
        throw Error(ErrorCode::RangeError, "S needs m >= 1 and r >= 0, got m=" + std::to_string(m) +
                                               " r=" + std::to_string(r));
    }
    BigCount sum = 0;
    for (long long i = r + 1; i <= m / 2; ++i) sum += binom(m, 2 * i) * binom(i - 1, r);
    return sum;
}

BigCount eval_T(long long n, long long r) {
    require_nr(n, r, "T");
    BigCount sum = 0;
    for (long long j = r + 1; j <= n; ++j) sum += binom(n, j) * binom(j - 1, r);
    return sum;
}

BigCount eval_U(long long n, long long r) {
    require_nr(n, r, "U");
    BigCount sum = 0;
    for (long long j = r + 1; j <= n; ++j) sum += binom(j - 1, r) * pow2(j - 1 - r);
    return sum;
}

BigCount eval_V(long long n, long long r) {
    require_nr(n, r, "V");
    if (r == 0) return pow2(n) - 1;
    BigCount sum = 0;
    for (long long j = 1; j <= n - r; ++j) sum += binom(n - 1 - j, r - 1) * pow2(n - r - j) * (pow2(j) - 1);
    return sum;
}

BigCount eval_W(long long n, long long r) {
    require_nr(n, r, "W");
    BigInt inner = 0;
    for (long long k = 0; k <= r / 2; ++k) inner += binom(n - 2 - 2 * k, r - 2 * k);
    return pow2(n - r) * inner + sign_power(r + 1);
}

IdentityPair moriarty(long long m, long long r) {
    if (m < 1 || r < 0 || r > m / 2 || m <= r) {
        throw Error(ErrorCode::RangeError, "moriarty needs m >= 1, 0 <= r <= floor(m/2), m > r, got m=" +
                                               std::to_string(m) + " r=" + std::to_string(r));
    }
    IdentityPair out;
    for (long long i = r; i <= m / 2; ++i) out.lhs += binom(m, 2 * i) * binom(i, r);

    const long long e = m - 1 - 2 * r;
    Rational power = e >= 0 ? Rational(pow2(e)) : Rational(BigInt(1), pow2(-e));
    Rational rhs = power * Rational(binom(m - r, r)) * Rational(BigInt(m), BigInt(m - r));
    if (boost::multiprecision::denominator(rhs) != 1) {
        throw Error(ErrorCode::NonIntegralResult,
                    "moriarty right-hand side is " + rhs.str() + " at m=" + std::to_string(m) + " r=" + std::to_string(r));
    }
    out.rhs = boost::multiprecision::numerator(rhs);
    return out;
}

IdentityPair companion_identity(long long n, long long r) {
    if (r < 0 || r > n) {
        throw Error(ErrorCode::RangeError, "companion identity needs 0 <= r <= n, got n=" + std::to_string(n) +
                                               " r=" + std::to_string(r));
    }
    IdentityPair out;
    for (long long j = r; j <= n; ++j) out.lhs += binom(n, j) * binom(j, r);
    out.rhs = pow2(n - r) * binom(n, r);
    return out;
}

std::vector<BigCount> gf_coefficients(long long r, long long m_max) {
    if (r < 0 || m_max < 2 * r + 2) {
        throw Error(ErrorCode::RangeError, "gf_coefficients needs r >= 0 and m_max >= 2r+2, got r=" +
                                               std::to_string(r) + " m_max=" + std::to_string(m_max));
    }
    const auto t = static_cast<std::size_t>(m_max);
    // 1/(1-2x)^{r+1} = sum_j C(j+r,r) 2^j x^j
    std::vector<BigInt> inv_power(t + 1);
    for (std::size_t j = 0; j <= t; ++j) {
        inv_power[j] = binom(static_cast<long long>(j) + r, r) * pow2(static_cast<long long>(j));
    }
    const Series product = Series::geometric(1, t) * Series(std::move(inv_power));
    return product.shifted(static_cast<std::size_t>(2 * r + 2)).coefficients();
}

RecurrenceTerms recurrence_terms(long long n) {
    if (n < 1) throw Error(ErrorCode::RangeError, "recurrence needs n >= 1");
    RecurrenceTerms out;
    for (int i = 0; i < 3; ++i) out.f[i] = eval_T(2 * (n + i), n + i);
    out.terms[0] = BigInt(24 * n * n + 44 * n + 16) * out.f[0];
    out.terms[1] = BigInt(21 * n * n + 37 * n + 14) * out.f[1];
    out.terms[2] = -BigInt(3 * n * n + 7 * n + 2) * out.f[2];
    return out;
}

BigInt recurrence_residual(long long n) { return recurrence_terms(n).residual(); }

ParityCheck oddness_and_divisibility(long long m, long long r) {
    if (r < 0 || 2 * r + 2 > m) {
        throw Error(ErrorCode::RangeError, "parity check needs 0 <= r <= m/2 - 1, got m=" + std::to_string(m) +
                                               " r=" + std::to_string(r));
    }
    const BigCount s = eval_S(m, r);
    ParityCheck out;
    out.is_odd = (s & 1) == 1;
    const BigInt shifted = s + sign_power(r);
    out.divisibility_ok = (shifted % pow2(m - 1 - 2 * r)) == 0;
    return out;
}

} // namespace lastsq
