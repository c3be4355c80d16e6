#pragma once

// Exact evaluation of the five binomial sums and the side identities that
// accompany them. No floating point anywhere.
//
//   S(m,r) = sum_{i=r+1}^{floor(m/2)} C(m,2i) C(i-1,r)
//   T(n,r) = sum_{j=r+1}^{n} C(n,j) C(j-1,r)
//   U(n,r) = sum_{j=r+1}^{n} C(j-1,r) 2^{j-1-r}
//   V(n,r) = sum_{j=1}^{n-r} C(n-1-j,r-1) 2^{n-r-j} (2^j - 1)      (r >= 1)
//   W(n,r) = 2^{n-r} sum_{k=0}^{floor(r/2)} C(n-2-2k,r-2k) + (-1)^{r+1}
//
// and S(m,r) = T(m-1-r,r) = U(..) = V(..) = W(..) for 0 <= r <= m/2 - 1.

#include "lastsq/bigint.hpp"

#include <array>
#include <cstddef>
#include <vector>

namespace lastsq {

/// C(a,b) with the conventions: 0 if b < 0; 1 if b = 0 (any a, including
/// negative); 0 if b > 0 and a < b; otherwise the usual value.
BigInt binom(long long a, long long b);

/// Requires m >= 1 and r >= 0; the empty sum is 0.
BigCount eval_S(long long m, long long r);

/// These require n >= 1 and 0 <= r <= n-1 (RangeError otherwise).
BigCount eval_T(long long n, long long r);
BigCount eval_U(long long n, long long r);
/// At r = 0 the summand degenerates (C(.,-1) = 0); V(n,0) is defined as
/// 2^n - 1, the size of B+(n,0).
BigCount eval_V(long long n, long long r);
BigCount eval_W(long long n, long long r);

struct IdentityPair {
    BigInt lhs;
    BigInt rhs;

    bool holds() const { return lhs == rhs; }
};

/// lhs = sum_{i=r}^{floor(m/2)} C(m,2i) C(i,r);
/// rhs = 2^{m-1-2r} C(m-r,r) m/(m-r), evaluated over the rationals.
/// Requires m >= 1, 0 <= r <= floor(m/2), m > r. Throws NonIntegralResult if
/// the rational right-hand side is not an integer.
IdentityPair moriarty(long long m, long long r);

/// lhs = sum_{j=r}^{n} C(n,j) C(j,r); rhs = 2^{n-r} C(n,r). Requires 0 <= r <= n.
IdentityPair companion_identity(long long n, long long r);

/// Coefficients of x^{2r+2} / ((1-x)(1-2x)^{r+1}) for x^0 .. x^m_max, by
/// truncated series multiplication. Requires m_max >= 2r+2.
std::vector<BigCount> gf_coefficients(long long r, long long m_max);

/// The three terms of
///   (24n^2+44n+16) f(n) + (21n^2+37n+14) f(n+1) - (3n^2+7n+2) f(n+2),
/// with f(n) = T(2n,n).
struct RecurrenceTerms {
    std::array<BigCount, 3> f;
    std::array<BigInt, 3> terms;

    BigInt residual() const { return terms[0] + terms[1] + terms[2]; }
};

RecurrenceTerms recurrence_terms(long long n);
BigInt recurrence_residual(long long n);

struct ParityCheck {
    bool is_odd = false;
    /// 2^{m-1-2r} divides S(m,r) + (-1)^r
    bool divisibility_ok = false;
};

/// Requires 0 <= r <= m/2 - 1.
ParityCheck oddness_and_divisibility(long long m, long long r);

} // namespace lastsq
