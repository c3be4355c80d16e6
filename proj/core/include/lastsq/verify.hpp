#pragma once

// Cross-checks between the closed formulas, the exhaustive enumerators and
// the bijections. Every check is exact; failures are collected, never thrown.

#include "lastsq/bigint.hpp"
#include "lastsq/enumeration.hpp"

#include <cstddef>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace lastsq {

enum class Status : std::uint8_t { Pass, Fail, Skipped };

std::string_view to_string(Status status) noexcept;

namespace refs {
inline constexpr std::string_view kFiveSums = "five-sum identity S(m,r)=T=U=V=W at n=m-1-r";
inline constexpr std::string_view kCountDPlus = "|D+(m,r)| = S(m,r)";
inline constexpr std::string_view kCountBPlus = "|B+(n,r)| = T(n,r)";
inline constexpr std::string_view kBoardBijection = "marked colored boards <-> D+(m,r)";
inline constexpr std::string_view kDominoSquareBijection = "D+(m,r) <-> B+(m-1-r,r)";
inline constexpr std::string_view kConjugation = "conjugation: near-involution B+odd <-> B-even";
inline constexpr std::string_view kConjugationCount = "|B+odd(n,r)| = |B-even(n,r)| + (-1)^(r+1)";
inline constexpr std::string_view kStrataT = "T summand counts B+ by number of non-white cells";
inline constexpr std::string_view kStrataU = "U summand counts B+ by last decorated cell";
inline constexpr std::string_view kStrataV = "V summand counts B+ by last black cell";
inline constexpr std::string_view kStrataW = "W summand counts B by even weight";
inline constexpr std::string_view kEvenWeight = "T(n,r) = |B-even-weight(n,r)| + (-1)^(r+1)";
inline constexpr std::string_view kMoriarty = "Moriarty: sum C(m,2i)C(i,r) = 2^(m-1-2r) C(m-r,r) m/(m-r)";
inline constexpr std::string_view kCompanion = "sum C(n,j)C(j,r) = 2^(n-r) C(n,r)";
inline constexpr std::string_view kRecurrence = "order-2 recurrence for f(n)=T(2n,n)";
inline constexpr std::string_view kGeneratingFunction = "sum_m S(m,r) x^m = x^(2r+2)/((1-x)(1-2x)^(r+1))";
inline constexpr std::string_view kParity = "S(m,r) odd and 2^(m-1-2r) | S(m,r)+(-1)^r";

/// Every reference a report may carry.
std::span<const std::string_view> all();
} // namespace refs

struct VerificationReport {
    std::string check_name;
    std::vector<std::pair<std::string, long long>> params;
    Status status = Status::Skipped;
    std::vector<BigInt> lhs;
    std::vector<BigInt> rhs;
    std::string reference;
    /// First counterexample for failures; an explanatory note otherwise (may be empty).
    std::string detail;
};

struct VerifyOptions {
    EnumerationOptions enumeration{};
};

struct TheoremLimits {
    long long m_max = 200;
    /// |D+(m,r)| is enumerated, and the board / D-to-B bijections checked, for m <= this.
    long long d_enum_limit = 16;
    /// |B+(n,r)| is enumerated for every n <= this and r <= n-1.
    long long b_enum_limit = 14;
};

struct AuxiliaryLimits {
    long long moriarty_m = 30;
    long long companion_n = 30;
    long long recurrence_n = 12;
    long long gf_r = 8;
    long long gf_m = 40;
    long long parity_m = 60;
};

std::vector<VerificationReport> verify_theorem(const TheoremLimits& limits = {}, const VerifyOptions& options = {});
std::vector<VerificationReport> verify_bijections(long long m_max, const VerifyOptions& options = {});
std::vector<VerificationReport> verify_lemma(long long n_max, const VerifyOptions& options = {});
std::vector<VerificationReport> verify_strata(long long n_max, const VerifyOptions& options = {});
std::vector<VerificationReport> verify_auxiliary(const AuxiliaryLimits& limits = {});

/// Canonical order: check name, then parameter values.
void sort_reports(std::vector<VerificationReport>& reports);

struct Summary {
    std::size_t pass = 0;
    std::size_t fail = 0;
    std::size_t skipped = 0;
};

Summary summarize(std::span<const VerificationReport> reports) noexcept;

enum class ReportFormat : std::uint8_t { Plain, JsonRecords };

std::string format_report(const VerificationReport& report, ReportFormat format);
std::string format_summary(const Summary& summary, ReportFormat format);
/// One line per report followed by the summary line.
void write_reports(std::ostream& out, std::span<const VerificationReport> reports, ReportFormat format);

} // namespace lastsq
