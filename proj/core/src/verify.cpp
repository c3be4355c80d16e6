#include "lastsq/verify.hpp"

#include "lastsq/bijections.hpp"
#include "lastsq/error.hpp"
#include "lastsq/formulas.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <array>
#include <ostream>
#include <sstream>

namespace lastsq {

std::string_view to_string(Status status) noexcept {
    switch (status) {
    case Status::Pass: return "pass";
    case Status::Fail: return "fail";
    case Status::Skipped: return "skipped";
    }
    return "unknown";
}

namespace refs {
std::span<const std::string_view> all() {
    static constexpr std::array table{kFiveSums,      kCountDPlus,  kCountBPlus,  kBoardBijection, kDominoSquareBijection,
                                      kConjugation,   kConjugationCount, kStrataT, kStrataU,     kStrataV,
                                      kStrataW,       kEvenWeight,  kMoriarty,    kCompanion,      kRecurrence,
                                      kGeneratingFunction, kParity};
    return table;
}
} // namespace refs

namespace {

using Params = std::vector<std::pair<std::string, long long>>;

std::string join(const std::vector<BigInt>& values) {
    std::string out;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i != 0) out += ',';
        out += values[i].str();
    }
    return out;
}

VerificationReport make_report(std::string_view name, Params params, std::string_view reference, std::vector<BigInt> lhs,
                               std::vector<BigInt> rhs, bool ok, std::string detail) {
    VerificationReport report;
    report.check_name = std::string(name);
    report.params = std::move(params);
    report.reference = std::string(reference);
    report.lhs = std::move(lhs);
    report.rhs = std::move(rhs);
    report.status = ok ? Status::Pass : Status::Fail;
    if (!ok && detail.empty()) detail = "lhs=[" + join(report.lhs) + "] rhs=[" + join(report.rhs) + "]";
    report.detail = std::move(detail);
    return report;
}

VerificationReport equality_report(std::string_view name, Params params, std::string_view reference,
                                   std::vector<BigInt> lhs, std::vector<BigInt> rhs, std::string note = {}) {
    const bool ok = lhs == rhs;
    return make_report(name, std::move(params), reference, std::move(lhs), std::move(rhs), ok,
                       ok ? std::move(note) : std::string{});
}

VerificationReport failure_report(std::string_view name, Params params, std::string_view reference,
                                  const std::exception& e) {
    return make_report(name, std::move(params), reference, {}, {}, false, std::string("exception: ") + e.what());
}

ClassFilter plus_filter() {
    ClassFilter f;
    f.sign = SignClass::Plus;
    return f;
}

VerificationReport check_board_bijection(std::size_t m, std::size_t r, const VerifyOptions& options) {
    const Params params{{"m", static_cast<long long>(m)}, {"r", static_cast<long long>(r)}};
    try {
        const auto boards = enumerate_boards(m, r);
        const auto d_plus = enumerate_D(m, r, plus_filter(), options.enumeration);
        std::vector<DominoArrangement> images;
        images.reserve(boards.size());
        std::string first_failure;
        for (const auto& board : boards) {
            DominoArrangement image = board_to_domino(board);
            if (first_failure.empty() && domino_to_board(image) != board) {
                first_failure = "round trip fails for board " + to_record(board);
            }
            images.push_back(std::move(image));
        }
        for (const auto& arr : d_plus) {
            if (first_failure.empty() && board_to_domino(domino_to_board(arr)) != arr) {
                first_failure = "round trip fails for arrangement " + encode(arr);
            }
        }
        std::sort(images.begin(), images.end());
        const auto distinct = static_cast<std::size_t>(std::unique(images.begin(), images.end()) - images.begin());
        images.erase(images.begin() + static_cast<std::ptrdiff_t>(distinct), images.end());
        if (first_failure.empty() && images != d_plus) first_failure = "image set differs from D+";
        return make_report("bijection.boards_to_d_plus", params, refs::kBoardBijection,
                           {BigInt(boards.size()), BigInt(distinct)}, {BigInt(d_plus.size()), BigInt(d_plus.size())},
                           first_failure.empty() && boards.size() == d_plus.size(), first_failure);
    } catch (const std::exception& e) {
        return failure_report("bijection.boards_to_d_plus", params, refs::kBoardBijection, e);
    }
}

VerificationReport check_domino_square_bijection(std::size_t m, std::size_t r, const VerifyOptions& options) {
    const Params params{{"m", static_cast<long long>(m)}, {"r", static_cast<long long>(r)}};
    try {
        const std::size_t n = m - 1 - r;
        const auto d_plus = enumerate_D(m, r, plus_filter(), options.enumeration);
        const auto b_plus = enumerate_B(n, r, plus_filter(), options.enumeration);
        std::vector<SquareArrangement> images;
        images.reserve(d_plus.size());
        std::string first_failure;
        for (const auto& arr : d_plus) {
            SquareArrangement image = domino_to_square(arr);
            if (first_failure.empty() && square_to_domino(image) != arr) {
                first_failure = "round trip fails for " + encode(arr);
            }
            images.push_back(std::move(image));
        }
        for (const auto& arr : b_plus) {
            if (first_failure.empty() && domino_to_square(square_to_domino(arr)) != arr) {
                first_failure = "round trip fails for " + encode(arr);
            }
        }
        std::sort(images.begin(), images.end());
        const auto distinct = static_cast<std::size_t>(std::unique(images.begin(), images.end()) - images.begin());
        images.erase(images.begin() + static_cast<std::ptrdiff_t>(distinct), images.end());
        if (first_failure.empty() && images != b_plus) first_failure = "image set differs from B+(m-1-r,r)";
        return make_report("bijection.d_plus_to_b_plus", params, refs::kDominoSquareBijection,
                           {BigInt(d_plus.size()), BigInt(distinct)}, {BigInt(b_plus.size()), BigInt(b_plus.size())},
                           first_failure.empty() && d_plus.size() == b_plus.size(), first_failure);
    } catch (const std::exception& e) {
        return failure_report("bijection.d_plus_to_b_plus", params, refs::kDominoSquareBijection, e);
    }
}

} // namespace

std::vector<VerificationReport> verify_bijections(long long m_max, const VerifyOptions& options) {
    std::vector<VerificationReport> reports;
    for (long long m = 2; m <= m_max; ++m) {
        for (long long r = 0; 2 * r + 2 <= m; ++r) {
            reports.push_back(check_board_bijection(static_cast<std::size_t>(m), static_cast<std::size_t>(r), options));
            reports.push_back(
                check_domino_square_bijection(static_cast<std::size_t>(m), static_cast<std::size_t>(r), options));
        }
    }
    sort_reports(reports);
    return reports;
}

std::vector<VerificationReport> verify_theorem(const TheoremLimits& limits, const VerifyOptions& options) {
    std::vector<VerificationReport> reports;
    for (long long m = 2; m <= limits.m_max; ++m) {
        for (long long r = 0; 2 * r + 2 <= m; ++r) {
            const Params params{{"m", m}, {"r", r}};
            const long long n = m - 1 - r;
            const BigCount s = eval_S(m, r);
            std::vector<BigInt> others{eval_T(n, r), eval_U(n, r), eval_V(n, r), eval_W(n, r)};
            const bool ok = std::all_of(others.begin(), others.end(), [&](const BigInt& v) { return v == s; });
            reports.push_back(make_report("theorem.five_sums", params, refs::kFiveSums, {s}, std::move(others), ok,
                                          ok ? std::string{} : "S=" + s.str() + " disagrees with T,U,V,W"));
            if (m <= limits.d_enum_limit) {
                try {
                    const BigCount d = count(Family::D, static_cast<std::size_t>(m), static_cast<std::size_t>(r),
                                             plus_filter(), options.enumeration);
                    reports.push_back(equality_report("theorem.count_d_plus", params, refs::kCountDPlus, {d}, {s}));
                } catch (const std::exception& e) {
                    reports.push_back(failure_report("theorem.count_d_plus", params, refs::kCountDPlus, e));
                }
            }
        }
    }
    for (long long n = 1; n <= limits.b_enum_limit; ++n) {
        for (long long r = 0; r < n; ++r) {
            const Params params{{"n", n}, {"r", r}};
            try {
                const BigCount b = count(Family::B, static_cast<std::size_t>(n), static_cast<std::size_t>(r),
                                         plus_filter(), options.enumeration);
                reports.push_back(equality_report("theorem.count_b_plus", params, refs::kCountBPlus, {b},
                                                  {eval_T(n, r)}));
            } catch (const std::exception& e) {
                reports.push_back(failure_report("theorem.count_b_plus", params, refs::kCountBPlus, e));
            }
        }
    }
    auto bijections = verify_bijections(limits.d_enum_limit, options);
    std::move(bijections.begin(), bijections.end(), std::back_inserter(reports));
    sort_reports(reports);
    return reports;
}

std::vector<VerificationReport> verify_lemma(long long n_max, const VerifyOptions& options) {
    std::vector<VerificationReport> reports;
    for (long long n = 1; n <= n_max; ++n) {
        for (long long r = 0; r < n; ++r) {
            const Params params{{"n", n}, {"r", r}};
            try {
                const auto all = enumerate_B(static_cast<std::size_t>(n), static_cast<std::size_t>(r), {},
                                             options.enumeration);
                std::size_t plus_odd = 0;
                std::size_t minus_even = 0;
                std::size_t domain = 0;
                std::size_t involutive = 0;
                std::vector<std::string> exceptions;
                std::string first_failure;
                for (const auto& arr : all) {
                    if (!in_conjugation_domain(arr)) continue;
                    ++domain;
                    (sign_class(arr) == SignClass::Plus ? plus_odd : minus_even) += 1;
                    const ConjugationOutcome outcome = conjugate(arr);
                    if (std::holds_alternative<Exceptional>(outcome)) {
                        exceptions.push_back(encode(arr));
                        continue;
                    }
                    const auto* image = std::get_if<SquareArrangement>(&outcome);
                    const ConjugationOutcome back = image ? conjugate(*image) : ConjugationOutcome{OutsideDomain{}};
                    const auto* back_arr = std::get_if<SquareArrangement>(&back);
                    const bool good = image != nullptr && in_conjugation_domain(*image) && image->size() == arr.size() &&
                                      image->blacks() == arr.blacks() && (weight(*image) % 2) != (weight(arr) % 2) &&
                                      sign_class(*image) != sign_class(arr) && back_arr != nullptr && *back_arr == arr;
                    if (good) {
                        ++involutive;
                    } else if (first_failure.empty()) {
                        first_failure = "conjugation property fails at " + encode(arr);
                    }
                }
                const auto expected = (r % 2 == 1) ? epsilon_plus(static_cast<std::size_t>(n), static_cast<std::size_t>(r))
                                                   : epsilon_minus(static_cast<std::size_t>(n), static_cast<std::size_t>(r));
                if (first_failure.empty() && (exceptions.size() != 1 || exceptions.front() != encode(expected))) {
                    first_failure = "expected the single exception " + encode(expected) + ", found " +
                                    std::to_string(exceptions.size());
                }
                const std::string note = exceptions.empty() ? std::string{} : "exception=" + exceptions.front();
                reports.push_back(make_report("lemma.conjugation", params, refs::kConjugation,
                                              {BigInt(domain), BigInt(exceptions.size())},
                                              {BigInt(involutive + exceptions.size()), BigInt(1)},
                                              first_failure.empty() && involutive + exceptions.size() == domain,
                                              first_failure.empty() ? note : first_failure));
                reports.push_back(equality_report(
                    "lemma.cardinality", params, refs::kConjugationCount, {BigInt(plus_odd)},
                    {BigInt(minus_even) + sign_power(r + 1)},
                    "plus_odd=" + std::to_string(plus_odd) + " minus_even=" + std::to_string(minus_even)));
            } catch (const std::exception& e) {
                reports.push_back(failure_report("lemma.conjugation", params, refs::kConjugation, e));
            }
        }
    }
    sort_reports(reports);
    return reports;
}

namespace {

// Stratum counts for indices lo..hi, zero where the stratum is empty.
std::vector<BigInt> strata_row(const Strata& strata, StratumKind kind, std::size_t lo, std::size_t hi, std::size_t step,
                               std::string& stray) {
    std::vector<BigInt> row;
    for (std::size_t j = lo; j <= hi; j += step) {
        const auto it = strata.find(StratumKey{kind, j});
        row.push_back(it == strata.end() ? BigInt(0) : it->second);
    }
    for (const auto& [key, value] : strata) {
        if (key.index < lo || key.index > hi || (key.index - lo) % step != 0) {
            stray = "unexpected stratum index " + std::to_string(key.index);
        }
    }
    return row;
}

VerificationReport strata_report(std::string_view name, const Params& params, std::string_view reference,
                                 std::vector<BigInt> counts, std::vector<BigInt> summands, const std::string& stray) {
    const bool ok = stray.empty() && counts == summands;
    return make_report(name, params, reference, std::move(counts), std::move(summands), ok, stray);
}

} // namespace

std::vector<VerificationReport> verify_strata(long long n_max, const VerifyOptions& options) {
    std::vector<VerificationReport> reports;
    const EnumerationLimits& limits = options.enumeration.limits;
    for (long long n = 1; n <= n_max; ++n) {
        const auto un = static_cast<std::size_t>(n);
        for (long long r = 0; r < n; ++r) {
            const auto ur = static_cast<std::size_t>(r);
            const Params params{{"n", n}, {"r", r}};
            try {
                std::string stray;
                {
                    const auto strata = stratify(un, ur, StratumKind::NonWhiteCount, limits);
                    auto counts = strata_row(strata, StratumKind::NonWhiteCount, 1, un, 1, stray);
                    std::vector<BigInt> summands;
                    for (long long j = 1; j <= n; ++j) summands.push_back(binom(n, j) * binom(j - 1, r));
                    reports.push_back(strata_report("strata.t", params, refs::kStrataT, std::move(counts),
                                                    std::move(summands), stray));
                }
                {
                    stray.clear();
                    const auto strata = stratify(un, ur, StratumKind::LastDecoratedAt, limits);
                    auto counts = strata_row(strata, StratumKind::LastDecoratedAt, 1, un, 1, stray);
                    std::vector<BigInt> summands;
                    for (long long j = 1; j <= n; ++j) {
                        summands.push_back(j - 1 >= r ? binom(j - 1, r) * pow2(j - 1 - r) : BigInt(0));
                    }
                    reports.push_back(strata_report("strata.u", params, refs::kStrataU, std::move(counts),
                                                    std::move(summands), stray));
                }
                if (r == 0) {
                    VerificationReport skipped;
                    skipped.check_name = "strata.v";
                    skipped.params = params;
                    skipped.status = Status::Skipped;
                    skipped.reference = std::string(refs::kStrataV);
                    skipped.detail = "r=0: no last black cell, the V summand degenerates; V(n,0) is defined as 2^n-1";
                    reports.push_back(std::move(skipped));
                } else {
                    stray.clear();
                    const auto strata = stratify(un, ur, StratumKind::LastBlackAt, limits);
                    auto counts = strata_row(strata, StratumKind::LastBlackAt, 1, un - ur, 1, stray);
                    std::vector<BigInt> summands;
                    for (long long j = 1; j <= n - r; ++j) {
                        summands.push_back(binom(n - 1 - j, r - 1) * pow2(n - r - j) * (pow2(j) - 1));
                    }
                    reports.push_back(strata_report("strata.v", params, refs::kStrataV, std::move(counts),
                                                    std::move(summands), stray));
                }
                {
                    stray.clear();
                    const auto strata = stratify(un, ur, StratumKind::WeightEquals, limits);
                    auto counts = strata_row(strata, StratumKind::WeightEquals, 0, ur - ur % 2, 2, stray);
                    std::vector<BigInt> summands;
                    for (long long k = 0; k <= r / 2; ++k) {
                        summands.push_back(pow2(n - r) * binom(n - 2 - 2 * k, r - 2 * k));
                    }
                    reports.push_back(strata_report("strata.w", params, refs::kStrataW, std::move(counts),
                                                    std::move(summands), stray));
                }
                {
                    ClassFilter even;
                    even.weight_parity = Parity::Even;
                    const BigCount even_count = count(Family::B, un, ur, even, options.enumeration);
                    reports.push_back(equality_report("strata.t_even_weight", params, refs::kEvenWeight,
                                                      {eval_T(n, r)}, {even_count + sign_power(r + 1)}));
                }
            } catch (const std::exception& e) {
                reports.push_back(failure_report("strata", params, refs::kStrataT, e));
            }
        }
    }
    sort_reports(reports);
    return reports;
}

std::vector<VerificationReport> verify_auxiliary(const AuxiliaryLimits& limits) {
    std::vector<VerificationReport> reports;
    for (long long m = 1; m <= limits.moriarty_m; ++m) {
        for (long long r = 0; r <= m / 2 && r < m; ++r) {
            const Params params{{"m", m}, {"r", r}};
            try {
                const IdentityPair p = moriarty(m, r);
                reports.push_back(equality_report("aux.moriarty", params, refs::kMoriarty, {p.lhs}, {p.rhs}));
            } catch (const std::exception& e) {
                reports.push_back(failure_report("aux.moriarty", params, refs::kMoriarty, e));
            }
        }
    }
    for (long long n = 0; n <= limits.companion_n; ++n) {
        for (long long r = 0; r <= n; ++r) {
            const IdentityPair p = companion_identity(n, r);
            reports.push_back(equality_report("aux.companion", {{"n", n}, {"r", r}}, refs::kCompanion, {p.lhs}, {p.rhs}));
        }
    }
    for (long long n = 1; n <= limits.recurrence_n; ++n) {
        const RecurrenceTerms t = recurrence_terms(n);
        std::string note = "terms=" + t.terms[0].str() + "," + t.terms[1].str() + "," + t.terms[2].str() +
                           " f=" + t.f[0].str() + "," + t.f[1].str() + "," + t.f[2].str();
        reports.push_back(make_report("aux.recurrence", {{"n", n}}, refs::kRecurrence, {t.residual()}, {BigInt(0)},
                                      t.residual() == 0, note));
    }
    for (long long r = 0; r <= limits.gf_r; ++r) {
        const Params params{{"r", r}, {"m_max", limits.gf_m}};
        try {
            std::vector<BigInt> series = gf_coefficients(r, limits.gf_m);
            std::vector<BigInt> direct{BigInt(0)};
            for (long long m = 1; m <= limits.gf_m; ++m) direct.push_back(eval_S(m, r));
            reports.push_back(equality_report("aux.generating_function", params, refs::kGeneratingFunction,
                                              std::move(series), std::move(direct)));
        } catch (const std::exception& e) {
            reports.push_back(failure_report("aux.generating_function", params, refs::kGeneratingFunction, e));
        }
    }
    for (long long m = 2; m <= limits.parity_m; ++m) {
        for (long long r = 0; 2 * r + 2 <= m; ++r) {
            const BigCount s = eval_S(m, r);
            const BigInt shifted = s + sign_power(r);
            const BigInt modulus = pow2(m - 1 - 2 * r);
            const ParityCheck check = oddness_and_divisibility(m, r);
            std::vector<BigInt> lhs{BigInt(s % 2), BigInt(shifted % modulus)};
            const bool ok = check.is_odd && check.divisibility_ok && lhs == std::vector<BigInt>{1, 0};
            reports.push_back(make_report("aux.parity", {{"m", m}, {"r", r}}, refs::kParity, std::move(lhs),
                                          {BigInt(1), BigInt(0)}, ok,
                                          ok ? std::string{} : "S=" + s.str() + " modulus=" + modulus.str()));
        }
    }
    sort_reports(reports);
    return reports;
}

void sort_reports(std::vector<VerificationReport>& reports) {
    std::stable_sort(reports.begin(), reports.end(), [](const VerificationReport& a, const VerificationReport& b) {
        if (a.check_name != b.check_name) return a.check_name < b.check_name;
        return std::lexicographical_compare(
            a.params.begin(), a.params.end(), b.params.begin(), b.params.end(),
            [](const auto& x, const auto& y) { return std::tie(x.second, x.first) < std::tie(y.second, y.first); });
    });
}

Summary summarize(std::span<const VerificationReport> reports) noexcept {
    Summary s;
    for (const auto& r : reports) {
        switch (r.status) {
        case Status::Pass: ++s.pass; break;
        case Status::Fail: ++s.fail; break;
        case Status::Skipped: ++s.skipped; break;
        }
    }
    return s;
}

namespace {

nlohmann::ordered_json values_json(const std::vector<BigInt>& values) {
    if (values.size() == 1) return values.front().str();
    auto arr = nlohmann::ordered_json::array();
    for (const auto& v : values) arr.push_back(v.str());
    return arr;
}

std::string values_plain(const std::vector<BigInt>& values) {
    if (values.size() == 1) return values.front().str();
    return "[" + join(values) + "]";
}

} // namespace

std::string format_report(const VerificationReport& report, ReportFormat format) {
    if (format == ReportFormat::JsonRecords) {
        nlohmann::ordered_json j;
        j["check_name"] = report.check_name;
        j["params"] = nlohmann::ordered_json::object();
        for (const auto& [name, value] : report.params) j["params"][name] = value;
        j["status"] = to_string(report.status);
        j["lhs"] = values_json(report.lhs);
        j["rhs"] = values_json(report.rhs);
        j["reference"] = report.reference;
        j["detail"] = report.detail.empty() ? nlohmann::ordered_json(nullptr) : nlohmann::ordered_json(report.detail);
        return j.dump();
    }
    std::ostringstream out;
    std::string status(to_string(report.status));
    std::transform(status.begin(), status.end(), status.begin(), [](unsigned char c) { return std::toupper(c); });
    out << status << ' ' << report.check_name;
    for (const auto& [name, value] : report.params) out << ' ' << name << '=' << value;
    out << " lhs=" << values_plain(report.lhs) << " rhs=" << values_plain(report.rhs) << " ref=\"" << report.reference
        << '"';
    if (!report.detail.empty()) out << " detail=\"" << report.detail << '"';
    return out.str();
}

std::string format_summary(const Summary& summary, ReportFormat format) {
    if (format == ReportFormat::JsonRecords) {
        nlohmann::ordered_json j;
        j["summary"] = {{"pass", summary.pass}, {"fail", summary.fail}, {"skipped", summary.skipped}};
        return j.dump();
    }
    return "summary: pass=" + std::to_string(summary.pass) + " fail=" + std::to_string(summary.fail) +
           " skipped=" + std::to_string(summary.skipped);
}

void write_reports(std::ostream& out, std::span<const VerificationReport> reports, ReportFormat format) {
    for (const auto& report : reports) out << format_report(report, format) << '\n';
    out << format_summary(summarize(reports), format) << '\n';
}

} // namespace lastsq
