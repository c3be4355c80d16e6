#include "cli.hpp"

#include "lastsq/arrangements.hpp"
#include "lastsq/bijections.hpp"
#include "lastsq/enumeration.hpp"
#include "lastsq/error.hpp"
#include "lastsq/formulas.hpp"
#include "lastsq/verify.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <ostream>
#include <sstream>

namespace lastsq::cli {

namespace {

struct ComputeArgs {
    std::string sum;
    long long size = 0;
    long long r = 0;
};

struct TableArgs {
    long long n_max = 10;
    std::string format = "plain";
};

struct EnumerateArgs {
    std::string family;
    std::size_t size = 0;
    std::size_t r = 0;
    bool count = false;
    bool list = false;
    bool render = false;
    std::string sign;
    std::string parity;
    std::optional<std::size_t> weight;
    unsigned jobs = 1;
};

struct BijectArgs {
    std::string map;
    std::string input;
};

struct VerifyArgs {
    std::string suite = "all";
    long long m_max = 200;
    long long enum_limit = 16;
    long long n_max = 14;
    std::string format = "plain";
    unsigned jobs = 1;
};

int do_compute(const ComputeArgs& a, std::ostream& out) {
    BigCount value;
    if (a.sum == "S") {
        value = eval_S(a.size, a.r);
    } else if (a.sum == "T") {
        value = eval_T(a.size, a.r);
    } else if (a.sum == "U") {
        value = eval_U(a.size, a.r);
    } else if (a.sum == "V") {
        value = eval_V(a.size, a.r);
    } else {
        value = eval_W(a.size, a.r);
    }
    out << value << '\n';
    return kExitOk;
}

int do_table(const TableArgs& a, std::ostream& out) {
    if (a.n_max < 1) throw Error(ErrorCode::RangeError, "table needs n_max >= 1");
    out << (a.format == "csv" ? table_csv(a.n_max) : table_plain(a.n_max));
    return kExitOk;
}

int do_enumerate(const EnumerateArgs& a, std::ostream& out) {
    ClassFilter filter;
    if (!a.sign.empty()) filter.sign = (a.sign == "plus") ? SignClass::Plus : SignClass::Minus;
    if (!a.parity.empty()) filter.weight_parity = (a.parity == "even") ? Parity::Even : Parity::Odd;
    filter.exact_weight = a.weight;

    EnumerationOptions options;
    options.limits = EnumerationLimits::from_env();
    options.jobs = a.jobs;

    if (a.count) {
        const Family family = (a.family == "D") ? Family::D : Family::B;
        out << count(family, a.size, a.r, filter, options) << '\n';
        return kExitOk;
    }
    if (a.family == "D") {
        for (const auto& arr : enumerate_D(a.size, a.r, filter, options)) {
            out << encode(arr);
            if (a.render) out << "  " << render_ascii(arr);
            out << '\n';
        }
    } else {
        for (const auto& arr : enumerate_B(a.size, a.r, filter, options)) {
            out << encode(arr);
            if (a.render) out << "  " << render_ascii(arr);
            out << '\n';
        }
    }
    return kExitOk;
}

int do_biject(const BijectArgs& a, std::ostream& out) {
    if (a.map == "prop1") {
        out << encode(board_to_domino(board_from_record(a.input))) << '\n';
    } else if (a.map == "prop1-inv") {
        out << to_record(domino_to_board(decode_domino(a.input))) << '\n';
    } else if (a.map == "prop5") {
        out << encode(domino_to_square(decode_domino(a.input))) << '\n';
    } else if (a.map == "prop5-inv") {
        out << encode(square_to_domino(decode_square(a.input))) << '\n';
    } else {
        const ConjugationOutcome outcome = conjugate(decode_square(a.input));
        if (const auto* image = std::get_if<SquareArrangement>(&outcome)) {
            out << encode(*image) << '\n';
        } else if (const auto* exceptional = std::get_if<Exceptional>(&outcome)) {
            out << "EXCEPTIONAL " << (exceptional->which == SignClass::Plus ? "epsilon+" : "epsilon-") << '\n';
        } else {
            throw Error(ErrorCode::OutsideDomain, a.input + " is neither plus with odd weight nor minus with even weight");
        }
    }
    return kExitOk;
}

int do_verify(const VerifyArgs& a, std::ostream& out) {
    if (a.m_max < 2 || a.enum_limit < 0 || a.n_max < 1) {
        throw Error(ErrorCode::RangeError, "verify limits must be positive (--mmax >= 2)");
    }
    VerifyOptions options;
    options.enumeration.limits = EnumerationLimits::from_env();
    options.enumeration.jobs = a.jobs;

    std::vector<VerificationReport> reports;
    const auto append = [&reports](std::vector<VerificationReport> more) {
        std::move(more.begin(), more.end(), std::back_inserter(reports));
    };
    const bool all = a.suite == "all";
    if (all || a.suite == "theorem") {
        append(verify_theorem(TheoremLimits{a.m_max, a.enum_limit, a.n_max}, options));
    } else if (a.suite == "bijections") {
        append(verify_bijections(a.enum_limit, options));
    }
    if (all || a.suite == "lemma") append(verify_lemma(a.n_max, options));
    if (all || a.suite == "strata") append(verify_strata(a.n_max, options));
    if (all || a.suite == "auxiliary") append(verify_auxiliary());
    sort_reports(reports);

    write_reports(out, reports, a.format == "json" ? ReportFormat::JsonRecords : ReportFormat::Plain);
    return summarize(reports).fail == 0 ? kExitOk : kExitVerifyFailed;
}

int exit_code_for(const Error& e) {
    switch (e.code()) {
    case ErrorCode::NotPlusClass:
    case ErrorCode::OutsideDomain:
    case ErrorCode::ParityMismatch: return kExitPrecondition;
    case ErrorCode::InternalInvariantViolation:
    case ErrorCode::NonIntegralResult: return kExitVerifyFailed;
    default: return kExitUsage;
    }
}

} // namespace

std::string table_csv(long long n_max) {
    std::ostringstream out;
    out << "n\\r";
    for (long long r = 0; r < n_max; ++r) out << ',' << r;
    out << '\n';
    for (long long n = 1; n <= n_max; ++n) {
        out << n;
        for (long long r = 0; r < n; ++r) out << ',' << eval_T(n, r);
        out << '\n';
    }
    return out.str();
}

std::string table_plain(long long n_max) {
    std::vector<std::vector<std::string>> rows;
    std::size_t width = 3;
    for (long long n = 1; n <= n_max; ++n) {
        std::vector<std::string> row{std::to_string(n)};
        for (long long r = 0; r < n; ++r) row.push_back(eval_T(n, r).str());
        for (const auto& cell : row) width = std::max(width, cell.size());
        rows.push_back(std::move(row));
    }
    std::ostringstream out;
    const auto pad = [&](const std::string& s) { return std::string(width + 1 - s.size(), ' ') + s; };
    out << pad("n\\r");
    for (long long r = 0; r < n_max; ++r) out << pad(std::to_string(r));
    out << '\n';
    for (const auto& row : rows) {
        for (const auto& cell : row) out << pad(cell);
        out << '\n';
    }
    return out.str();
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact verification toolkit for alternating binomial sums and tiling counts", "lastsq"};
    app.require_subcommand(1);

    ComputeArgs compute_args;
    auto* compute = app.add_subcommand("compute", "Evaluate one of the sums S(m,r), T/U/V/W(n,r)");
    compute->add_option("sum", compute_args.sum, "S, T, U, V or W")->required()->check(CLI::IsMember({"S", "T", "U", "V", "W"}));
    compute->add_option("size", compute_args.size, "m for S, n otherwise")->required();
    compute->add_option("r", compute_args.r)->required();

    TableArgs table_args;
    auto* table = app.add_subcommand("table", "Print T(n,r) for n = 1..n_max");
    table->add_option("n_max", table_args.n_max)->required();
    table->add_option("--format", table_args.format)->check(CLI::IsMember({"plain", "csv"}));

    EnumerateArgs enum_args;
    auto* enumerate = app.add_subcommand("enumerate", "List or count the arrangements of D(m,r) or B(n,r)");
    enumerate->add_option("family", enum_args.family)->required()->check(CLI::IsMember({"D", "B"}));
    enumerate->add_option("size", enum_args.size)->required();
    enumerate->add_option("r", enum_args.r)->required();
    auto* count_flag = enumerate->add_flag("--count", enum_args.count, "Print the cardinality only");
    enumerate->add_flag("--list", enum_args.list, "Print one canonical encoding per line (default)")->excludes(count_flag);
    enumerate->add_flag("--render", enum_args.render, "Append an ASCII diagram to each listed arrangement");
    enumerate->add_option("--sign", enum_args.sign)->check(CLI::IsMember({"plus", "minus"}));
    enumerate->add_option("--parity", enum_args.parity, "Weight parity (family B)")->check(CLI::IsMember({"even", "odd"}));
    enumerate->add_option("--weight", enum_args.weight, "Exact weight (family B)");
    enumerate->add_option("--jobs", enum_args.jobs, "Worker threads")->check(CLI::PositiveNumber);

    BijectArgs biject_args;
    auto* biject = app.add_subcommand("biject", "Apply one of the bijections to an encoded arrangement");
    biject->add_option("map", biject_args.map)
        ->required()
        ->check(CLI::IsMember({"prop1", "prop1-inv", "prop5", "prop5-inv", "conjugate"}));
    biject->add_option("input", biject_args.input, "Encoding, or a board record for prop1")->required();

    VerifyArgs verify_args;
    auto* verify = app.add_subcommand("verify", "Run the exact cross-checks and report each one");
    verify->add_option("suite", verify_args.suite)
        ->check(CLI::IsMember({"theorem", "bijections", "lemma", "strata", "auxiliary", "all"}));
    verify->add_option("--mmax", verify_args.m_max, "Largest m for the formula tier");
    verify->add_option("--enum-limit", verify_args.enum_limit, "Largest m enumerated in family D");
    verify->add_option("--nmax", verify_args.n_max, "Largest n enumerated in family B");
    verify->add_option("--format", verify_args.format)->check(CLI::IsMember({"plain", "json"}));
    verify->add_option("--jobs", verify_args.jobs, "Worker threads")->check(CLI::PositiveNumber);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (compute->parsed()) return do_compute(compute_args, out);
        if (table->parsed()) return do_table(table_args, out);
        if (enumerate->parsed()) return do_enumerate(enum_args, out);
        if (biject->parsed()) return do_biject(biject_args, out);
        if (verify->parsed()) return do_verify(verify_args, out);
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return exit_code_for(e);
    }
    return kExitUsage;
}

} // namespace lastsq::cli
