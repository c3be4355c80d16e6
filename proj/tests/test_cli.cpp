#include "cli.hpp"

#include <nlohmann/json.hpp>

#include <gtest/gtest.h>

#include <cstdlib>
#include <fstream>
#include <sstream>

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = lastsq::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

} // namespace

TEST(CliCompute, Examples) {
    EXPECT_EQ(run({"compute", "T", "10", "4"}).out, "5503\n");
    EXPECT_EQ(run({"compute", "S", "2", "0"}).out, "1\n");
    EXPECT_EQ(run({"compute", "W", "9", "2"}).out, "2815\n");
    EXPECT_EQ(run({"compute", "V", "4", "0"}).out, "15\n");
    EXPECT_EQ(run({"compute", "T", "3", "3"}).code, 2);
    EXPECT_EQ(run({"compute", "X", "3", "1"}).code, 2);
    EXPECT_EQ(run({"compute", "T", "three", "1"}).code, 2);
}

TEST(CliTable, MatchesGoldenFile) {
    const auto r = run({"table", "10", "--format", "csv"});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, read_file(LASTSQ_GOLDEN_DIR "/table10.csv"));
    EXPECT_NE(r.out.find("\n5,31,49,31,9,1\n"), std::string::npos);
    EXPECT_NE(r.out.find("\n1,1\n"), std::string::npos);
    EXPECT_EQ(r.out.find("\r"), std::string::npos);
    EXPECT_EQ(run({"table", "0"}).code, 2);
    EXPECT_EQ(run({"table", "3", "--format", "xml"}).code, 2);
    EXPECT_NE(run({"table", "4"}).out.find("17"), std::string::npos);
}

TEST(CliEnumerate, Examples) {
    EXPECT_EQ(run({"enumerate", "B", "2", "0", "--count", "--sign", "plus"}).out, "3\n");
    EXPECT_EQ(run({"enumerate", "D", "4", "1", "--list", "--sign", "plus"}).out, "bdw\n");
    EXPECT_EQ(run({"enumerate", "B", "4", "1", "--count"}).out, "24\n");
    EXPECT_EQ(run({"enumerate", "D", "2", "0"}).out, "bb\nbw\n");
    EXPECT_EQ(run({"enumerate", "B", "2", "1", "--sign", "plus", "--render"}).out, "bt  [#][^]\n");
    // |B+odd(5,1)| = |B-even(5,1)| + 1
    const int plus_odd = std::stoi(run({"enumerate", "B", "5", "1", "--count", "--parity", "odd", "--sign", "plus"}).out);
    const int minus_even =
        std::stoi(run({"enumerate", "B", "5", "1", "--count", "--parity", "even", "--sign", "minus"}).out);
    EXPECT_EQ(plus_odd, minus_even + 1);
}

TEST(CliEnumerate, GuardsAndEnvironment) {
    EXPECT_EQ(run({"enumerate", "B", "17", "1", "--count"}).code, 2);
    ::setenv("LASTSQ_MAX_CELLS", "17", 1);
    const auto r = run({"enumerate", "B", "17", "16", "--count"});
    ::unsetenv("LASTSQ_MAX_CELLS");
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "2\n");
    EXPECT_EQ(run({"enumerate", "D", "4", "1", "--weight", "1"}).code, 2);
    EXPECT_EQ(run({"enumerate", "B", "4", "1", "--count", "--list"}).code, 2);
}

TEST(CliEnumerate, OutputIndependentOfJobs) {
    const auto one = run({"enumerate", "B", "9", "3", "--jobs", "1"});
    const auto four = run({"enumerate", "B", "9", "3", "--jobs", "4"});
    EXPECT_EQ(one.code, 0);
    EXPECT_EQ(one.out, four.out);
}

TEST(CliBiject, Examples) {
    EXPECT_EQ(run({"biject", "prop5", "bdw"}).out, "bt\n");
    EXPECT_EQ(run({"biject", "prop5-inv", "bt"}).out, "bdw\n");
    EXPECT_EQ(run({"biject", "conjugate", "bwbt"}).out, "tbbw\n");
    EXPECT_EQ(run({"biject", "conjugate", "bt"}).out, "EXCEPTIONAL epsilon+\n");
    EXPECT_EQ(run({"biject", "conjugate", "wbbw"}).out, "EXCEPTIONAL epsilon-\n");
    EXPECT_EQ(run({"biject", "prop1-inv", "bdw"}).out, "{\"m\":4,\"chosen\":[1,2,3,4],\"marks\":[1]}\n");
    EXPECT_EQ(run({"biject", "prop1", R"({"m":4,"chosen":[1,2,3,4],"marks":[1]})"}).out, "bdw\n");
}

TEST(CliBiject, ExitCodes) {
    EXPECT_EQ(run({"biject", "prop5", "bb"}).code, 3);
    EXPECT_EQ(run({"biject", "prop5-inv", "w"}).code, 3);
    EXPECT_EQ(run({"biject", "conjugate", "tt"}).code, 3);
    EXPECT_EQ(run({"biject", "prop5", "bxw"}).code, 2);
    EXPECT_EQ(run({"biject", "prop1", "{"}).code, 2);
    EXPECT_EQ(run({"biject", "nope", "bdw"}).code, 2);
}

TEST(CliVerify, SmallSuitesPass) {
    const auto r = run({"verify", "theorem", "--mmax", "20", "--enum-limit", "10", "--nmax", "6"});
    EXPECT_EQ(r.code, 0) << r.err;
    EXPECT_NE(r.out.find("summary: pass="), std::string::npos);
    EXPECT_NE(r.out.find(" fail=0 "), std::string::npos);
    EXPECT_EQ(run({"verify", "lemma", "--nmax", "6"}).code, 0);
    EXPECT_EQ(run({"verify", "bijections", "--enum-limit", "8"}).code, 0);
    EXPECT_EQ(run({"verify", "strata", "--nmax", "0"}).code, 2);
}

TEST(CliVerify, JsonRecordsOnePerLine) {
    const auto r = run({"verify", "strata", "--nmax", "4", "--format", "json"});
    ASSERT_EQ(r.code, 0);
    std::istringstream lines(r.out);
    std::string line;
    std::size_t records = 0;
    bool saw_skip = false;
    while (std::getline(lines, line)) {
        const auto j = nlohmann::json::parse(line);
        if (j.contains("summary")) {
            EXPECT_EQ(j["summary"]["fail"], 0);
            continue;
        }
        ++records;
        for (const char* key : {"check_name", "params", "status", "lhs", "rhs", "reference", "detail"})
            EXPECT_TRUE(j.contains(key)) << key;
        saw_skip = saw_skip || j["status"] == "skipped";
    }
    EXPECT_GT(records, 0u);
    EXPECT_TRUE(saw_skip);
}

TEST(CliVerify, ByteIdenticalAcrossJobs) {
    const auto a = run({"verify", "lemma", "--nmax", "7", "--jobs", "1"});
    const auto b = run({"verify", "lemma", "--nmax", "7", "--jobs", "4"});
    EXPECT_EQ(a.out, b.out);
}

TEST(Cli, UsageErrors) {
    EXPECT_EQ(run({}).code, 2);
    EXPECT_EQ(run({"frobnicate"}).code, 2);
    EXPECT_EQ(run({"--help"}).code, 0);
}
