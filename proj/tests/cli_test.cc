#include "twep/cli.h"

#include <gtest/gtest.h>

#include <algorithm>
#include <fstream>
#include <sstream>

#include "json.hpp"

using namespace twep;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run(std::vector<std::string> args) {
    std::ostringstream out, err;
    int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

std::string read_fixture(const std::string &name) {
    std::ifstream in(std::string(TWEP_FIXTURE_DIR) + "/" + name, std::ios::binary);
    std::stringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

std::vector<std::string> lines(const std::string &text) {
    std::vector<std::string> out;
    std::istringstream in(text);
    for (std::string line; std::getline(in, line);) {
        out.push_back(line);
    }
    return out;
}

}  // namespace

TEST(CliSimulate, GoldenTranscripts) {
    std::string y3 = read_fixture("hamming_m3_y3.jsonl");
    std::string x5 = read_fixture("hamming_m3_x5.jsonl");
    ASSERT_FALSE(y3.empty());
    ASSERT_FALSE(x5.empty());
    Result a = run({"simulate", "hamming-m3", "--error", "IIYIIII"});
    EXPECT_EQ(a.code, 0);
    EXPECT_EQ(a.out, y3);
    Result b = run({"simulate", "hamming-m3", "--error", "IIIIXII"});
    EXPECT_EQ(b.code, 0);
    EXPECT_EQ(b.out, x5);
    Result c = run({"simulate", "--m", "3", "--error", "IIIIXII"});
    EXPECT_EQ(c.out, x5);
}

TEST(CliSimulate, NoErrorSixPair) {
    Result r = run({"simulate", "six-pair", "--error", "IIIIII"});
    EXPECT_EQ(r.code, 0);
    auto ls = lines(r.out);
    ASSERT_GE(ls.size(), 3u);
    EXPECT_EQ(ls[0], R"({"op": "XXXXII", "outcome": 0})");
    EXPECT_EQ(ls[1], R"({"op": "ZZZZII", "outcome": 0})");
    EXPECT_EQ(ls.back(), R"({"correction": "IIIIII", "k_out": 2})");
}

TEST(CliSimulate, Qutrit) {
    Result r = run({"simulate", "qutrit-four", "--error", "I,I,I,Z"});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(lines(r.out).back(), R"({"correction": "I,I,I,Z", "k_out": 1})");
}

TEST(CliSimulate, TwoPartyBitsAreConsistent) {
    Result r = run({"simulate", "nine-pair", "--error", "IYIIIIIIX", "--two-party"});
    ASSERT_EQ(r.code, 0);
    auto ls = lines(r.out);
    ASSERT_GE(ls.size(), 2u);
    for (std::size_t i = 0; i + 1 < ls.size(); i++) {
        auto j = nlohmann::json::parse(ls[i]);
        int alice = j["alice"], bob = j["bob"], s = j["y_parity"], e = j["outcome"];
        EXPECT_EQ(alice ^ bob, s ^ e) << ls[i];
        std::string op = j["op"];
        EXPECT_EQ(s, static_cast<int>(std::count(op.begin(), op.end(), 'Y') % 2));
    }
    EXPECT_EQ(run({"simulate", "nine-pair", "--error", "IYIIIIIIX", "--two-party"}).out, r.out);
}

TEST(CliSimulate, UsageErrors) {
    EXPECT_EQ(run({"simulate", "hamming-m3", "--error", "IIYIIIX"}).code, 2);
    EXPECT_EQ(run({"simulate", "hamming-m3", "--error", "IIYII"}).code, 2);
    EXPECT_EQ(run({"simulate", "hamming-m3", "--error", "IIQIIII"}).code, 2);
    EXPECT_EQ(run({"simulate", "hamming-m3"}).code, 2);
    EXPECT_EQ(run({"simulate", "qutrit-four", "--error", "I,I,I,Z", "--two-party"}).code, 2);
    EXPECT_EQ(run({"simulate", "qutrit-four", "--error", "I,I,I,Y"}).code, 2);
}

TEST(CliVerify, SixPair) {
    Result r = run({"verify", "six-pair", "--workers", "2"});
    EXPECT_EQ(r.code, 0);
    auto j = nlohmann::json::parse(r.out);
    EXPECT_EQ(j["errors_checked"], 19);
    EXPECT_EQ(j["k_min"], 2);
    EXPECT_EQ(j["pass"], true);
    EXPECT_TRUE(j["counterexamples"].empty());
}

TEST(CliVerify, NinePair) {
    Result r = run({"verify", "nine-pair"});
    EXPECT_EQ(r.code, 0);
    auto j = nlohmann::json::parse(r.out);
    EXPECT_EQ(j["errors_checked"], 352);
    EXPECT_EQ(j["k_min"], 1);
}

TEST(CliVerify, UnknownProtocol) {
    Result r = run({"verify", "no-such"});
    EXPECT_EQ(r.code, 2);
    for (const char *key : {"six-pair", "hamming-m3", "hamming-m4", "hamming-m5", "nine-pair", "qutrit-four"}) {
        EXPECT_NE(r.err.find(key), std::string::npos) << key;
    }
    EXPECT_TRUE(r.out.empty());
}

TEST(CliVerify, CapTooSmallIsUsageError) {
    EXPECT_EQ(run({"verify", "nine-pair", "--cap", "10"}).code, 2);
}

TEST(CliVerify, Deterministic) {
    EXPECT_EQ(run({"verify", "hamming-m4", "--workers", "1"}).out, run({"verify", "hamming-m4", "--workers", "3"}).out);
}

TEST(CliGreedy, SixAndSeven) {
    for (const char *n : {"6", "7"}) {
        Result r = run({"greedy", "--n", n, "--t", "1"});
        EXPECT_EQ(r.code, 0) << r.err;
        auto j = nlohmann::json::parse(r.out);
        EXPECT_EQ(j["pass"], true);
        EXPECT_LE(j["max_steps"].get<int>(), 7);
        EXPECT_EQ(j["step_bound"], 7);
    }
}

TEST(CliGreedy, SizeLimit) {
    Result r = run({"greedy", "--n", "30", "--t", "1"});
    EXPECT_EQ(r.code, 2);
    EXPECT_NE(r.err.find("size limit"), std::string::npos);
}

TEST(CliBounds, NineAndTen) {
    Result r = run({"bounds", "--n", "9..10", "--t", "2", "--format", "csv"});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out,
              "n,t,hamming_k,singleton_k,gv_k,thm2_k\n"
              "9,2,-1,1,-5,-2\n"
              "10,2,1,2,-5,-1\n");
    auto j = nlohmann::json::parse(run({"bounds", "--n", "9..10", "--t", "2"}).out);
    ASSERT_EQ(j.size(), 2u);
    EXPECT_EQ(j[0]["hamming_k"], -1);
    EXPECT_EQ(j[1]["hamming_k"], 1);
}

TEST(CliBounds, RowOrderAndSkippedRows) {
    Result r = run({"bounds", "--n", "1..3", "--t", "1..2", "--format", "csv"});
    auto ls = lines(r.out);
    ASSERT_EQ(ls.size(), 6u);
    EXPECT_EQ(ls[1].substr(0, 4), "1,1,");
    EXPECT_EQ(ls[2].substr(0, 4), "2,1,");
    EXPECT_EQ(ls[3].substr(0, 4), "2,2,");
    EXPECT_EQ(ls[4].substr(0, 4), "3,1,");
    EXPECT_EQ(ls[5].substr(0, 4), "3,2,");
}

TEST(CliBounds, MalformedRanges) {
    EXPECT_EQ(run({"bounds", "--n", "9..x", "--t", "2"}).code, 2);
    EXPECT_EQ(run({"bounds", "--n", "10..9", "--t", "2"}).code, 2);
    EXPECT_EQ(run({"bounds", "--n", "", "--t", "2"}).code, 2);
    EXPECT_EQ(run({"bounds", "--n", "9", "--t", "2", "--format", "xml"}).code, 2);
}

TEST(CliMi, TenTerms) {
    Result r = run({"mi", "--count", "10"});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "[1, 2, 4, 7, 12, 21, 37, 67, 124, 234]\n");
    Result csv = run({"mi", "--count", "3", "--format", "csv"});
    EXPECT_EQ(csv.out, "i,m_i\n0,1\n1,2\n2,4\n");
}

TEST(CliRates, FiftyOnePoints) {
    Result r = run({"rates", "--points", "51", "--format", "csv"});
    EXPECT_EQ(r.code, 0);
    auto ls = lines(r.out);
    ASSERT_EQ(ls.size(), 52u);
    EXPECT_EQ(ls[0], "x,rate_2epp,rate_gv");
    EXPECT_EQ(ls[1], "0.000000,1.000000,1.000000");
    auto j = nlohmann::json::parse(run({"rates", "--points", "51"}).out);
    ASSERT_EQ(j.size(), 51u);
    EXPECT_EQ(j[0]["rate_2epp"], 1.0);
    EXPECT_EQ(j[0]["rate_gv"], 1.0);
    EXPECT_EQ(run({"rates", "--points", "1"}).code, 2);
}

TEST(Cli, NoSubcommandIsUsageError) {
    EXPECT_EQ(run({}).code, 2);
    EXPECT_EQ(run({"frobnicate"}).code, 2);
    EXPECT_EQ(run({"--help"}).code, 0);
}

TEST(Cli, VerboseGoesToErrorStream) {
    Result quiet = run({"mi", "--count", "4"});
    Result loud = run({"mi", "--count", "4", "--verbose"});
    EXPECT_EQ(quiet.out, loud.out);
    EXPECT_TRUE(quiet.err.empty());
    EXPECT_FALSE(loud.err.empty());
}
