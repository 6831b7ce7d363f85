#include <cstdio>
#include <string>
#include <vector>

#include <sys/wait.h>

#include <gtest/gtest.h>

#include "hx/text.hpp"

#ifndef HX_CLI_PATH
#error "HX_CLI_PATH must point at the command line binary"
#endif

namespace {

struct CliResult {
    int exit_code = -1;
    std::string out;
};

CliResult run_cli(const std::string& args) {
    std::string cmd = std::string(HX_CLI_PATH) + " " + args + " 2>&1";
    FILE* pipe = popen(cmd.c_str(), "r");
    if (pipe == nullptr) return {};
    CliResult r;
    char buf[4096];
    std::size_t n;
    while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) {
        r.out.append(buf, n);
    }
    int status = pclose(pipe);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

std::vector<std::string> lines_of(const std::string& s) {
    std::vector<std::string> out;
    std::size_t start = 0;
    while (start < s.size()) {
        std::size_t nl = s.find('\n', start);
        if (nl == std::string::npos) nl = s.size();
        out.push_back(s.substr(start, nl - start));
        start = nl + 1;
    }
    return out;
}

std::vector<std::string> csv_fields(const std::string& line) {
    std::vector<std::string> out;
    std::size_t start = 0;
    for (;;) {
        std::size_t pos = line.find(',', start);
        if (pos == std::string::npos) {
            out.push_back(line.substr(start));
            return out;
        }
        out.push_back(line.substr(start, pos - start));
        start = pos + 1;
    }
}

TEST(CliTest, EvalSquaresTheImaginaryUnitOfTheRing) {
    CliResult r = run_cli("eval -t -1 \"(0,1)*(0,1)\"");
    EXPECT_EQ(r.exit_code, 0);
    EXPECT_EQ(r.out, "(-1, 0)\n");
}

TEST(CliTest, EvalJsonRoundTripsThroughTheParser) {
    CliResult r = run_cli("eval -t -1 \"(0,1)*(0,1)\" --format json");
    ASSERT_EQ(r.exit_code, 0);
    hx::Hypercomplex x = hx::hypercomplex_from_json(r.out);
    EXPECT_EQ(x.a, hx::cplx(-1, 0));
    EXPECT_EQ(x.b, hx::cplx(0, 0));
}

TEST(CliTest, EvalReportsSingularInverses) {
    CliResult r = run_cli("eval -t 1 \"inv((1,1))\"");
    EXPECT_EQ(r.exit_code, 1);
    EXPECT_NE(r.out.find("Singular"), std::string::npos);
}

TEST(CliTest, EvalNeedsTheScaleFlag) {
    CliResult r = run_cli("eval \"(1,1)\"");
    EXPECT_EQ(r.exit_code, 2);
}

TEST(CliTest, MalformedExpressionsExitWithParseCode) {
    EXPECT_EQ(run_cli("eval -t 1 \"(1,1\"").exit_code, 2);
    EXPECT_EQ(run_cli("nonsense").exit_code, 2);
    EXPECT_EQ(run_cli("moments -t 1 \"(1,1)\"").exit_code, 2);
    EXPECT_EQ(run_cli("sweep \"(1,1)\" --from 0 --to 1 --step 0").exit_code, 2);
    EXPECT_EQ(run_cli("sweep \"(1,1)\" --from 1 --to 0 --step 1").exit_code, 2);
}

TEST(CliTest, SpectrumShowsBothBranches) {
    CliResult r = run_cli("spectrum -t 4 \"(1i,1)\"");
    ASSERT_EQ(r.exit_code, 0);
    EXPECT_NE(r.out.find("-1.73205080757"), std::string::npos);
    EXPECT_NE(r.out.find("minus-zero"), std::string::npos);
    EXPECT_EQ(r.out.find("similarity_residual"), std::string::npos);

    CliResult z = run_cli("spectrum -t 0 \"(3,9)\"");
    ASSERT_EQ(z.exit_code, 0);
    std::vector<std::string> ls = lines_of(z.out);
    ASSERT_GE(ls.size(), 2u);
    EXPECT_NE(ls[0].find("value"), std::string::npos);
    EXPECT_NE(ls[0].find("3"), std::string::npos);
    EXPECT_NE(ls[1].find("conjugate"), std::string::npos);
    EXPECT_NE(ls[1].find("3"), std::string::npos);

    CliResult q = run_cli("spectrum -t -1 \"(1+3i,-1+1i)\"");
    ASSERT_EQ(q.exit_code, 0);
    EXPECT_NE(q.out.find("similarity_residual"), std::string::npos);
    EXPECT_NE(q.out.find("plus"), std::string::npos);
}

TEST(CliTest, MomentsHumanShowsOracleAndClosedColumns) {
    CliResult r = run_cli("moments -t 2 \"(1,1)\" --words \"1*\"");
    ASSERT_EQ(r.exit_code, 0);
    EXPECT_NE(r.out.find("3.5"), std::string::npos);
    EXPECT_NE(r.out.find("n/a (similarity not established)"), std::string::npos);
}

TEST(CliTest, MomentsCsvHasTheDocumentedColumns) {
    CliResult r = run_cli("moments -t 2 \"(1,1)\" --words \"1*\" --format csv");
    ASSERT_EQ(r.exit_code, 0);
    EXPECT_EQ(r.out, "word,re,im\n1*,3.5,0\n");
}

TEST(CliTest, MomentsNmaxWalksThePlainPowers) {
    CliResult r = run_cli("moments -t -2 \"(3,0)\" --nmax 4 --format csv");
    ASSERT_EQ(r.exit_code, 0);
    std::vector<std::string> ls = lines_of(r.out);
    ASSERT_EQ(ls.size(), 5u);
    EXPECT_EQ(ls[1], "1,3,0");
    EXPECT_EQ(ls[2], "11,9,0");
    EXPECT_EQ(ls[3], "111,27,0");
    EXPECT_EQ(ls[4], "1111,81,0");
}

TEST(CliTest, SweepTracksTheSpectralParameterAcrossScales) {
    CliResult r = run_cli("sweep \"(1+3i,-1+1i)\" --from -2 --to 2 --step 1 --format csv");
    ASSERT_EQ(r.exit_code, 0);
    std::vector<std::string> ls = lines_of(r.out);
    ASSERT_EQ(ls.size(), 6u);
    EXPECT_EQ(csv_fields(ls[0])[3], "R");
    const char* want[] = {"13", "11", "9", "7", "5"};
    for (int k = 0; k < 5; ++k) {
        EXPECT_EQ(csv_fields(ls[1 + k])[3], want[k]);
    }
}

TEST(CliTest, SweepFindsTheSingularScale) {
    CliResult r = run_cli("sweep \"(2,1)\" --from 3 --to 5 --step 1 --format csv");
    ASSERT_EQ(r.exit_code, 0);
    std::vector<std::string> ls = lines_of(r.out);
    ASSERT_EQ(ls.size(), 4u);
    EXPECT_EQ(csv_fields(ls[1])[2], "invertible");
    EXPECT_EQ(csv_fields(ls[2])[2], "singular");
    EXPECT_EQ(csv_fields(ls[3])[2], "invertible");
}

TEST(CliTest, SweepSeesTheClassFlip) {
    CliResult r = run_cli("sweep \"(1i,1)\" --from 0 --to 2 --step 1 --format csv");
    ASSERT_EQ(r.exit_code, 0);
    std::vector<std::string> ls = lines_of(r.out);
    ASSERT_EQ(ls.size(), 4u);
    EXPECT_EQ(csv_fields(ls[1])[4], "plus");
    EXPECT_EQ(csv_fields(ls[2])[4], "minus-zero");
    EXPECT_EQ(csv_fields(ls[3])[4], "minus-zero");
}

TEST(CliTest, VerifySmallRunPassesAndIsByteStable) {
    CliResult a = run_cli("verify --samples 50 --seed 7");
    EXPECT_EQ(a.exit_code, 0);
    CliResult b = run_cli("verify --samples 50 --seed 7");
    EXPECT_EQ(b.exit_code, 0);
    EXPECT_EQ(a.out, b.out);
    CliResult j = run_cli("verify --samples 50 --seed 7 --format json");
    EXPECT_EQ(j.exit_code, 0);
    EXPECT_NE(j.out.find("\"all_passed\":true"), std::string::npos);
}

TEST(CliTest, HelpDocumentsTheCsvColumns) {
    CliResult r = run_cli("sweep --help");
    EXPECT_EQ(r.exit_code, 0);
    EXPECT_NE(r.out.find("t,det,algebraic_class,R,spectral_class"), std::string::npos);
    CliResult m = run_cli("moments --help");
    EXPECT_EQ(m.exit_code, 0);
    EXPECT_NE(m.out.find("word,re,im"), std::string::npos);
}

}  // namespace
