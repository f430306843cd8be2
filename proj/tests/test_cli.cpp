#include <unistd.h>

#include <cstdlib>
#include <filesystem>
#include <sstream>

#include <gtest/gtest.h>

#include "belyi/construct.hpp"
#include "belyi/height_table.hpp"
#include "belyi/json_io.hpp"
#include "belyi/newton.hpp"
#include "cli.hpp"

using namespace belyi;
using json::Json;
namespace fs = std::filesystem;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
    Json json() const { return Json::parse(out); }
};

Run run(std::vector<std::string> args, const std::string& stdin_text = "") {
    args.insert(args.begin(), "belyi");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::istringstream in(stdin_text);
    std::ostringstream out, err;
    const int code = cli::run(static_cast<int>(argv.size()), argv.data(), in, out, err);
    return {code, out.str(), err.str()};
}

const std::string kH1 = R"({"coeffs":["0","-125","1275","-3375","625"]})";
const std::string kH3 = R"({"coeffs":["0","0","0","0","3125/256","-3125/256"]})";

}  // namespace

TEST(Cli, CheckCertifies) {
    const auto r = run({"check", R"({"coeffs":["0","4","-4"]})"});
    EXPECT_EQ(r.code, 0);
    const Json j = r.json();
    EXPECT_TRUE(j["belyi"].get<bool>());
    const auto cert = json::certificate_from_json(j["certificate"]);
    EXPECT_EQ(cert.subject, (Poly{0, 4, -4}));
}

TEST(Cli, CheckFailureAndUsage) {
    const auto fail = run({"check", R"({"coeffs":["1","0","1"]})"});
    EXPECT_EQ(fail.code, 1);
    EXPECT_EQ(fail.json()["reason"], "endpoint B(1)=2");
    EXPECT_EQ(run({"check", "{not json"}).code, 2);
    EXPECT_EQ(run({"check", R"({"coeffs":["7"]})"}).code, 1);
    EXPECT_EQ(run({"check", R"({"coeffs":[0.25]})"}).code, 2);
}

TEST(Cli, CheckReadsStdin) {
    EXPECT_EQ(run({"check"}, R"({"coeffs":["0","0","1"]})").code, 0);
    EXPECT_EQ(run({"check", "-"}, R"({"coeffs":["0","0","1"]})").code, 0);
}

TEST(Cli, Newton) {
    const auto r = run({"newton", kH1, "--prime", "5"});
    ASSERT_EQ(r.code, 0) << r.err;
    const Json j = r.json();
    EXPECT_EQ(j["polygon"]["vertices"], Json::parse("[[1,3],[2,2],[4,4]]"));
    EXPECT_EQ(json::polygon_from_json(j["polygon"]), newton_polygon(json::poly_from_json(Json::parse(kH1)), Prime(5)));
    EXPECT_EQ(json::profile_from_json(j["profile"]).zero_multiplicity, 1);

    const auto m = run({"newton", kH3, "-p", "5", "--minus-one"});
    ASSERT_EQ(m.code, 0) << m.err;
    EXPECT_EQ(m.json()["minus_one"]["minus_one_polygon"]["vertices"], Json::parse("[[0,0],[5,5]]"));
    EXPECT_TRUE(m.json()["minus_one"]["single_segment"].get<bool>());

    const auto x = run({"newton", R"({"coeffs":["0","1"]})", "-p", "2"});
    EXPECT_EQ(x.json()["polygon"]["vertices"].size(), 1u);

    EXPECT_EQ(run({"newton", R"({"coeffs":[]})", "-p", "5"}).code, 2);
    EXPECT_EQ(run({"newton", kH1, "-p", "6"}).code, 2);
    EXPECT_EQ(run({"newton", kH1}).code, 2);
}

TEST(Cli, Construct) {
    const auto five = run({"construct", "--lambda", "5"});
    ASSERT_EQ(five.code, 0) << five.err;
    const auto trace = json::trace_from_json(five.json());
    EXPECT_EQ(trace.result.subject, belyi_ab(1, 5).compose(Poly{0, Rational(Integer(1), Integer(5))}));
    EXPECT_EQ(replay(trace.base, trace.steps), trace.result.subject);
    EXPECT_EQ(json::trace_from_json(run({"construct", "--lambda", "1/3"}).json()).result.subject, belyi_ab(1, 3));
    EXPECT_EQ(json::trace_from_json(run({"construct", "--lambda", "0"}).json()).result.subject, Poly::x());
    EXPECT_EQ(run({"construct", "--lambda", "-1/2"}).code, 0);
    EXPECT_EQ(run({"construct", "--lambda=-1/2"}).code, 0);
    EXPECT_EQ(run({"construct", "--lambda", "x"}).code, 2);
    EXPECT_EQ(run({"construct"}).code, 2);
}

TEST(Cli, HeightAppendsToTable) {
    const fs::path table = fs::temp_directory_path() / ("belyi_cli_" + std::to_string(::getpid()) + ".jsonl");
    fs::remove(table);
    const auto four = run({"height", "--lambda", "4", "--table", table.string()});
    ASSERT_EQ(four.code, 0) << four.err;
    EXPECT_EQ(four.json()["height"], 3);
    EXPECT_TRUE(four.json()["exact"].get<bool>());
    const auto seven = run({"height", "--lambda", "7", "--table", table.string()});
    EXPECT_EQ(seven.json()["height"], 7);
    const auto neg = run({"height", "--lambda", "-1", "--table", table.string()});
    EXPECT_EQ(neg.json()["lower"], 1);
    EXPECT_EQ(load_table(table).size(), 3u);

    ::setenv("BELYI_TABLE", table.string().c_str(), 1);
    run({"height", "--lambda", "2"});
    ::unsetenv("BELYI_TABLE");
    EXPECT_EQ(load_table(table).size(), 4u);
    run({"height", "--lambda", "2", "--table", table.string(), "--no-table"});
    EXPECT_EQ(load_table(table).size(), 4u);
    fs::remove(table);
}

TEST(Cli, Verify) {
    const auto r = run({"verify", "--suite", "theorems", "--max-b", "3", "--chebyshev-max-n", "4", "--prime-ceiling", "13"});
    EXPECT_EQ(r.code, 0) << r.out;
    EXPECT_EQ(r.json()["failures"], 0);
    EXPECT_EQ(run({"verify", "--suite", "nope"}).code, 2);
    EXPECT_EQ(run({"verify"}).code, 2);
}

TEST(Cli, HelpAndUsage) {
    const auto h = run({"--help"});
    EXPECT_EQ(h.code, 0);
    EXPECT_NE(h.out.find("construct"), std::string::npos);
    EXPECT_EQ(run({}).code, 2);
    EXPECT_EQ(run({"frobnicate"}).code, 2);
}
