#include <sys/wait.h>
#include <unistd.h>

#include <filesystem>
#include <fstream>
#include <random>

#include <gtest/gtest.h>

#include "belyi/height_table.hpp"
#include "support.hpp"

using namespace belyi;
using belyi::testing::q;
namespace fs = std::filesystem;

namespace {

class TempTable : public ::testing::Test {
protected:
    void SetUp() override {
        dir_ = fs::temp_directory_path() / ("belyi_table_" + std::to_string(::getpid()) + "_" +
                                            ::testing::UnitTest::GetInstance()->current_test_info()->name());
        fs::create_directories(dir_);
        path_ = dir_ / "heights.jsonl";
    }
    void TearDown() override { fs::remove_all(dir_); }

    fs::path dir_;
    fs::path path_;
};

}  // namespace

TEST_F(TempTable, MissingFileIsEmpty) { EXPECT_TRUE(load_table(path_).empty()); }

TEST_F(TempTable, AppendAndLoad) {
    const auto r4 = make_record(height(4), "2026-01-01T00:00:00Z");
    const auto r7 = make_record(height(7), "2026-01-01T00:00:01Z");
    append_record(path_, r4);
    append_record(path_, r7);
    const auto loaded = load_table(path_);
    ASSERT_EQ(loaded.size(), 2u);
    EXPECT_EQ(loaded[0], r4);
    EXPECT_EQ(loaded[1], r7);
    EXPECT_EQ(loaded[0].upper, 3u);
    EXPECT_TRUE(loaded[0].exact);
}

TEST_F(TempTable, RecordShape) {
    const auto j = to_json(make_record(height(q("1/3")), "2026-01-01T00:00:00Z"));
    EXPECT_EQ(j.dump(),
              R"({"lambda":"1/3","lower":3,"upper":3,"exact":true,"witness_coeffs":["0","27/4","-27/2","27/4"],"timestamp":"2026-01-01T00:00:00Z"})");
    const std::string ts = utc_timestamp();
    EXPECT_EQ(ts.size(), 20u);
    EXPECT_EQ(ts.back(), 'Z');
}

TEST_F(TempTable, LoadRevalidates) {
    auto j = to_json(make_record(height(4), "t"));
    j["lambda"] = "5";  // witness no longer sends lambda to {0,1}
    std::ofstream(path_) << j.dump() << "\n";
    EXPECT_THROW(load_table(path_), json::FormatError);

    std::ofstream(path_) << R"({"lambda":"2","lower":2,"upper":2,"exact":true,"witness_coeffs":["1","0","1"],"timestamp":"t"})" << "\n";
    EXPECT_THROW(load_table(path_), json::FormatError);

    std::ofstream(path_) << "not json\n";
    try {
        load_table(path_);
        FAIL();
    } catch (const json::FormatError& e) {
        EXPECT_NE(std::string(e.what()).find(":1"), std::string::npos);
    }
}

TEST_F(TempTable, CompactKeepsBestRecord) {
    const auto good = make_record(height(4), "a");
    // B_{1,4}(x/4) sends 4 to 0 with degree 4.
    const HeightRecord worse{Rational(4), 2, 4, false, belyi_ab(1, 4).compose(Poly{0, q("1/4")}), "b"};
    ASSERT_EQ(worse.witness.degree(), 4);
    append_record(path_, worse);
    append_record(path_, make_record(height(7), "c"));
    append_record(path_, good);
    ASSERT_EQ(load_table(path_).size(), 3u);
    compact_table(path_);
    const auto kept = load_table(path_);
    ASSERT_EQ(kept.size(), 2u);
    EXPECT_EQ(kept[0].lambda, Rational(4));
    EXPECT_EQ(kept[0].upper, 3u);
    EXPECT_EQ(kept[1].lambda, Rational(7));
}

TEST_F(TempTable, ConcurrentAppendsDoNotInterleave) {
    constexpr int kWriters = 4;
    constexpr int kPerWriter = 25;
    std::vector<pid_t> children;
    for (int w = 0; w < kWriters; ++w) {
        const pid_t pid = ::fork();
        ASSERT_GE(pid, 0);
        if (pid == 0) {
            for (int i = 0; i < kPerWriter; ++i) append_record(path_, make_record(height(Rational(Integer(i + 2), Integer(w + 1)))));
            ::_exit(0);
        }
        children.push_back(pid);
    }
    for (pid_t pid : children) {
        int status = 0;
        ::waitpid(pid, &status, 0);
        EXPECT_TRUE(WIFEXITED(status) && WEXITSTATUS(status) == 0);
    }
    EXPECT_EQ(load_table(path_).size(), static_cast<std::size_t>(kWriters * kPerWriter));
}
