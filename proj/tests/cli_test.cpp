#include "support.hpp"

#include <gtest/gtest.h>

using namespace crimenews;
using namespace testing_support;

namespace {

std::string quoted(const fs::path& p) { return "'" + p.string() + "'"; }

std::string fixture_args(const TempDir& tmp) {
    return "-c " + quoted(data_dir() / "pipeline.conf") + " --model " + quoted(tmp / "model.nb");
}

RawRecord crime_record(const std::string& stamp, const std::string& content) {
    RawRecord r;
    r.title = "ঢাকায় ডাকাতি";
    r.content = content;
    r.category_hint = "crime";
    r.domain = "www.example.com";
    r.published_at = stamp;
    r.url = "http://www.example.com/" + stamp;
    return r;
}

} // namespace

TEST(Cli, PredictSingleCellCorpus) {
    TempDir tmp;
    write_file(tmp / "corpus/a.rec", serialize_record(crime_record("201407100800", "ঢাকা ডাকাত ডাকাত")));
    const auto r = run_cli("predict --corpus " + quoted(tmp / "corpus") + " --train-dir " + quoted(tmp / "corpus") +
                           " --stop-words " + quoted(data_dir() / "stop_words.txt") + " --stem-map " +
                           quoted(data_dir() / "stem_map.txt") + " --gazetteer " +
                           quoted(data_dir() / "gazetteer.csv") + " --model " + quoted(tmp / "m.nb") +
                           " --threshold 0 --set categories=crime --month 7 --zone ঢাকা");
    EXPECT_EQ(r.status, 0) << r.output;
    EXPECT_NE(r.output.find("zone,month,c_zm,c_tm,c_z,c_t,score\nঢাকা,7,1,1,1,1,1.000000\n"), std::string::npos)
        << r.output;
}

TEST(Cli, TrainOnEmptyCorpusNamesIngestStage) {
    TempDir tmp;
    fs::create_directories(tmp / "empty");
    const auto r = run_cli("train " + fixture_args(tmp) + " --train-dir " + quoted(tmp / "empty"));
    EXPECT_EQ(r.status, 2) << r.output;
    EXPECT_NE(r.output.find("ingest"), std::string::npos) << r.output;
    EXPECT_FALSE(fs::exists(tmp / "model.nb"));
}

TEST(Cli, ConfigErrorsExitOne) {
    TempDir tmp;
    EXPECT_EQ(run_cli("ingest --corpus " + quoted(tmp / "missing")).status, 1);
    EXPECT_EQ(run_cli("rank " + fixture_args(tmp) + " --set no_such_key=1").status, 1);
    EXPECT_EQ(run_cli("rank " + fixture_args(tmp) + " --dup-threshold abc").status, 1);
    EXPECT_EQ(run_cli("ingest -c " + quoted(tmp / "none.conf")).status, 1);
    EXPECT_EQ(run_cli("predict " + fixture_args(tmp) + " --month 13").status, 1);
    EXPECT_EQ(run_cli("").status, 1);
}

TEST(Cli, DataErrorsExitTwo) {
    TempDir tmp;
    write_file(tmp / "bad.csv", "name,kind,parent,map_x,map_y\nদোহার,thana,কোথাও,0.1,0.1\n");
    const auto r = run_cli("locate " + fixture_args(tmp) + " --gazetteer " + quoted(tmp / "bad.csv"));
    EXPECT_EQ(r.status, 2);
    EXPECT_NE(r.output.find("UnknownParent"), std::string::npos) << r.output;
}

TEST(Cli, IngestReport) {
    TempDir tmp;
    const auto r = run_cli("ingest " + fixture_args(tmp));
    EXPECT_EQ(r.status, 0);
    EXPECT_TRUE(r.output.starts_with("records=20 skipped=0\n")) << r.output;
}

TEST(Cli, PipelineMatchesSubcommandsAndIsRepeatable) {
    TempDir tmp;
    const auto base = fixture_args(tmp);
    const auto p1 = run_cli("pipeline " + base + " --out " + quoted(tmp / "out1"));
    ASSERT_EQ(p1.status, 0) << p1.output;
    ASSERT_EQ(run_cli("pipeline " + base + " --out " + quoted(tmp / "out2")).status, 0);

    for (const auto* name : {"ingest.txt", "categorized.csv", "locations.tsv", "dedup_report.txt", "rank.csv",
                             "predict.csv", "map.svg"}) {
        const auto a = read_file(tmp / "out1" / name);
        EXPECT_FALSE(a.empty()) << name;
        EXPECT_EQ(a, read_file(tmp / "out2" / name)) << name;
    }
    for (auto [cmd, name] : {std::pair{"ingest", "ingest.txt"}, {"categorize", "categorized.csv"},
                             {"locate", "locations.tsv"}, {"dedup", "dedup_report.txt"}, {"rank", "rank.csv"},
                             {"predict", "predict.csv"}, {"render", "map.svg"}}) {
        const auto r = run_cli(std::string(cmd) + " " + base, true);
        EXPECT_EQ(r.status, 0) << cmd;
        EXPECT_EQ(r.output, read_file(tmp / "out1" / name)) << cmd;
    }

    std::size_t survivors = 0;
    for ([[maybe_unused]] const auto& e : fs::directory_iterator(tmp / "out1/survivors")) ++survivors;
    EXPECT_EQ(survivors, 18u);
}

TEST(Cli, TrainWritesLoadableModel) {
    TempDir tmp;
    const auto r = run_cli("train " + fixture_args(tmp) + " --out " + quoted(tmp / "out"));
    ASSERT_EQ(r.status, 0) << r.output;
    EXPECT_TRUE(read_file(tmp / "model.nb").starts_with("nbmodel\t"));
    EXPECT_FALSE(read_file(tmp / "out/top_words.txt").empty());
    EXPECT_EQ(run_cli("categorize " + fixture_args(tmp) + " --train-dir " + quoted(tmp / "nowhere")).status, 0);
}
