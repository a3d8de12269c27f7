#include "salz/bench.hpp"

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include <nlohmann/json.hpp>

#include "salz/errors.hpp"
#include "salz/oracles.hpp"

namespace salz {
namespace {

namespace fs = std::filesystem;

struct TableRow {
  std::uint64_t dict_len, lab_len, sa, bt, lzma_bt4;
};

// Memory columns of the Calgary table.
constexpr TableRow kTable[] = {
    {2048, 1024, 24576, 26636, 4217856},    {4096, 1024, 43008, 53260, 4241408},
    {4096, 2048, 48128, 53260, 4241408},    {8192, 2048, 84992, 106508, 4288512},
    {16384, 256, 149760, 213004, 4382720},  {32768, 256, 297216, 425996, 4571136},
    {32768, 1024, 301056, 425996, 4571136}, {32768, 2048, 306176, 425996, 4571136},
};

TEST(MemoryModelTest, TableColumns) {
  for (const auto& row : kTable) {
    EXPECT_EQ(memory_sa(row.dict_len, row.lab_len), row.sa) << row.dict_len << "," << row.lab_len;
    EXPECT_EQ(memory_bt(row.dict_len), row.bt) << row.dict_len;
    EXPECT_EQ(memory_lzma(row.dict_len, LzmaMatchFinder::kBT4), row.lzma_bt4) << row.dict_len;
  }
}

TEST(MemoryModelTest, LargeWindowExample) {
  EXPECT_EQ(memory_sa(65536, 4096), 611328u);
  EXPECT_EQ(memory_bt(65536), 851980u);
  EXPECT_EQ(memory_st(65536, 65536), 1900560u);
  EXPECT_EQ(memory_lzma(65536, LzmaMatchFinder::kBT2), 4816896u);
  EXPECT_EQ(memory_gzip(), 313408u);
}

TEST(MemoryModelTest, SmallCases) {
  EXPECT_EQ(memory_bt(0), 12u);
  EXPECT_EQ(memory_st(0, 0), 16u);
  EXPECT_EQ(memory_st(1024, 256), 26640u);
  EXPECT_EQ(memory_lzma(0, LzmaMatchFinder::kHC4), 4194304u);
  EXPECT_EQ(memory_lzma(1, LzmaMatchFinder::kBT2), 4194314u);  // 9.5 rounds up
  EXPECT_EQ(memory_lzma(2, LzmaMatchFinder::kHC4), 4194319u);
  EXPECT_EQ(memory_lzma(2048, LzmaMatchFinder::kBT3), memory_lzma(2048, LzmaMatchFinder::kBT4));
}

TEST(MemoryModelTest, Ordering) {
  const auto models = memory_models(65536, 4096, 65536, LzmaMatchFinder::kBT2);
  ASSERT_EQ(models.size(), 5u);
  const char* names[] = {"SA", "BT", "ST", "LZMA", "GZIP"};
  const std::uint64_t bytes[] = {611328, 851980, 1900560, 4816896, 313408};
  for (std::size_t i = 0; i < 5; ++i) {
    EXPECT_EQ(to_string(models[i].kind), names[i]);
    EXPECT_EQ(models[i].bytes, bytes[i]);
  }
}

TEST(NamesTest, ParseAndPrint) {
  EXPECT_EQ(parse_match_finder("bt4"), LzmaMatchFinder::kBT4);
  EXPECT_EQ(parse_match_finder("HC4"), LzmaMatchFinder::kHC4);
  EXPECT_EQ(to_string(LzmaMatchFinder::kBT3), "BT3");
  EXPECT_THROW(parse_match_finder("BT5"), InvalidInput);
  EXPECT_EQ(parse_policy("fast"), MatchPolicy::kFast);
  EXPECT_EQ(to_string(MatchPolicy::kBest), "best");
  EXPECT_THROW(parse_policy("slow"), InvalidInput);
  EXPECT_DOUBLE_EQ(bits_per_byte(1, 2), 4.0);
  EXPECT_DOUBLE_EQ(bits_per_byte(5, 0), 0.0);
}

class BenchTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("salz_bench_" + std::to_string(::testing::UnitTest::GetInstance()->random_seed()) + "_" +
            ::testing::UnitTest::GetInstance()->current_test_info()->name());
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  void put(const std::string& name, const Bytes& data) {
    std::ofstream out(dir_ / name, std::ios::binary);
    out.write(reinterpret_cast<const char*>(data.data()), static_cast<std::streamsize>(data.size()));
  }

  fs::path dir_;
};

TEST_F(BenchTest, RandomFileCost) {
  std::mt19937_64 rng(59);
  put("random.bin", oracle::random_bytes(rng, std::size_t{1} << 20, 256));
  const Corpus corpus = load_corpus(dir_);
  const WindowConfig configs[] = {WindowConfig::from_lengths(2048, 1024)};

  // A 22-bit match is only cheaper than literals from length 3 up. Below
  // that nearly every byte is literal-coded at 9 bits.
  auto report = run_benchmark(corpus, configs, {MatchPolicy::kBest, 3});
  ASSERT_EQ(report.results.size(), 1u);
  EXPECT_GT(report.results[0].bpb, 8.0);
  EXPECT_LT(report.results[0].bpb, 9.1);
  EXPECT_EQ(report.results[0].memory_bytes, 24576u);

  // With every one-byte candidate taken as a match, random data expands
  // far past 9 bits per byte.
  report = run_benchmark(corpus, configs, {MatchPolicy::kBest, 1});
  EXPECT_GT(report.results[0].bpb, 16.0);
}

TEST_F(BenchTest, SkipsEmptyFilesAndAggregates) {
  std::mt19937_64 rng(61);
  put("b.txt", oracle::mixed_text(rng, 20000));
  put("a.txt", oracle::mixed_text(rng, 10000));
  put("empty", {});
  const Corpus corpus = load_corpus(dir_);
  ASSERT_EQ(corpus.files.size(), 2u);
  EXPECT_EQ(corpus.files[0].name, "a.txt");
  ASSERT_EQ(corpus.skipped.size(), 1u);
  EXPECT_EQ(corpus.skipped[0].name, "empty");

  const WindowConfig configs[] = {WindowConfig::from_lengths(2048, 1024),
                                  WindowConfig::from_lengths(32768, 2048)};
  for (bool parallel : {false, true}) {
    const auto report = run_benchmark(corpus, configs, {MatchPolicy::kBest, 1, parallel});
    EXPECT_EQ(report.contended, parallel);
    ASSERT_EQ(report.results.size(), 4u);
    ASSERT_EQ(report.aggregates.size(), 2u);
    const auto& agg = report.aggregates[1];
    EXPECT_EQ(agg.file_count, 2u);
    EXPECT_EQ(agg.memory_sa, 306176u);
    EXPECT_EQ(agg.memory_bt, 425996u);
    EXPECT_EQ(agg.memory_lzma_bt4, 4571136u);
    EXPECT_DOUBLE_EQ(agg.mean_bpb, (report.results[2].bpb + report.results[3].bpb) / 2);

    std::ostringstream table;
    write_table(table, report);
    EXPECT_NE(table.str().find("306176"), std::string::npos);
    EXPECT_NE(table.str().find("313408"), std::string::npos);

    std::ostringstream jsonl;
    write_jsonl(jsonl, report);
    std::istringstream lines(jsonl.str());
    std::string line;
    int files = 0, aggregates = 0, skipped = 0;
    while (std::getline(lines, line)) {
      const auto j = nlohmann::json::parse(line);
      const auto type = j.at("type").get<std::string>();
      if (type == "file") ++files;
      if (type == "aggregate") {
        ++aggregates;
        EXPECT_EQ(j.at("memory_gzip").get<std::uint64_t>(), 313408u);
      }
      if (type == "skipped") ++skipped;
    }
    EXPECT_EQ(files, 4);
    EXPECT_EQ(aggregates, 2);
    EXPECT_EQ(skipped, 1);
  }
}

TEST_F(BenchTest, MissingDirectory) {
  EXPECT_THROW(load_corpus(dir_ / "nope"), IoError);
}

}  // namespace
}  // namespace salz
