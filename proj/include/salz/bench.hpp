#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "salz/codec.hpp"
#include "salz/window_config.hpp"

namespace salz {

// Closed-form encoder memory footprints in bytes, 4-byte integers assumed.

/// dictionary + LAB + two suffix arrays + 256-entry left index + LAB suffix array.
constexpr std::uint64_t memory_sa(std::uint64_t dict_len, std::uint64_t lab_len) noexcept {
  return dict_len + lab_len + 2 * 4 * dict_len + 4 * 256 + 4 * lab_len;
}

/// Binary tree with dict_len + 1 nodes of three integers plus a byte.
constexpr std::uint64_t memory_bt(std::uint64_t dict_len) noexcept { return 13 * dict_len + 12; }

/// Suffix tree in a hash table of hashsz slots.
constexpr std::uint64_t memory_st(std::uint64_t dict_len, std::uint64_t hashsz) noexcept {
  return 25 * dict_len + 4 * hashsz + 16;
}

constexpr std::uint64_t memory_gzip() noexcept { return 313408; }

enum class LzmaMatchFinder { kBT2, kBT3, kBT4, kHC4 };

/// Throws InvalidInput for an unknown name. Accepts BT2, BT3, BT4, HC4
/// (case-insensitive).
LzmaMatchFinder parse_match_finder(std::string_view name);
std::string_view to_string(LzmaMatchFinder mf) noexcept;

/// 4 MiB of fixed tables plus a per-byte coefficient of 9.5, 11.5, 11.5 or
/// 7.5, rounded half up to whole bytes.
std::uint64_t memory_lzma(std::uint64_t dict_len, LzmaMatchFinder mf) noexcept;

enum class EncoderKind { kSA, kBT, kST, kGzip, kLzma };
std::string_view to_string(EncoderKind kind) noexcept;

struct MemoryModel {
  EncoderKind kind;
  std::uint64_t bytes;
};

/// All five models for one parameter set, in the order SA, BT, ST, LZMA, GZIP.
std::vector<MemoryModel> memory_models(std::uint64_t dict_len, std::uint64_t lab_len,
                                       std::uint64_t hashsz, LzmaMatchFinder mf);

std::string_view to_string(MatchPolicy policy) noexcept;
/// "fast" or "best"; throws InvalidInput otherwise.
MatchPolicy parse_policy(std::string_view name);

inline double bits_per_byte(std::uint64_t compressed, std::uint64_t original) noexcept {
  return original == 0 ? 0.0 : 8.0 * static_cast<double>(compressed) / static_cast<double>(original);
}

struct CorpusFile {
  std::string name;
  Bytes data;
};

struct SkippedFile {
  std::string name;
  std::string reason;
};

struct Corpus {
  std::vector<CorpusFile> files;
  std::vector<SkippedFile> skipped;
};

/// Regular files of `dir` in name order, read fully into memory. Unreadable
/// and empty files are recorded as skipped. Throws IoError if `dir` is not a
/// readable directory.
Corpus load_corpus(const std::filesystem::path& dir);

struct BenchOptions {
  MatchPolicy policy = MatchPolicy::kBest;
  std::size_t min_match = 1;
  /// Encode the files of a configuration concurrently. Timings are then
  /// contended and flagged as such.
  bool parallel = false;
};

struct BenchResult {
  std::string file;
  WindowConfig config;
  MatchPolicy policy;
  std::uint64_t original_bytes;
  std::uint64_t compressed_bytes;
  double seconds;
  double bpb;
  std::uint64_t memory_bytes;  // memory_sa for the configuration
};

struct BenchAggregate {
  WindowConfig config;
  MatchPolicy policy;
  std::size_t file_count;
  double total_seconds;
  double mean_bpb;  // arithmetic mean of per-file bpb
  std::uint64_t memory_sa;
  std::uint64_t memory_bt;
  std::uint64_t memory_lzma_bt4;
};

struct BenchReport {
  std::vector<BenchResult> results;
  std::vector<BenchAggregate> aggregates;
  std::vector<SkippedFile> skipped;
  bool contended = false;
};

/// Encodes every file under every configuration, timing only the encode
/// call. Each output is decoded and compared before it is reported; a
/// mismatch throws std::runtime_error.
BenchReport run_benchmark(const Corpus& corpus, std::span<const WindowConfig> configs,
                          const BenchOptions& options = {});

/// Aligned table with one row per configuration.
void write_table(std::ostream& out, const BenchReport& report);

/// One JSON object per line: "file" records, then "aggregate" records, then
/// "skipped" records.
void write_jsonl(std::ostream& out, const BenchReport& report);

}  // namespace salz
