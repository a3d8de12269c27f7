#include "salz/bench.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <future>
#include <iomanip>
#include <iterator>
#include <limits>
#include <ostream>
#include <stdexcept>

#include <nlohmann/json.hpp>

#include "salz/errors.hpp"

namespace salz {

namespace {

std::string upper(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return static_cast<char>(std::toupper(c)); });
  return out;
}

struct Timed {
  std::uint64_t compressed_bytes;
  double seconds;
};

Timed encode_and_verify(const CorpusFile& file, const WindowConfig& config,
                        const BenchOptions& options) {
  EncodeStats stats;
  const Bytes encoded = compress(file.data, config, {options.policy, options.min_match}, &stats);
  if (decompress(encoded) != file.data) {
    throw std::runtime_error("roundtrip verification failed for " + file.name);
  }
  return {encoded.size(), stats.seconds};
}

}  // namespace

LzmaMatchFinder parse_match_finder(std::string_view name) {
  const std::string u = upper(name);
  if (u == "BT2") return LzmaMatchFinder::kBT2;
  if (u == "BT3") return LzmaMatchFinder::kBT3;
  if (u == "BT4") return LzmaMatchFinder::kBT4;
  if (u == "HC4") return LzmaMatchFinder::kHC4;
  throw InvalidInput("unknown match finder '" + std::string(name) + "'");
}

std::string_view to_string(LzmaMatchFinder mf) noexcept {
  switch (mf) {
    case LzmaMatchFinder::kBT2: return "BT2";
    case LzmaMatchFinder::kBT3: return "BT3";
    case LzmaMatchFinder::kBT4: return "BT4";
    case LzmaMatchFinder::kHC4: return "HC4";
  }
  return "?";
}

std::uint64_t memory_lzma(std::uint64_t dict_len, LzmaMatchFinder mf) noexcept {
  // Coefficients doubled so the arithmetic stays integral.
  std::uint64_t twice = 0;
  switch (mf) {
    case LzmaMatchFinder::kBT2: twice = 19; break;
    case LzmaMatchFinder::kBT3:
    case LzmaMatchFinder::kBT4: twice = 23; break;
    case LzmaMatchFinder::kHC4: twice = 15; break;
  }
  return 4194304 + (twice * dict_len + 1) / 2;
}

std::string_view to_string(EncoderKind kind) noexcept {
  switch (kind) {
    case EncoderKind::kSA: return "SA";
    case EncoderKind::kBT: return "BT";
    case EncoderKind::kST: return "ST";
    case EncoderKind::kGzip: return "GZIP";
    case EncoderKind::kLzma: return "LZMA";
  }
  return "?";
}

std::vector<MemoryModel> memory_models(std::uint64_t dict_len, std::uint64_t lab_len,
                                       std::uint64_t hashsz, LzmaMatchFinder mf) {
  return {
      {EncoderKind::kSA, memory_sa(dict_len, lab_len)},
      {EncoderKind::kBT, memory_bt(dict_len)},
      {EncoderKind::kST, memory_st(dict_len, hashsz)},
      {EncoderKind::kLzma, memory_lzma(dict_len, mf)},
      {EncoderKind::kGzip, memory_gzip()},
  };
}

std::string_view to_string(MatchPolicy policy) noexcept {
  return policy == MatchPolicy::kFast ? "fast" : "best";
}

MatchPolicy parse_policy(std::string_view name) {
  if (name == "fast") return MatchPolicy::kFast;
  if (name == "best") return MatchPolicy::kBest;
  throw InvalidInput("unknown policy '" + std::string(name) + "' (expected fast or best)");
}

Corpus load_corpus(const std::filesystem::path& dir) {
  namespace fs = std::filesystem;
  std::error_code ec;
  if (!fs::is_directory(dir, ec)) throw IoError("corpus " + dir.string() + " is not a directory");

  std::vector<fs::path> paths;
  for (fs::directory_iterator it(dir, ec), end; !ec && it != end; it.increment(ec)) {
    if (it->is_regular_file(ec)) paths.push_back(it->path());
  }
  if (ec) throw IoError("cannot list " + dir.string() + ": " + ec.message());
  std::sort(paths.begin(), paths.end());

  Corpus corpus;
  for (const auto& path : paths) {
    const std::string name = path.filename().string();
    std::ifstream in(path, std::ios::binary);
    if (!in) {
      corpus.skipped.push_back({name, "cannot open"});
      continue;
    }
    Bytes data{std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
    if (in.bad()) {
      corpus.skipped.push_back({name, "read error"});
    } else if (data.empty()) {
      corpus.skipped.push_back({name, "empty file"});
    } else if (data.size() > std::numeric_limits<std::uint32_t>::max()) {
      corpus.skipped.push_back({name, "larger than 4 GiB"});
    } else {
      corpus.files.push_back({name, std::move(data)});
    }
  }
  return corpus;
}

BenchReport run_benchmark(const Corpus& corpus, std::span<const WindowConfig> configs,
                          const BenchOptions& options) {
  BenchReport report;
  report.skipped = corpus.skipped;
  report.contended = options.parallel && corpus.files.size() > 1;

  for (const auto& config : configs) {
    std::vector<Timed> timings(corpus.files.size());
    if (options.parallel) {
      std::vector<std::future<Timed>> jobs;
      jobs.reserve(corpus.files.size());
      for (const auto& file : corpus.files) {
        jobs.push_back(std::async(std::launch::async, encode_and_verify, std::cref(file),
                                  std::cref(config), std::cref(options)));
      }
      for (std::size_t i = 0; i < jobs.size(); ++i) timings[i] = jobs[i].get();
    } else {
      for (std::size_t i = 0; i < corpus.files.size(); ++i) {
        timings[i] = encode_and_verify(corpus.files[i], config, options);
      }
    }

    BenchAggregate agg{config,
                       options.policy,
                       corpus.files.size(),
                       0.0,
                       0.0,
                       memory_sa(config.dict_len(), config.lab_len()),
                       memory_bt(config.dict_len()),
                       memory_lzma(config.dict_len(), LzmaMatchFinder::kBT4)};
    for (std::size_t i = 0; i < corpus.files.size(); ++i) {
      const auto& file = corpus.files[i];
      const double bpb = bits_per_byte(timings[i].compressed_bytes, file.data.size());
      report.results.push_back({file.name, config, options.policy, file.data.size(),
                                timings[i].compressed_bytes, timings[i].seconds, bpb,
                                agg.memory_sa});
      agg.total_seconds += timings[i].seconds;
      agg.mean_bpb += bpb;
    }
    if (agg.file_count > 0) agg.mean_bpb /= static_cast<double>(agg.file_count);
    report.aggregates.push_back(agg);
  }
  return report;
}

void write_table(std::ostream& out, const BenchReport& report) {
  const auto flags = out.flags();
  out << std::left << std::setw(4) << "#" << std::right << std::setw(12) << "Dictionary"
      << std::setw(8) << "LAB" << std::setw(10) << "Memory" << std::setw(10) << "Time"
      << std::setw(8) << "bpb" << std::setw(12) << "BT Memory" << std::setw(14) << "LZMA Memory"
      << "\n";
  std::size_t row = 1;
  for (const auto& agg : report.aggregates) {
    out << std::left << std::setw(4) << row++ << std::right << std::setw(12)
        << agg.config.dict_len() << std::setw(8) << agg.config.lab_len() << std::setw(10)
        << agg.memory_sa << std::setw(10) << std::fixed << std::setprecision(2)
        << agg.total_seconds << std::setw(8) << agg.mean_bpb << std::setw(12) << agg.memory_bt
        << std::setw(14) << agg.memory_lzma_bt4 << "\n";
  }
  out << "policy: "
      << (report.aggregates.empty() ? "-" : to_string(report.aggregates.front().policy))
      << "; GZip memory " << memory_gzip() << " bytes; LZMA memory uses BT4";
  if (report.contended) out << "; timings contended (parallel mode)";
  out << "\n";
  for (const auto& s : report.skipped) out << "skipped " << s.name << ": " << s.reason << "\n";
  out.flags(flags);
}

void write_jsonl(std::ostream& out, const BenchReport& report) {
  using nlohmann::json;
  for (const auto& r : report.results) {
    out << json{{"type", "file"},
                {"file", r.file},
                {"dict", r.config.dict_len()},
                {"lab", r.config.lab_len()},
                {"policy", to_string(r.policy)},
                {"original_bytes", r.original_bytes},
                {"compressed_bytes", r.compressed_bytes},
                {"seconds", r.seconds},
                {"bpb", r.bpb},
                {"memory_sa", r.memory_bytes},
                {"contended", report.contended}}
               .dump()
        << "\n";
  }
  for (const auto& a : report.aggregates) {
    out << json{{"type", "aggregate"},
                {"dict", a.config.dict_len()},
                {"lab", a.config.lab_len()},
                {"policy", to_string(a.policy)},
                {"files", a.file_count},
                {"total_seconds", a.total_seconds},
                {"mean_bpb", a.mean_bpb},
                {"memory_sa", a.memory_sa},
                {"memory_bt", a.memory_bt},
                {"memory_lzma_bt4", a.memory_lzma_bt4},
                {"memory_gzip", memory_gzip()},
                {"contended", report.contended}}
               .dump()
        << "\n";
  }
  for (const auto& s : report.skipped) {
    out << json{{"type", "skipped"}, {"file", s.name}, {"reason", s.reason}}.dump() << "\n";
  }
}

}  // namespace salz
