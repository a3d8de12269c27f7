#include "cli.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iterator>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>

#include "salz/bench.hpp"
#include "salz/codec.hpp"
#include "salz/errors.hpp"
#include "salz/oracles.hpp"

namespace salz::cli {

namespace {

namespace fs = std::filesystem;

// Dictionary/LAB pairs of the reference benchmark tables.
const std::vector<std::pair<std::uint64_t, std::uint64_t>> kTableConfigs = {
    {2048, 1024}, {4096, 1024},  {4096, 2048},  {8192, 2048},
    {16384, 256}, {32768, 256}, {32768, 1024}, {32768, 2048}};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

Bytes read_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string());
  Bytes data{std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
  if (in.bad()) throw IoError("error reading " + path.string());
  return data;
}

// Writes next to the target and renames, so a failed run leaves no partial
// output behind.
void write_file_atomically(const fs::path& path, const std::string& contents) {
  fs::path tmp = path;
  tmp += ".salz-tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot create " + tmp.string());
    out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
    out.close();
    if (!out) {
      std::error_code ec;
      fs::remove(tmp, ec);
      throw IoError("error writing " + tmp.string());
    }
  }
  std::error_code ec;
  fs::rename(tmp, path, ec);
  if (ec) {
    fs::remove(tmp, ec);
    throw IoError("cannot rename output to " + path.string());
  }
}

void write_file_atomically(const fs::path& path, const Bytes& contents) {
  write_file_atomically(path, std::string(contents.begin(), contents.end()));
}

WindowConfig window_or_usage(std::uint64_t dict_len, std::uint64_t lab_len) {
  try {
    return WindowConfig::from_lengths(dict_len, lab_len);
  } catch (const ConfigError& e) {
    throw UsageError(e.what());
  }
}

WindowConfig parse_config_pair(const std::string& text) {
  const auto comma = text.find(',');
  if (comma == std::string::npos) throw UsageError("--config expects M,N but got '" + text + "'");
  try {
    std::size_t used = 0;
    const auto m = std::stoull(text.substr(0, comma), &used);
    if (used != comma) throw std::invalid_argument(text);
    const auto rest = text.substr(comma + 1);
    const auto n = std::stoull(rest, &used);
    if (used != rest.size()) throw std::invalid_argument(text);
    return window_or_usage(m, n);
  } catch (const std::logic_error&) {
    throw UsageError("--config expects M,N but got '" + text + "'");
  }
}

struct Options {
  std::uint64_t dict_len = 32768;
  std::uint64_t lab_len = 1024;
  std::string policy = "best";
  std::size_t min_match = 1;
  std::string input;
  std::string output;
  std::optional<std::uint64_t> hashsz;
  std::string match_finder = "BT4";
  std::string corpus;
  std::vector<std::string> configs;
  std::string report;
  bool parallel = false;
};

int do_compress(const Options& o, std::ostream& out) {
  const auto config = window_or_usage(o.dict_len, o.lab_len);
  const MatchPolicy policy = parse_policy(o.policy);
  const Bytes input = read_file(o.input);
  EncodeStats stats;
  const Bytes encoded = compress(input, config, {policy, o.min_match}, &stats);
  write_file_atomically(o.output, encoded);
  out << o.input << ": " << stats.input_bytes << " -> " << stats.output_bytes << " bytes, "
      << bits_per_byte(stats.output_bytes, stats.input_bytes) << " bpb, " << stats.match_count
      << " matches, " << stats.literal_count << " literals, " << stats.seconds << " s\n";
  return kExitOk;
}

int do_decompress(const Options& o, std::ostream& out) {
  const Bytes stream = read_file(o.input);
  DecodeStats stats;
  const Bytes decoded = decompress(stream, &stats);
  write_file_atomically(o.output, decoded);
  out << o.input << ": " << stats.output_bytes << " bytes from " << stats.token_count
      << " tokens\n";
  return kExitOk;
}

int do_memory(const Options& o, std::ostream& out) {
  const auto config = window_or_usage(o.dict_len, o.lab_len);
  const auto mf = parse_match_finder(o.match_finder);
  const std::uint64_t hashsz = o.hashsz.value_or(config.dict_len());
  for (const auto& model : memory_models(config.dict_len(), config.lab_len(), hashsz, mf)) {
    out << to_string(model.kind) << " " << model.bytes << "\n";
  }
  return kExitOk;
}

int do_bench(const Options& o, std::ostream& out, std::ostream& err) {
  std::vector<WindowConfig> configs;
  for (const auto& text : o.configs) configs.push_back(parse_config_pair(text));
  if (configs.empty()) {
    for (const auto& [m, n] : kTableConfigs) configs.push_back(WindowConfig::from_lengths(m, n));
  }
  const MatchPolicy policy = parse_policy(o.policy);
  const Corpus corpus = load_corpus(o.corpus);
  for (const auto& s : corpus.skipped) err << "warning: skipping " << s.name << ": " << s.reason << "\n";
  const BenchReport report = run_benchmark(corpus, configs, {policy, o.min_match, o.parallel});
  write_table(out, report);
  if (!o.report.empty()) {
    std::ostringstream jsonl;
    write_jsonl(jsonl, report);
    write_file_atomically(o.report, jsonl.str());
  }
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"LZSS compressor with a sliding-window suffix array match finder", "salz"};
  app.require_subcommand(1);
  Options o;

  auto add_window = [&](CLI::App* sub) {
    sub->add_option("--dict", o.dict_len, "Dictionary length (power of two)")->capture_default_str();
    sub->add_option("--lab", o.lab_len, "Look-ahead buffer length (power of two)")->capture_default_str();
  };
  auto add_policy = [&](CLI::App* sub) {
    sub->add_option("--policy", o.policy, "Match choice")
        ->check(CLI::IsMember({"fast", "best"}))
        ->capture_default_str();
    sub->add_option("--min-match", o.min_match, "Shortest match emitted as a match token")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
  };

  auto* compress_cmd = app.add_subcommand("compress", "Compress IN to OUT");
  add_window(compress_cmd);
  add_policy(compress_cmd);
  compress_cmd->add_option("IN", o.input)->required();
  compress_cmd->add_option("OUT", o.output)->required();

  auto* decompress_cmd = app.add_subcommand("decompress", "Decompress IN to OUT");
  decompress_cmd->add_option("IN", o.input)->required();
  decompress_cmd->add_option("OUT", o.output)->required();

  auto* memory_cmd = app.add_subcommand("memory", "Print encoder memory models in bytes");
  add_window(memory_cmd);
  memory_cmd->add_option("--hashsz", o.hashsz, "Suffix-tree hash table size (default: --dict)");
  memory_cmd->add_option("--mf", o.match_finder, "LZMA match finder")
      ->check(CLI::IsMember({"BT2", "BT3", "BT4", "HC4"}, CLI::ignore_case))
      ->capture_default_str();

  auto* bench_cmd = app.add_subcommand("bench", "Benchmark a corpus directory");
  bench_cmd->add_option("--corpus", o.corpus, "Directory of input files")->required();
  bench_cmd->add_option("--config", o.configs, "Dictionary,LAB pair; repeatable");
  add_policy(bench_cmd);
  bench_cmd->add_option("--report", o.report, "Write per-file JSON lines here");
  bench_cmd->add_flag("--parallel", o.parallel, "Encode files concurrently (contended timings)");

  auto* selftest_cmd = app.add_subcommand("selftest", "Run the oracle suites");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == static_cast<int>(CLI::ExitCodes::Success) ? kExitOk : kExitUsage;
  }

  try {
    if (*compress_cmd) return do_compress(o, out);
    if (*decompress_cmd) return do_decompress(o, out);
    if (*memory_cmd) return do_memory(o, out);
    if (*bench_cmd) return do_bench(o, out, err);
    if (*selftest_cmd) {
      return oracle::run_selftest(out, oracle::SuiteScale{}) ? kExitOk : kExitFailure;
    }
  } catch (const UsageError& e) {
    err << "salz: " << e.what() << "\n" << app.help();
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "salz: " << e.what() << "\n";
    return kExitFailure;
  }
  return kExitUsage;
}

}  // namespace salz::cli
