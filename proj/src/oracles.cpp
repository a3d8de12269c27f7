#include "salz/oracles.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <ostream>
#include <string_view>
#include <vector>

#include "salz/codec.hpp"

namespace salz::oracle {

std::size_t longest_match_length(ByteView dictionary, ByteView lab, std::size_t i) {
  std::size_t best = 0;
  for (std::size_t p = 0; p < dictionary.size(); ++p) {
    std::size_t len = 0;
    while (p + len < dictionary.size() && i + len < lab.size() && dictionary[p + len] == lab[i + len]) {
      ++len;
    }
    best = std::max(best, len);
  }
  return best;
}

Bytes random_bytes(std::mt19937_64& rng, std::size_t length, unsigned alphabet, Byte base) {
  std::uniform_int_distribution<unsigned> dist(0, alphabet - 1);
  Bytes out(length);
  for (auto& b : out) b = static_cast<Byte>(base + dist(rng));
  return out;
}

Bytes mixed_text(std::mt19937_64& rng, std::size_t length) {
  static constexpr std::array<std::string_view, 48> kWords = {
      "the",      "of",       "and",     "to",        "in",        "a",         "is",
      "that",     "for",      "it",      "as",        "was",       "with",      "be",
      "by",       "on",       "not",     "he",        "this",      "are",       "or",
      "his",      "from",     "at",      "which",     "but",       "have",      "an",
      "had",      "they",     "you",     "were",      "their",     "one",       "all",
      "we",       "can",      "her",     "has",       "there",     "been",      "compression",
      "dictionary", "suffix", "window",  "algorithm", "encoder",   "structure"};
  std::uniform_int_distribution<std::size_t> word(0, kWords.size() - 1);
  std::uniform_int_distribution<int> roll(0, 99);
  Bytes out;
  out.reserve(length + 16);
  while (out.size() < length) {
    const int r = roll(rng);
    if (r < 3) {
      out.push_back(static_cast<Byte>(rng()));
    } else {
      const auto w = kWords[word(rng)];
      out.insert(out.end(), w.begin(), w.end());
      out.push_back(r < 10 ? '\n' : (r < 18 ? ',' : ' '));
    }
  }
  out.resize(length);
  return out;
}

std::string check_update(std::span<const SuffixIndex> before, const SlidingIndex& after,
                         ByteView slid_block) {
  const auto sa = after.active();
  const ByteView d = after.dictionary();
  const std::size_t m = d.size();
  const std::size_t b = slid_block.size();
  if (sa.size() != m || before.size() != m) return "buffer length differs from dictionary length";

  std::vector<bool> seen(m, false);
  for (auto v : sa) {
    if (v < 0 || static_cast<std::size_t>(v) >= m || seen[v]) return "not a permutation";
    seen[v] = true;
  }

  std::vector<SuffixIndex> expected_survivors;
  for (auto v : before) {
    if (static_cast<std::size_t>(v) >= b) expected_survivors.push_back(static_cast<SuffixIndex>(v - b));
  }
  std::vector<SuffixIndex> survivors;
  std::vector<SuffixIndex> fresh;
  for (auto v : sa) {
    if (static_cast<std::size_t>(v) < m - b) {
      survivors.push_back(v);
    } else {
      fresh.push_back(static_cast<SuffixIndex>(v - (m - b)));
    }
  }
  if (survivors != expected_survivors) return "survivors lost their relative order";
  if (fresh != build_suffix_array_naive(slid_block)) return "new suffixes not in block suffix order";

  for (std::size_t t = 0; t < m; ++t) {
    if (static_cast<std::size_t>(sa[t]) < m - b) continue;
    if (t > 0 && static_cast<std::size_t>(sa[t - 1]) < m - b &&
        compare_suffixes(d, sa[t - 1], sa[t]) >= 0) {
      return "inserted suffix at slot " + std::to_string(t) + " not above its left survivor";
    }
    if (t + 1 < m && static_cast<std::size_t>(sa[t + 1]) < m - b &&
        compare_suffixes(d, sa[t], sa[t + 1]) >= 0) {
      return "inserted suffix at slot " + std::to_string(t) + " not below its right survivor";
    }
  }
  return {};
}

namespace {

bool suffix_array_suite(std::mt19937_64& rng, std::size_t cases) {
  static constexpr std::array<unsigned, 3> kAlphabets = {2, 4, 256};
  const Bytes mississippi{'m', 'i', 's', 's', 'i', 's', 's', 'i', 'p', 'p', 'i'};
  if (build_suffix_array(mississippi) != build_suffix_array_naive(mississippi)) return false;
  std::uniform_int_distribution<std::size_t> len(0, 2048);
  for (std::size_t k = 0; k < cases; ++k) {
    const Bytes text = random_bytes(rng, len(rng), kAlphabets[k % kAlphabets.size()]);
    if (build_suffix_array(text) != build_suffix_array_naive(text)) return false;
  }
  return true;
}

bool match_suite(std::mt19937_64& rng, std::size_t cases) {
  static constexpr std::array<unsigned, 3> kAlphabets = {2, 4, 26};
  std::uniform_int_distribution<std::size_t> dict_len(1, 4096);
  std::uniform_int_distribution<std::size_t> lab_len(1, 256);
  for (std::size_t k = 0; k < cases; ++k) {
    const unsigned alphabet = kAlphabets[k % kAlphabets.size()];
    const Bytes dict = random_bytes(rng, dict_len(rng), alphabet, 'a');
    const Bytes lab = random_bytes(rng, lab_len(rng), alphabet + 1, 'a');
    SlidingIndex index(WindowConfig::from_lengths(4096, 4096));
    index.slide_in(dict);
    index.rebuild();
    for (std::size_t i = 0; i < lab.size(); ++i) {
      const std::size_t expected = longest_match_length(dict, lab, i);
      const auto got = index.longest_match(lab, i, MatchPolicy::kBest);
      const std::size_t got_len = got ? got->len : 0;
      if (got_len != expected) return false;
      if (got && !std::equal(lab.begin() + i, lab.begin() + i + got->len, dict.begin() + got->pos)) {
        return false;
      }
    }
  }
  return true;
}

bool update_suite(std::mt19937_64& rng, std::size_t cases) {
  static constexpr std::array<std::size_t, 3> kDictLens = {64, 256, 4096};
  std::uniform_int_distribution<unsigned> alpha(1, 4);
  for (std::size_t k = 0; k < cases; ++k) {
    const std::size_t m = kDictLens[k % kDictLens.size()];
    std::uniform_int_distribution<unsigned> lab_bits(1, static_cast<unsigned>(std::countr_zero(m)));
    const auto config = WindowConfig::from_lengths(m, std::size_t{1} << lab_bits(rng));
    const unsigned alphabet = std::array<unsigned, 4>{2, 4, 16, 256}[alpha(rng) - 1];
    SlidingIndex index(config);
    while (!index.full()) {
      index.slide_in(random_bytes(rng, config.lab_len(), alphabet));
      index.rebuild();
    }
    std::uniform_int_distribution<std::size_t> block_len(1, config.lab_len());
    for (int step = 0; step < 4; ++step) {
      const std::vector<SuffixIndex> before(index.active().begin(), index.active().end());
      const Bytes block = random_bytes(rng, block_len(rng), alphabet);
      index.slide_in(block);
      index.update(block);
      if (!check_update(before, index, block).empty()) return false;
    }
  }
  return true;
}

bool roundtrip_suite(std::mt19937_64& rng, std::size_t cases) {
  std::uniform_int_distribution<unsigned> pos_bits(1, 12);
  std::uniform_int_distribution<std::size_t> len(0, 1 << 15);
  for (std::size_t k = 0; k < cases; ++k) {
    const unsigned np = pos_bits(rng);
    std::uniform_int_distribution<unsigned> len_bits(1, np);
    const auto config = WindowConfig::from_bits(np, len_bits(rng));
    const Bytes input = k % 2 ? mixed_text(rng, len(rng)) : random_bytes(rng, len(rng), 4);
    for (auto policy : {MatchPolicy::kFast, MatchPolicy::kBest}) {
      if (decompress(compress(input, config, {policy, 1 + k % 3})) != input) return false;
    }
  }
  return true;
}

}  // namespace

bool run_selftest(std::ostream& out, const SuiteScale& scale, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  bool all = true;
  auto report = [&](std::string_view name, bool ok) {
    out << (ok ? "PASS  " : "FAIL  ") << name << "\n";
    all = all && ok;
  };
  report("suffix array matches naive sort", suffix_array_suite(rng, scale.suffix_array_cases));
  report("best match equals brute-force longest match", match_suite(rng, scale.match_cases));
  report("update keeps survivor and block order", update_suite(rng, scale.update_cases));
  report("decompress(compress(x)) == x", roundtrip_suite(rng, scale.roundtrip_cases));
  return all;
}

}  // namespace salz::oracle
