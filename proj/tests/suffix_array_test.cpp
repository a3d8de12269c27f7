#include "salz/suffix_array.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <chrono>
#include <random>
#include <string_view>

#include "salz/errors.hpp"
#include "salz/oracles.hpp"

namespace salz {
namespace {

Bytes bytes_of(std::string_view s) { return Bytes(s.begin(), s.end()); }

// The classic example is usually printed 1-based.
SuffixArray one_based(const SuffixArray& sa) {
  SuffixArray out(sa);
  for (auto& v : out) ++v;
  return out;
}

TEST(SuffixArrayTest, Mississippi) {
  const auto sa = build_suffix_array(bytes_of("mississippi"));
  EXPECT_EQ(one_based(sa), (SuffixArray{11, 8, 5, 2, 1, 10, 9, 7, 4, 6, 3}));
}

TEST(SuffixArrayTest, RunOfOneSymbolSortsShortestFirst) {
  EXPECT_EQ(one_based(build_suffix_array(bytes_of("aaa"))), (SuffixArray{3, 2, 1}));
}

TEST(SuffixArrayTest, SmallCases) {
  EXPECT_TRUE(build_suffix_array({}).empty());
  EXPECT_EQ(build_suffix_array(bytes_of("z")), (SuffixArray{0}));
  EXPECT_EQ(build_suffix_array(bytes_of("ba")), (SuffixArray{1, 0}));
  EXPECT_EQ(build_suffix_array(bytes_of("ab")), (SuffixArray{0, 1}));
  EXPECT_EQ(build_suffix_array(bytes_of("aa")), (SuffixArray{1, 0}));
}

TEST(SuffixArrayTest, FixedStringsAgainstNaive) {
  const char* cases[] = {
      "",
      "a",
      "za",
      "CACAO",
      "banana",
      "tobeornottobe",
      "The quick brown fox jumps over the lazy dog.",
      "elephantelephantelephantelephantelephant",
      "-------------------------",
      "011010011001011010010110011010010",
      "3141592653589793238462643383279502884197169399375105",
      "\xFF\xFE\xFF\xFE\xFD\x80\x30\x31\x32\x80\x30\xFF\x01\xAB\xCD",
  };
  for (const char* c : cases) {
    const Bytes text = bytes_of(c);
    const auto sa = build_suffix_array(text);
    EXPECT_EQ(sa, build_suffix_array_naive(text)) << c;
    EXPECT_TRUE(verify_suffix_array(text, sa)) << c;
  }
}

TEST(SuffixArrayTest, ZeroBytesAreOrdinarySymbols) {
  const Bytes text{0, 0, 1, 0, 0, 0, 255, 0};
  EXPECT_EQ(build_suffix_array(text), build_suffix_array_naive(text));
}

TEST(SuffixArrayTest, RandomAgainstNaive) {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<std::size_t> len(0, 600);
  for (unsigned alphabet : {1u, 2u, 3u, 4u, 256u}) {
    for (int k = 0; k < 150; ++k) {
      const Bytes text = oracle::random_bytes(rng, len(rng), alphabet);
      ASSERT_EQ(build_suffix_array(text), build_suffix_array_naive(text))
          << "alphabet " << alphabet << " length " << text.size();
    }
  }
}

TEST(SuffixArrayTest, PeriodicTextsRecurse) {
  // Periodic inputs produce repeated LMS substrings and force recursion.
  for (std::size_t period : {1u, 2u, 3u, 7u, 64u}) {
    Bytes text;
    for (std::size_t i = 0; i < 3000; ++i) text.push_back(static_cast<Byte>('a' + (i % period) % 5));
    EXPECT_EQ(build_suffix_array(text), build_suffix_array_naive(text)) << "period " << period;
  }
}

TEST(SuffixArrayTest, BuildIntoChecksOutputLength) {
  const Bytes text = bytes_of("abc");
  SuffixArray out(2);
  EXPECT_THROW(build_suffix_array_into(text, out), InvalidInput);
  out.resize(3);
  build_suffix_array_into(text, out);
  EXPECT_EQ(out, (SuffixArray{0, 1, 2}));
}

TEST(NaiveSuffixArrayTest, EmptyAndBanana) {
  EXPECT_TRUE(build_suffix_array_naive({}).empty());
  const Bytes banana = bytes_of("banana");
  EXPECT_TRUE(verify_suffix_array(banana, build_suffix_array_naive(banana)));
}

TEST(NaiveSuffixArrayTest, RefusesTextsOverBound) {
  const Bytes text(100, 'x');
  EXPECT_THROW(build_suffix_array_naive(text, 99), InvalidInput);
  EXPECT_NO_THROW(build_suffix_array_naive(text, 100));
}

TEST(VerifySuffixArrayTest, AcceptsAndRejects) {
  const Bytes ab = bytes_of("ab");
  EXPECT_TRUE(verify_suffix_array(ab, SuffixArray{0, 1}));
  EXPECT_FALSE(verify_suffix_array(ab, SuffixArray{1, 0}));
  EXPECT_FALSE(verify_suffix_array(ab, SuffixArray{0, 0}));
  EXPECT_FALSE(verify_suffix_array(ab, SuffixArray{0, 2}));
  EXPECT_THROW(verify_suffix_array(ab, SuffixArray{0}), InvalidInput);

  const Bytes m = bytes_of("mississippi");
  SuffixArray known{11, 8, 5, 2, 1, 10, 9, 7, 4, 6, 3};
  for (auto& v : known) --v;
  EXPECT_TRUE(verify_suffix_array(m, known));
}

TEST(VerifySuffixArrayTest, DetectsAnySwap) {
  std::mt19937_64 rng(11);
  for (int k = 0; k < 50; ++k) {
    const Bytes text = oracle::random_bytes(rng, 2 + rng() % 300, 4);
    auto sa = build_suffix_array(text);
    const std::size_t i = rng() % sa.size();
    std::size_t j = rng() % sa.size();
    if (j == i) j = (i + 1) % sa.size();
    std::swap(sa[i], sa[j]);
    EXPECT_FALSE(verify_suffix_array(text, sa));
  }
}

TEST(CompareSuffixesTest, PrefixSortsFirst) {
  const Bytes text = bytes_of("abab");
  EXPECT_LT(compare_suffixes(text, 2, 0), 0);  // "ab" < "abab"
  EXPECT_GT(compare_suffixes(text, 1, 2), 0);  // "bab" > "ab"
  EXPECT_EQ(compare_suffixes(text, 3, 3), 0);
}

TEST(SuffixArrayTest, ScalesLinearlyAtDeskScale) {
  std::mt19937_64 rng(3);
  const Bytes big = oracle::random_bytes(rng, std::size_t{1} << 21, 256);
  const ByteView half(big.data(), big.size() / 2);
  auto time = [](ByteView text) {
    double best = 1e9;
    for (int r = 0; r < 3; ++r) {
      const auto t0 = std::chrono::steady_clock::now();
      const auto sa = build_suffix_array(text);
      best = std::min(best, std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count());
      EXPECT_EQ(sa.size(), text.size());
    }
    return best;
  };
  const double t1 = time(half);
  const double t2 = time(big);
  EXPECT_LE(t2, 2.5 * t1 + 0.01) << "1 MiB: " << t1 << " s, 2 MiB: " << t2 << " s";
}

}  // namespace
}  // namespace salz
