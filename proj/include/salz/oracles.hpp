#pragma once

// Brute-force references and randomized suites. These never go through the
// suffix array; they exist to check the fast paths against.

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <random>
#include <span>
#include <string>

#include "salz/sliding_index.hpp"
#include "salz/suffix_array.hpp"

namespace salz::oracle {

/// Longest common prefix of lab[i..] with any dictionary substring that
/// starts and ends inside the dictionary. O(|dict| * |lab|).
std::size_t longest_match_length(ByteView dictionary, ByteView lab, std::size_t i);

/// Uniform bytes drawn from the first `alphabet` values starting at `base`.
Bytes random_bytes(std::mt19937_64& rng, std::size_t length, unsigned alphabet = 256,
                   Byte base = 0);

/// Word-salad text mixed with occasional random bytes; compresses like prose.
Bytes mixed_text(std::mt19937_64& rng, std::size_t length);

/// Checks the structure of an update: `before` is the active buffer prior to
/// slide_in(slid_block) + update(slid_block), `after` the index afterwards.
/// Verifies that the buffer is a permutation, survivors keep their previous
/// order shifted down, new suffixes follow the block's own suffix order, and
/// each new suffix is bracketed by its adjacent survivors (by direct
/// comparison on the new contents). Returns an empty string on success,
/// otherwise a description of the first violation.
std::string check_update(std::span<const SuffixIndex> before, const SlidingIndex& after,
                         ByteView slid_block);

struct SuiteScale {
  std::size_t suffix_array_cases = 1000;
  std::size_t match_cases = 500;
  std::size_t update_cases = 500;
  std::size_t roundtrip_cases = 50;
};

/// Runs the suffix-array equivalence, match optimality, update invariant and
/// roundtrip suites, printing one line per suite. Returns true if all pass.
bool run_selftest(std::ostream& out, const SuiteScale& scale, std::uint64_t seed = 1);

}  // namespace salz::oracle
