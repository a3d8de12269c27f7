#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace salz {

using Byte = std::uint8_t;
using ByteView = std::span<const Byte>;
using Bytes = std::vector<Byte>;

/// Suffix start positions are 0-based and stored in 4-byte integers, so a
/// single text is limited to kMaxTextLength bytes.
using SuffixIndex = std::int32_t;
using SuffixArray = std::vector<SuffixIndex>;

inline constexpr std::size_t kMaxTextLength = std::size_t{1} << 30;
inline constexpr std::size_t kDefaultNaiveBound = std::size_t{1} << 20;

/// Linear-time construction by induced sorting (SA-IS). The end-of-text
/// terminator is virtual: it is treated as smaller than every byte and
/// never appears in the result.
SuffixArray build_suffix_array(ByteView text);

/// Same as build_suffix_array, writing into `out` (which must have exactly
/// text.size() entries). Used by the sliding index to fill its preallocated
/// buffers.
void build_suffix_array_into(ByteView text, std::span<SuffixIndex> out);

/// Reference construction by comparison-sorting all suffixes. Refuses texts
/// longer than `bound` with InvalidInput; it is a test oracle, not a builder.
SuffixArray build_suffix_array_naive(ByteView text, std::size_t bound = kDefaultNaiveBound);

/// True iff `sa` is a permutation of [0, text.size()) and every adjacent pair
/// of suffixes is strictly increasing, checked by direct comparison.
/// Throws InvalidInput when the lengths differ.
bool verify_suffix_array(ByteView text, std::span<const SuffixIndex> sa);

/// Three-way comparison of the suffixes of `text` starting at `a` and `b`.
/// A proper prefix sorts before the longer suffix.
int compare_suffixes(ByteView text, std::size_t a, std::size_t b);

}  // namespace salz
