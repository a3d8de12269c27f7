#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <variant>
#include <vector>

#include "salz/bitstream.hpp"
#include "salz/sliding_index.hpp"
#include "salz/suffix_array.hpp"
#include "salz/window_config.hpp"

namespace salz {

// Compressed file layout:
//
//   [pos_bits:8][len_bits:8][file_size:32, little-endian]
//   first min(lab_len, file_size) input bytes, verbatim
//   LZSS tokens, MSB-first, zero-padded to a byte at end of file
//
// A literal is a 0 bit and the 8-bit symbol. A match is a 1 bit, the
// pos_bits-wide dictionary offset and (length - 1) in len_bits.

inline constexpr std::size_t kHeaderBytes = 6;

struct StreamHeader {
  std::uint8_t pos_bits = 0;
  std::uint8_t len_bits = 0;
  std::uint32_t file_size = 0;

  friend bool operator==(const StreamHeader&, const StreamHeader&) = default;
};

void write_header(BitWriter& w, const StreamHeader& header);
/// Throws MalformedHeader on truncation or inconsistent widths.
StreamHeader read_header(BitReader& r);

struct Literal {
  Byte sym;
  friend bool operator==(const Literal&, const Literal&) = default;
};

struct Match {
  std::size_t pos;
  std::size_t len;
  friend bool operator==(const Match&, const Match&) = default;
};

using LzssToken = std::variant<Literal, Match>;

/// (pos, len, sym): copy len bytes from pos, then append sym. A token with
/// no match is (0, 0, sym).
struct Lz77Token {
  std::size_t pos = 0;
  std::size_t len = 0;
  Byte sym = 0;
  friend bool operator==(const Lz77Token&, const Lz77Token&) = default;
};

struct EncodeOptions {
  MatchPolicy policy = MatchPolicy::kBest;
  /// Shorter candidates are sent as a literal instead.
  std::size_t min_match = 1;
};

struct EncodeStats {
  std::uint64_t input_bytes = 0;
  std::uint64_t output_bytes = 0;
  std::uint64_t raw_bytes = 0;
  std::uint64_t literal_count = 0;
  std::uint64_t match_count = 0;
  std::uint64_t matched_bytes = 0;
  double seconds = 0.0;

  /// Exact stream size predicted from the token counts.
  std::uint64_t predicted_bits(const WindowConfig& config) const noexcept {
    return 8 * kHeaderBytes + 8 * raw_bytes + 9 * literal_count +
           (1 + config.pos_bits() + config.len_bits()) * match_count;
  }
};

struct DecodeStats {
  std::uint64_t output_bytes = 0;
  std::uint64_t token_count = 0;
};

std::size_t token_bits(const LzssToken& token, const WindowConfig& config) noexcept;
inline std::size_t lz77_token_bits(const WindowConfig& config) noexcept {
  return config.pos_bits() + config.len_bits() + 8;
}

/// Tokenizes one look-ahead block against the index's current dictionary,
/// appending to `out`. Coverage: the match lengths plus the literal count
/// equal lab.size().
void encode_block(const SlidingIndex& index, ByteView lab, const EncodeOptions& options,
                  std::vector<LzssToken>& out);

Bytes compress(ByteView input, const WindowConfig& config, const EncodeOptions& options = {},
               EncodeStats* stats = nullptr);

/// Throws MalformedHeader or CorruptStream.
Bytes decompress(ByteView stream, DecodeStats* stats = nullptr);

/// Stream front ends. The whole input is read first: the header needs the
/// size before any token is written.
EncodeStats encode_stream(std::istream& in, std::ostream& out, const WindowConfig& config,
                          const EncodeOptions& options = {});
DecodeStats decode_stream(std::istream& in, std::ostream& out);

/// Applies LZSS tokens against a fixed dictionary.
Bytes replay_lzss(ByteView dictionary, std::span<const LzssToken> tokens);

/// LZ77 triplets for one block; a match is shortened by one when needed so
/// that a breaking symbol always follows within the block.
std::vector<Lz77Token> tokenize_block_lz77(const SlidingIndex& index, ByteView lab,
                                           MatchPolicy policy);

/// Whole-input LZ77 decomposition with the same block-synchronized window
/// as the LZSS encoder, except that the first block is tokenized against
/// the empty dictionary instead of being copied.
std::vector<Lz77Token> tokenize_lz77(ByteView input, const WindowConfig& config,
                                     MatchPolicy policy = MatchPolicy::kBest);

/// Inverse of tokenize_lz77.
Bytes reconstruct_lz77(std::span<const Lz77Token> tokens, const WindowConfig& config);

}  // namespace salz
