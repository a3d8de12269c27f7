#include "salz/codec.hpp"

#include <algorithm>
#include <chrono>
#include <cstring>
#include <istream>
#include <iterator>
#include <limits>
#include <ostream>
#include <string>

#include "salz/errors.hpp"

namespace salz {

namespace {

constexpr unsigned kMaxHeaderPosBits = 32;

void check_input_size(std::size_t size) {
  if (size > std::numeric_limits<std::uint32_t>::max()) {
    throw InvalidInput("input of " + std::to_string(size) + " bytes does not fit the 32-bit size field");
  }
}

// Drives the block-synchronized window over `input`: every block after the
// first is handed to `on_block` together with the index describing the
// dictionary that precedes it.
template <typename OnBlock>
void for_each_block(ByteView input, const WindowConfig& config, bool index_first_block,
                    OnBlock&& on_block) {
  const std::size_t n = config.lab_len();
  SlidingIndex index(config);
  std::size_t done = 0;
  ByteView previous;
  if (!index_first_block) {
    previous = input.first(std::min(n, input.size()));
    done = previous.size();
  }
  while (done < input.size()) {
    if (!previous.empty()) {
      const bool was_full = index.full();
      index.slide_in(previous);
      if (was_full) {
        index.update(previous);
      } else {
        index.rebuild();
      }
    }
    const ByteView lab = input.subspan(done, std::min(n, input.size() - done));
    on_block(index, lab);
    previous = lab;
    done += lab.size();
  }
}

}  // namespace

void write_header(BitWriter& w, const StreamHeader& header) {
  if (header.len_bits == 0 || header.len_bits > header.pos_bits ||
      header.pos_bits > kMaxHeaderPosBits) {
    throw InvalidInput("invalid header widths");
  }
  w.write_bits(header.pos_bits, 8);
  w.write_bits(header.len_bits, 8);
  for (unsigned shift = 0; shift < 32; shift += 8) w.write_bits((header.file_size >> shift) & 0xFF, 8);
}

StreamHeader read_header(BitReader& r) {
  StreamHeader h;
  try {
    h.pos_bits = static_cast<std::uint8_t>(r.read_bits(8));
    h.len_bits = static_cast<std::uint8_t>(r.read_bits(8));
    for (unsigned shift = 0; shift < 32; shift += 8) h.file_size |= r.read_bits(8) << shift;
  } catch (const TruncatedStream&) {
    throw MalformedHeader("stream shorter than the 48-bit header");
  }
  if (h.pos_bits > kMaxHeaderPosBits) {
    throw MalformedHeader("position width " + std::to_string(h.pos_bits) + " exceeds 32");
  }
  if (h.len_bits == 0 || h.len_bits > h.pos_bits) {
    throw MalformedHeader("length width " + std::to_string(h.len_bits) +
                          " must be in 1.." + std::to_string(h.pos_bits));
  }
  return h;
}

std::size_t token_bits(const LzssToken& token, const WindowConfig& config) noexcept {
  return std::holds_alternative<Literal>(token) ? 9 : 1 + config.pos_bits() + config.len_bits();
}

void encode_block(const SlidingIndex& index, ByteView lab, const EncodeOptions& options,
                  std::vector<LzssToken>& out) {
  if (options.min_match == 0) throw InvalidInput("min_match must be at least 1");
  std::size_t i = 0;
  while (i < lab.size()) {
    const auto match = index.longest_match(lab, i, options.policy);
    if (match && match->len >= options.min_match) {
      out.emplace_back(Match{match->pos, match->len});
      i += match->len;
    } else {
      out.emplace_back(Literal{lab[i]});
      ++i;
    }
  }
}

Bytes compress(ByteView input, const WindowConfig& config, const EncodeOptions& options,
               EncodeStats* stats) {
  check_input_size(input.size());
  if (options.min_match == 0) throw InvalidInput("min_match must be at least 1");
  const auto started = std::chrono::steady_clock::now();

  Bytes out;
  out.reserve(kHeaderBytes + input.size() / 2);
  BitWriter w(out);
  write_header(w, {static_cast<std::uint8_t>(config.pos_bits()),
                   static_cast<std::uint8_t>(config.len_bits()),
                   static_cast<std::uint32_t>(input.size())});

  EncodeStats s;
  s.input_bytes = input.size();
  s.raw_bytes = std::min(config.lab_len(), input.size());
  for (std::size_t i = 0; i < s.raw_bytes; ++i) w.write_bits(input[i], 8);

  std::vector<LzssToken> tokens;
  tokens.reserve(config.lab_len());
  for_each_block(input, config, false, [&](const SlidingIndex& index, ByteView lab) {
    tokens.clear();
    encode_block(index, lab, options, tokens);
    for (const auto& token : tokens) {
      if (const auto* lit = std::get_if<Literal>(&token)) {
        w.write_bits(lit->sym, 9);  // leading flag bit is 0
        ++s.literal_count;
      } else {
        const auto& m = std::get<Match>(token);
        w.write_bits(1, 1);
        w.write_bits(static_cast<std::uint32_t>(m.pos), config.pos_bits());
        w.write_bits(static_cast<std::uint32_t>(m.len - 1), config.len_bits());
        ++s.match_count;
        s.matched_bytes += m.len;
      }
    }
  });
  w.flush();

  s.output_bytes = out.size();
  s.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
  if (stats) *stats = s;
  return out;
}

Bytes decompress(ByteView stream, DecodeStats* stats) {
  BitReader r(stream);
  const StreamHeader h = read_header(r);
  const std::size_t m = std::size_t{1} << h.pos_bits;
  const std::size_t n = std::size_t{1} << h.len_bits;
  const std::size_t size = h.file_size;

  Bytes out;
  out.reserve(std::min<std::size_t>(size, std::size_t{1} << 26));
  const std::size_t raw = std::min(n, size);
  if (r.bits_remaining() < 8 * raw) {
    throw CorruptStream(0, "stream ends inside the leading raw block");
  }
  for (std::size_t i = 0; i < raw; ++i) out.push_back(static_cast<Byte>(r.read_bits(8)));

  // The dictionary is always the last min(m, block_start) bytes output
  // before the current block.
  std::uint64_t ordinal = 0;
  while (out.size() < size) {
    const std::size_t block_start = out.size();
    const std::size_t block_end = block_start + std::min(n, size - block_start);
    const std::size_t dict_start = block_start > m ? block_start - m : 0;
    const std::size_t fill = block_start - dict_start;
    while (out.size() < block_end) {
      try {
        if (r.read_bits(1) == 0) {
          out.push_back(static_cast<Byte>(r.read_bits(8)));
        } else {
          const std::size_t pos = r.read_bits(h.pos_bits);
          const std::size_t len = std::size_t{r.read_bits(h.len_bits)} + 1;
          if (pos >= fill) {
            throw CorruptStream(ordinal, "match position " + std::to_string(pos) +
                                             " outside dictionary of " + std::to_string(fill));
          }
          if (len > fill - pos) {
            throw CorruptStream(ordinal, "match runs past the end of the dictionary");
          }
          if (len > block_end - out.size()) {
            throw CorruptStream(ordinal, "match runs past the end of the block");
          }
          // The source lies before block_start and never overlaps the copy.
          const std::size_t at = out.size();
          out.resize(at + len);
          std::memcpy(out.data() + at, out.data() + dict_start + pos, len);
        }
      } catch (const TruncatedStream&) {
        throw CorruptStream(ordinal, "stream truncated");
      }
      ++ordinal;
    }
  }

  if (stats) *stats = {out.size(), ordinal};
  return out;
}

EncodeStats encode_stream(std::istream& in, std::ostream& out, const WindowConfig& config,
                          const EncodeOptions& options) {
  Bytes input{std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
  if (in.bad()) throw IoError("failed reading input");
  EncodeStats stats;
  const Bytes encoded = compress(input, config, options, &stats);
  out.write(reinterpret_cast<const char*>(encoded.data()),
            static_cast<std::streamsize>(encoded.size()));
  if (!out) throw IoError("failed writing output");
  return stats;
}

DecodeStats decode_stream(std::istream& in, std::ostream& out) {
  Bytes input{std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
  if (in.bad()) throw IoError("failed reading input");
  DecodeStats stats;
  const Bytes decoded = decompress(input, &stats);
  out.write(reinterpret_cast<const char*>(decoded.data()),
            static_cast<std::streamsize>(decoded.size()));
  if (!out) throw IoError("failed writing output");
  return stats;
}

Bytes replay_lzss(ByteView dictionary, std::span<const LzssToken> tokens) {
  Bytes out;
  std::uint64_t ordinal = 0;
  for (const auto& token : tokens) {
    if (const auto* lit = std::get_if<Literal>(&token)) {
      out.push_back(lit->sym);
    } else {
      const auto& m = std::get<Match>(token);
      if (m.len == 0 || m.pos >= dictionary.size() || m.len > dictionary.size() - m.pos) {
        throw CorruptStream(ordinal, "match outside dictionary");
      }
      out.insert(out.end(), dictionary.begin() + static_cast<std::ptrdiff_t>(m.pos),
                 dictionary.begin() + static_cast<std::ptrdiff_t>(m.pos + m.len));
    }
    ++ordinal;
  }
  return out;
}

std::vector<Lz77Token> tokenize_block_lz77(const SlidingIndex& index, ByteView lab,
                                           MatchPolicy policy) {
  std::vector<Lz77Token> out;
  std::size_t i = 0;
  while (i < lab.size()) {
    Lz77Token token;
    if (i + 1 < lab.size()) {
      // Leave room for the breaking symbol.
      if (const auto match = index.longest_match(lab.first(lab.size() - 1), i, policy)) {
        token.pos = match->pos;
        token.len = match->len;
      }
    }
    token.sym = lab[i + token.len];
    out.push_back(token);
    i += token.len + 1;
  }
  return out;
}

std::vector<Lz77Token> tokenize_lz77(ByteView input, const WindowConfig& config,
                                     MatchPolicy policy) {
  check_input_size(input.size());
  std::vector<Lz77Token> tokens;
  for_each_block(input, config, true, [&](const SlidingIndex& index, ByteView lab) {
    auto block = tokenize_block_lz77(index, lab, policy);
    tokens.insert(tokens.end(), block.begin(), block.end());
  });
  return tokens;
}

Bytes reconstruct_lz77(std::span<const Lz77Token> tokens, const WindowConfig& config) {
  const std::size_t m = config.dict_len();
  const std::size_t n = config.lab_len();
  Bytes out;
  std::size_t block_start = 0;
  std::uint64_t ordinal = 0;
  for (const auto& token : tokens) {
    if (out.size() - block_start == n) block_start = out.size();
    const std::size_t dict_start = block_start > m ? block_start - m : 0;
    const std::size_t fill = block_start - dict_start;
    if (token.len > 0) {
      if (token.pos >= fill || token.len > fill - token.pos) {
        throw CorruptStream(ordinal, "match outside dictionary");
      }
      for (std::size_t k = 0; k < token.len; ++k) out.push_back(out[dict_start + token.pos + k]);
    }
    out.push_back(token.sym);
    if (out.size() - block_start > n) throw CorruptStream(ordinal, "token crosses a block boundary");
    ++ordinal;
  }
  return out;
}

}  // namespace salz
