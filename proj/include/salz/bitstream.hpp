#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "salz/suffix_array.hpp"

namespace salz {

/// Appends fixed-width unsigned fields to a byte vector, most significant
/// bit first. flush() zero-pads the last partial byte.
class BitWriter {
 public:
  explicit BitWriter(std::vector<Byte>& sink) : sink_(sink) {}
  BitWriter(const BitWriter&) = delete;
  BitWriter& operator=(const BitWriter&) = delete;

  /// width in [1, 32]; value must fit in width bits.
  void write_bits(std::uint32_t value, unsigned width);
  void flush();

  std::uint64_t bits_written() const noexcept { return total_bits_; }

 private:
  std::vector<Byte>& sink_;
  std::uint64_t pending_ = 0;
  unsigned bit_count_ = 0;
  std::uint64_t total_bits_ = 0;
};

class BitReader {
 public:
  explicit BitReader(ByteView source) : source_(source) {}

  /// Throws TruncatedStream when fewer than width bits remain.
  std::uint32_t read_bits(unsigned width);

  std::uint64_t bit_position() const noexcept { return cursor_; }
  std::uint64_t bits_remaining() const noexcept { return source_.size() * 8 - cursor_; }

 private:
  ByteView source_;
  std::uint64_t cursor_ = 0;
};

}  // namespace salz
