#include "salz/bitstream.hpp"

#include <algorithm>
#include <string>

#include "salz/errors.hpp"

namespace salz {

namespace {

void check_width(unsigned width) {
  if (width == 0 || width > 32) {
    throw InvalidInput("bit field width " + std::to_string(width) + " outside 1..32");
  }
}

}  // namespace

void BitWriter::write_bits(std::uint32_t value, unsigned width) {
  check_width(width);
  if (width < 32 && (value >> width) != 0) {
    throw InvalidInput("value " + std::to_string(value) + " does not fit in " +
                       std::to_string(width) + " bits");
  }
  pending_ = (pending_ << width) | value;
  bit_count_ += width;
  total_bits_ += width;
  while (bit_count_ >= 8) {
    bit_count_ -= 8;
    sink_.push_back(static_cast<Byte>(pending_ >> bit_count_));
  }
  pending_ &= (std::uint64_t{1} << bit_count_) - 1;
}

void BitWriter::flush() {
  if (bit_count_ > 0) {
    sink_.push_back(static_cast<Byte>(pending_ << (8 - bit_count_)));
    total_bits_ += 8 - bit_count_;
    pending_ = 0;
    bit_count_ = 0;
  }
}

std::uint32_t BitReader::read_bits(unsigned width) {
  check_width(width);
  if (bits_remaining() < width) {
    throw TruncatedStream("read of " + std::to_string(width) + " bits with " +
                          std::to_string(bits_remaining()) + " remaining");
  }
  std::uint64_t value = 0;
  unsigned need = width;
  while (need > 0) {
    const std::size_t byte = cursor_ >> 3;
    const unsigned offset = static_cast<unsigned>(cursor_ & 7);
    const unsigned take = std::min(need, 8 - offset);
    const unsigned bits = (source_[byte] >> (8 - offset - take)) & ((1u << take) - 1);
    value = (value << take) | bits;
    cursor_ += take;
    need -= take;
  }
  return static_cast<std::uint32_t>(value);
}

}  // namespace salz
