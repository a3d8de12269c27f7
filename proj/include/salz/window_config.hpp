#pragma once

#include <cstddef>
#include <cstdint>

namespace salz {

/// Dictionary and look-ahead buffer geometry. Both lengths are powers of
/// two; the token fields use log2 of each as their bit widths.
class WindowConfig {
 public:
  /// Largest supported position width; suffix indexes are 4-byte signed.
  static constexpr unsigned kMaxPosBits = 30;

  /// Throws ConfigError unless both are powers of two with 2 <= lab <= dict
  /// and dict <= 2^kMaxPosBits.
  static WindowConfig from_lengths(std::uint64_t dict_len, std::uint64_t lab_len);
  static WindowConfig from_bits(unsigned pos_bits, unsigned len_bits);

  std::size_t dict_len() const noexcept { return std::size_t{1} << pos_bits_; }
  std::size_t lab_len() const noexcept { return std::size_t{1} << len_bits_; }
  unsigned pos_bits() const noexcept { return pos_bits_; }
  unsigned len_bits() const noexcept { return len_bits_; }

  friend bool operator==(const WindowConfig&, const WindowConfig&) = default;

 private:
  WindowConfig(unsigned pos_bits, unsigned len_bits) : pos_bits_(pos_bits), len_bits_(len_bits) {}

  unsigned pos_bits_;
  unsigned len_bits_;
};

}  // namespace salz
