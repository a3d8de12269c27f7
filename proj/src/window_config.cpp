#include "salz/window_config.hpp"

#include <bit>
#include <string>

#include "salz/errors.hpp"

namespace salz {

WindowConfig WindowConfig::from_bits(unsigned pos_bits, unsigned len_bits) {
  if (len_bits == 0) throw ConfigError("LAB length must be at least 2");
  if (len_bits > pos_bits) throw ConfigError("LAB length exceeds dictionary length");
  if (pos_bits > kMaxPosBits) {
    throw ConfigError("dictionary length 2^" + std::to_string(pos_bits) + " exceeds 2^" +
                      std::to_string(kMaxPosBits));
  }
  return WindowConfig(pos_bits, len_bits);
}

WindowConfig WindowConfig::from_lengths(std::uint64_t dict_len, std::uint64_t lab_len) {
  if (!std::has_single_bit(dict_len)) {
    throw ConfigError("dictionary length " + std::to_string(dict_len) + " is not a power of two");
  }
  if (!std::has_single_bit(lab_len)) {
    throw ConfigError("LAB length " + std::to_string(lab_len) + " is not a power of two");
  }
  return from_bits(static_cast<unsigned>(std::countr_zero(dict_len)),
                   static_cast<unsigned>(std::countr_zero(lab_len)));
}

}  // namespace salz
