#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace salz {

/// Window geometry that cannot be represented (non power of two, LAB larger
/// than the dictionary, widths out of range).
class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Caller passed an argument outside an operation's precondition.
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Operation invoked in a state where it is not defined.
class StateError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// A bit reader ran out of input.
class TruncatedStream : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Reading or writing an external byte source failed.
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class MalformedHeader : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Token stream does not decode. Carries the 0-based ordinal of the token
/// that failed (tokens are counted after the raw leading block).
class CorruptStream : public std::runtime_error {
 public:
  CorruptStream(std::uint64_t token_ordinal, const std::string& what)
      : std::runtime_error("corrupt stream at token #" + std::to_string(token_ordinal) + ": " +
                           what),
        ordinal_(token_ordinal) {}

  std::uint64_t token_ordinal() const noexcept { return ordinal_; }

 private:
  std::uint64_t ordinal_;
};

}  // namespace salz
