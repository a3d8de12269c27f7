#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "salz/suffix_array.hpp"
#include "salz/window_config.hpp"

namespace salz {

enum class MatchPolicy {
  kFast,  // only the first suffix starting with the symbol
  kBest,  // longest match over all suffixes starting with the symbol
};

/// For each byte value, the first suffix-array slot whose suffix starts with
/// that byte, or -1 when no suffix does.
class LeftIndex {
 public:
  static constexpr SuffixIndex kEmpty = -1;

  LeftIndex() { clear(); }

  void clear() noexcept { entries_.fill(kEmpty); }
  SuffixIndex operator[](Byte c) const noexcept { return entries_[c]; }
  SuffixIndex& operator[](Byte c) noexcept { return entries_[c]; }
  const std::array<SuffixIndex, 256>& entries() const noexcept { return entries_; }

 private:
  std::array<SuffixIndex, 256> entries_;
};

/// Inclusive range of suffix-array slots sharing a first symbol.
struct SymbolRange {
  std::size_t left;
  std::size_t right;

  friend bool operator==(const SymbolRange&, const SymbolRange&) = default;
};

struct MatchResult {
  std::size_t pos;  // dictionary offset of the match start
  std::size_t len;  // >= 1

  friend bool operator==(const MatchResult&, const MatchResult&) = default;
};

/// The searchable dictionary window of the encoder.
///
/// Two suffix-array buffers of dictionary length are allocated up front; one
/// of them is active. While the dictionary fills, the active buffer is
/// rebuilt from scratch. Once full, every slid-in block is merged into the
/// inactive buffer and the two swap roles: surviving suffixes keep their
/// previous relative order (shifted down by the block length) and the new
/// suffixes, sorted among themselves, are inserted at binary-searched ranks.
///
/// Survivors are never re-sorted, so after an update the active buffer is
/// only approximately sorted where old suffixes shared a prefix running to
/// the previous end of the window. Matches are always verified by direct
/// comparison, so this only costs optimality, never correctness.
///
/// Not thread-safe; one writer at a time.
class SlidingIndex {
 public:
  explicit SlidingIndex(WindowConfig config);

  const WindowConfig& config() const noexcept { return config_; }
  std::size_t fill() const noexcept { return fill_; }
  bool full() const noexcept { return fill_ == config_.dict_len(); }
  ByteView dictionary() const noexcept { return {dict_.data(), fill_}; }

  /// Current suffix array (first `fill()` slots of the active buffer).
  std::span<const SuffixIndex> active() const noexcept;
  const LeftIndex& left_index() const noexcept { return left_; }

  /// Insertion slots computed by the most recent update(), in slid-block
  /// suffix order. Empty before the first update.
  std::span<const SuffixIndex> insertion_indexes() const noexcept {
    return {insert_.data(), last_insert_count_};
  }

  /// Appends `block` (1..lab_len bytes). When the window would overflow, the
  /// oldest bytes are dropped so that fill() stays at the dictionary length.
  void slide_in(ByteView block);

  /// Exact suffix array of the current dictionary, then refresh_left_index().
  void rebuild();

  /// Incremental update after slide_in(slid_block) on a window that was
  /// already full. Throws StateError during the filling phase.
  void update(ByteView slid_block);

  void refresh_left_index();

  std::optional<SymbolRange> symbol_range(Byte sym) const;

  /// Longest prefix of lab[i..] found in the dictionary. Returns nullopt
  /// when no dictionary suffix starts with lab[i]. Best policy breaks ties
  /// by the smallest suffix-array slot.
  std::optional<MatchResult> longest_match(ByteView lab, std::size_t i, MatchPolicy policy) const;

 private:
  std::span<SuffixIndex> active_buffer() noexcept { return active_is_a_ ? sa_a_ : sa_b_; }
  std::span<SuffixIndex> inactive_buffer() noexcept { return active_is_a_ ? sa_b_ : sa_a_; }
  std::size_t match_length(std::size_t pos, ByteView lab, std::size_t i, std::size_t limit) const;
  std::optional<MatchResult> narrow_best(SymbolRange range, ByteView lab, std::size_t i) const;

  WindowConfig config_;
  std::vector<Byte> dict_;
  std::size_t fill_ = 0;
  std::vector<SuffixIndex> sa_a_;
  std::vector<SuffixIndex> sa_b_;
  bool active_is_a_ = true;
  LeftIndex left_;
  std::vector<SuffixIndex> lab_sa_;
  std::vector<SuffixIndex> insert_;
  std::size_t last_insert_count_ = 0;
  // Whether the window was already full before the last slide_in, and
  // whether that slide has not yet been indexed.
  bool slid_while_full_ = false;
  bool pending_slide_ = false;
  std::size_t last_slide_len_ = 0;
};

}  // namespace salz
