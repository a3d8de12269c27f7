#include "salz/sliding_index.hpp"

#include <algorithm>
#include <cstring>
#include <string>

#include "salz/errors.hpp"

namespace salz {

namespace {

// Intervals at or below this size are resolved by scanning every candidate.
constexpr std::size_t kLinearScanThreshold = 8;

}  // namespace

SlidingIndex::SlidingIndex(WindowConfig config)
    : config_(config),
      dict_(config.dict_len()),
      sa_a_(config.dict_len()),
      sa_b_(config.dict_len()),
      lab_sa_(config.lab_len()),
      insert_(config.lab_len()) {}

std::span<const SuffixIndex> SlidingIndex::active() const noexcept {
  const auto& buf = active_is_a_ ? sa_a_ : sa_b_;
  return {buf.data(), fill_};
}

void SlidingIndex::slide_in(ByteView block) {
  const std::size_t m = config_.dict_len();
  if (block.empty() || block.size() > config_.lab_len()) {
    throw InvalidInput("slide_in block of " + std::to_string(block.size()) +
                       " bytes; expected 1.." + std::to_string(config_.lab_len()));
  }
  slid_while_full_ = fill_ == m;
  if (fill_ + block.size() > m) {
    const std::size_t drop = fill_ + block.size() - m;
    std::memmove(dict_.data(), dict_.data() + drop, fill_ - drop);
    fill_ -= drop;
  }
  std::memcpy(dict_.data() + fill_, block.data(), block.size());
  fill_ += block.size();
  pending_slide_ = true;
  last_slide_len_ = block.size();
}

void SlidingIndex::rebuild() {
  if (fill_ == 0) throw StateError("rebuild on an empty dictionary");
  build_suffix_array_into(dictionary(), active_buffer().first(fill_));
  pending_slide_ = false;
  refresh_left_index();
}

void SlidingIndex::update(ByteView slid_block) {
  const std::size_t m = config_.dict_len();
  const std::size_t b = slid_block.size();
  if (!pending_slide_ || !slid_while_full_) {
    throw StateError("update requires a block slid into a full dictionary");
  }
  if (b != last_slide_len_ || std::memcmp(dict_.data() + m - b, slid_block.data(), b) != 0) {
    throw InvalidInput("update block does not match the block last slid in");
  }

  const Byte* d = dict_.data();
  const auto src = active_buffer();
  const auto dst = inactive_buffer();
  const std::size_t survivors = m - b;
  const std::size_t base = m - b;

  // Sort the new suffixes among themselves. They run to the end of the
  // window, so their order is the suffix order of the block alone.
  build_suffix_array_into(slid_block, std::span(lab_sa_).first(b));

  // Compact survivors into the front of the destination, shifted down by b.
  std::size_t k = 0;
  for (std::size_t j = 0; j < m; ++j) {
    const auto v = static_cast<std::size_t>(src[j]);
    if (v >= b) dst[k++] = static_cast<SuffixIndex>(v - b);
  }

  // Survivors stay grouped by first symbol, so each new suffix is searched
  // only within its symbol's bucket.
  std::array<std::size_t, 257> start{};
  for (std::size_t j = 0; j < survivors; ++j) ++start[d[dst[j]] + 1];
  for (std::size_t c = 0; c < 256; ++c) start[c + 1] += start[c];

  auto survivor_less = [&](SuffixIndex p, std::size_t q) {
    // The new suffix at q is the shorter one; a tie means it is a prefix of
    // the survivor and therefore sorts first.
    return std::memcmp(d + p, d + q, m - q) < 0;
  };

  std::size_t prev_rank = 0;
  for (std::size_t j = 0; j < b; ++j) {
    const std::size_t q = base + static_cast<std::size_t>(lab_sa_[j]);
    const Byte c = d[q];
    const std::size_t lo = std::max(start[c], prev_rank);
    const std::size_t hi = std::max(start[c + 1], lo);
    const auto it = std::partition_point(dst.begin() + lo, dst.begin() + hi,
                                         [&](SuffixIndex p) { return survivor_less(p, q); });
    const auto rank = static_cast<std::size_t>(it - dst.begin());
    insert_[j] = static_cast<SuffixIndex>(rank + j);
    prev_rank = rank;
  }

  // Merge from the back: the write cursor always stays ahead of the read
  // cursor, so survivors are moved in place.
  std::size_t read = survivors;
  std::size_t write = m;
  for (std::size_t j = b; j-- > 0;) {
    const auto slot = static_cast<std::size_t>(insert_[j]);
    while (write > slot + 1) dst[--write] = dst[--read];
    dst[--write] = static_cast<SuffixIndex>(base + static_cast<std::size_t>(lab_sa_[j]));
  }

  last_insert_count_ = b;
  active_is_a_ = !active_is_a_;
  pending_slide_ = false;
  refresh_left_index();
}

void SlidingIndex::refresh_left_index() {
  left_.clear();
  const auto sa = active();
  for (std::size_t i = 0; i < sa.size(); ++i) {
    const Byte c = dict_[sa[i]];
    if (left_[c] == LeftIndex::kEmpty) left_[c] = static_cast<SuffixIndex>(i);
  }
}

std::optional<SymbolRange> SlidingIndex::symbol_range(Byte sym) const {
  const SuffixIndex left = left_[sym];
  if (left == LeftIndex::kEmpty) return std::nullopt;
  std::size_t right = fill_ - 1;
  for (unsigned c = sym + 1u; c < 256; ++c) {
    if (left_[static_cast<Byte>(c)] != LeftIndex::kEmpty) {
      right = static_cast<std::size_t>(left_[static_cast<Byte>(c)]) - 1;
      break;
    }
  }
  return SymbolRange{static_cast<std::size_t>(left), right};
}

std::size_t SlidingIndex::match_length(std::size_t pos, ByteView lab, std::size_t i,
                                       std::size_t limit) const {
  const std::size_t n = std::min(limit, fill_ - pos);
  const Byte* a = dict_.data() + pos;
  const Byte* b = lab.data() + i;
  return static_cast<std::size_t>(std::mismatch(a, a + n, b).first - a);
}

std::optional<MatchResult> SlidingIndex::longest_match(ByteView lab, std::size_t i,
                                                       MatchPolicy policy) const {
  if (i >= lab.size()) {
    throw InvalidInput("match offset " + std::to_string(i) + " outside LAB of " +
                       std::to_string(lab.size()) + " bytes");
  }
  const auto range = symbol_range(lab[i]);
  if (!range) return std::nullopt;
  if (policy == MatchPolicy::kFast) {
    const auto pos = static_cast<std::size_t>(active()[range->left]);
    return MatchResult{pos, match_length(pos, lab, i, lab.size() - i)};
  }
  return narrow_best(*range, lab, i);
}

// Narrows [lo, hi] one symbol at a time: after k steps every slot in the
// interval shares the first k symbols of lab[i..] (exactly so when the
// buffer is sorted). Suffixes that end at k sort before those that continue.
std::optional<MatchResult> SlidingIndex::narrow_best(SymbolRange range, ByteView lab,
                                                     std::size_t i) const {
  const auto sa = active();
  const Byte* d = dict_.data();
  const std::size_t limit = lab.size() - i;
  std::size_t lo = range.left;
  std::size_t hi = range.right + 1;  // half-open from here on
  std::size_t k = 1;

  auto symbol_at = [&](SuffixIndex p, std::size_t offset) -> int {
    const std::size_t at = static_cast<std::size_t>(p) + offset;
    return at < fill_ ? d[at] : -1;
  };

  while (k < limit && hi - lo > kLinearScanThreshold) {
    const int c = lab[i + k];
    const auto first = sa.begin() + static_cast<std::ptrdiff_t>(lo);
    const auto last = sa.begin() + static_cast<std::ptrdiff_t>(hi);
    const auto sub_lo =
        std::partition_point(first, last, [&](SuffixIndex p) { return symbol_at(p, k) < c; });
    const auto sub_hi =
        std::partition_point(sub_lo, last, [&](SuffixIndex p) { return symbol_at(p, k) <= c; });
    if (sub_lo == sub_hi) {
      const auto pos = static_cast<std::size_t>(sa[lo]);
      return MatchResult{pos, match_length(pos, lab, i, limit)};
    }
    lo = static_cast<std::size_t>(sub_lo - sa.begin());
    hi = static_cast<std::size_t>(sub_hi - sa.begin());
    ++k;
  }

  if (k == limit) {
    const auto pos = static_cast<std::size_t>(sa[lo]);
    return MatchResult{pos, match_length(pos, lab, i, limit)};
  }

  MatchResult best{static_cast<std::size_t>(sa[lo]), 0};
  for (std::size_t slot = lo; slot < hi; ++slot) {
    const auto pos = static_cast<std::size_t>(sa[slot]);
    const std::size_t len = match_length(pos, lab, i, limit);
    if (len > best.len) {
      best = {pos, len};
      if (len == limit) break;
    }
  }
  return best;
}

}  // namespace salz
