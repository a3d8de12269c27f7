#include "salz/suffix_array.hpp"

#include <algorithm>
#include <cstring>
#include <numeric>
#include <string>

#include "salz/errors.hpp"

namespace salz {

namespace {

// Induced sorting (Nong, Zhang & Chan) with a virtual sentinel. `s` holds
// symbols in [0, upper]. The reduced problem recurses on LMS-substring names.
template <typename Symbol>
void induced_sort(std::span<const Symbol> s, std::int32_t upper, std::span<SuffixIndex> sa) {
  const auto n = static_cast<std::int32_t>(s.size());
  if (n == 0) return;
  if (n == 1) {
    sa[0] = 0;
    return;
  }
  if (n == 2) {
    if (s[0] < s[1]) {
      sa[0] = 0;
      sa[1] = 1;
    } else {
      sa[0] = 1;
      sa[1] = 0;
    }
    return;
  }

  // is_s[i]: suffix i is S-type. The last suffix is L-type because the
  // virtual sentinel that follows it is the smallest symbol.
  std::vector<bool> is_s(n, false);
  for (std::int32_t i = n - 2; i >= 0; --i) {
    is_s[i] = (s[i] == s[i + 1]) ? is_s[i + 1] : (s[i] < s[i + 1]);
  }

  // bucket_l[c]: first slot of the L part of bucket c.
  // bucket_s[c]: first slot of the S part of bucket c.
  std::vector<std::int32_t> bucket_l(upper + 2, 0), bucket_s(upper + 2, 0);
  for (std::int32_t i = 0; i < n; ++i) {
    if (is_s[i]) {
      ++bucket_l[s[i] + 1];
    } else {
      ++bucket_s[s[i]];
    }
  }
  for (std::int32_t c = 0; c <= upper; ++c) {
    bucket_s[c] += bucket_l[c];
    bucket_l[c + 1] += bucket_s[c];
  }

  auto is_lms = [&](std::int32_t i) { return i > 0 && is_s[i] && !is_s[i - 1]; };

  std::vector<std::int32_t> cursor(upper + 2);
  auto induce = [&](std::span<const std::int32_t> lms) {
    std::fill(sa.begin(), sa.end(), -1);
    std::copy(bucket_s.begin(), bucket_s.end(), cursor.begin());
    for (auto pos : lms) sa[cursor[s[pos]]++] = pos;

    // L-type pass, left to right. Suffix n-1 directly follows the sentinel.
    std::copy(bucket_l.begin(), bucket_l.end(), cursor.begin());
    sa[cursor[s[n - 1]]++] = n - 1;
    for (std::int32_t i = 0; i < n; ++i) {
      const auto v = sa[i];
      if (v >= 1 && !is_s[v - 1]) sa[cursor[s[v - 1]]++] = v - 1;
    }

    // S-type pass, right to left, filling each bucket from its end.
    std::copy(bucket_l.begin(), bucket_l.end(), cursor.begin());
    for (std::int32_t i = n - 1; i >= 0; --i) {
      const auto v = sa[i];
      if (v >= 1 && is_s[v - 1]) sa[--cursor[s[v - 1] + 1]] = v - 1;
    }
  };

  std::vector<std::int32_t> lms_rank(n, -1);
  std::vector<std::int32_t> lms;
  for (std::int32_t i = 1; i < n; ++i) {
    if (is_lms(i)) {
      lms_rank[i] = static_cast<std::int32_t>(lms.size());
      lms.push_back(i);
    }
  }
  const auto lms_count = static_cast<std::int32_t>(lms.size());

  induce(lms);
  if (lms_count == 0) return;

  std::vector<std::int32_t> sorted_lms;
  sorted_lms.reserve(lms_count);
  for (std::int32_t i = 0; i < n; ++i) {
    if (lms_rank[sa[i]] != -1) sorted_lms.push_back(sa[i]);
  }

  // Name LMS substrings; equal substrings share a name.
  std::vector<std::int32_t> reduced(lms_count);
  std::int32_t name = 0;
  reduced[lms_rank[sorted_lms[0]]] = 0;
  for (std::int32_t k = 1; k < lms_count; ++k) {
    std::int32_t a = sorted_lms[k - 1];
    std::int32_t b = sorted_lms[k];
    const std::int32_t end_a = lms_rank[a] + 1 < lms_count ? lms[lms_rank[a] + 1] : n;
    const std::int32_t end_b = lms_rank[b] + 1 < lms_count ? lms[lms_rank[b] + 1] : n;
    bool same = end_a - a == end_b - b;
    if (same) {
      while (a < end_a && s[a] == s[b]) {
        ++a;
        ++b;
      }
      // The substring ending at n reaches the sentinel and is unique.
      if (a == n || s[a] != s[b]) same = false;
    }
    if (!same) ++name;
    reduced[lms_rank[sorted_lms[k]]] = name;
  }

  std::vector<SuffixIndex> reduced_sa(lms_count);
  if (name + 1 == lms_count) {
    for (std::int32_t k = 0; k < lms_count; ++k) reduced_sa[reduced[k]] = k;
  } else {
    induced_sort<std::int32_t>(reduced, name, reduced_sa);
  }
  for (std::int32_t k = 0; k < lms_count; ++k) sorted_lms[k] = lms[reduced_sa[k]];
  induce(sorted_lms);
}

void check_length(std::size_t n) {
  if (n > kMaxTextLength) {
    throw InvalidInput("text of " + std::to_string(n) + " bytes exceeds the suffix array limit");
  }
}

}  // namespace

int compare_suffixes(ByteView text, std::size_t a, std::size_t b) {
  if (a == b) return 0;
  const std::size_t len_a = text.size() - a;
  const std::size_t len_b = text.size() - b;
  const std::size_t common = std::min(len_a, len_b);
  if (common > 0) {
    if (int r = std::memcmp(text.data() + a, text.data() + b, common); r != 0) return r < 0 ? -1 : 1;
  }
  return len_a < len_b ? -1 : (len_a > len_b ? 1 : 0);
}

void build_suffix_array_into(ByteView text, std::span<SuffixIndex> out) {
  check_length(text.size());
  if (out.size() != text.size()) {
    throw InvalidInput("suffix array output size does not match text length");
  }
  induced_sort<Byte>(text, 255, out);
}

SuffixArray build_suffix_array(ByteView text) {
  check_length(text.size());
  SuffixArray sa(text.size());
  induced_sort<Byte>(text, 255, sa);
  return sa;
}

SuffixArray build_suffix_array_naive(ByteView text, std::size_t bound) {
  if (text.size() > bound) {
    throw InvalidInput("naive suffix sort refused: " + std::to_string(text.size()) +
                       " bytes exceeds oracle bound " + std::to_string(bound));
  }
  SuffixArray sa(text.size());
  std::iota(sa.begin(), sa.end(), 0);
  std::sort(sa.begin(), sa.end(), [&](SuffixIndex a, SuffixIndex b) {
    return compare_suffixes(text, static_cast<std::size_t>(a), static_cast<std::size_t>(b)) < 0;
  });
  return sa;
}

bool verify_suffix_array(ByteView text, std::span<const SuffixIndex> sa) {
  if (sa.size() != text.size()) {
    throw InvalidInput("suffix array length " + std::to_string(sa.size()) +
                       " does not match text length " + std::to_string(text.size()));
  }
  std::vector<bool> seen(text.size(), false);
  for (auto v : sa) {
    if (v < 0 || static_cast<std::size_t>(v) >= text.size() || seen[v]) return false;
    seen[v] = true;
  }
  for (std::size_t i = 1; i < sa.size(); ++i) {
    if (compare_suffixes(text, sa[i - 1], sa[i]) >= 0) return false;
  }
  return true;
}

}  // namespace salz
