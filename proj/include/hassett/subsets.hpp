#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <string>
#include <vector>

#include "hassett/error.hpp"

namespace hassett {

/// Sorted list of 1-based marking indices.
using IndexSet = std::vector<int>;
using Mask = std::uint32_t;

/// Largest n for which subset enumeration over 2^n masks is attempted.
inline constexpr int kMaxEnumerable = 20;

inline void require_enumerable(int n) {
  if (n > kMaxEnumerable)
    throw Error(ErrorCode::too_large,
                "subset enumeration supports at most " + std::to_string(kMaxEnumerable) +
                    " markings, got " + std::to_string(n));
}

inline void check_index(int n, int i) {
  if (i < 1 || i > n)
    throw Error(ErrorCode::index_out_of_range,
                "index " + std::to_string(i) + " outside 1.." + std::to_string(n));
}

/// Validates indices and returns the sorted set; duplicates are rejected.
inline IndexSet normalize_index_set(int n, IndexSet set) {
  for (int i : set) check_index(n, i);
  std::sort(set.begin(), set.end());
  if (std::adjacent_find(set.begin(), set.end()) != set.end())
    throw Error(ErrorCode::invalid_argument, "repeated index in subset");
  return set;
}

inline Mask mask_of(const IndexSet& set) {
  Mask m = 0;
  for (int i : set) m |= Mask{1} << (i - 1);
  return m;
}

inline IndexSet set_of(Mask mask) {
  IndexSet out;
  for (int i = 0; mask != 0; ++i, mask >>= 1)
    if (mask & 1U) out.push_back(i + 1);
  return out;
}

inline int popcount(Mask m) { return std::popcount(m); }

inline Mask full_mask(int n) { return n >= 32 ? ~Mask{0} : (Mask{1} << n) - 1; }

}  // namespace hassett
