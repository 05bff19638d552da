#pragma once

#include <cstddef>
#include <vector>

namespace hmc::detail {

// Sum of C(count, k) for k = 1..h, saturating well above any guard value.
inline unsigned long long subset_budget(std::size_t count, int h) {
  unsigned long long total = 0;
  unsigned long long binom = 1;
  for (int k = 1; k <= h; ++k) {
    if (static_cast<std::size_t>(k) > count) break;
    binom = binom * (count - static_cast<std::size_t>(k) + 1) /
            static_cast<unsigned long long>(k);
    total += binom;
    if (total > (1ull << 62)) break;
  }
  return total;
}

// Advances idx to the next k-combination of [0, universe); false when done.
inline bool next_combination(std::vector<std::size_t>& idx, std::size_t universe) {
  std::ptrdiff_t pos = static_cast<std::ptrdiff_t>(idx.size()) - 1;
  while (pos >= 0 &&
         idx[static_cast<std::size_t>(pos)] ==
             universe - idx.size() + static_cast<std::size_t>(pos))
    --pos;
  if (pos < 0) return false;
  ++idx[static_cast<std::size_t>(pos)];
  for (std::size_t q = static_cast<std::size_t>(pos) + 1; q < idx.size(); ++q)
    idx[q] = idx[q - 1] + 1;
  return true;
}

inline std::vector<std::size_t> first_combination(std::size_t k) {
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  return idx;
}

}  // namespace hmc::detail
