#pragma once

#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

#include "hmc/core.hpp"
#include "hmc/detail/subsets.hpp"
#include "hmc/errors.hpp"
#include "hmc/gf2m.hpp"

namespace hmc {

// Strings whose coordinate-wise integer subset sums are distinct over all
// subsets of size <= h.
struct SidonSet {
  int h = 0;
  long long n = 0;
  std::vector<BinaryString> strings;  // column-index order
};

struct BhVerdict {
  bool ok = false;
  // Colliding pair when !ok; each side sorted lexicographically.
  std::vector<BinaryString> set_a;
  std::vector<BinaryString> set_b;
};

// Columns of a parity-check matrix with rows alpha^i, alpha^{3i}, ...,
// alpha^{(2h-1)i}: any 2h columns are linearly independent over F_2, which
// yields both the integer subset-sum property and distinct XOR subset sums.
inline SidonSet build_bh_codebook(int m, int h) {
  if (h < 2) throw ValidationError("h must be at least 2");
  Gf2m field(m);

  SidonSet out;
  out.h = h;
  out.n = static_cast<long long>(h) * m;
  out.strings.reserve(field.order());
  for (std::uint32_t i = 0; i < field.order(); ++i) {
    BinaryString column;
    for (int j = 1; j <= h; ++j) {
      const std::uint64_t e =
          static_cast<std::uint64_t>(2 * j - 1) * i % field.order();
      column = column + field.to_bits(field.pow(Gf2m::alpha(), e));
    }
    out.strings.push_back(std::move(column));
  }
  return out;
}

inline constexpr unsigned long long kBhVerifyGuard = 10'000'000;

// Brute-force check of the distinct-subset-sum property over subsets of size
// 1..h. Strings are sorted first; subsets enumerate by size then index order,
// so the reported witness is deterministic.
inline BhVerdict verify_bh(std::vector<BinaryString> strings, int h) {
  if (strings.empty()) throw ValidationError("empty input");
  const std::size_t len = strings[0].size();
  for (const auto& s : strings)
    if (s.size() != len) throw ValidationError("mixed lengths in collection");
  if (detail::subset_budget(strings.size(), h) > kBhVerifyGuard)
    throw GuardError("instance too large for brute force");

  std::sort(strings.begin(), strings.end());
  for (std::size_t i = 0; i + 1 < strings.size(); ++i)
    if (strings[i] == strings[i + 1])
      throw ValidationError("collection must be a set");

  // Key = per-coordinate counts, one byte each (counts <= h < 256).
  std::unordered_map<std::string, std::vector<std::size_t>> seen;
  std::string key(len, '\0');
  std::vector<std::size_t> idx;

  auto subset_strings = [&strings](const std::vector<std::size_t>& subset) {
    std::vector<BinaryString> out;
    out.reserve(subset.size());
    for (auto i : subset) out.push_back(strings[i]);
    return out;
  };

  for (int k = 1; k <= h && static_cast<std::size_t>(k) <= strings.size(); ++k) {
    idx = detail::first_combination(static_cast<std::size_t>(k));
    do {
      std::fill(key.begin(), key.end(), '\0');
      for (auto i : idx)
        for (std::size_t p = 0; p < len; ++p)
          key[p] = static_cast<char>(key[p] + strings[i][p]);
      auto [it, inserted] = seen.emplace(key, idx);
      if (!inserted) {
        return BhVerdict{false, subset_strings(it->second), subset_strings(idx)};
      }
    } while (detail::next_combination(idx, strings.size()));
  }
  return BhVerdict{true, {}, {}};
}

// Zero-pads every string on the right until the length is the smallest
// perfect square >= n with an even root. Padding with a shared constant tail
// preserves distinctness of subset sums.
inline SidonSet pad_to_square(const SidonSet& codebook) {
  long long root = 2;
  while (root * root < codebook.n) root += 2;
  const long long target = root * root;

  SidonSet out;
  out.h = codebook.h;
  out.n = target;
  out.strings.reserve(codebook.strings.size());
  const auto pad = BinaryString::zeros(static_cast<std::size_t>(target - codebook.n));
  for (const auto& s : codebook.strings) out.strings.push_back(s + pad);
  return out;
}

}  // namespace hmc
