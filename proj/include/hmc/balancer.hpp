#pragma once

#include <vector>

#include "hmc/core.hpp"
#include "hmc/errors.hpp"

namespace hmc {

// Geometry of a codeword: 1^lead_run | r | u | 1-run | 0-run. The final
// length N = n + (17/2)sqrt(n) + 2 is forced even by extending the leading
// ones-run when the formula lands on an odd value.
struct LayoutParams {
  long long n = 0;          // balanced payload length, perfect square
  long long block_len = 0;  // sqrt(n)
  long long num_blocks = 0; // sqrt(n)
  long long lead_run = 0;
  long long v_len = 0;      // lead_run + num_blocks + n
  long long N = 0;          // final codeword length, even
  bool parity_fix = false;

  bool operator==(const LayoutParams& rhs) const {
    return n == rhs.n && block_len == rhs.block_len &&
           num_blocks == rhs.num_blocks && lead_run == rhs.lead_run &&
           v_len == rhs.v_len && N == rhs.N && parity_fix == rhs.parity_fix;
  }
};

inline LayoutParams layout(long long n) {
  if (n < 4) throw ValidationError("call pad_to_square first");
  long long root = 0;
  while (root * root < n) root += 2;
  if (root * root != n) throw ValidationError("call pad_to_square first");

  LayoutParams p;
  p.n = n;
  p.block_len = root;
  p.num_blocks = root;
  p.lead_run = 5 * root / 2 + 1;
  p.v_len = p.lead_run + root + n;
  p.N = n + 17 * root / 2 + 2;
  if (p.N % 2 != 0) {
    p.parity_fix = true;
    p.lead_run += 1;
    p.v_len += 1;
    p.N += 1;
  }
  return p;
}

struct BalanceResult {
  BinaryString u;  // length n, blockwise s or its complement
  BinaryString r;  // length sqrt(n), flip flags; r[0] is always 0
};

namespace detail {

inline long long block_rds(const BinaryString& s, std::size_t from, std::size_t len) {
  long long r = 0;
  for (std::size_t i = from; i < from + len; ++i) r += s[i] ? 1 : -1;
  return r;
}

}  // namespace detail

// Blockwise conditional complementation. Block 1 passes through; block j is
// flipped exactly when its RDS has the same sign (>= 0 vs < 0) as the RDS of
// the already-balanced prefix, driving the running sum toward zero.
inline BalanceResult balance(const BinaryString& s, const LayoutParams& layout) {
  if (static_cast<long long>(s.size()) != layout.n)
    throw ValidationError("length mismatch");
  const auto blk = static_cast<std::size_t>(layout.block_len);

  std::vector<std::uint8_t> u;
  u.reserve(s.size());
  std::vector<std::uint8_t> flags(static_cast<std::size_t>(layout.num_blocks), 0);

  long long prefix_rds = 0;
  for (std::size_t j = 0; j < static_cast<std::size_t>(layout.num_blocks); ++j) {
    const std::size_t from = j * blk;
    const long long rds_j = detail::block_rds(s, from, blk);
    bool flip = false;
    if (j > 0) flip = (prefix_rds < 0) == (rds_j < 0);
    flags[j] = flip ? 1 : 0;
    for (std::size_t i = from; i < from + blk; ++i)
      u.push_back(flip ? s[i] ^ 1u : s[i]);
    prefix_rds += flip ? -rds_j : rds_j;
  }
  return BalanceResult{BinaryString(std::move(u)), BinaryString(std::move(flags))};
}

inline BinaryString assemble_v(const BalanceResult& result, const LayoutParams& layout) {
  if (static_cast<long long>(result.u.size()) != layout.n ||
      static_cast<long long>(result.r.size()) != layout.num_blocks)
    throw ValidationError("length mismatch");
  return BinaryString::ones(static_cast<std::size_t>(layout.lead_run)) + result.r +
         result.u;
}

// Extends v with a 1-run then a 0-run so the result is a Dyck path of
// length N: s = v 1^(N/2 - w) 0^(N/2 - (|v| - w)) where w = wt(v).
inline BinaryString finalize_dyck(const BinaryString& v, const LayoutParams& layout) {
  const long long w = weight(v);
  const long long len = static_cast<long long>(v.size());
  const long long half = layout.N / 2;
  if (w > half || len - w > half)
    throw ValidationError("v outside the balanced weight envelope");
  for (long long r : rds_profile(v))
    if (r <= 0) throw ValidationError("v outside the balanced weight envelope");

  auto s = v + BinaryString::ones(static_cast<std::size_t>(half - w)) +
           BinaryString::zeros(static_cast<std::size_t>(half - (len - w)));
  if (!is_dyck(s)) throw InternalError("finalize produced a non-Dyck string");
  return s;
}

// Re-flips the blocks flagged in r_sum_mod2. With per-bit mod-2 sums of the
// mixed strings' u and r parts this recovers the mod-2 sum of the original
// payloads; with a single codeword's (u, r) it recovers the payload itself.
inline BinaryString unbalance_sum(const BinaryString& u_sum_mod2,
                                  const BinaryString& r_sum_mod2,
                                  const LayoutParams& layout) {
  if (static_cast<long long>(u_sum_mod2.size()) != layout.n)
    throw ValidationError("length mismatch");
  if (static_cast<long long>(r_sum_mod2.size()) != layout.num_blocks)
    throw ValidationError("length mismatch");

  std::vector<std::uint8_t> out;
  out.reserve(u_sum_mod2.size());
  const auto blk = static_cast<std::size_t>(layout.block_len);
  for (std::size_t j = 0; j < static_cast<std::size_t>(layout.num_blocks); ++j)
    for (std::size_t i = j * blk; i < (j + 1) * blk; ++i)
      out.push_back(u_sum_mod2[i] ^ r_sum_mod2[j]);
  return BinaryString(std::move(out));
}

}  // namespace hmc
