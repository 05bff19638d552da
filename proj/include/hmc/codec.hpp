#pragma once

#include <chrono>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "hmc/balancer.hpp"
#include "hmc/core.hpp"
#include "hmc/errors.hpp"
#include "hmc/multiset.hpp"
#include "hmc/sidon.hpp"

namespace hmc {

namespace detail {

using XorIndex = std::unordered_map<std::string, std::vector<std::size_t>>;

// Lazily built per subset size; shared so Codebook copies reuse it.
struct XorCacheBox {
  std::mutex mu;
  std::map<long long, XorIndex> by_size;
};

constexpr unsigned long long kSubsetGuard = 20'000'000;

// All XORs of exactly k strings, keyed by bit text. A key mapping to two
// subsets would break unique decoding, so it is rejected immediately.
inline XorIndex build_xor_index(const std::vector<BinaryString>& strings, long long k) {
  if (k < 1 || static_cast<std::size_t>(k) > strings.size())
    throw ValidationError("subset size out of range");
  if (subset_budget(strings.size(), static_cast<int>(k)) > kSubsetGuard)
    throw GuardError("instance too large for brute force");

  XorIndex index;
  auto idx = first_combination(static_cast<std::size_t>(k));
  do {
    BinaryString acc = strings[idx[0]];
    for (std::size_t q = 1; q < idx.size(); ++q) acc = acc ^ strings[idx[q]];
    auto [it, inserted] = index.emplace(acc.str(), idx);
    if (!inserted) throw InternalError("codebook violates B_h over F_2");
  } while (next_combination(idx, strings.size()));
  return index;
}

}  // namespace detail

struct Codebook {
  int m = 0;
  int h = 0;
  std::uint32_t poly = 0;
  SidonSet sidon;  // padded to an even-root square length
  LayoutParams layout;
  std::vector<BinaryString> codewords;
  std::unordered_map<BinaryString, std::size_t> index_of;

  std::shared_ptr<detail::XorCacheBox> cache =
      std::make_shared<detail::XorCacheBox>();

  std::size_t size() const { return codewords.size(); }

  const detail::XorIndex& xor_index(long long subset_size) const {
    std::lock_guard<std::mutex> lock(cache->mu);
    auto it = cache->by_size.find(subset_size);
    if (it == cache->by_size.end()) {
      it = cache->by_size
               .emplace(subset_size, detail::build_xor_index(sidon.strings, subset_size))
               .first;
    }
    return it->second;
  }
};

inline Codebook build_codebook(int m, int h) {
  Codebook cb;
  cb.m = m;
  cb.h = h;
  cb.poly = kPrimitivePoly[static_cast<std::size_t>(m)];
  cb.sidon = pad_to_square(build_bh_codebook(m, h));
  cb.layout = layout(cb.sidon.n);
  cb.codewords.reserve(cb.sidon.strings.size());
  for (const auto& s : cb.sidon.strings) {
    auto cw = finalize_dyck(assemble_v(balance(s, cb.layout), cb.layout), cb.layout);
    cb.codewords.push_back(cw);
  }
  for (std::size_t i = 0; i < cb.codewords.size(); ++i) {
    if (!cb.index_of.emplace(cb.codewords[i], i).second)
      throw InternalError("duplicate codeword");
  }
  return cb;
}

inline const BinaryString& encode(const Codebook& cb, std::size_t column_index) {
  if (column_index >= cb.codewords.size())
    throw ValidationError("column index out of range");
  return cb.codewords[column_index];
}

// Coordinate-wise integer sum of the mixed strings, recovered from prefix
// compositions alone: c_i = total ones at length i, t_i = c_i - c_{i-1}.
struct IntegerSumVector {
  std::vector<long long> values;  // values[i-1] = t_i
  long long h_bar = 0;
};

inline IntegerSumVector recover_sum(const CompositionMultiset& prefixes, long long N) {
  if (N < 1) throw ValidationError("empty input");
  std::vector<long long> count(static_cast<std::size_t>(N) + 1, 0);
  std::vector<long long> ones(static_cast<std::size_t>(N) + 1, 0);
  for (const auto& [c, k] : prefixes.entries()) {
    if (c.length() > N) throw ValidationError("inconsistent multiset");
    count[static_cast<std::size_t>(c.length())] += k;
    ones[static_cast<std::size_t>(c.length())] += k * c.ones;
  }
  const long long h_bar = count[1];
  if (h_bar < 1) throw ValidationError("incomplete prefix multiset");
  for (long long i = 1; i <= N; ++i) {
    if (count[static_cast<std::size_t>(i)] < h_bar)
      throw ValidationError("incomplete prefix multiset");
    if (count[static_cast<std::size_t>(i)] > h_bar)
      throw ValidationError("inconsistent multiset");
  }

  IntegerSumVector out;
  out.h_bar = h_bar;
  out.values.resize(static_cast<std::size_t>(N));
  long long prev = 0;
  for (long long i = 1; i <= N; ++i) {
    const long long c_i = ones[static_cast<std::size_t>(i)];
    const long long t_i = c_i - prev;
    if (t_i < 0 || t_i > h_bar) throw ValidationError("inconsistent multiset");
    out.values[static_cast<std::size_t>(i - 1)] = t_i;
    prev = c_i;
  }
  return out;
}

// Unique subset of exactly h_bar strings whose XOR equals the target.
inline std::vector<BinaryString> recover_subset_from_xor(const BinaryString& xor_sum,
                                                         const SidonSet& sidon,
                                                         long long h_bar) {
  if (static_cast<long long>(xor_sum.size()) != sidon.n)
    throw ValidationError("length mismatch");
  auto index = detail::build_xor_index(sidon.strings, h_bar);
  auto it = index.find(xor_sum.str());
  if (it == index.end())
    throw ValidationError("not a valid mixture of codebook columns");
  std::vector<BinaryString> out;
  out.reserve(it->second.size());
  for (auto i : it->second) out.push_back(sidon.strings[i]);
  return out;
}

struct DecodeResult {
  long long h_bar = 0;
  std::vector<std::size_t> indices;      // ascending column indices
  std::vector<BinaryString> codewords;   // same order as indices
  std::vector<std::pair<std::string, double>> stage_ms;
};

// A ValidationError raised inside decode, annotated with the stage that was
// running. what() is unchanged so message-based handling still works.
class DecodeError : public ValidationError {
 public:
  DecodeError(std::string stage, const std::string& message)
      : ValidationError(message), stage_(std::move(stage)) {}
  const std::string& stage() const noexcept { return stage_; }

 private:
  std::string stage_;
};

namespace detail {

class StageClock {
 public:
  explicit StageClock(std::vector<std::pair<std::string, double>>& sink)
      : sink_(sink), last_(std::chrono::steady_clock::now()) {}
  void lap(const char* stage) {
    auto now = std::chrono::steady_clock::now();
    sink_.emplace_back(stage,
                       std::chrono::duration<double, std::milli>(now - last_).count());
    last_ = now;
  }

 private:
  std::vector<std::pair<std::string, double>>& sink_;
  std::chrono::steady_clock::time_point last_;
};

}  // namespace detail

// Mixture -> exact codeword set. Stages: separate prefixes from suffixes,
// rebuild the integer sum t, check the leading ones-run, read the flip
// counts rho_j and the u-segment from t, reduce mod 2, undo the balancing,
// look up the unique column subset, and re-mix to verify.
inline DecodeResult decode(const Codebook& cb, const MixtureDocument& doc) {
  DecodeResult result;
  detail::StageClock clock(result.stage_ms);
  const LayoutParams& L = cb.layout;
  const char* stage = "input_check";

  try {
    if (doc.n_total != L.N) throw ValidationError("malformed mixture");
    clock.lap("input_check");

    stage = "separate";
    auto sep = separate_prefixes(doc);
    if (sep.h_bar > cb.h) throw ValidationError("mixture size exceeds codebook limit");
    clock.lap("separate");

    stage = "recover_sum";
    auto sum = recover_sum(sep.prefixes, L.N);
    if (sum.h_bar != sep.h_bar) throw ValidationError("inconsistent multiset");
    const long long h_bar = sum.h_bar;
    clock.lap("recover_sum");

    stage = "lead_run_check";
    const auto& t = sum.values;
    for (long long i = 0; i < L.lead_run; ++i)
      if (t[static_cast<std::size_t>(i)] != h_bar)
        throw ValidationError("malformed mixture");
    clock.lap("lead_run_check");

    // r-segment: integer flip counts per block; u-segment: per-bit sums.
    stage = "tail_check";
    std::vector<std::uint8_t> r_mod2(static_cast<std::size_t>(L.num_blocks));
    for (long long j = 0; j < L.num_blocks; ++j)
      r_mod2[static_cast<std::size_t>(j)] =
          static_cast<std::uint8_t>(t[static_cast<std::size_t>(L.lead_run + j)] & 1);
    std::vector<std::uint8_t> u_mod2(static_cast<std::size_t>(L.n));
    const long long u_from = L.lead_run + L.num_blocks;
    for (long long i = 0; i < L.n; ++i)
      u_mod2[static_cast<std::size_t>(i)] =
          static_cast<std::uint8_t>(t[static_cast<std::size_t>(u_from + i)] & 1);

    long long total = 0;
    for (long long v : t) total += v;
    if (total != h_bar * (L.N / 2)) throw ValidationError("malformed mixture");
    for (long long i = L.v_len; i + 1 < L.N; ++i)
      if (t[static_cast<std::size_t>(i)] < t[static_cast<std::size_t>(i + 1)])
        throw ValidationError("malformed mixture");
    clock.lap("tail_check");

    stage = "unbalance";
    auto payload_xor =
        unbalance_sum(BinaryString(std::move(u_mod2)), BinaryString(std::move(r_mod2)), L);
    clock.lap("unbalance");

    stage = "subset_lookup";
    const auto& index = cb.xor_index(h_bar);
    auto hit = index.find(payload_xor.str());
    if (hit == index.end())
      throw ValidationError("not a valid mixture of codebook columns");
    result.h_bar = h_bar;
    result.indices = hit->second;
    for (auto i : result.indices) result.codewords.push_back(cb.codewords[i]);
    clock.lap("subset_lookup");

    stage = "remix_verify";
    auto remixed = mix(result.codewords, cb.h);
    if (remixed.entries != doc.entries)
      throw ValidationError("not a valid mixture of codebook columns");
    clock.lap("remix_verify");
  } catch (const DecodeError&) {
    throw;
  } catch (const ValidationError& e) {
    throw DecodeError(stage, e.what());
  }

  return result;
}

}  // namespace hmc
