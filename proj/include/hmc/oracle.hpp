#pragma once

#include <algorithm>
#include <cstdint>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "hmc/core.hpp"
#include "hmc/detail/subsets.hpp"
#include "hmc/errors.hpp"
#include "hmc/multiset.hpp"

namespace hmc {

enum class Flavor { full, prefix_only };

struct ConfusabilityWitness {
  Flavor flavor = Flavor::full;
  std::vector<BinaryString> set_a;  // sorted lexicographically
  std::vector<BinaryString> set_b;
};

struct McVerdict {
  bool ok = false;
  ConfusabilityWitness witness;  // meaningful only when !ok
};

namespace detail {

inline CompositionMultiset flavored_union(const std::vector<BinaryString>& strings,
                                          Flavor flavor) {
  CompositionMultiset out;
  for (const auto& s : strings)
    out.merge(flavor == Flavor::full ? full_multiset(s) : prefix_multiset(s));
  return out;
}

// Exact canonical serialization; the ground-truth comparisons key on this
// rather than on any lossy hash.
inline std::string multiset_key(const CompositionMultiset& ms) {
  std::string key;
  for (const auto& [c, k] : ms.entries()) {
    key += std::to_string(c.zeros);
    key += ',';
    key += std::to_string(c.ones);
    key += 'x';
    key += std::to_string(k);
    key += ';';
  }
  return key;
}

inline void check_same_length(const std::vector<BinaryString>& strings,
                              std::size_t len) {
  for (const auto& s : strings)
    if (s.size() != len) throw ValidationError("length mismatch");
}

}  // namespace detail

// True iff the two collections produce identical multiset unions under the
// chosen flavor, i.e. the readout cannot tell them apart.
inline bool confusable(const std::vector<BinaryString>& set_a,
                       const std::vector<BinaryString>& set_b, Flavor flavor) {
  if (set_a.empty() || set_b.empty()) throw ValidationError("empty input");
  detail::check_same_length(set_a, set_a[0].size());
  detail::check_same_length(set_b, set_a[0].size());
  return detail::flavored_union(set_a, flavor) == detail::flavored_union(set_b, flavor);
}

inline constexpr unsigned long long kMcVerifyGuard = 1'000'000;

// Exhaustive check of unique reconstructability: all full-multiset unions
// over distinct subsets of size 1..h must be pairwise distinct.
inline McVerdict is_h_mc_code(std::vector<BinaryString> strings, int h) {
  if (strings.empty()) throw ValidationError("empty input");
  if (h < 1) throw ValidationError("h must be at least 1");
  detail::check_same_length(strings, strings[0].size());
  if (detail::subset_budget(strings.size(), h) > kMcVerifyGuard)
    throw GuardError("instance too large for brute force");

  std::sort(strings.begin(), strings.end());
  for (std::size_t i = 0; i + 1 < strings.size(); ++i)
    if (strings[i] == strings[i + 1])
      throw ValidationError("collection must be a set");

  auto subset_strings = [&strings](const std::vector<std::size_t>& subset) {
    std::vector<BinaryString> out;
    out.reserve(subset.size());
    for (auto i : subset) out.push_back(strings[i]);
    return out;
  };

  std::unordered_map<std::string, std::vector<std::size_t>> seen;
  for (int k = 1; k <= h && static_cast<std::size_t>(k) <= strings.size(); ++k) {
    auto idx = detail::first_combination(static_cast<std::size_t>(k));
    do {
      auto key = detail::multiset_key(
          detail::flavored_union(subset_strings(idx), Flavor::full));
      auto [it, inserted] = seen.emplace(std::move(key), idx);
      if (!inserted) {
        McVerdict verdict;
        verdict.ok = false;
        verdict.witness.flavor = Flavor::full;
        verdict.witness.set_a = subset_strings(it->second);
        verdict.witness.set_b = subset_strings(idx);
        return verdict;
      }
    } while (detail::next_combination(idx, strings.size()));
  }
  return McVerdict{true, {}};
}

struct MaxMcResult {
  long long size = 0;
  std::vector<BinaryString> example;
};

namespace detail {

// Backtracking state for the maximum-code search: a rollback-friendly set of
// every union key produced by subsets (size <= h) of the current set. Keys
// are exact canonical serializations; pair keys are memoized because the
// search revisits the same pairs across branches.
class McSearch {
 public:
  McSearch(std::vector<BinaryString> candidates, int h)
      : candidates_(std::move(candidates)), h_(h) {
    fulls_.reserve(candidates_.size());
    single_keys_.reserve(candidates_.size());
    for (const auto& s : candidates_) {
      fulls_.push_back(full_multiset(s));
      single_keys_.push_back(multiset_key(fulls_.back()));
    }
  }

  MaxMcResult run() {
    extend(0);
    MaxMcResult out;
    out.size = static_cast<long long>(best_.size());
    out.example = best_;
    return out;
  }

 private:
  void extend(std::size_t idx) {
    if (current_.size() + (candidates_.size() - idx) <= best_.size()) return;
    if (idx == candidates_.size()) {
      if (current_.size() > best_.size()) {
        best_.clear();
        for (auto i : current_) best_.push_back(candidates_[i]);
      }
      return;
    }
    std::vector<const std::string*> added;
    if (try_add(idx, added)) {
      current_.push_back(idx);
      extend(idx + 1);
      current_.pop_back();
    }
    for (const auto* key : added) seen_.erase(*key);
    extend(idx + 1);
  }

  const std::string& pair_key(std::size_t a, std::size_t b) {
    const std::uint64_t id = (static_cast<std::uint64_t>(a) << 32) | b;
    auto it = pair_cache_.find(id);
    if (it == pair_cache_.end()) {
      CompositionMultiset u = fulls_[a];
      u.merge(fulls_[b]);
      it = pair_cache_.emplace(id, multiset_key(u)).first;
    }
    return it->second;
  }

  const std::string& triple_key(std::size_t a, std::size_t b, std::size_t c) {
    const std::uint64_t id =
        (static_cast<std::uint64_t>(a) << 40) | (static_cast<std::uint64_t>(b) << 20) | c;
    auto it = triple_cache_.find(id);
    if (it == triple_cache_.end()) {
      CompositionMultiset u = fulls_[a];
      u.merge(fulls_[b]);
      u.merge(fulls_[c]);
      it = triple_cache_.emplace(id, multiset_key(u)).first;
    }
    return it->second;
  }

  // Inserts the union keys of every new subset involving candidate `idx`.
  // On any collision removes what it inserted and reports failure.
  bool try_add(std::size_t idx, std::vector<const std::string*>& added) {
    auto insert = [this, &added](const std::string& key) {
      if (!seen_.insert(key).second) {
        for (const auto* k : added) seen_.erase(*k);
        added.clear();
        return false;
      }
      added.push_back(&key);
      return true;
    };

    if (!insert(single_keys_[idx])) return false;
    if (h_ >= 2)
      for (auto a : current_)
        if (!insert(pair_key(a, idx))) return false;
    if (h_ >= 3)
      for (std::size_t i = 0; i < current_.size(); ++i)
        for (std::size_t j = i + 1; j < current_.size(); ++j)
          if (!insert(triple_key(current_[i], current_[j], idx))) return false;
    return true;
  }

  std::vector<BinaryString> candidates_;
  std::vector<CompositionMultiset> fulls_;
  std::vector<std::string> single_keys_;
  int h_;
  std::vector<std::size_t> current_;
  std::vector<BinaryString> best_;
  std::unordered_set<std::string> seen_;
  std::unordered_map<std::uint64_t, std::string> pair_cache_;
  std::unordered_map<std::uint64_t, std::string> triple_cache_;
};

}  // namespace detail

// Maximum-cardinality subset of {0,1}^n passing is_h_mc_code, by canonical
// depth-first search. Reversal classes cut the space: a full multiset never
// distinguishes s from its reversal, so only the lex-least representative of
// each class can appear in any valid code.
inline MaxMcResult max_mc_code_size(int n, int h) {
  if (n < 1 || n > 10 || h < 2 || h > 3)
    throw GuardError("instance too large for brute force");

  std::vector<BinaryString> candidates;
  for (std::uint64_t mask = 0; mask < (1ull << n); ++mask) {
    std::vector<std::uint8_t> bits(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
      bits[static_cast<std::size_t>(i)] = (mask >> (n - 1 - i)) & 1u;
    BinaryString s(bits);
    std::vector<std::uint8_t> rev(bits.rbegin(), bits.rend());
    BinaryString r(rev);
    if (!(r < s)) candidates.push_back(std::move(s));
  }
  return detail::McSearch(std::move(candidates), h).run();
}

}  // namespace hmc
