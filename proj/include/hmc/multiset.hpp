#pragma once

#include <map>
#include <vector>

#include "hmc/core.hpp"
#include "hmc/errors.hpp"

namespace hmc {

// Multiset of compositions. The map key order (length, then ones) is the
// canonical iteration order, so serialization never depends on insertion.
class CompositionMultiset {
 public:
  using Map = std::map<Composition, long long>;

  void add(const Composition& c, long long count = 1) {
    if (count <= 0) throw ValidationError("multiplicity must be positive");
    entries_[c] += count;
  }

  // Removes one occurrence; erases the key at zero.
  void remove_one(const Composition& c) {
    auto it = entries_.find(c);
    if (it == entries_.end()) throw ValidationError("composition not present");
    if (--it->second == 0) entries_.erase(it);
  }

  long long count(const Composition& c) const {
    auto it = entries_.find(c);
    return it == entries_.end() ? 0 : it->second;
  }

  long long total() const {
    long long t = 0;
    for (const auto& [c, k] : entries_) t += k;
    return t;
  }

  bool empty() const { return entries_.empty(); }
  const Map& entries() const { return entries_; }

  CompositionMultiset& merge(const CompositionMultiset& other) {
    for (const auto& [c, k] : other.entries_) entries_[c] += k;
    return *this;
  }

  bool operator==(const CompositionMultiset& rhs) const {
    return entries_ == rhs.entries_;
  }
  bool operator!=(const CompositionMultiset& rhs) const {
    return entries_ != rhs.entries_;
  }
  // Total order via the canonical entry sequence, for deterministic tie-breaks.
  bool operator<(const CompositionMultiset& rhs) const {
    return std::lexicographical_compare(
        entries_.begin(), entries_.end(), rhs.entries_.begin(), rhs.entries_.end(),
        [](const auto& a, const auto& b) {
          if (a.first != b.first) return a.first < b.first;
          return a.second < b.second;
        });
  }

 private:
  Map entries_;
};

// One composition per prefix length 1..n.
inline CompositionMultiset prefix_multiset(const BinaryString& s) {
  if (s.empty()) throw ValidationError("empty input");
  CompositionMultiset out;
  long long w = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    w += s[i];
    out.add(Composition{static_cast<long long>(i + 1) - w, w});
  }
  return out;
}

// One composition per suffix length 1..n; the full string counts once here too.
inline CompositionMultiset suffix_multiset(const BinaryString& s) {
  if (s.empty()) throw ValidationError("empty input");
  CompositionMultiset out;
  long long w = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    w += s[s.size() - 1 - i];
    out.add(Composition{static_cast<long long>(i + 1) - w, w});
  }
  return out;
}

// Prefixes and suffixes together; cardinality 2n.
inline CompositionMultiset full_multiset(const BinaryString& s) {
  CompositionMultiset out = prefix_multiset(s);
  out.merge(suffix_multiset(s));
  return out;
}

// The observable for a pooled readout: the union of the members' full
// multisets, plus the declared codeword length and mixture-size cap.
struct MixtureDocument {
  long long n_total = 0;  // codeword length N
  long long declared_hmax = 0;
  CompositionMultiset entries;
};

inline MixtureDocument mix(const std::vector<BinaryString>& collection, long long hmax) {
  if (collection.empty()) throw ValidationError("empty input");
  for (std::size_t i = 0; i < collection.size(); ++i)
    for (std::size_t j = i + 1; j < collection.size(); ++j)
      if (collection[i] == collection[j])
        throw ValidationError("collection must be a set");
  const std::size_t len = collection[0].size();
  for (const auto& s : collection)
    if (s.size() != len) throw ValidationError("mixed lengths in collection");
  if (static_cast<long long>(collection.size()) > hmax)
    throw ValidationError("collection larger than declared hmax");

  MixtureDocument doc;
  doc.n_total = static_cast<long long>(len);
  doc.declared_hmax = hmax;
  for (const auto& s : collection) doc.entries.merge(full_multiset(s));
  return doc;
}

struct SeparationResult {
  CompositionMultiset prefixes;
  CompositionMultiset suffixes;
  long long h_bar = 0;
};

// Splits a mixture of Dyck-path strings back into prefix and suffix parts.
// For length i < N a prefix composition has ones > i/2 and a suffix has
// ones < i/2; equality cannot occur for Dyck strings. Length-N entries are
// forced to ones = N/2 and split evenly between the two sides.
inline SeparationResult separate_prefixes(const MixtureDocument& doc) {
  const long long N = doc.n_total;
  if (N <= 0 || doc.entries.empty()) throw ValidationError("empty input");

  std::map<long long, long long> per_length;
  for (const auto& [c, k] : doc.entries.entries()) {
    if (c.length() < 1 || c.length() > N)
      throw ValidationError("malformed mixture");
    per_length[c.length()] += k;
  }
  auto it1 = per_length.find(1);
  if (it1 == per_length.end() || it1->second % 2 != 0)
    throw ValidationError("malformed mixture");
  const long long h_bar = it1->second / 2;
  for (const auto& [len, cnt] : per_length)
    if (cnt % 2 != 0) throw ValidationError("malformed mixture");

  SeparationResult out;
  out.h_bar = h_bar;
  for (const auto& [c, k] : doc.entries.entries()) {
    const long long i = c.length();
    if (i == N) {
      if (2 * c.ones != N) throw ValidationError("malformed mixture");
      if (k % 2 != 0) throw ValidationError("malformed mixture");
      out.prefixes.add(c, k / 2);
      out.suffixes.add(c, k / 2);
    } else if (2 * c.ones > i) {
      out.prefixes.add(c, k);
    } else if (2 * c.ones < i) {
      out.suffixes.add(c, k);
    } else {
      throw ValidationError("input not a Dyck mixture");
    }
  }
  return out;
}

}  // namespace hmc
