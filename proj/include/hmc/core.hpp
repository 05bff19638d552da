#pragma once

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <functional>
#include <ostream>
#include <string>
#include <vector>

#include "hmc/errors.hpp"

namespace hmc {

// A binary string s1...sn. Index 0 here is s1, the leftmost symbol; all
// prefix operations read from the left. Value type, bits stored as 0/1 bytes.
class BinaryString {
 public:
  BinaryString() = default;
  explicit BinaryString(std::vector<std::uint8_t> bits) : bits_(std::move(bits)) {
    for (auto b : bits_)
      if (b > 1) throw ValidationError("binary string bits must be 0 or 1");
  }

  static BinaryString parse(const std::string& text) {
    std::vector<std::uint8_t> bits;
    bits.reserve(text.size());
    for (char c : text) {
      if (c != '0' && c != '1')
        throw ValidationError("binary string may contain only '0' and '1'");
      bits.push_back(static_cast<std::uint8_t>(c - '0'));
    }
    return BinaryString(std::move(bits));
  }

  static BinaryString ones(std::size_t k) {
    return BinaryString(std::vector<std::uint8_t>(k, 1));
  }
  static BinaryString zeros(std::size_t k) {
    return BinaryString(std::vector<std::uint8_t>(k, 0));
  }

  std::size_t size() const { return bits_.size(); }
  bool empty() const { return bits_.empty(); }
  std::uint8_t operator[](std::size_t i) const { return bits_[i]; }
  const std::vector<std::uint8_t>& bits() const { return bits_; }

  void push_back(std::uint8_t b) {
    if (b > 1) throw ValidationError("binary string bits must be 0 or 1");
    bits_.push_back(b);
  }

  // Substring [from, from+len).
  BinaryString slice(std::size_t from, std::size_t len) const {
    if (from + len > bits_.size()) throw ValidationError("slice out of range");
    return BinaryString(std::vector<std::uint8_t>(bits_.begin() + static_cast<std::ptrdiff_t>(from),
                                                  bits_.begin() + static_cast<std::ptrdiff_t>(from + len)));
  }

  BinaryString prefix(std::size_t len) const { return slice(0, len); }
  BinaryString suffix(std::size_t len) const {
    if (len > bits_.size()) throw ValidationError("suffix longer than string");
    return slice(bits_.size() - len, len);
  }

  BinaryString operator+(const BinaryString& rhs) const {
    std::vector<std::uint8_t> out = bits_;
    out.insert(out.end(), rhs.bits_.begin(), rhs.bits_.end());
    return BinaryString(std::move(out));
  }

  // Bitwise XOR; operands must have equal length.
  BinaryString operator^(const BinaryString& rhs) const {
    if (bits_.size() != rhs.bits_.size())
      throw ValidationError("xor requires equal lengths");
    std::vector<std::uint8_t> out(bits_.size());
    for (std::size_t i = 0; i < bits_.size(); ++i) out[i] = bits_[i] ^ rhs.bits_[i];
    return BinaryString(std::move(out));
  }

  bool operator==(const BinaryString& rhs) const { return bits_ == rhs.bits_; }
  bool operator!=(const BinaryString& rhs) const { return bits_ != rhs.bits_; }
  // Lexicographic; shorter strings sort before their extensions.
  bool operator<(const BinaryString& rhs) const { return bits_ < rhs.bits_; }

  std::string str() const {
    std::string out;
    out.reserve(bits_.size());
    for (auto b : bits_) out.push_back(static_cast<char>('0' + b));
    return out;
  }

 private:
  std::vector<std::uint8_t> bits_;
};

inline std::ostream& operator<<(std::ostream& os, const BinaryString& s) {
  return os << s.str();
}

// Unordered content of a substring: how many zeros and ones, order erased.
struct Composition {
  long long zeros = 0;
  long long ones = 0;

  long long length() const { return zeros + ones; }

  bool operator==(const Composition& rhs) const {
    return zeros == rhs.zeros && ones == rhs.ones;
  }
  bool operator!=(const Composition& rhs) const { return !(*this == rhs); }
  // Canonical order: by total length, then by ones.
  bool operator<(const Composition& rhs) const {
    if (length() != rhs.length()) return length() < rhs.length();
    return ones < rhs.ones;
  }

  // Text form: "0^a 1^b" with "^1" elided and a term omitted when its
  // exponent is 0. A space separates the terms only when the zeros term
  // carries an exponent; this keeps parsing unambiguous ("0^21" is twenty-one
  // zeros, "0^2 1" is two zeros and a one).
  std::string str() const {
    std::string out;
    auto term = [&out](char sym, long long e) {
      out.push_back(sym);
      if (e > 1) out += "^" + std::to_string(e);
    };
    if (zeros > 0) term('0', zeros);
    if (ones > 0) {
      if (zeros > 1) out.push_back(' ');
      term('1', ones);
    }
    return out;
  }

  static Composition parse(const std::string& text) {
    // One or two terms; each term is sym or sym^digits. Terms are adjacent
    // only when the zeros term is a bare "0".
    std::size_t i = 0;
    auto term = [&](char sym) -> long long {
      if (i >= text.size() || text[i] != sym)
        throw ValidationError("malformed composition text");
      ++i;
      if (i < text.size() && text[i] == '^') {
        ++i;
        std::size_t start = i;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
        if (i == start) throw ValidationError("malformed composition text");
        return std::stoll(text.substr(start, i - start));
      }
      return 1;
    };
    Composition c;
    if (text.empty()) throw ValidationError("malformed composition text");
    if (text[0] == '1') {
      c.ones = term('1');
    } else {
      c.zeros = term('0');
      if (i < text.size()) {
        if (text[i] == ' ') ++i;
        c.ones = term('1');
      }
    }
    if (i != text.size()) throw ValidationError("malformed composition text");
    return c;
  }
};

inline std::ostream& operator<<(std::ostream& os, const Composition& c) {
  return os << c.str();
}

inline long long weight(const BinaryString& s) {
  long long w = 0;
  for (std::size_t i = 0; i < s.size(); ++i) w += s[i];
  return w;
}

// R(s)_i = 2*wt(s1...si) - i for i = 1..n. values[i-1] holds R(s)_i.
inline std::vector<long long> rds_profile(const BinaryString& s) {
  if (s.empty()) throw ValidationError("empty input");
  std::vector<long long> values(s.size());
  long long r = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    r += s[i] ? 1 : -1;
    values[i] = r;
  }
  return values;
}

// Balanced, and every proper prefix has strictly more ones than zeros:
// R(s)_i > 0 for i in [N-1], R(s)_N = 0. Odd length is never a Dyck path.
inline bool is_dyck(const BinaryString& s) {
  if (s.size() % 2 != 0) return false;
  if (s.empty()) return true;
  long long r = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    r += s[i] ? 1 : -1;
    if (i + 1 < s.size() && r <= 0) return false;
  }
  return r == 0;
}

inline Composition composition_of(const BinaryString& s) {
  if (s.empty()) throw ValidationError("empty input");
  long long w = weight(s);
  return Composition{static_cast<long long>(s.size()) - w, w};
}

inline BinaryString complement(const BinaryString& s) {
  std::vector<std::uint8_t> out(s.size());
  for (std::size_t i = 0; i < s.size(); ++i) out[i] = s[i] ^ 1u;
  return BinaryString(std::move(out));
}

}  // namespace hmc

template <>
struct std::hash<hmc::BinaryString> {
  std::size_t operator()(const hmc::BinaryString& s) const noexcept {
    // FNV-1a over the bit bytes; strings are short, quality is adequate.
    std::size_t h = 1469598103934665603ull;
    for (auto b : s.bits()) {
      h ^= b;
      h *= 1099511628211ull;
    }
    h ^= s.size();
    return h;
  }
};
