#pragma once

#include <array>
#include <cstdint>

#include "hmc/core.hpp"
#include "hmc/errors.hpp"

namespace hmc {

// One primitive polynomial per degree m in [2, 16], coefficient bits with the
// x^m term included (0x13 = x^4 + x + 1). Fixed so codebooks are reproducible
// byte for byte.
inline constexpr std::array<std::uint32_t, 17> kPrimitivePoly = {
    0, 0,
    0x7,     // m=2:  x^2 + x + 1
    0xB,     // m=3:  x^3 + x + 1
    0x13,    // m=4:  x^4 + x + 1
    0x25,    // m=5:  x^5 + x^2 + 1
    0x43,    // m=6:  x^6 + x + 1
    0x89,    // m=7:  x^7 + x^3 + 1
    0x11D,   // m=8:  x^8 + x^4 + x^3 + x^2 + 1
    0x211,   // m=9:  x^9 + x^4 + 1
    0x409,   // m=10: x^10 + x^3 + 1
    0x805,   // m=11: x^11 + x^2 + 1
    0x1053,  // m=12: x^12 + x^6 + x^4 + x + 1
    0x201B,  // m=13: x^13 + x^4 + x^3 + x + 1
    0x4443,  // m=14: x^14 + x^10 + x^6 + x + 1
    0x8003,  // m=15: x^15 + x + 1
    0x1100B, // m=16: x^16 + x^12 + x^3 + x + 1
};

// GF(2^m) with elements as m-bit polynomial residues; alpha() is the residue
// class of x, a primitive element for every table entry.
class Gf2m {
 public:
  explicit Gf2m(int m) : m_(m) {
    if (m < 2 || m > 16) throw ValidationError("unsupported field degree");
    poly_ = kPrimitivePoly[static_cast<std::size_t>(m)];
  }

  int m() const { return m_; }
  std::uint32_t poly() const { return poly_; }
  std::uint32_t size() const { return 1u << m_; }
  std::uint32_t order() const { return size() - 1; }
  static constexpr std::uint32_t alpha() { return 2; }

  std::uint32_t add(std::uint32_t a, std::uint32_t b) const { return a ^ b; }

  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
    std::uint32_t acc = 0;
    const std::uint32_t high = 1u << m_;
    while (b != 0) {
      if (b & 1u) acc ^= a;
      b >>= 1;
      a <<= 1;
      if (a & high) a ^= poly_;
    }
    return acc;
  }

  std::uint32_t pow(std::uint32_t a, std::uint64_t e) const {
    std::uint32_t acc = 1;
    while (e != 0) {
      if (e & 1u) acc = mul(acc, a);
      a = mul(a, a);
      e >>= 1;
    }
    return acc;
  }

  std::uint32_t inv(std::uint32_t a) const {
    if (a == 0) throw ValidationError("zero has no inverse");
    return pow(a, order() - 1);
  }

  // MSB-first m-bit vector of an element (coefficient of x^{m-1} first).
  BinaryString to_bits(std::uint32_t a) const {
    std::vector<std::uint8_t> bits(static_cast<std::size_t>(m_));
    for (int i = 0; i < m_; ++i)
      bits[static_cast<std::size_t>(i)] = (a >> (m_ - 1 - i)) & 1u;
    return BinaryString(std::move(bits));
  }

 private:
  int m_;
  std::uint32_t poly_;
};

}  // namespace hmc
