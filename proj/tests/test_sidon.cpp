#include <catch2/catch_amalgamated.hpp>

#include <set>
#include <unordered_map>

#include "hmc/sidon.hpp"

using hmc::BinaryString;

namespace {

std::vector<BinaryString> parse_all(const std::vector<std::string>& texts) {
  std::vector<BinaryString> out;
  for (const auto& t : texts) out.push_back(BinaryString::parse(t));
  return out;
}

long long coordinate_sum(const std::vector<BinaryString>& subset, std::size_t p) {
  long long s = 0;
  for (const auto& x : subset) s += x[p];
  return s;
}

}  // namespace

TEST_CASE("codebook construction, m=3 h=2") {
  auto cb = hmc::build_bh_codebook(3, 2);
  CHECK(cb.h == 2);
  CHECK(cb.n == 6);
  REQUIRE(cb.strings.size() == 7);
  std::vector<std::string> expected = {"001001", "010011", "100101", "011100",
                                       "110111", "111010", "101110"};
  for (std::size_t i = 0; i < expected.size(); ++i)
    CHECK(cb.strings[i].str() == expected[i]);
  CHECK(hmc::verify_bh(cb.strings, 2).ok);
}

TEST_CASE("codebook sizes and shapes") {
  auto cb4 = hmc::build_bh_codebook(4, 2);
  CHECK(cb4.strings.size() == 15);
  CHECK(cb4.n == 8);
  CHECK(cb4.strings[0].str() == "00010001");
  CHECK(cb4.strings[1].str() == "00101000");

  auto cb53 = hmc::build_bh_codebook(5, 3);
  CHECK(cb53.strings.size() == 31);
  CHECK(cb53.n == 15);
  CHECK(cb53.strings[1].str() == "000100100000101");

  CHECK_THROWS_WITH(hmc::build_bh_codebook(1, 2), "unsupported field degree");
  CHECK_THROWS_WITH(hmc::build_bh_codebook(17, 2), "unsupported field degree");
  CHECK_THROWS_AS(hmc::build_bh_codebook(4, 1), hmc::ValidationError);
}

TEST_CASE("codebook strings are distinct and never all-zero") {
  for (int m = 2; m <= 8; ++m) {
    auto cb = hmc::build_bh_codebook(m, 2);
    std::set<BinaryString> uniq(cb.strings.begin(), cb.strings.end());
    REQUIRE(uniq.size() == cb.strings.size());
    for (const auto& s : cb.strings) REQUIRE(hmc::weight(s) > 0);
  }
}

TEST_CASE("verify_bh passes on built codebooks") {
  for (int m = 2; m <= 5; ++m) {
    CHECK(hmc::verify_bh(hmc::build_bh_codebook(m, 2).strings, 2).ok);
  }
  CHECK(hmc::verify_bh(hmc::build_bh_codebook(5, 3).strings, 3).ok);
}

TEST_CASE("verify_bh finds the classic four-string collision") {
  auto verdict = hmc::verify_bh(parse_all({"011", "000", "001", "010"}), 2);
  REQUIRE_FALSE(verdict.ok);
  // A returned witness must be a genuine collision of distinct subsets.
  REQUIRE_FALSE(verdict.set_a == verdict.set_b);
  for (std::size_t p = 0; p < 3; ++p)
    CHECK(coordinate_sum(verdict.set_a, p) == coordinate_sum(verdict.set_b, p));
  // The textbook pair collides too: 011 + 000 = 001 + 010 coordinate-wise.
  auto pair_a = parse_all({"011", "000"});
  auto pair_b = parse_all({"001", "010"});
  for (std::size_t p = 0; p < 3; ++p)
    CHECK(coordinate_sum(pair_a, p) == coordinate_sum(pair_b, p));
}

TEST_CASE("verify_bh witness for a sum hitting a singleton") {
  auto verdict = hmc::verify_bh(parse_all({"001", "010", "011"}), 2);
  REQUIRE_FALSE(verdict.ok);
  CHECK(verdict.set_a == parse_all({"011"}));
  CHECK(verdict.set_b == parse_all({"001", "010"}));
}

TEST_CASE("verify_bh input validation and guard") {
  CHECK_THROWS_WITH(hmc::verify_bh({}, 2), "empty input");
  CHECK_THROWS_WITH(hmc::verify_bh(parse_all({"01", "01"}), 2),
                    "collection must be a set");
  CHECK_THROWS_AS(hmc::verify_bh(parse_all({"01", "011"}), 2),
                  hmc::ValidationError);

  // 6000 distinct strings: pairs alone exceed the 1e7 subset budget.
  std::vector<BinaryString> big;
  for (int i = 0; i < 6000; ++i) {
    std::vector<std::uint8_t> bits(13);
    for (int b = 0; b < 13; ++b) bits[static_cast<std::size_t>(b)] = (i >> b) & 1;
    big.emplace_back(bits);
  }
  CHECK_THROWS_WITH(hmc::verify_bh(big, 2), "instance too large for brute force");
}

TEST_CASE("pad_to_square targets the smallest even-root square") {
  auto cb = hmc::build_bh_codebook(3, 2);  // n=6
  auto padded = hmc::pad_to_square(cb);
  CHECK(padded.n == 16);
  CHECK(padded.strings[0].str() == "0010010000000000");
  CHECK(padded.strings.size() == cb.strings.size());
  CHECK(hmc::verify_bh(padded.strings, 2).ok);

  auto cb8 = hmc::build_bh_codebook(8, 2);  // n=16 already 4^2
  auto padded8 = hmc::pad_to_square(cb8);
  CHECK(padded8.n == 16);
  CHECK(padded8.strings[7] == cb8.strings[7]);

  auto cb10 = hmc::build_bh_codebook(10, 2);  // n=20 -> 36 (25 has odd root)
  CHECK(hmc::pad_to_square(cb10).n == 36);
}

TEST_CASE("XOR subset sums are distinct for built codebooks") {
  // The decoder leans on this: any 2h columns are independent over F_2.
  for (auto [m, h] : {std::pair<int, int>{3, 2}, {4, 2}, {5, 2}, {5, 3}}) {
    auto cb = hmc::build_bh_codebook(m, h);
    std::unordered_map<std::string, int> seen;
    const std::size_t count = cb.strings.size();
    // size-1 and size-2 subsets; size-3 when h=3
    for (std::size_t i = 0; i < count; ++i) {
      REQUIRE(seen.emplace(cb.strings[i].str(), 1).second);
    }
    for (std::size_t i = 0; i < count; ++i)
      for (std::size_t j = i + 1; j < count; ++j)
        REQUIRE(seen.emplace((cb.strings[i] ^ cb.strings[j]).str(), 1).second);
    if (h >= 3) {
      for (std::size_t i = 0; i < count; ++i)
        for (std::size_t j = i + 1; j < count; ++j)
          for (std::size_t k = j + 1; k < count; ++k)
            REQUIRE(seen
                        .emplace((cb.strings[i] ^ cb.strings[j] ^ cb.strings[k]).str(), 1)
                        .second);
    }
  }
}
