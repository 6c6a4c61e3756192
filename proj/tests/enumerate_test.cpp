#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <algorithm>
#include <set>
#include <string>
#include <vector>

#include "doctest.h"
#include "sqf/enumerate.hpp"
#include "sqf/k33.hpp"
#include "sqf/pansiot.hpp"

using namespace sqf;

namespace {

// brute filter over all 3^l strings, independent of the DFS enumerator
std::vector<std::string> all_square_free_brute(std::size_t l) {
  std::vector<std::string> out;
  std::string w(l, 'a');
  const std::size_t total = [&] {
    std::size_t t = 1;
    for (std::size_t i = 0; i < l; ++i) t *= 3;
    return t;
  }();
  for (std::size_t code = 0; code < total; ++code) {
    std::size_t x = code;
    for (std::size_t i = 0; i < l; ++i) {
      w[i] = kAlphabet[x % 3];
      x /= 3;
    }
    if (is_square_free(w)) out.push_back(w);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST_CASE("linear enumeration") {
  CHECK(enumerate_square_free_linear(0) == std::vector<std::string>{""});
  CHECK(enumerate_square_free_linear(1) == std::vector<std::string>{"a", "b", "c"});
  CHECK(enumerate_square_free_linear(2).size() == 6);
  const auto five = enumerate_square_free_linear(5);
  CHECK(five.size() == 30);
  CHECK(five == all_square_free_brute(5));
  CHECK(std::is_sorted(five.begin(), five.end()));
  CHECK(enumerate_square_free_linear(7) == all_square_free_brute(7));
  CHECK_THROWS_AS(enumerate_square_free_linear(kMaxEnumerationLength + 1),
                  std::invalid_argument);
}

TEST_CASE("circular enumeration") {
  CHECK(enumerate_circular(5, Dedup::Rotation).empty());
  CHECK(enumerate_circular(5, Dedup::Isomorphism).empty());
  const auto four = enumerate_circular(4, Dedup::Isomorphism);
  REQUIRE(four.size() == 1);
  CHECK(four.front() == CircularWord("abac"));
  CHECK(enumerate_circular(18, Dedup::Isomorphism).size() >= 2);
  CHECK_THROWS_AS(enumerate_circular(0, Dedup::Rotation), std::invalid_argument);
}

TEST_CASE("count_circular") {
  const auto seven = count_circular(7);
  CHECK(seven.raw_count == 0);
  CHECK(seven.iso_count == 0);
  CHECK(count_circular(3).iso_count == 1);
  CHECK(count_circular(3).raw_count == 2);
  CHECK(count_circular(21).iso_count == 1);
  SUBCASE("counts match the listing and the class-size bound") {
    for (std::size_t l = 1; l <= 14; ++l) {
      const EnumerationReport r = count_circular(l);
      CHECK(r.raw_count == enumerate_circular(l, Dedup::Rotation).size());
      CHECK(r.iso_count == enumerate_circular(l, Dedup::Isomorphism).size());
      CHECK(r.iso_count <= r.raw_count);
      CHECK(r.raw_count <= 6 * r.iso_count);
    }
  }
}

TEST_CASE("count_circular_range agrees with per-length counts") {
  const auto range = count_circular_range(1, 12);
  REQUIRE(range.size() == 12);
  for (const EnumerationReport& r : range) {
    const EnumerationReport single = count_circular(r.length);
    CHECK(r.raw_count == single.raw_count);
    CHECK(r.iso_count == single.iso_count);
  }
  CHECK_THROWS_AS(count_circular_range(3, 2), std::invalid_argument);
}

TEST_CASE("uniqueness lengths") {
  CHECK(uniqueness_lengths(21) ==
        std::vector<std::size_t>{1, 2, 3, 4, 6, 8, 11, 12, 13, 15, 16, 21});
  CHECK(uniqueness_lengths(4) == std::vector<std::size_t>{1, 2, 3, 4});
  CHECK_THROWS_AS(uniqueness_lengths(0), std::invalid_argument);
}

TEST_CASE("minimal square codewords") {
  CHECK(minimal_square_codewords(2) == std::set<std::string>{"00"});
  CHECK(minimal_square_codewords(3) == std::set<std::string>{"1111"});
  CHECK(minimal_square_codewords(4) == std::set<std::string>{"010101", "101010"});
  CHECK(minimal_square_codewords(6) ==
        std::set<std::string>{"0110110110", "1101101101", "1011011011"});
  CHECK(minimal_square_codewords(5).empty());
  CHECK(minimal_square_codewords(7).empty());
  CHECK_THROWS_AS(minimal_square_codewords(1), std::invalid_argument);
  CHECK_THROWS_AS(minimal_square_codewords(17), std::invalid_argument);
  SUBCASE("scanning all rotation classes yields the same sets") {
    for (std::size_t p = 2; p <= 8; ++p) {
      CHECK(minimal_square_codewords(p) == minimal_square_codewords(p, true));
    }
  }
  SUBCASE("each codeword has length 2p-2 and decodes to a minimal square") {
    for (std::size_t p = 2; p <= 9; ++p) {
      for (const std::string& bits : minimal_square_codewords(p)) {
        CHECK(bits.size() == 2 * p - 2);
        CHECK(is_minimal_square(decode_linear(BinaryCodeword::linear(bits), 'a', 'b')));
      }
    }
  }
}

TEST_CASE("simple cycle codewords appear in the enumeration of their length") {
  for (const SimpleCycle& row : simple_cycles()) {
    std::set<std::string> codewords;
    for (const CircularWord& cw :
         enumerate_circular(static_cast<std::size_t>(row.length), Dedup::Rotation)) {
      codewords.insert(encode_circular(cw).bits());
    }
    CAPTURE(row.label);
    CHECK(codewords.count(std::string(row.codeword)) == 1);
  }
}

TEST_CASE("decodable codewords: square-free iff no short minimal-square factor") {
  // codeword side: a cyclic factor of length <= l-2 from the minimal-square
  // sets; word side: a minimal square of period <= 8 in the decoded word
  std::vector<std::set<std::string>> square_codewords(9);
  for (std::size_t p = 2; p <= 8; ++p) square_codewords[p] = minimal_square_codewords(p);

  for (std::size_t l = 3; l <= 14; ++l) {
    for (std::size_t mask = 0; mask < (std::size_t{1} << l); ++mask) {
      std::string bits(l, '0');
      for (std::size_t i = 0; i < l; ++i) {
        if (mask & (std::size_t{1} << i)) bits[i] = '1';
      }
      const BinaryCodeword code = BinaryCodeword::circular(bits);
      const auto word = decode_circular(code);
      if (!word) continue;

      const bool square_free = is_circular_square_free(*word);

      bool factor_hit = false;
      const std::string doubled = code.bits() + code.bits();
      for (std::size_t p = 2; p <= 8 && !factor_hit; ++p) {
        for (const std::string& pattern : square_codewords[p]) {
          if (pattern.size() > l - 2) continue;
          if (doubled.substr(0, l + pattern.size() - 1).find(pattern) != std::string::npos) {
            factor_hit = true;
            break;
          }
        }
      }

      bool word_hit = false;
      const std::string w2 = word->representative() + word->representative();
      for (std::size_t i = 0; i < word->size() && !word_hit; ++i) {
        for (std::size_t p = 2; p <= 8 && 2 * p <= word->size(); ++p) {
          const std::string_view factor = std::string_view(w2).substr(i, 2 * p);
          if (is_minimal_square(factor)) {
            word_hit = true;
            break;
          }
        }
      }

      CAPTURE(code.bits());
      CHECK(square_free == !factor_hit);
      CHECK(square_free == !word_hit);
      CHECK(circular_factor_scan(code).has_value() == word_hit);
    }
  }
}

TEST_CASE("growth report") {
  const GrowthReport low = growth_report(5, 10);
  REQUIRE(low.counts.size() == 6);
  CHECK(low.counts[0].raw_count == 0);   // 5
  CHECK(low.counts[1].raw_count > 0);    // 6
  CHECK(low.counts[2].raw_count == 0);   // 7
  CHECK(low.counts[3].raw_count > 0);    // 8
  CHECK(low.counts[4].raw_count == 0);   // 9
  CHECK(low.counts[5].raw_count == 0);   // 10
  CHECK(low.raw_ratios.empty());         // no adjacent positive pair
  CHECK(low.raw_growth == 0.0);

  const GrowthReport tiny = growth_report(3, 4);
  CHECK(tiny.counts[0].raw_count > 0);
  CHECK(tiny.counts[1].raw_count > 0);
  CHECK(tiny.raw_ratios.size() == 1);

  CHECK_THROWS_AS(growth_report(4, 4), std::invalid_argument);
  CHECK_THROWS_AS(growth_report(2, kMaxEnumerationLength + 1), std::invalid_argument);
}
