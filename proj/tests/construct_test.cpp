#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <functional>
#include <string>
#include <vector>

#include "doctest.h"
#include "sqf/construct.hpp"
#include "sqf/enumerate.hpp"

using namespace sqf;

namespace {

void for_each_square_free(std::size_t len, const std::function<void(const std::string&)>& f) {
  for_each_square_free_linear(len, f);
}

}  // namespace

TEST_CASE("exceptional lengths") {
  for (std::size_t l : {5, 7, 9, 10, 14, 17}) CHECK(is_exceptional_length(l));
  for (std::size_t l : {1, 2, 3, 4, 6, 8, 11, 18, 100}) CHECK_FALSE(is_exceptional_length(l));
}

TEST_CASE("h blocks and images") {
  CHECK(h_block('a') == "122133");
  CHECK(h_block('b') == "123123");
  CHECK(h_block('c') == "132132");
  CHECK(h_block_letter("123123") == 'b');
  CHECK_THROWS_AS(h_block('d'), std::invalid_argument);
  CHECK_THROWS_AS(h_block_letter("111111"), std::invalid_argument);
  CHECK(h_image("a") == "122133");
  CHECK(h_image("abc") == "122133123123132132");
  CHECK(h_image("ab").size() == 12);
  CHECK(total_weight(h_image("abc")) == 54);
  CHECK_THROWS_AS(h_image(""), std::invalid_argument);
}

TEST_CASE("h image of a circularly square-free base is a clean closed walk") {
  CHECK(walk_guarantees_square_free(h_image("ab")));
  for (std::size_t len = 1; len <= 6; ++len) {
    for_each_square_free(len, [](const std::string& u) {
      if (!is_circular_square_free(CircularWord(u))) return;
      const std::string image = h_image(u);
      CHECK(is_closed(image));
      CHECK(walk_guarantees_square_free(image));
    });
  }
}

TEST_CASE("build_z") {
  CHECK(build_z("ab", ZVariant::Z3) == "122133131313");
  CHECK(total_weight(build_z("ab", ZVariant::Z3)) == 36);
  CHECK(build_z("ab", ZVariant::Z2) == "122133121212");
  CHECK(total_weight(build_z("ab", ZVariant::Z2)) == 33);
  CHECK(build_z("abc", ZVariant::Z32) == "122133131313121212");
  CHECK(total_weight(build_z("abc", ZVariant::Z32)) == 51);
  CHECK(build_z("a", ZVariant::Z3) == "131313");
  CHECK(build_z("a", ZVariant::Z2) == "121212");
  CHECK_THROWS_AS(build_z("aa", ZVariant::Z3), std::invalid_argument);
  CHECK_THROWS_AS(build_z("a", ZVariant::Z32), std::invalid_argument);
}

TEST_CASE("z variants define square-free codewords") {
  for (std::size_t len = 1; len <= 6; ++len) {
    for_each_square_free(len, [len](const std::string& u) {
      for (ZVariant v : {ZVariant::Z3, ZVariant::Z2, ZVariant::Z32}) {
        if (v == ZVariant::Z32 && len < 2) continue;
        const std::string walk = build_z(u, v);
        CAPTURE(walk);
        CHECK(is_closed(walk));
        CHECK(walk_guarantees_square_free(walk));
        const BinaryCodeword codeword = walk_to_codeword(ClosedWalk(walk));
        CHECK(is_square_free_codeword(codeword));
        const int expected = v == ZVariant::Z3 ? 18 * (int)len : 18 * (int)len - 3;
        CHECK(codeword.size() == static_cast<std::size_t>(expected));
      }
    });
  }
}

TEST_CASE("base_word") {
  CHECK(base_word(3, {}) == "aba");  // lexicographically least square-free word
  CHECK(base_word(1, {}) == "a");
  const BaseWordConstraint require_b1{1, true, 'b'};
  CHECK(base_word(1, {&require_b1, 1}) == "b");
  const BaseWordConstraint require_a4{4, true, 'a'};
  const std::string w = base_word(5, {&require_a4, 1});
  CHECK(w.size() == 5);
  CHECK(is_square_free(w));
  CHECK(w[3] == 'a');
  SUBCASE("mixed require and forbid") {
    const std::vector<BaseWordConstraint> cs{{4, true, 'a'}, {1, false, 'c'}};
    const std::string v = base_word(5, cs);
    CHECK(is_square_free(v));
    CHECK(v[3] == 'a');
    CHECK(v[0] != 'c');
  }
  SUBCASE("unsatisfiable constraints throw") {
    const std::vector<BaseWordConstraint> cs{{1, true, 'a'}, {1, false, 'a'}};
    CHECK_THROWS_AS(base_word(2, cs), std::invalid_argument);
  }
  SUBCASE("determinism") { CHECK(base_word(7, {}) == base_word(7, {})); }
  CHECK_THROWS_AS(base_word(0, {}), std::invalid_argument);
  const BaseWordConstraint out_of_range{9, true, 'a'};
  CHECK_THROWS_AS(base_word(3, {&out_of_range, 1}), std::invalid_argument);
}

TEST_CASE("replacement table shape") {
  const auto rows = replacement_table();
  REQUIRE(rows.size() == 16);
  std::vector<int> residues;
  for (const ReplacementRule& r : rows) residues.push_back(r.residue);
  CHECK(residues == std::vector<int>{1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13, 14, 16, 17});

  const ReplacementRule& m13 = replacement_rule(13);
  CHECK(m13.base == ZVariant::Z2);
  CHECK(m13.min_n == 1);
  CHECK(m13.site == ReplacementRule::Site::AfterTail);
  CHECK(m13.old_block == "122133");
  CHECK(m13.new_block == "122122");

  const ReplacementRule& m9 = replacement_rule(9);
  CHECK(m9.base == ZVariant::Z2);
  CHECK(m9.site == ReplacementRule::Site::BeforeTail);
  CHECK(m9.new_block == "1221312323");

  const ReplacementRule& m10 = replacement_rule(10);
  CHECK(m10.forbid_c_after_tail);

  CHECK_THROWS_AS(replacement_rule(15), std::invalid_argument);
}

TEST_CASE("replacement rows verify at their minimum n and beyond") {
  // The walk certificate is sufficient, not necessary: at n above the minimum
  // a row may contain a borderline periodic factor that never becomes a
  // square (the residue-5 row at n = 3 does), so only the verified codeword
  // is required there.
  for (const ReplacementRule& r : replacement_table()) {
    for (std::size_t n = r.min_n; n <= r.min_n + 2; ++n) {
      CAPTURE(r.residue);
      CAPTURE(n);
      const std::string walk = apply_replacement(r, n);
      CHECK(is_closed(walk));
      if (n == r.min_n) CHECK(walk_guarantees_square_free(walk));
      const BinaryCodeword codeword = walk_to_codeword(ClosedWalk(walk));
      CHECK(codeword.size() == 18 * n + static_cast<std::size_t>(r.residue));
      CHECK(is_square_free_codeword(codeword));
    }
    CHECK_THROWS_AS(apply_replacement(r, r.min_n - 1), std::invalid_argument);
  }
}

TEST_CASE("small_length_walk") {
  CHECK(small_length_walk(19) == "123313");
  CHECK(small_length_walk(24) == "12212332");
  CHECK(small_length_walk(4) == "11");
  CHECK(small_length_walk(31) == "122122121212");
  CHECK_FALSE(small_length_walk(14).has_value());
  CHECK_FALSE(small_length_walk(17).has_value());
  CHECK_THROWS_AS(small_length_walk(3), std::invalid_argument);
  CHECK_THROWS_AS(small_length_walk(33), std::invalid_argument);
  for (std::size_t l = 4; l <= 32; ++l) {
    const auto walk = small_length_walk(l);
    CHECK(walk.has_value() == !is_exceptional_length(l));
    if (walk) {
      CAPTURE(l);
      CHECK(is_closed(*walk));
      CHECK(total_weight(*walk) == static_cast<int>(l));
      CHECK(is_square_free_codeword(walk_to_codeword(ClosedWalk(*walk))));
    }
  }
}

TEST_CASE("construct_codeword") {
  CHECK_FALSE(construct_codeword(17).has_value());
  CHECK(construct_codeword(3) == BinaryCodeword::circular("111"));
  CHECK(construct_codeword(18) == BinaryCodeword::circular("010110111010110111"));
  const auto c100 = construct_codeword(100);
  REQUIRE(c100.has_value());
  CHECK(c100->size() == 100);
  CHECK(is_square_free_codeword(*c100));
  CHECK_THROWS_AS(construct_codeword(2), std::invalid_argument);
}

TEST_CASE("construct_word") {
  CHECK(construct_word(1) == CircularWord("a"));
  CHECK(construct_word(2) == CircularWord("ab"));
  CHECK(construct_word(3) == CircularWord("abc"));
  CHECK(construct_word(4) == CircularWord("abac"));
  CHECK_FALSE(construct_word(5).has_value());
  CHECK_THROWS_AS(construct_word(0), std::invalid_argument);
  SUBCASE("deterministic") {
    for (std::size_t l : {36, 55, 79, 100}) {
      CHECK(construct_word(l) == construct_word(l));
    }
  }
}

TEST_CASE("every length up to 140 constructs or is exceptional") {
  for (std::size_t l = 1; l <= 140; ++l) {
    CAPTURE(l);
    const auto word = construct_word(l);
    CHECK(word.has_value() == !is_exceptional_length(l));
    if (word) {
      CHECK(word->size() == l);
      CHECK(is_circular_square_free(*word));
    }
  }
}
