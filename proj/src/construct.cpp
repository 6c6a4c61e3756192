#include "sqf/construct.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

namespace sqf {

namespace {

constexpr std::string_view kZ3Tail = "131313";
constexpr std::string_view kZ2Tail = "121212";
constexpr std::string_view kZ32Tail = "131313121212";

int block_weight(std::string_view block) {
  int w = static_cast<int>(block.size());
  for (char c : block) w += c - '0';
  return w;
}

bool satisfies_constraints(std::string_view w, std::span<const BaseWordConstraint> cs) {
  for (const BaseWordConstraint& c : cs) {
    const char have = w[c.position - 1];
    if (c.require ? have != c.letter : have == c.letter) return false;
  }
  return true;
}

}  // namespace

bool is_exceptional_length(std::size_t l) {
  return std::find(kExceptionalLengths.begin(), kExceptionalLengths.end(), l) !=
         kExceptionalLengths.end();
}

std::string_view h_block(char letter) {
  switch (letter) {
    case 'a':
      return "122133";
    case 'b':
      return "123123";
    case 'c':
      return "132132";
    default:
      throw std::invalid_argument("h_block expects a ternary letter");
  }
}

char h_block_letter(std::string_view block) {
  for (char c : kAlphabet) {
    if (h_block(c) == block) return c;
  }
  throw std::invalid_argument("not a block of the morphism: " + std::string(block));
}

std::string h_image(std::string_view u) {
  if (u.empty()) throw std::invalid_argument("h_image expects a nonempty word");
  std::string out;
  out.reserve(6 * u.size());
  for (char c : u) out += h_block(c);
  return out;
}

std::string build_z(std::string_view u, ZVariant v) {
  const std::size_t replaced = (v == ZVariant::Z32) ? 2 : 1;
  if (u.size() < replaced) {
    throw std::invalid_argument("base word too short for the variant");
  }
  if (!is_square_free(u)) throw std::invalid_argument("base word must be square-free");
  std::string out;
  out.reserve(6 * u.size());
  for (std::size_t i = 0; i + replaced < u.size(); ++i) out += h_block(u[i]);
  switch (v) {
    case ZVariant::Z3:
      out += kZ3Tail;
      break;
    case ZVariant::Z2:
      out += kZ2Tail;
      break;
    case ZVariant::Z32:
      out += kZ32Tail;
      break;
  }
  return out;
}

std::string base_word(std::size_t n, std::span<const BaseWordConstraint> constraints) {
  if (n == 0) throw std::invalid_argument("base words are nonempty");
  for (const BaseWordConstraint& c : constraints) {
    if (c.position < 1 || c.position > n || !is_ternary_letter(c.letter)) {
      throw std::invalid_argument("constraint out of range");
    }
  }
  std::string cur;
  cur.reserve(n);
  std::string found;
  auto search = [&](auto&& self) -> bool {
    if (cur.size() == n) {
      for (const LetterBijection& sigma : letter_bijections()) {
        std::string image = apply_bijection(sigma, cur);
        if (satisfies_constraints(image, constraints)) {
          found = std::move(image);
          return true;
        }
      }
      return false;
    }
    for (char c : kAlphabet) {
      cur.push_back(c);
      if (last_position_square_free(cur) && self(self)) return true;
      cur.pop_back();
    }
    return false;
  };
  if (!search(search)) {
    throw std::invalid_argument("no square-free word of the given length meets the constraints");
  }
  return found;
}

std::span<const ReplacementRule> replacement_table() {
  using Site = ReplacementRule::Site;
  static constexpr std::array<ReplacementRule, 16> kRows{{
      {1, ZVariant::Z3, 2, Site::TailHead, "131313", "131332", false},
      {2, ZVariant::Z3, 2, Site::BeforeTail, "122133", "133133", false},
      {3, ZVariant::Z2, 2, Site::BeforeTail, "122133", "12212332", false},
      {4, ZVariant::Z3, 1, Site::TailHead, "131313", "12121313", false},
      {5, ZVariant::Z2, 2, Site::BeforeTail, "123123", "12332133", false},
      {6, ZVariant::Z3, 2, Site::BeforeTail, "122133", "12212332", false},
      {7, ZVariant::Z32, 2, Site::BeforeTail, "122133", "1221312213", false},
      {8, ZVariant::Z3, 2, Site::BeforeTail, "123123", "12332133", false},
      {9, ZVariant::Z2, 2, Site::BeforeTail, "122133", "1221312323", false},
      {10, ZVariant::Z3, 2, Site::BeforeTail, "122133", "1221312213", true},
      {11, ZVariant::Z2, 2, Site::BeforeTail, "123123", "1233212332", false},
      {12, ZVariant::Z3, 2, Site::BeforeTail, "122133", "1221312323", false},
      {13, ZVariant::Z2, 1, Site::AfterTail, "122133", "122122", false},
      {14, ZVariant::Z3, 2, Site::BeforeTail, "123123", "1233212332", false},
      {16, ZVariant::Z3, 1, Site::AfterTail, "122133", "122122", false},
      {17, ZVariant::Z2, 1, Site::BeforeTail, "122133", "133133", false},
  }};
  return kRows;
}

const ReplacementRule& replacement_rule(int residue) {
  for (const ReplacementRule& row : replacement_table()) {
    if (row.residue == residue) return row;
  }
  throw std::invalid_argument("no replacement row for residue " + std::to_string(residue));
}

// The residue-7 tail-head case needs its own block: the row's general block
// ends in 213 and cannot sit directly before 121212.
constexpr std::string_view kResidue7TailHeadBlock = "1321212123";

std::string apply_replacement(const ReplacementRule& rule, std::size_t n) {
  using Site = ReplacementRule::Site;
  if (n < rule.min_n) throw std::invalid_argument("n below the rule's minimum");
  const bool residue7_tail = rule.residue == 7 && n == 2;
  const Site site = residue7_tail ? Site::TailHead : rule.site;
  const std::string_view new_block = residue7_tail ? kResidue7TailHeadBlock : rule.new_block;

  // Base word length from the weight equation: the finished walk must weigh
  // exactly 18n + m.
  const int target = 18 * static_cast<int>(n) + rule.residue;
  const int delta = block_weight(new_block) - block_weight(rule.old_block);
  const int variant_offset = (rule.base == ZVariant::Z3) ? 0 : -3;
  const int scaled = target - delta - variant_offset;
  if (scaled <= 0 || scaled % 18 != 0) {
    throw std::logic_error("replacement weight bookkeeping failed");
  }
  const std::size_t k = static_cast<std::size_t>(scaled / 18);

  const std::size_t before_tail_pos = (rule.base == ZVariant::Z32) ? k - 2 : k - 1;
  std::vector<BaseWordConstraint> cs;
  if (site == Site::BeforeTail) {
    cs.push_back({before_tail_pos, true, h_block_letter(rule.old_block)});
  } else if (site == Site::AfterTail) {
    cs.push_back({1, true, h_block_letter(rule.old_block)});
  }
  if (rule.forbid_c_after_tail) cs.push_back({1, false, 'c'});

  std::string walk = build_z(base_word(k, cs), rule.base);

  std::size_t offset = 0;
  std::string_view expect = rule.old_block;
  switch (site) {
    case Site::TailHead:
      offset = (rule.base == ZVariant::Z32) ? 6 * (k - 2) : 6 * (k - 1);
      expect = "131313";
      break;
    case Site::BeforeTail:
      offset = 6 * (before_tail_pos - 1);
      break;
    case Site::AfterTail:
      offset = 0;
      break;
  }
  if (walk.compare(offset, 6, expect) != 0) {
    throw std::logic_error("replacement site does not hold the expected block");
  }
  walk.replace(offset, 6, new_block);
  return walk;
}

std::optional<std::string> small_length_walk(std::size_t l) {
  if (l < 4 || l > 32) throw std::invalid_argument("small_length_walk covers lengths 4..32");
  switch (l) {
    case 4:
      return "11";
    case 6:
      return "22";
    case 8:
      return "33";
    case 11:
      return "1213";
    case 12:
      return "1232";
    case 13:
      return "1323";
    case 15:
      return "121212";
    case 16:
      return "122122";
    case 18:
      return "123123";
    case 19:
      return "123313";
    case 20:
      return "133133";
    case 21:
      return "232323";
    case 22:
      return "13121213";
    case 23:
      return "12213132";
    case 24:
      return "12212332";
    case 25:
      return "12321323";
    case 26:
      return "12332133";
    case 27:
      return "1212122123";
    case 28:
      return "1221312213";
    case 29:
      return "1221221323";
    case 30:
      return "1221312323";
    case 31:
      return apply_replacement(replacement_rule(13), 1);
    case 32:
      return "1233212332";
    default:
      return std::nullopt;  // 5, 7, 9, 10, 14, 17
  }
}

std::optional<BinaryCodeword> construct_codeword(std::size_t l) {
  if (l < 3) throw std::invalid_argument("codewords have length >= 3");
  if (is_exceptional_length(l)) return std::nullopt;

  BinaryCodeword codeword = [&] {
    if (l == 3) return BinaryCodeword::circular("111");
    if (l <= 32) return walk_to_codeword(ClosedWalk(*small_length_walk(l)));
    const std::size_t n = l / 18;
    const int m = static_cast<int>(l % 18);
    std::string label;
    if (m == 0) {
      label = build_z(base_word(n, {}), ZVariant::Z3);
    } else if (m == 15) {
      label = build_z(base_word(n + 1, {}), ZVariant::Z2);
    } else {
      label = apply_replacement(replacement_rule(m), n);
    }
    return walk_to_codeword(ClosedWalk(label));
  }();

  if (codeword.size() != l || !is_square_free_codeword(codeword)) {
    throw std::logic_error("constructed codeword failed verification at length " +
                           std::to_string(l));
  }
  return codeword;
}

std::optional<CircularWord> construct_word(std::size_t l) {
  if (l == 0) throw std::invalid_argument("circular words are nonempty");
  if (l == 1) return CircularWord("a");
  if (l == 2) return CircularWord("ab");
  if (is_exceptional_length(l)) return std::nullopt;

  const std::optional<BinaryCodeword> codeword = construct_codeword(l);
  std::optional<CircularWord> word = decode_circular(*codeword);
  if (!word || word->size() != l || !is_circular_square_free(*word)) {
    throw std::logic_error("constructed word failed verification at length " + std::to_string(l));
  }
  return word;
}

}  // namespace sqf
