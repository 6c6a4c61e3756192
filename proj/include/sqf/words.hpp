#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

// Core ternary word and circular-word types with square detection, periods,
// conjugacy and isomorphism. The alphabet is fixed to {a, b, c}. Word
// positions are 1-based throughout, following the usual convention in
// combinatorics on words.

namespace sqf {

inline constexpr std::string_view kAlphabet = "abc";

constexpr bool is_ternary_letter(char c) { return c == 'a' || c == 'b' || c == 'c'; }

/// The unique letter distinct from both x and y; x and y must differ.
char third_letter(char x, char y);

/// A bijection of {a,b,c}, stored as the images of a, b, c in that order.
using LetterBijection = std::array<char, 3>;

/// All six bijections, ordered by image string: abc, acb, bac, bca, cab, cba.
const std::array<LetterBijection, 6>& letter_bijections();

std::string apply_bijection(const LetterBijection& sigma, std::string_view w);

/// Lexicographically least rotation of w.
std::string least_rotation(std::string_view w);

struct Square {
  std::size_t start;   // 1-based position of the first letter of the factor xx
  std::size_t period;  // |x|
  friend bool operator==(const Square&, const Square&) = default;
};

/// First square factor, smallest start position first, then smallest period.
std::optional<Square> find_square(std::string_view w);

bool is_square_free(std::string_view w);

/// True iff no square ends at the last position of w. Assuming the prefix
/// without the last letter is square-free, this decides square-freeness of w;
/// backtracking enumerators use it to extend square-free prefixes.
bool last_position_square_free(std::string_view w);

/// True iff w = uu for some nonempty u and no proper factor of w is a square.
bool is_minimal_square(std::string_view w);

struct PeriodData {
  std::size_t min_period;
  std::uint64_t exponent_num;  // exponent = |w| / min_period as a reduced fraction
  std::uint64_t exponent_den;
  friend bool operator==(const PeriodData&, const PeriodData&) = default;
};

/// Minimal period and exact exponent of a nonempty word.
PeriodData period_data(std::string_view w);

/// A nonempty cyclic sequence over {a,b,c}, stored as its least rotation.
/// Two circular words are equal iff their letter sequences are rotations of
/// each other. Rendered as the representative wrapped in parentheses.
class CircularWord {
 public:
  explicit CircularWord(std::string_view letters);

  const std::string& representative() const noexcept { return rep_; }
  std::size_t size() const noexcept { return rep_.size(); }
  std::string str() const { return "(" + rep_ + ")"; }

  friend bool operator==(const CircularWord&, const CircularWord&) = default;
  friend auto operator<=>(const CircularWord&, const CircularWord&) = default;

 private:
  std::string rep_;
};

/// All distinct rotations, in rotation order from the stored representative.
std::vector<std::string> conjugates(const CircularWord& cw);

/// First square among the cyclic factors of cw (total length at most |cw|),
/// located on the doubled representative. Start is a 1-based position in the
/// representative.
std::optional<Square> find_circular_square(const CircularWord& cw);

/// True iff every conjugate of cw is square-free.
bool is_circular_square_free(const CircularWord& cw);

/// True iff some letter bijection composed with a rotation maps lhs to rhs.
bool are_isomorphic(const CircularWord& lhs, const CircularWord& rhs);

/// Least word over all six bijections and all rotations. Two circular words
/// are isomorphic iff their canonical forms are equal.
CircularWord canonical_iso_form(const CircularWord& cw);

}  // namespace sqf
