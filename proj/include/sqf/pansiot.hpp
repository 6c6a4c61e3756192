#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>

#include "sqf/words.hpp"

// Binary encoding of ternary words without letter squares: bit i is 0 when
// the letter two places ahead repeats the letter at position i, 1 otherwise.
// A linear word of length l >= 3 has a codeword of length l-2; a circular
// word keeps its length. The encoding determines the word up to isomorphism.

namespace sqf {

/// A binary codeword, linear or circular. Circular codewords containing a 0
/// are stored rotated to begin with 0, lexicographically least among the
/// 0-starting rotations; all-ones codewords keep their least rotation.
class BinaryCodeword {
 public:
  static BinaryCodeword linear(std::string bits);
  static BinaryCodeword circular(std::string bits);

  const std::string& bits() const noexcept { return bits_; }
  bool is_circular() const noexcept { return circular_; }
  std::size_t size() const noexcept { return bits_.size(); }

  /// Bit string, wrapped in parentheses for circular codewords.
  std::string str() const;

  friend bool operator==(const BinaryCodeword&, const BinaryCodeword&) = default;

 private:
  BinaryCodeword(std::string bits, bool circular) : bits_(std::move(bits)), circular_(circular) {}

  std::string bits_;
  bool circular_;
};

/// A cyclic-factor pattern whose presence in a circular codeword signals a
/// minimal square of the given period in the encoded word.
struct ForbiddenFactor {
  std::string_view pattern;
  int source_period;
  friend bool operator==(const ForbiddenFactor&, const ForbiddenFactor&) = default;
};

/// 00, 1111, 01010, 011011011, 110110110, 11101110111 (periods 2,3,4,6,6,8).
std::span<const ForbiddenFactor> forbidden_factor_catalogue();

/// Codeword of a linear word; requires |w| >= 3 and no two adjacent letters
/// equal.
BinaryCodeword encode_linear(std::string_view w);

/// Inverse of encode_linear; the seed pair fixes the isomorphism class
/// representative. Seeds must be distinct ternary letters.
std::string decode_linear(const BinaryCodeword& c, char seed1, char seed2);

/// Codeword of a circular word; requires |cw| >= 3 and no two cyclically
/// adjacent letters equal.
BinaryCodeword encode_circular(const CircularWord& cw);

/// Decodes from the fixed seed (a, b) and checks the encoding rule at the two
/// wrap positions plus cyclic adjacency. Not every binary circular word is a
/// codeword; inconsistent inputs yield nullopt.
std::optional<CircularWord> decode_circular(const BinaryCodeword& c);

/// First catalogue pattern occurring as a cyclic factor of c, in catalogue
/// order; nullopt if none occurs.
std::optional<ForbiddenFactor> circular_factor_scan(const BinaryCodeword& c);

/// True iff c decodes and the decoded circular word is square-free.
bool is_square_free_codeword(const BinaryCodeword& c);

}  // namespace sqf
