#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>

#include "sqf/k33.hpp"
#include "sqf/pansiot.hpp"
#include "sqf/words.hpp"

// Constructive engine: builds a closed walk of any feasible weight l and
// hence a square-free circular codeword (and word) of length l. Lengths are
// covered by a fixed table of short walks up to 32 and, from 33 on, by the
// block morphism h together with tail variants and one block replacement per
// residue class mod 18. Every output is re-verified before it is returned.

namespace sqf {

/// Lengths admitting no square-free circular ternary word.
inline constexpr std::array<std::size_t, 6> kExceptionalLengths{5, 7, 9, 10, 14, 17};

bool is_exceptional_length(std::size_t l);

/// The block of the morphism: a -> 122133, b -> 123123, c -> 132132.
std::string_view h_block(char letter);

/// Letter whose block equals the argument; inverse of h_block.
char h_block_letter(std::string_view block);

/// Blockwise image of u; length 6|u|, total weight 18|u|.
std::string h_image(std::string_view u);

enum class ZVariant { Z3, Z2, Z32 };

/// h(u) with the last block replaced by 131313 (Z3, weight 18|u|) or 121212
/// (Z2, weight 18|u|-3), or the last two blocks replaced by 131313121212
/// (Z32, weight 18|u|-3). Requires u square-free, |u| >= 2 for Z32.
std::string build_z(std::string_view u, ZVariant v);

struct BaseWordConstraint {
  std::size_t position;  // 1-based index into u
  bool require;          // require the letter at that position, or forbid it
  char letter;
};

/// Deterministic square-free word of length n meeting all constraints: the
/// backtracking enumeration runs in lexicographic order and each candidate is
/// post-composed with the first of the six letter bijections that satisfies
/// the constraints. Throws when the search space is exhausted.
std::string base_word(std::size_t n, std::span<const BaseWordConstraint> constraints);

/// One row of the length-18n+m construction table: which variant to start
/// from, which block to swap out, and what adjacency the base word must
/// provide so that the swap site holds old_block.
struct ReplacementRule {
  enum class Site {
    TailHead,    // the 131313 written by the variant itself
    BeforeTail,  // the h-block immediately preceding the variant tail
    AfterTail,   // the h-block cyclically following the tail (the first block)
  };

  int residue;  // m; the finished walk has weight 18n + m
  ZVariant base;
  std::size_t min_n;
  Site site;  // residue 7 uses TailHead at n == 2 and this site from n >= 3
  std::string_view old_block;
  std::string_view new_block;
  bool forbid_c_after_tail;  // residue 10: h(c) must not follow the tail
};

/// The sixteen rows, one per residue m in 1..17 except 15 (residues 0 and 15
/// are the plain Z3 and Z2 variants and need no replacement).
std::span<const ReplacementRule> replacement_table();

const ReplacementRule& replacement_rule(int residue);

/// Walk of weight 18n + rule.residue built from the rule; the base word
/// length is derived from the weight equation, not taken from n directly.
std::string apply_replacement(const ReplacementRule& rule, std::size_t n);

/// Fixed walk for 4 <= l <= 32; nullopt exactly on the exceptional lengths.
std::optional<std::string> small_length_walk(std::size_t l);

/// Square-free circular codeword of length l >= 3, or nullopt for the six
/// exceptional lengths. Every returned codeword is re-verified; verification
/// failure throws std::logic_error.
std::optional<BinaryCodeword> construct_codeword(std::size_t l);

/// Square-free circular word of length l >= 1, or nullopt for the six
/// exceptional lengths.
std::optional<CircularWord> construct_word(std::size_t l);

}  // namespace sqf
