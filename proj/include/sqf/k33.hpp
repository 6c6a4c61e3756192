#pragma once

#include <array>
#include <optional>
#include <span>
#include <string>
#include <string_view>

#include "sqf/pansiot.hpp"

// Each 0 in a circular codeword marks a jump xyx in the encoded word. The six
// jumps are the vertices of a weighted K3,3 graph; the weight between two
// consecutive jumps is the number of 1s separating their 0s. Closed walks in
// this graph spell circular codewords, and a walk label (the weight sequence)
// determines closure independently of the start vertex.

namespace sqf {

enum class Handedness { Right, Left };

/// A jump xyx: side letter x, central letter y. Right jumps are aba, bcb,
/// cac; left jumps are aca, bab, cbc.
struct Jump {
  char side;
  char central;

  Handedness handedness() const;
  std::string pattern() const;

  friend bool operator==(const Jump&, const Jump&) = default;
};

const std::array<Jump, 6>& all_jumps();

/// Transition along an edge: weight 1 changes the central letter, weight 2
/// the side letters, weight 3 switches their roles. Each is an involution and
/// flips handedness.
Jump step(Jump j, int weight);

/// Labels are nonempty strings over {1,2,3}, read cyclically.
bool is_valid_walk_label(std::string_view label);

/// Sum of the weights plus the length; equals the length of the codeword the
/// walk spells when the label is closed.
int total_weight(std::string_view label);

/// True iff walking the label returns to the start vertex. Checked from all
/// six starts, which must agree.
bool is_closed(std::string_view label);

/// A walk label validated closed at construction.
class ClosedWalk {
 public:
  explicit ClosedWalk(std::string label);

  const std::string& label() const noexcept { return label_; }
  int weight() const noexcept { return weight_; }

 private:
  std::string label_;
  int weight_;
};

/// Circular codeword spelled by the walk: one block 0 1^w per edge.
BinaryCodeword walk_to_codeword(const ClosedWalk& walk);

/// Inverse parse: lengths of the maximal 1-runs between consecutive 0s,
/// starting from the normalized codeword's leading 0. Nullopt when c has no
/// 0, an empty run (factor 00), or a run of length >= 4.
std::optional<std::string> codeword_to_walk(const BinaryCodeword& c);

/// First proper cyclic factor among 11, 222, 223, 322, 333, or nullopt.
std::optional<std::string_view> walk_label_forbidden_factor(std::string_view label);

/// Sufficient condition for a closed walk to spell a square-free codeword:
/// (a) no forbidden label factor, and (b) no cyclic factor of length 2t-2
/// with even period t >= 4 whose length-t prefix is itself a closed label.
/// Requires is_closed(label).
bool walk_guarantees_square_free(std::string_view label);

struct SimpleCycle {
  std::string_view label;
  std::string_view codeword;
  int length;
};

/// The eleven simple cycles of the jump graph with their codewords and
/// lengths, from (11) of length 4 up to (232323) of length 21.
std::span<const SimpleCycle> simple_cycles();

/// Row of simple_cycles() with the given label, or nullptr.
const SimpleCycle* find_simple_cycle(std::string_view label);

}  // namespace sqf
