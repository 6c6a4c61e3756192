#include "sqf/k33.hpp"

#include <stdexcept>

namespace sqf {

namespace {

char cyclic_successor(char c) { return c == 'a' ? 'b' : (c == 'b' ? 'c' : 'a'); }

void require_jump(const Jump& j) {
  if (!is_ternary_letter(j.side) || !is_ternary_letter(j.central) || j.side == j.central) {
    throw std::invalid_argument("a jump has two distinct ternary letters");
  }
}

}  // namespace

Handedness Jump::handedness() const {
  require_jump(*this);
  return central == cyclic_successor(side) ? Handedness::Right : Handedness::Left;
}

std::string Jump::pattern() const {
  require_jump(*this);
  return {side, central, side};
}

const std::array<Jump, 6>& all_jumps() {
  static const std::array<Jump, 6> kJumps{{
      {'a', 'b'}, {'b', 'c'}, {'c', 'a'},  // right
      {'a', 'c'}, {'b', 'a'}, {'c', 'b'},  // left
  }};
  return kJumps;
}

Jump step(Jump j, int weight) {
  require_jump(j);
  switch (weight) {
    case 1:
      return {j.side, third_letter(j.side, j.central)};
    case 2:
      return {third_letter(j.side, j.central), j.central};
    case 3:
      return {j.central, j.side};
    default:
      throw std::invalid_argument("edge weights are 1, 2 or 3");
  }
}

bool is_valid_walk_label(std::string_view label) {
  if (label.empty()) return false;
  for (char c : label) {
    if (c < '1' || c > '3') return false;
  }
  return true;
}

int total_weight(std::string_view label) {
  if (!is_valid_walk_label(label)) {
    throw std::invalid_argument("walk labels are nonempty strings over 1, 2, 3");
  }
  int w = static_cast<int>(label.size());
  for (char c : label) w += c - '0';
  return w;
}

bool is_closed(std::string_view label) {
  if (!is_valid_walk_label(label)) {
    throw std::invalid_argument("walk labels are nonempty strings over 1, 2, 3");
  }
  bool closed = false;
  bool first = true;
  for (const Jump& start : all_jumps()) {
    Jump v = start;
    for (char c : label) v = step(v, c - '0');
    const bool back = (v == start);
    if (first) {
      closed = back;
      first = false;
    } else if (back != closed) {
      throw std::logic_error("closure verdict depends on the start vertex");
    }
  }
  return closed;
}

ClosedWalk::ClosedWalk(std::string label) : label_(std::move(label)) {
  if (!is_closed(label_)) throw std::invalid_argument("label is not a closed walk: " + label_);
  weight_ = total_weight(label_);
}

BinaryCodeword walk_to_codeword(const ClosedWalk& walk) {
  std::string bits;
  bits.reserve(static_cast<std::size_t>(walk.weight()));
  for (char c : walk.label()) {
    bits += '0';
    bits.append(static_cast<std::size_t>(c - '0'), '1');
  }
  return BinaryCodeword::circular(std::move(bits));
}

std::optional<std::string> codeword_to_walk(const BinaryCodeword& c) {
  if (!c.is_circular()) throw std::invalid_argument("codeword_to_walk expects a circular codeword");
  const std::string& b = c.bits();
  if (b.find('0') == std::string::npos) return std::nullopt;
  // Normalized circular codewords start at a 0, so runs parse from the front
  // and the trailing run is the wrap gap back to that 0.
  const std::size_t n = b.size();
  std::string label;
  std::size_t i = 0;
  while (i < n) {
    std::size_t j = i + 1;
    while (j < n && b[j] == '1') ++j;
    const std::size_t run = j - i - 1;
    if (run < 1 || run > 3) return std::nullopt;
    label += static_cast<char>('0' + run);
    i = j;
  }
  return label;
}

std::optional<std::string_view> walk_label_forbidden_factor(std::string_view label) {
  static constexpr std::array<std::string_view, 5> kForbidden{"11", "222", "223", "322", "333"};
  if (!is_valid_walk_label(label)) {
    throw std::invalid_argument("walk labels are nonempty strings over 1, 2, 3");
  }
  const std::size_t n = label.size();
  std::string d(label);
  d += label;
  for (std::string_view f : kForbidden) {
    if (f.size() >= n) continue;  // proper cyclic factors only
    const std::string_view window = std::string_view(d).substr(0, n + f.size() - 1);
    if (window.find(f) != std::string_view::npos) return f;
  }
  return std::nullopt;
}

bool walk_guarantees_square_free(std::string_view label) {
  if (!is_closed(label)) {
    throw std::invalid_argument("walk_guarantees_square_free expects a closed label");
  }
  if (walk_label_forbidden_factor(label).has_value()) return false;
  const std::size_t n = label.size();
  std::string d(label);
  d += label;
  for (std::size_t t = 4; 2 * t - 2 <= n; t += 2) {
    const std::size_t flen = 2 * t - 2;
    for (std::size_t i = 0; i < n; ++i) {
      bool periodic = true;
      for (std::size_t j = i; j + t < i + flen; ++j) {
        if (d[j] != d[j + t]) {
          periodic = false;
          break;
        }
      }
      if (periodic && is_closed(std::string_view(d).substr(i, t))) return false;
    }
  }
  return true;
}

std::span<const SimpleCycle> simple_cycles() {
  static constexpr std::array<SimpleCycle, 11> kCycles{{
      {"11", "0101", 4},
      {"22", "011011", 6},
      {"33", "01110111", 8},
      {"1213", "01011010111", 11},
      {"1232", "010110111011", 12},
      {"1323", "0101110110111", 13},
      {"121212", "010110101101011", 15},
      {"123123", "010110111010110111", 18},
      {"132132", "010111011010111011", 18},
      {"131313", "010111010111010111", 18},
      {"232323", "011011101101110110111", 21},
  }};
  return kCycles;
}

const SimpleCycle* find_simple_cycle(std::string_view label) {
  for (const SimpleCycle& row : simple_cycles()) {
    if (row.label == label) return &row;
  }
  return nullptr;
}

}  // namespace sqf
