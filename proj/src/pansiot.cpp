#include "sqf/pansiot.hpp"

#include <array>
#include <stdexcept>

namespace sqf {

namespace {

void require_bits(std::string_view bits) {
  if (bits.empty()) throw std::invalid_argument("codewords are nonempty");
  for (char c : bits) {
    if (c != '0' && c != '1') throw std::invalid_argument("codewords use only 0 and 1");
  }
}

std::string normalize_circular_bits(std::string bits) {
  const std::size_t n = bits.size();
  if (bits.find('0') == std::string::npos) return least_rotation(bits);
  const std::string d = bits + bits;
  const std::string_view dv(d);
  std::size_t best = std::string::npos;
  for (std::size_t i = 0; i < n; ++i) {
    if (bits[i] != '0') continue;
    if (best == std::string::npos || dv.substr(i, n) < dv.substr(best, n)) best = i;
  }
  return d.substr(best, n);
}

}  // namespace

BinaryCodeword BinaryCodeword::linear(std::string bits) {
  require_bits(bits);
  return BinaryCodeword(std::move(bits), false);
}

BinaryCodeword BinaryCodeword::circular(std::string bits) {
  require_bits(bits);
  return BinaryCodeword(normalize_circular_bits(std::move(bits)), true);
}

std::string BinaryCodeword::str() const {
  return circular_ ? "(" + bits_ + ")" : bits_;
}

std::span<const ForbiddenFactor> forbidden_factor_catalogue() {
  static constexpr std::array<ForbiddenFactor, 6> kCatalogue{{
      {"00", 2},
      {"1111", 3},
      {"01010", 4},
      {"011011011", 6},
      {"110110110", 6},
      {"11101110111", 8},
  }};
  return kCatalogue;
}

BinaryCodeword encode_linear(std::string_view w) {
  const std::size_t n = w.size();
  if (n < 3) throw std::invalid_argument("linear encoding needs length >= 3");
  for (char c : w) {
    if (!is_ternary_letter(c)) throw std::invalid_argument("encoding expects letters a, b, c");
  }
  for (std::size_t i = 0; i + 1 < n; ++i) {
    if (w[i] == w[i + 1]) throw std::invalid_argument("word contains a square of a letter");
  }
  std::string bits(n - 2, '0');
  for (std::size_t i = 0; i + 2 < n; ++i) bits[i] = (w[i + 2] == w[i]) ? '0' : '1';
  return BinaryCodeword::linear(std::move(bits));
}

std::string decode_linear(const BinaryCodeword& c, char seed1, char seed2) {
  if (c.is_circular()) throw std::invalid_argument("decode_linear expects a linear codeword");
  if (!is_ternary_letter(seed1) || !is_ternary_letter(seed2) || seed1 == seed2) {
    throw std::invalid_argument("seed must be two distinct ternary letters");
  }
  const std::string& b = c.bits();
  std::string w;
  w.reserve(b.size() + 2);
  w += seed1;
  w += seed2;
  for (std::size_t i = 0; i < b.size(); ++i) {
    w += (b[i] == '0') ? w[i] : third_letter(w[i], w[i + 1]);
  }
  return w;
}

BinaryCodeword encode_circular(const CircularWord& cw) {
  const std::string& r = cw.representative();
  const std::size_t n = r.size();
  if (n < 3) throw std::invalid_argument("circular encoding needs length >= 3");
  for (std::size_t i = 0; i < n; ++i) {
    if (r[i] == r[(i + 1) % n]) throw std::invalid_argument("word contains a cyclic square of a letter");
  }
  std::string bits(n, '0');
  for (std::size_t i = 0; i < n; ++i) bits[i] = (r[(i + 2) % n] == r[i]) ? '0' : '1';
  return BinaryCodeword::circular(std::move(bits));
}

std::optional<CircularWord> decode_circular(const BinaryCodeword& c) {
  if (!c.is_circular()) throw std::invalid_argument("decode_circular expects a circular codeword");
  const std::string& b = c.bits();
  const std::size_t n = b.size();
  if (n < 3) throw std::invalid_argument("circular codewords have length >= 3");
  std::string w = "ab";
  w.reserve(n);
  for (std::size_t i = 0; i + 2 < n; ++i) {
    w += (b[i] == '0') ? w[i] : third_letter(w[i], w[i + 1]);
  }
  // The rule must also hold where the comparison crosses the seam.
  const char wrap1 = (w[0] == w[n - 2]) ? '0' : '1';
  const char wrap2 = (w[1] == w[n - 1]) ? '0' : '1';
  if (b[n - 2] != wrap1 || b[n - 1] != wrap2) return std::nullopt;
  if (w[n - 1] == w[0]) return std::nullopt;
  return CircularWord(w);
}

std::optional<ForbiddenFactor> circular_factor_scan(const BinaryCodeword& c) {
  if (!c.is_circular()) throw std::invalid_argument("circular_factor_scan expects a circular codeword");
  const std::string& b = c.bits();
  const std::size_t n = b.size();
  const std::string d = b + b;
  for (const ForbiddenFactor& f : forbidden_factor_catalogue()) {
    if (f.pattern.size() > n) continue;
    const std::string_view window = std::string_view(d).substr(0, n + f.pattern.size() - 1);
    if (window.find(f.pattern) != std::string_view::npos) return f;
  }
  return std::nullopt;
}

bool is_square_free_codeword(const BinaryCodeword& c) {
  const std::optional<CircularWord> w = decode_circular(c);
  return w.has_value() && is_circular_square_free(*w);
}

}  // namespace sqf
