#include "sqf/words.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace sqf {

namespace {

void require_ternary(std::string_view w, const char* what) {
  for (char c : w) {
    if (!is_ternary_letter(c)) {
      throw std::invalid_argument(std::string(what) + " must use only the letters a, b, c");
    }
  }
}

}  // namespace

char third_letter(char x, char y) {
  if (x == y || !is_ternary_letter(x) || !is_ternary_letter(y)) {
    throw std::invalid_argument("third_letter expects two distinct ternary letters");
  }
  return static_cast<char>('a' + 'b' + 'c' - x - y);
}

const std::array<LetterBijection, 6>& letter_bijections() {
  static const std::array<LetterBijection, 6> kAll{{
      {'a', 'b', 'c'},
      {'a', 'c', 'b'},
      {'b', 'a', 'c'},
      {'b', 'c', 'a'},
      {'c', 'a', 'b'},
      {'c', 'b', 'a'},
  }};
  return kAll;
}

std::string apply_bijection(const LetterBijection& sigma, std::string_view w) {
  std::string out(w);
  for (char& c : out) c = sigma[static_cast<std::size_t>(c - 'a')];
  return out;
}

std::string least_rotation(std::string_view w) {
  const std::size_t n = w.size();
  if (n == 0) return {};
  std::string d(w);
  d += w;
  const std::string_view dv(d);
  std::size_t best = 0;
  for (std::size_t i = 1; i < n; ++i) {
    if (dv.substr(i, n) < dv.substr(best, n)) best = i;
  }
  return d.substr(best, n);
}

std::optional<Square> find_square(std::string_view w) {
  const std::size_t n = w.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t p = 1; i + 2 * p <= n; ++p) {
      if (w.compare(i, p, w, i + p, p) == 0) return Square{i + 1, p};
    }
  }
  return std::nullopt;
}

bool is_square_free(std::string_view w) { return !find_square(w).has_value(); }

bool last_position_square_free(std::string_view w) {
  const std::size_t n = w.size();
  for (std::size_t p = 1; 2 * p <= n; ++p) {
    if (w.compare(n - 2 * p, p, w, n - p, p) == 0) return false;
  }
  return true;
}

bool is_minimal_square(std::string_view w) {
  const std::size_t n = w.size();
  if (n == 0 || n % 2 != 0) return false;
  if (w.compare(0, n / 2, w, n / 2, n / 2) != 0) return false;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t p = 1; 2 * p < n && i + 2 * p <= n; ++p) {
      if (w.compare(i, p, w, i + p, p) == 0) return false;
    }
  }
  return true;
}

PeriodData period_data(std::string_view w) {
  const std::size_t n = w.size();
  if (n == 0) throw std::invalid_argument("period_data expects a nonempty word");
  std::size_t period = n;
  for (std::size_t p = 1; p < n; ++p) {
    bool ok = true;
    for (std::size_t i = 0; i + p < n; ++i) {
      if (w[i] != w[i + p]) {
        ok = false;
        break;
      }
    }
    if (ok) {
      period = p;
      break;
    }
  }
  const std::uint64_t g = std::gcd<std::uint64_t>(n, period);
  return PeriodData{period, n / g, period / g};
}

CircularWord::CircularWord(std::string_view letters) {
  if (letters.empty()) throw std::invalid_argument("circular words are nonempty");
  require_ternary(letters, "a circular word");
  rep_ = least_rotation(letters);
}

std::vector<std::string> conjugates(const CircularWord& cw) {
  const std::string& r = cw.representative();
  const std::size_t n = r.size();
  const std::string d = r + r;
  std::vector<std::string> out;
  for (std::size_t i = 0; i < n; ++i) {
    std::string rot = d.substr(i, n);
    if (std::find(out.begin(), out.end(), rot) == out.end()) out.push_back(std::move(rot));
  }
  return out;
}

std::optional<Square> find_circular_square(const CircularWord& cw) {
  const std::string& r = cw.representative();
  const std::size_t n = r.size();
  const std::string d = r + r;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t p = 1; 2 * p <= n; ++p) {
      if (d.compare(i, p, d, i + p, p) == 0) return Square{i + 1, p};
    }
  }
  return std::nullopt;
}

bool is_circular_square_free(const CircularWord& cw) {
  return !find_circular_square(cw).has_value();
}

bool are_isomorphic(const CircularWord& lhs, const CircularWord& rhs) {
  if (lhs.size() != rhs.size()) return false;
  for (const LetterBijection& sigma : letter_bijections()) {
    if (least_rotation(apply_bijection(sigma, lhs.representative())) == rhs.representative()) {
      return true;
    }
  }
  return false;
}

CircularWord canonical_iso_form(const CircularWord& cw) {
  std::string best;
  for (const LetterBijection& sigma : letter_bijections()) {
    std::string candidate = least_rotation(apply_bijection(sigma, cw.representative()));
    if (best.empty() || candidate < best) best = std::move(candidate);
  }
  return CircularWord(best);
}

}  // namespace sqf
