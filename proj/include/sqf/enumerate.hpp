#pragma once

#include <cstddef>
#include <functional>
#include <set>
#include <string>
#include <vector>

#include "sqf/words.hpp"

// Independent brute-force oracle: exhaustive enumeration of square-free
// words, circular counting under both deduplication conventions, the
// minimal-square codeword sets, and growth statistics. Counts grow roughly
// like 1.3^l, so lengths are capped to keep runtime predictable.

namespace sqf {

inline constexpr std::size_t kMaxEnumerationLength = 35;

/// Visits every square-free ternary word of length l in lexicographic order,
/// by depth-first backtracking over square-free prefixes.
void for_each_square_free_linear(std::size_t l,
                                 const std::function<void(const std::string&)>& visit);

std::vector<std::string> enumerate_square_free_linear(std::size_t l);

enum class Dedup { Rotation, Isomorphism };

/// All circular square-free words of length l, one representative per
/// rotation class or per isomorphism class, in lexicographic order.
std::vector<CircularWord> enumerate_circular(std::size_t l, Dedup dedup);

struct EnumerationReport {
  std::size_t length;
  std::size_t raw_count;  // distinct up to rotation
  std::size_t iso_count;  // distinct up to letter bijection and rotation
};

EnumerationReport count_circular(std::size_t l);

/// Counts for every length in [l_min, l_max] from a single enumeration pass.
std::vector<EnumerationReport> count_circular_range(std::size_t l_min, std::size_t l_max);

/// All l <= max_l whose circular square-free word is unique up to isomorphism.
std::vector<std::size_t> uniqueness_lengths(std::size_t max_l);

/// Linear codewords (length 2p-2) of the minimal squares of period p: one per
/// isomorphism class of square roots. The roots are the conjugates of the
/// square-free circular words of length p; with all_roots set, every rotation
/// class is scanned instead of one representative per isomorphism class,
/// which must yield the same set.
std::set<std::string> minimal_square_codewords(std::size_t p, bool all_roots = false);

struct GrowthReport {
  std::size_t l_min;
  std::size_t l_max;
  std::vector<EnumerationReport> counts;
  std::vector<double> raw_ratios;  // consecutive-length ratios, positive pairs only
  std::vector<double> iso_ratios;
  double raw_growth;  // geometric mean of raw_ratios (0 when none)
  double iso_growth;
};

GrowthReport growth_report(std::size_t l_min, std::size_t l_max);

}  // namespace sqf
