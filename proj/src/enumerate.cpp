#include "sqf/enumerate.hpp"

#include <cmath>
#include <stdexcept>

#include "sqf/pansiot.hpp"

namespace sqf {

namespace {

void check_length(std::size_t l) {
  if (l > kMaxEnumerationLength) {
    throw std::invalid_argument("enumeration is capped at length " +
                                std::to_string(kMaxEnumerationLength));
  }
}

}  // namespace

void for_each_square_free_linear(std::size_t l,
                                 const std::function<void(const std::string&)>& visit) {
  check_length(l);
  std::string cur;
  cur.reserve(l);
  if (l == 0) {
    visit(cur);
    return;
  }
  auto rec = [&](auto&& self) -> void {
    if (cur.size() == l) {
      visit(cur);
      return;
    }
    for (char c : kAlphabet) {
      cur.push_back(c);
      if (last_position_square_free(cur)) self(self);
      cur.pop_back();
    }
  };
  rec(rec);
}

std::vector<std::string> enumerate_square_free_linear(std::size_t l) {
  std::vector<std::string> out;
  for_each_square_free_linear(l, [&](const std::string& w) { out.push_back(w); });
  return out;
}

std::vector<CircularWord> enumerate_circular(std::size_t l, Dedup dedup) {
  if (l < 1) throw std::invalid_argument("circular words are nonempty");
  check_length(l);
  std::vector<CircularWord> out;
  for_each_square_free_linear(l, [&](const std::string& w) {
    if (least_rotation(w) != w) return;  // one representative per rotation class
    CircularWord cw(w);
    if (!is_circular_square_free(cw)) return;
    if (dedup == Dedup::Isomorphism && canonical_iso_form(cw) != cw) return;
    out.push_back(std::move(cw));
  });
  return out;
}

std::vector<EnumerationReport> count_circular_range(std::size_t l_min, std::size_t l_max) {
  if (l_min < 1 || l_min > l_max) throw std::invalid_argument("bad length range");
  check_length(l_max);
  std::vector<EnumerationReport> reports;
  reports.reserve(l_max - l_min + 1);
  for (std::size_t l = l_min; l <= l_max; ++l) reports.push_back({l, 0, 0});

  // Every square-free word of length <= l_max appears as a prefix of the
  // depth-first search, so one pass classifies all lengths at once.
  std::string cur;
  cur.reserve(l_max);
  auto classify = [&] {
    if (cur.size() < l_min) return;
    if (least_rotation(cur) != cur) return;
    CircularWord cw(cur);
    if (!is_circular_square_free(cw)) return;
    EnumerationReport& r = reports[cur.size() - l_min];
    ++r.raw_count;
    if (canonical_iso_form(cw) == cw) ++r.iso_count;
  };
  auto rec = [&](auto&& self) -> void {
    if (!cur.empty()) classify();
    if (cur.size() == l_max) return;
    for (char c : kAlphabet) {
      cur.push_back(c);
      if (last_position_square_free(cur)) self(self);
      cur.pop_back();
    }
  };
  rec(rec);
  return reports;
}

EnumerationReport count_circular(std::size_t l) {
  return count_circular_range(l, l).front();
}

std::vector<std::size_t> uniqueness_lengths(std::size_t max_l) {
  if (max_l < 1) throw std::invalid_argument("max_l must be positive");
  std::vector<std::size_t> out;
  for (const EnumerationReport& r : count_circular_range(1, max_l)) {
    if (r.iso_count == 1) out.push_back(r.length);
  }
  return out;
}

std::set<std::string> minimal_square_codewords(std::size_t p, bool all_roots) {
  if (p < 2 || p > 16) throw std::invalid_argument("periods 2..16 are supported");
  std::set<std::string> out;
  for (const CircularWord& cw :
       enumerate_circular(p, all_roots ? Dedup::Rotation : Dedup::Isomorphism)) {
    for (const std::string& root : conjugates(cw)) {
      out.insert(encode_linear(root + root).bits());
    }
  }
  return out;
}

GrowthReport growth_report(std::size_t l_min, std::size_t l_max) {
  if (l_min < 1 || l_min >= l_max) throw std::invalid_argument("need 1 <= l_min < l_max");
  check_length(l_max);
  GrowthReport report{l_min, l_max, count_circular_range(l_min, l_max), {}, {}, 0.0, 0.0};
  auto fill = [&](auto member, std::vector<double>& ratios, double& growth) {
    for (std::size_t i = 0; i + 1 < report.counts.size(); ++i) {
      const std::size_t prev = report.counts[i].*member;
      const std::size_t next = report.counts[i + 1].*member;
      if (prev > 0 && next > 0) {
        ratios.push_back(static_cast<double>(next) / static_cast<double>(prev));
      }
    }
    if (!ratios.empty()) {
      double log_sum = 0.0;
      for (double r : ratios) log_sum += std::log(r);
      growth = std::exp(log_sum / static_cast<double>(ratios.size()));
    }
  };
  fill(&EnumerationReport::raw_count, report.raw_ratios, report.raw_growth);
  fill(&EnumerationReport::iso_count, report.iso_ratios, report.iso_growth);
  return report;
}

}  // namespace sqf
