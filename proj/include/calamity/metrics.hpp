#pragma once

// Operation traces for the two variable steps (year offset and month-day
// offset) of the standard and Calamity methods, and their aggregate comparison.
//
// An intermediate value is any arithmetic result an event produces. Raw
// inputs (year of century, day of month, table-fixed doomsday dates) are
// operands, never results. The century anchor is outside both traces.

#include <algorithm>
#include <array>
#include <cstddef>
#include <cstdlib>
#include <map>
#include <numeric>
#include <string_view>
#include <vector>

#include "calamity/calendar.hpp"
#include "calamity/conway.hpp"
#include "calamity/doomyears.hpp"
#include "calamity/method.hpp"
#include "calamity/vector_doomsday.hpp"

namespace calamity {

enum class OpKind {
  int_division,       // floor(yy / 4)
  multidigit_add,     // yy + floor(yy / 4)
  mod_reduce_large,   // (yy + floor(yy / 4)) mod 7
  small_subtract,     // distance to the anchor year
  table_recall,       // Doomyear digit
  doomsday_subtract,  // target - doomsday
  sign_correct,       // bring the running total into 0..6
  gap_measure,        // gap to the month anchor
  digit_select_add,   // gap + crossed code digit
};

inline constexpr std::array<OpKind, 9> kAllOpKinds = {
    OpKind::int_division,      OpKind::multidigit_add, OpKind::mod_reduce_large,
    OpKind::small_subtract,    OpKind::table_recall,   OpKind::doomsday_subtract,
    OpKind::sign_correct,      OpKind::gap_measure,    OpKind::digit_select_add};

constexpr std::string_view to_string(OpKind k) noexcept {
  switch (k) {
    case OpKind::int_division: return "int_division";
    case OpKind::multidigit_add: return "multidigit_add";
    case OpKind::mod_reduce_large: return "mod_reduce_large";
    case OpKind::small_subtract: return "small_subtract";
    case OpKind::table_recall: return "table_recall";
    case OpKind::doomsday_subtract: return "doomsday_subtract";
    case OpKind::sign_correct: return "sign_correct";
    case OpKind::gap_measure: return "gap_measure";
    case OpKind::digit_select_add: return "digit_select_add";
  }
  return "?";
}

inline OpKind op_kind_from_string(std::string_view s) {
  for (OpKind k : kAllOpKinds) {
    if (to_string(k) == s) return k;
  }
  throw DomainError("unknown operation kind '" + std::string(s) + "'");
}

struct OpEvent {
  OpKind kind{};
  std::vector<int> operands;
  int result = 0;
  std::vector<std::size_t> depends_on;  // indices of earlier events in the same trace

  int result_magnitude() const noexcept { return std::abs(result); }
};

struct Trace {
  std::vector<OpEvent> events;
  Weekday weekday;  // final answer, century anchor included
};

/// Standard method, five events. Each step consumes the previous one: the
/// month difference is applied to the running year total, so the chain is
/// fully serial.
inline Trace trace_standard(const Date& date) {
  const int yy = date.year_of_century();
  const int dm = doomsday_date(date.month(), date.leap());
  Trace t;
  auto& ev = t.events;
  const int quarter = yy / 4;
  ev.push_back({OpKind::int_division, {yy, 4}, quarter, {}});
  const int sum = yy + quarter;
  ev.push_back({OpKind::multidigit_add, {yy, quarter}, sum, {0}});
  const int omega = sum % 7;
  ev.push_back({OpKind::mod_reduce_large, {sum, 7}, omega, {1}});
  const int diff = date.day() - dm;
  ev.push_back({OpKind::doomsday_subtract, {date.day(), dm}, diff, {2}});
  const int corrected = floor_mod(omega + diff, 7);
  ev.push_back({OpKind::sign_correct, {omega, diff}, corrected, {2, 3}});
  t.weekday = Weekday(century_anchor(date.year()) + corrected);
  return t;
}

/// Calamity method, four events in two independent chains: year
/// (distance -> recall) and month (gap -> crossed digit add). Uses the
/// canonical forward month direction.
inline Trace trace_calamity(const Date& date) {
  const int yy = date.year_of_century();
  const YearNavigation nav = nearest_anchor(yy);
  const VectorCode code = vector_code(date.month(), date.leap());
  const GapPair g = gaps(date.day());
  Trace t;
  auto& ev = t.events;
  ev.push_back({OpKind::small_subtract, {yy, nav.anchor}, nav.distance, {}});
  const int year_digit = doomyear(nav.distance).digit(nav.direction);
  ev.push_back({OpKind::table_recall, {nav.distance, nav.direction == Direction::forward ? 0 : 1}, year_digit, {0}});
  ev.push_back({OpKind::gap_measure, {date.day(), date.day() - g.forward}, g.forward, {}});
  const int month_sum = g.forward + code.tens();
  ev.push_back({OpKind::digit_select_add, {g.forward, code.tens()}, month_sum, {2}});
  t.weekday = Weekday(century_anchor(date.year()) + year_digit + month_sum);
  return t;
}

/// Length of the longest dependency chain, counted in events.
inline int serial_depth(const std::vector<OpEvent>& events) {
  std::vector<int> depth(events.size(), 1);
  int best = 0;
  for (std::size_t i = 0; i < events.size(); ++i) {
    for (std::size_t dep : events[i].depends_on) depth[i] = std::max(depth[i], depth[dep] + 1);
    best = std::max(best, depth[i]);
  }
  return best;
}

/// Number of weakly connected components of the dependency graph.
inline int independent_chains(const std::vector<OpEvent>& events) {
  std::vector<std::size_t> parent(events.size());
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (std::size_t i = 0; i < events.size(); ++i) {
    for (std::size_t dep : events[i].depends_on) parent[find(i)] = find(dep);
  }
  int roots = 0;
  for (std::size_t i = 0; i < events.size(); ++i) roots += find(i) == i ? 1 : 0;
  return roots;
}

inline int count_kind(const std::vector<OpEvent>& events, OpKind kind) {
  return static_cast<int>(std::count_if(events.begin(), events.end(), [&](const OpEvent& e) { return e.kind == kind; }));
}

/// Aggregate statistics for one method over a date range. Per-date figures are
/// stored once, with `uniform` false if any date's counts differed from the
/// first date's.
struct MethodStats {
  long dates = 0;
  std::map<OpKind, int> counts_per_date;
  bool uniform = true;
  int total_per_date = 0;
  int divisions_per_date = 0;
  int large_mod_reductions_per_date = 0;
  int serial_depth = 0;
  int independent_chains = 0;
  int max_intermediate = 0;
  std::map<OpKind, int> max_by_kind;
  long weekday_mismatches = 0;  // trace answer vs the uninstrumented method

  bool serial() const noexcept { return serial_depth == total_per_date; }

  void add(const Trace& trace, Weekday expected) {
    std::map<OpKind, int> counts;
    for (OpKind k : kAllOpKinds) counts[k] = count_kind(trace.events, k);
    MethodStats one;
    one.dates = 1;
    one.counts_per_date = counts;
    one.total_per_date = static_cast<int>(trace.events.size());
    one.divisions_per_date = counts[OpKind::int_division];
    one.large_mod_reductions_per_date = counts[OpKind::mod_reduce_large] + counts[OpKind::sign_correct];
    one.serial_depth = calamity::serial_depth(trace.events);
    one.independent_chains = calamity::independent_chains(trace.events);
    for (OpKind k : kAllOpKinds) one.max_by_kind[k] = 0;
    for (const OpEvent& e : trace.events) {
      one.max_by_kind[e.kind] = std::max(one.max_by_kind[e.kind], e.result_magnitude());
      one.max_intermediate = std::max(one.max_intermediate, e.result_magnitude());
    }
    one.weekday_mismatches = trace.weekday == expected ? 0 : 1;
    merge(one);
  }

  /// Order-insensitive combination of two partial aggregates.
  void merge(const MethodStats& other) {
    if (other.dates == 0) return;
    if (dates == 0) {
      *this = other;
      return;
    }
    const bool same_shape = counts_per_date == other.counts_per_date && serial_depth == other.serial_depth &&
                            independent_chains == other.independent_chains;
    uniform = uniform && other.uniform && same_shape;
    dates += other.dates;
    max_intermediate = std::max(max_intermediate, other.max_intermediate);
    for (const auto& [k, v] : other.max_by_kind) max_by_kind[k] = std::max(max_by_kind[k], v);
    serial_depth = std::max(serial_depth, other.serial_depth);
    independent_chains = std::min(independent_chains, other.independent_chains);
    weekday_mismatches += other.weekday_mismatches;
  }
};

struct ComparisonReport {
  Date first{2000, 1, 1};
  Date last{2000, 1, 1};
  MethodStats standard;
  MethodStats calamity;
};

/// Traces both methods over every date in [first, last].
inline ComparisonReport compare(const Date& first, const Date& last) {
  if (last < first) throw DomainError("empty date range " + to_iso(first) + " .. " + to_iso(last));
  ComparisonReport report{first, last, {}, {}};
  for (Date d = first;; d = next_day(d)) {
    report.standard.add(trace_standard(d), weekday_standard(d));
    report.calamity.add(trace_calamity(d), weekday_calamity(d));
    if (d == last) break;
  }
  return report;
}

inline ComparisonReport compare_years(int first_year, int last_year) {
  require_year(first_year);
  require_year(last_year);
  if (last_year < first_year) {
    throw DomainError("empty year range " + std::to_string(first_year) + " .. " + std::to_string(last_year));
  }
  return compare(Date(first_year, 1, 1), Date(last_year, 12, 31));
}

}  // namespace calamity
