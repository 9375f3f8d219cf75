#pragma once

// Equivalence classes of same-weekday anchor-date systems.
//
// Any twelve dates, one per month, that share a weekday every year differ
// from Conway's doomsday dates by one uniform k (mod 7). The class k is fully
// described by the residues (d_m + k) mod 7, and its code table depends on
// nothing else. Its dates fall k weekdays after Conway's, so its century
// anchors are (c + k) mod 7.

#include <algorithm>
#include <array>
#include <map>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "calamity/calendar.hpp"
#include "calamity/conway.hpp"
#include "calamity/doomyears.hpp"
#include "calamity/vector_doomsday.hpp"

namespace calamity {

inline constexpr int kSystemCount = 7;

inline void require_system(int k) {
  if (k < 0 || k >= kSystemCount) throw RangeError("system index " + std::to_string(k) + " outside [0, 6]");
}

/// Code for a doomsday residue r: 00 for r = 0, else tens 7 - r, units r.
inline VectorCode code_for_residue(int r) {
  r = floor_mod(r, 7);
  return r == 0 ? VectorCode{} : VectorCode(7 - r, r);
}

struct AnchorSystem {
  int k = 0;
  bool leap = false;
  std::array<int, 12> residues{};
  std::array<VectorCode, 12> codes{};

  /// Century anchor of this system for `year`.
  int century_anchor(int year) const { return (calamity::century_anchor(year) + k) % 7; }
  int shift_century_anchor(int conway_anchor) const { return floor_mod(conway_anchor + k, 7); }

  VectorCode code(int month) const {
    require_month(month);
    return codes[static_cast<std::size_t>(month - 1)];
  }
};

inline AnchorSystem system(int k, bool leap = false) {
  require_system(k);
  AnchorSystem s;
  s.k = k;
  s.leap = leap;
  for (int m = 1; m <= 12; ++m) {
    const auto i = static_cast<std::size_t>(m - 1);
    s.residues[i] = (doomsday_date(m, leap) + k) % 7;
    s.codes[i] = code_for_residue(s.residues[i]);
  }
  return s;
}

/// Weekday through system k's tables (forward square knot).
inline Weekday weekday_in_system(const Date& date, int k) {
  const AnchorSystem s = system(k, date.leap());
  return Weekday(s.century_anchor(date.year()) + year_offset_doomyear(date.year_of_century()) +
                 square_knot_forward(date.day(), s.code(date.month())));
}

/// One step of 00 -> 61 -> 52 -> 43 -> 34 -> 25 -> 16 -> 00, i.e. the code
/// of residue r + 1.
inline VectorCode rotate_code(VectorCode code) {
  // The units digit is the residue (0 for code 00).
  return code_for_residue(code.units() + 1);
}

struct MonthDay {
  int month = 0;
  int day = 0;
};

class NotUniformError : public std::runtime_error {
 public:
  NotUniformError(int best_k, std::vector<int> offending_months)
      : std::runtime_error(describe(best_k, offending_months)),
        best_k_(best_k),
        offending_(std::move(offending_months)) {}

  /// The k shared by the most months.
  int best_k() const noexcept { return best_k_; }
  const std::vector<int>& offending_months() const noexcept { return offending_; }

 private:
  static std::string describe(int best_k, const std::vector<int>& months) {
    std::string msg = "anchor dates are not a same-weekday system; months inconsistent with k = " +
                      std::to_string(best_k) + ":";
    for (int m : months) msg += " " + std::string(month_abbrev(m));
    return msg;
  }

  int best_k_;
  std::vector<int> offending_;
};

/// Class index of a 12-date system, evaluated against common-year d_m.
/// Throws DomainError for malformed input, NotUniformError when no single k fits.
inline int classify(std::span<const MonthDay> dates) {
  if (dates.size() != 12) throw DomainError("expected 12 anchor dates, got " + std::to_string(dates.size()));
  std::array<int, 12> k_of_month{};
  std::array<bool, 12> seen{};
  for (const MonthDay& md : dates) {
    require_month(md.month);
    const auto i = static_cast<std::size_t>(md.month - 1);
    if (seen[i]) throw DomainError("month " + std::string(month_abbrev(md.month)) + " given twice");
    seen[i] = true;
    if (md.day < 1 || md.day > month_length_unchecked(false, md.month)) {
      throw RangeError("day " + std::to_string(md.day) + " invalid for " + std::string(month_abbrev(md.month)));
    }
    k_of_month[i] = floor_mod(md.day - doomsday_date(md.month, false), 7);
  }

  std::array<int, kSystemCount> votes{};
  for (int k : k_of_month) ++votes[static_cast<std::size_t>(k)];
  const int best = static_cast<int>(std::max_element(votes.begin(), votes.end()) - votes.begin());
  if (votes[static_cast<std::size_t>(best)] == 12) return best;

  std::vector<int> offending;
  for (int m = 1; m <= 12; ++m) {
    if (k_of_month[static_cast<std::size_t>(m - 1)] != best) offending.push_back(m);
  }
  throw NotUniformError(best, std::move(offending));
}

inline int zero_month_count(int k) {
  const AnchorSystem s = system(k);
  return static_cast<int>(std::count_if(s.codes.begin(), s.codes.end(), [](VectorCode c) { return c.is_zero(); }));
}

/// Months grouped by Conway's common-year d_m mod 7.
using MonthGrouping = std::array<std::vector<int>, 7>;

inline MonthGrouping month_groupings() {
  MonthGrouping groups;
  for (int m = 1; m <= 12; ++m) groups[static_cast<std::size_t>(doomsday_date(m, false) % 7)].push_back(m);
  return groups;
}

}  // namespace calamity
