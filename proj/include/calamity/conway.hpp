#pragma once

// Conway's arithmetic Doomsday rule:
//   weekday = century anchor + year offset + (day - doomsday date)   (mod 7)

#include <array>

#include "calamity/calendar.hpp"

namespace calamity {

/// Century anchors for one 400-year cycle, indexed by (year / 100) % 4:
/// 2000s, 2100s, 2200s, 2300s (equivalently 1600s, 1700s, 1800s, 1900s).
inline constexpr std::array<int, 4> kCenturyAnchors = {2, 0, 5, 3};

/// Doomsday dates d_m for common years, January first.
inline constexpr std::array<int, 12> kDoomsdayDates = {3, 28, 7, 4, 9, 6, 11, 8, 5, 10, 7, 12};
inline constexpr int kLeapJanuaryDoomsday = 4;
inline constexpr int kLeapFebruaryDoomsday = 29;

inline int century_anchor(int year) {
  require_year(year);
  return kCenturyAnchors[static_cast<std::size_t>((year / 100) % 4)];
}

inline void require_year_of_century(int yy) {
  if (yy < 0 || yy > 99) throw RangeError("year of century " + std::to_string(yy) + " outside [0, 99]");
}

/// (yy + floor(yy / 4)) mod 7.
inline int year_offset_arithmetic(int yy) {
  require_year_of_century(yy);
  return (yy + yy / 4) % 7;
}

inline int doomsday_date(int month, bool leap) {
  require_month(month);
  if (leap && month == 1) return kLeapJanuaryDoomsday;
  if (leap && month == 2) return kLeapFebruaryDoomsday;
  return kDoomsdayDates[static_cast<std::size_t>(month - 1)];
}

/// Signed month-day distance (day - d_m), reduced into 0..6.
inline int month_day_offset_arithmetic(int day, int month, bool leap) {
  return floor_mod(day - doomsday_date(month, leap), 7);
}

inline Weekday weekday_standard(const Date& date) {
  const int c = century_anchor(date.year());
  const int omega = year_offset_arithmetic(date.year_of_century());
  const int delta = month_day_offset_arithmetic(date.day(), date.month(), date.leap());
  return Weekday(c + omega + delta);
}

}  // namespace calamity
