#pragma once

// Doomyears: the year offset read off a table instead of computed.
//
// The year offset repeats every 28 years, so 0, 28, 56 and 84 all have offset
// 0. Any year of the century lies within 15 years of one of them. The table
// row at distance d holds f(d), the offset d years after an anchor year, and
// b(d), the offset d years before the next one.

#include <array>
#include <string>

#include "calamity/calendar.hpp"
#include "calamity/conway.hpp"

namespace calamity {

inline constexpr int kMaxDoomyearDistance = 15;
inline constexpr int kDoomyearPeriod = 28;

struct Doomyear {
  int distance = 0;
  int backward_digit = 0;
  int forward_digit = 0;

  /// F_d = 10d + f(d)
  constexpr int forward_packed() const noexcept { return 10 * distance + forward_digit; }
  /// B_d = 10d + b(d)
  constexpr int backward_packed() const noexcept { return 10 * distance + backward_digit; }
  /// D_d = 100d + 10 b(d) + f(d)
  constexpr int packed() const noexcept { return 100 * distance + 10 * backward_digit + forward_digit; }

  constexpr int digit(Direction d) const noexcept {
    return d == Direction::forward ? forward_digit : backward_digit;
  }

  friend constexpr bool operator==(const Doomyear&, const Doomyear&) = default;
};

/// Inverse of Doomyear::packed(); unique because distance <= 15 and both
/// digits are < 10.
constexpr Doomyear unpack_doomyear(int packed) noexcept {
  return {packed / 100, (packed / 10) % 10, packed % 10};
}

inline Doomyear doomyear(int d) {
  if (d < 0 || d > kMaxDoomyearDistance) {
    throw RangeError("doomyear distance " + std::to_string(d) + " outside [0, 15]");
  }
  // b(d) comes from the year offset of 28 - d, not from f(d), so the
  // complementarity between the two digits stays an independent check.
  return {d, year_offset_arithmetic(kDoomyearPeriod - d), year_offset_arithmetic(d)};
}

inline std::array<Doomyear, kMaxDoomyearDistance + 1> doomyear_table() {
  std::array<Doomyear, kMaxDoomyearDistance + 1> table{};
  for (int d = 0; d <= kMaxDoomyearDistance; ++d) table[static_cast<std::size_t>(d)] = doomyear(d);
  return table;
}

inline constexpr std::array<int, 4> anchor_years() noexcept { return {0, 28, 56, 84}; }

struct YearNavigation {
  int anchor = 0;
  int distance = 0;
  Direction direction = Direction::forward;

  friend constexpr bool operator==(const YearNavigation&, const YearNavigation&) = default;
};

/// Nearest anchor year to yy. A tie at distance 14 goes forward from the
/// lower anchor (f(14) == b(14), so either choice gives the same offset).
inline YearNavigation nearest_anchor(int yy) {
  require_year_of_century(yy);
  const int lower = (yy / kDoomyearPeriod) * kDoomyearPeriod;
  const int above = yy - lower;
  // Past 84 the next anchor (112) is outside the century; 99 is 15 from 84.
  if (above <= kDoomyearPeriod / 2 || lower == 84) return {lower, above, Direction::forward};
  return {lower + kDoomyearPeriod, kDoomyearPeriod - above, Direction::backward};
}

inline int year_offset_doomyear(int yy) {
  const YearNavigation nav = nearest_anchor(yy);
  return doomyear(nav.distance).digit(nav.direction);
}

}  // namespace calamity
