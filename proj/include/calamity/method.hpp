#pragma once

// The Calamity Tables pipeline: century anchor + Doomyear digit + square knot
// month offset, every step a table lookup or a single-digit sum.

#include <string_view>

#include "calamity/calendar.hpp"
#include "calamity/conway.hpp"
#include "calamity/doomyears.hpp"
#include "calamity/vector_doomsday.hpp"

namespace calamity {

enum class MonthDirection { forward, backward, automatic };

constexpr std::string_view to_string(MonthDirection d) noexcept {
  switch (d) {
    case MonthDirection::forward: return "forward";
    case MonthDirection::backward: return "backward";
    case MonthDirection::automatic: return "auto";
  }
  return "?";
}

struct YearStep {
  int anchor = 0;
  int distance = 0;
  Direction direction = Direction::forward;
  int digit = 0;

  friend bool operator==(const YearStep&, const YearStep&) = default;
};

struct TargetGap {
  Direction direction = Direction::forward;
  int gap = 0;
  int digit = 0;   // code digit paired with the gap (tens for forward, units for backward)
  int offset = 0;  // (gap + digit) mod 7; subtracted when direction is backward

  int signed_offset() const noexcept { return direction == Direction::forward ? offset : -offset; }

  friend bool operator==(const TargetGap&, const TargetGap&) = default;
};

struct StepTrace {
  int century_anchor = 0;
  YearStep year;
  VectorCode month_code;
  TargetGap target;
  Weekday final;

  /// Re-derives the weekday from the recorded components.
  Weekday recompute() const noexcept {
    return Weekday(century_anchor + year.digit + target.signed_offset());
  }

  friend bool operator==(const StepTrace&, const StepTrace&) = default;
};

inline Weekday weekday_calamity(const Date& date) {
  const int c = century_anchor(date.year());
  const int year_digit = year_offset_doomyear(date.year_of_century());
  const int month_offset = square_knot_forward(date.day(), vector_code(date.month(), date.leap()));
  return Weekday(c + year_digit + month_offset);
}

/// Same result as weekday_calamity for every direction. `automatic` takes the
/// smaller target gap, forward on an anchor (g_F + g_B = 7 is odd, so the gaps
/// never tie otherwise).
inline StepTrace weekday_calamity_traced(const Date& date, MonthDirection direction) {
  StepTrace trace;
  trace.century_anchor = century_anchor(date.year());

  const YearNavigation nav = nearest_anchor(date.year_of_century());
  trace.year = {nav.anchor, nav.distance, nav.direction, doomyear(nav.distance).digit(nav.direction)};

  trace.month_code = vector_code(date.month(), date.leap());
  const GapPair g = gaps(date.day());
  Direction chosen = Direction::forward;
  if (direction == MonthDirection::backward ||
      (direction == MonthDirection::automatic && g.backward < g.forward)) {
    chosen = Direction::backward;
  }
  if (chosen == Direction::forward) {
    trace.target = {chosen, g.forward, trace.month_code.tens(), square_knot_forward(date.day(), trace.month_code)};
  } else {
    trace.target = {chosen, g.backward, trace.month_code.units(), square_knot_backward(date.day(), trace.month_code)};
  }
  trace.final = trace.recompute();
  return trace;
}

}  // namespace calamity
