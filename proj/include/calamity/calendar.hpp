#pragma once

// Proleptic Gregorian dates in [1583, 9999] and a day-counting weekday oracle.

#include <array>
#include <compare>
#include <cstdint>
#include <cstdio>
#include <stdexcept>
#include <string>
#include <string_view>

namespace calamity {

class RangeError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

inline constexpr int kMinYear = 1583;
inline constexpr int kMaxYear = 9999;

// Mathematical modulus: result always in [0, m).
constexpr int floor_mod(int value, int m) noexcept {
  const int r = value % m;
  return r < 0 ? r + m : r;
}

enum class Direction { forward, backward };

constexpr std::string_view to_string(Direction d) noexcept {
  return d == Direction::forward ? "forward" : "backward";
}

/// Day of the week, 0 = Sunday ... 6 = Saturday.
class Weekday {
 public:
  constexpr Weekday() = default;
  constexpr explicit Weekday(int value) noexcept : index_(floor_mod(value, 7)) {}

  constexpr int index() const noexcept { return index_; }
  constexpr Weekday operator+(int days) const noexcept { return Weekday(index_ + days); }
  friend constexpr bool operator==(Weekday, Weekday) = default;

  std::string_view name() const noexcept {
    static constexpr std::array<std::string_view, 7> kNames = {
        "Sunday", "Monday", "Tuesday", "Wednesday", "Thursday", "Friday", "Saturday"};
    return kNames[static_cast<std::size_t>(index_)];
  }

 private:
  int index_ = 0;
};

inline void require_year(int year) {
  if (year < kMinYear || year > kMaxYear) {
    throw RangeError("year " + std::to_string(year) + " outside [1583, 9999]");
  }
}

inline void require_month(int month) {
  if (month < 1 || month > 12) {
    throw RangeError("month " + std::to_string(month) + " outside [1, 12]");
  }
}

/// Gregorian leap rule, restricted to the supported year range.
inline bool is_leap(int year) {
  require_year(year);
  return (year % 4 == 0) && (year % 100 != 0 || year % 400 == 0);
}

// Month lengths without the year-range check; shared by validation paths.
constexpr int month_length_unchecked(bool leap, int month) noexcept {
  constexpr std::array<int, 12> kLengths = {31, 28, 31, 30, 31, 30, 31, 31, 30, 31, 30, 31};
  if (month == 2 && leap) return 29;
  return kLengths[static_cast<std::size_t>(month - 1)];
}

inline int month_length(int year, int month) {
  const bool leap = is_leap(year);
  require_month(month);
  return month_length_unchecked(leap, month);
}

inline std::string_view month_abbrev(int month) {
  static constexpr std::array<std::string_view, 12> kNames = {
      "Jan", "Feb", "Mar", "Apr", "May", "Jun", "Jul", "Aug", "Sep", "Oct", "Nov", "Dec"};
  require_month(month);
  return kNames[static_cast<std::size_t>(month - 1)];
}

/// A validated calendar date. Construction throws RangeError for anything
/// outside the supported range or past the end of the month.
class Date {
 public:
  Date(int year, int month, int day) : year_(year), month_(month), day_(day) {
    const int len = month_length(year, month);
    if (day < 1 || day > len) {
      throw RangeError("day " + std::to_string(day) + " invalid for " + std::to_string(year) +
                       "-" + std::to_string(month));
    }
  }

  int year() const noexcept { return year_; }
  int month() const noexcept { return month_; }
  int day() const noexcept { return day_; }
  bool leap() const noexcept { return (year_ % 4 == 0) && (year_ % 100 != 0 || year_ % 400 == 0); }
  // Year within the century, 0..99.
  int year_of_century() const noexcept { return year_ % 100; }

  friend auto operator<=>(const Date&, const Date&) = default;

 private:
  int year_;
  int month_;
  int day_;
};

/// ISO 8601 rendering, zero padded.
inline std::string to_iso(const Date& d) {
  char buf[16];
  std::snprintf(buf, sizeof buf, "%04d-%02d-%02d", d.year(), d.month(), d.day());
  return buf;
}

/// Parses YYYY-MM-DD. Throws DomainError on malformed text, RangeError on an
/// impossible date.
inline Date parse_iso(std::string_view text) {
  auto digits = [&](std::size_t pos, std::size_t n) {
    int v = 0;
    for (std::size_t i = pos; i < pos + n; ++i) {
      const char c = text[i];
      if (c < '0' || c > '9') throw DomainError("malformed date '" + std::string(text) + "'");
      v = v * 10 + (c - '0');
    }
    return v;
  };
  if (text.size() != 10 || text[4] != '-' || text[7] != '-') {
    throw DomainError("malformed date '" + std::string(text) + "', expected YYYY-MM-DD");
  }
  return Date(digits(0, 4), digits(5, 2), digits(8, 2));
}

/// The following date. Throws RangeError past 9999-12-31.
inline Date next_day(const Date& d) {
  if (d.day() < month_length_unchecked(d.leap(), d.month())) {
    return Date(d.year(), d.month(), d.day() + 1);
  }
  if (d.month() < 12) return Date(d.year(), d.month() + 1, 1);
  return Date(d.year() + 1, 1, 1);
}

/// Days elapsed since 0001-01-01 on the proleptic Gregorian calendar.
inline std::int64_t day_number(const Date& d) {
  const std::int64_t y = d.year() - 1;
  std::int64_t days = 365 * y + y / 4 - y / 100 + y / 400;
  for (int m = 1; m < d.month(); ++m) days += month_length_unchecked(d.leap(), m);
  return days + d.day() - 1;
}

/// Ground-truth weekday: signed day distance from 2000-04-04, a Tuesday.
/// Uses no doomsday table and no year-offset formula.
inline Weekday oracle_weekday(const Date& d) {
  static const std::int64_t reference = day_number(Date(2000, 4, 4));
  constexpr int kReferenceWeekday = 2;
  const std::int64_t offset = (day_number(d) - reference) % 7;
  return Weekday(kReferenceWeekday + static_cast<int>(offset));
}

}  // namespace calamity
