#pragma once

// Differential verification: the oracle, the standard method and the
// Calamity method (every month direction) must agree on every date, and the
// tables must satisfy their structural properties.

#include <array>
#include <string>
#include <vector>

#include "calamity/anchor_systems.hpp"
#include "calamity/calendar.hpp"
#include "calamity/conway.hpp"
#include "calamity/doomyears.hpp"
#include "calamity/method.hpp"
#include "calamity/vector_doomsday.hpp"

namespace calamity {

// Published month codes (common year) and Doomyear packings, used as fixed
// reference data by verify.
inline constexpr std::array<int, 12> kPublishedMonthCodes = {43, 0, 0, 34, 52, 16, 34, 61, 25, 43, 0, 25};
inline constexpr std::array<int, 16> kPublishedDoomyears = {0,   151, 242, 333,  425,  506,  660,  751,
                                                            843, 924, 1015, 1106, 1261, 1342, 1433, 1524};

// Year span used for the per-system sweep: one full Gregorian cycle.
inline constexpr int kSystemSampleFirstYear = 2000;
inline constexpr int kSystemSampleLastYear = 2399;

struct VerifyResult {
  int first_year = 0;
  int last_year = 0;
  long checks_run = 0;
  long dates_tested = 0;
  long failures = 0;
  std::vector<std::string> counterexamples;

  friend bool operator==(const VerifyResult&, const VerifyResult&) = default;
};

namespace detail {

class Checker {
 public:
  Checker(VerifyResult& result, std::size_t max_counterexamples)
      : result_(result), max_counterexamples_(max_counterexamples) {}

  template <typename Describe>
  void check(bool ok, Describe&& describe) {
    ++result_.checks_run;
    if (ok) return;
    ++result_.failures;
    if (result_.counterexamples.size() < max_counterexamples_) result_.counterexamples.push_back(describe());
  }

 private:
  VerifyResult& result_;
  std::size_t max_counterexamples_;
};

inline std::string with_date(const Date& d, const std::string& what) { return to_iso(d) + ": " + what; }

inline void check_date(Checker& c, const Date& d) {
  const Weekday oracle = oracle_weekday(d);
  const Weekday standard = weekday_standard(d);
  c.check(standard == oracle, [&] {
    return with_date(d, "standard " + std::to_string(standard.index()) + " != oracle " + std::to_string(oracle.index()));
  });
  const Weekday canonical = weekday_calamity(d);
  c.check(canonical == oracle, [&] {
    return with_date(d, "calamity " + std::to_string(canonical.index()) + " != oracle " + std::to_string(oracle.index()));
  });
  for (MonthDirection dir : {MonthDirection::forward, MonthDirection::backward, MonthDirection::automatic}) {
    const StepTrace t = weekday_calamity_traced(d, dir);
    c.check(t.final == oracle && t.recompute() == t.final, [&] {
      return with_date(d, "traced calamity (" + std::string(to_string(dir)) + ") " +
                              std::to_string(t.final.index()) + " != oracle " + std::to_string(oracle.index()));
    });
  }
}

inline void check_tables(Checker& c) {
  for (int m = 1; m <= 12; ++m) {
    const VectorCode v = vector_code(m, false);
    c.check(v.value() == kPublishedMonthCodes[static_cast<std::size_t>(m - 1)],
            [&] { return "month code for " + std::string(month_abbrev(m)) + " is " + v.str(); });
  }
  c.check(vector_code(1, true).value() == 34 && vector_code(2, true).value() == 61,
          [] { return std::string("leap January/February codes differ from 34/61"); });

  for (int d = 0; d <= kMaxDoomyearDistance; ++d) {
    const Doomyear dy = doomyear(d);
    c.check(dy.packed() == kPublishedDoomyears[static_cast<std::size_t>(d)],
            [&] { return "Doomyear at distance " + std::to_string(d) + " is " + std::to_string(dy.packed()); });
    const int expected_sum = d % 4 == 0 ? 0 : 6;
    c.check((dy.forward_digit + dy.backward_digit) % 7 == expected_sum,
            [&] { return "complementarity fails at distance " + std::to_string(d); });
    if (d > 0) {
      const int step = floor_mod(dy.forward_digit - doomyear(d - 1).forward_digit, 7);
      c.check(step == (d % 4 == 0 ? 2 : 1), [&] { return "leap-year stumble fails at distance " + std::to_string(d); });
    }
  }
  for (int yy = 0; yy <= 99; ++yy) {
    c.check(year_offset_doomyear(yy) == year_offset_arithmetic(yy),
            [&] { return "Doomyear offset differs from arithmetic at yy = " + std::to_string(yy); });
    if (yy + kDoomyearPeriod <= 99) {
      c.check(year_offset_arithmetic(yy + kDoomyearPeriod) == year_offset_arithmetic(yy),
              [&] { return "28-year period fails at yy = " + std::to_string(yy); });
    }
  }

  for (bool leap : {false, true}) {
    for (int m = 1; m <= 12; ++m) {
      const int dm = doomsday_date(m, leap);
      const VectorCode v = vector_code(m, leap);
      for (int t = 1; t <= month_length_unchecked(leap, m); ++t) {
        c.check(square_knot_forward(t, v) == floor_mod(t - dm, 7) && square_knot_backward(t, v) == floor_mod(dm - t, 7),
                [&] { return "square knot fails for " + std::string(month_abbrev(m)) + " " + std::to_string(t); });
      }
    }
  }

  for (int k = 0; k < kSystemCount; ++k) {
    const AnchorSystem s = system(k);
    const AnchorSystem next = system((k + 1) % kSystemCount);
    std::vector<MonthDay> representatives;
    for (int m = 1; m <= 12; ++m) {
      const VectorCode code = s.code(m);
      c.check(in_vocabulary(code.value()) && next.code(m) == rotate_code(code),
              [&] { return "system " + std::to_string(k) + " code for " + std::string(month_abbrev(m)); });
      // Smallest valid day with the system's residue.
      const int r = s.residues[static_cast<std::size_t>(m - 1)];
      representatives.push_back({m, r == 0 ? 7 : r});
    }
    c.check(classify(representatives) == k, [&] { return "classify round trip fails for k = " + std::to_string(k); });
    const int zeros = zero_month_count(k);
    c.check(k == 0 ? zeros == 3 : zeros <= 2,
            [&] { return "system " + std::to_string(k) + " has " + std::to_string(zeros) + " zero-months"; });
  }
}

inline void check_systems(Checker& c) {
  for (Date d(kSystemSampleFirstYear, 1, 1);; d = next_day(d)) {
    const Weekday oracle = oracle_weekday(d);
    for (int k = 0; k < kSystemCount; ++k) {
      const Weekday w = weekday_in_system(d, k);
      c.check(w == oracle, [&] { return with_date(d, "system " + std::to_string(k) + " gives " + std::to_string(w.index())); });
    }
    if (d == Date(kSystemSampleLastYear, 12, 31)) break;
  }
}

}  // namespace detail

/// Runs every check. Throws RangeError/DomainError for an invalid range.
inline VerifyResult run_verification(int first_year, int last_year, std::size_t max_counterexamples = 10) {
  require_year(first_year);
  require_year(last_year);
  if (last_year < first_year) {
    throw DomainError("reversed year range " + std::to_string(first_year) + " .. " + std::to_string(last_year));
  }
  VerifyResult result;
  result.first_year = first_year;
  result.last_year = last_year;
  detail::Checker checker(result, max_counterexamples);

  const Date last(last_year, 12, 31);
  for (Date d(first_year, 1, 1);; d = next_day(d)) {
    detail::check_date(checker, d);
    ++result.dates_tested;
    if (d == last) break;
  }
  detail::check_tables(checker);
  detail::check_systems(checker);
  return result;
}

}  // namespace calamity
