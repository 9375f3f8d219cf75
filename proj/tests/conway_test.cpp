#include "calamity/conway.hpp"

#include <gtest/gtest.h>

#include "support/walking_oracle.hpp"

namespace calamity {
namespace {

TEST(CenturyAnchorTest, KnownCenturies) {
  EXPECT_EQ(century_anchor(2023), 2);
  EXPECT_EQ(century_anchor(2000), 2);
  EXPECT_EQ(century_anchor(1923), 3);
  EXPECT_EQ(century_anchor(1800), 5);
  EXPECT_EQ(century_anchor(2100), 0);
  EXPECT_EQ(century_anchor(1700), 0);
  EXPECT_EQ(century_anchor(2423), 2);
}

TEST(CenturyAnchorTest, FourHundredYearPeriodic) {
  for (int y = 1583; y + 400 <= 9999; ++y) ASSERT_EQ(century_anchor(y), century_anchor(y + 400)) << y;
}

TEST(CenturyAnchorTest, OutOfRange) {
  EXPECT_THROW(century_anchor(1500), RangeError);
  EXPECT_THROW(century_anchor(10000), RangeError);
}

// The anchors equal the weekday of April 4 in each century's year 00
// (yy = 0 and April's doomsday is the 4th), read off the walking oracle.
TEST(CenturyAnchorTest, AgreesWithWalkingOracleFit) {
  const auto& walk = testing::walking_oracle();
  for (int century = 1600; century <= 9900; century += 100) {
    EXPECT_EQ(century_anchor(century), walk.weekday(century, 4, 4)) << century;
  }
}

TEST(YearOffsetArithmeticTest, Values) {
  EXPECT_EQ(year_offset_arithmetic(0), 0);
  EXPECT_EQ(year_offset_arithmetic(28), 0);
  EXPECT_EQ(year_offset_arithmetic(56), 0);
  EXPECT_EQ(year_offset_arithmetic(84), 0);
  EXPECT_EQ(year_offset_arithmetic(95), 6);
  EXPECT_EQ(year_offset_arithmetic(99), 4);
  EXPECT_THROW(year_offset_arithmetic(-1), RangeError);
  EXPECT_THROW(year_offset_arithmetic(100), RangeError);
}

TEST(YearOffsetArithmeticTest, TwentyEightYearPeriod) {
  for (int yy = 28; yy <= 99; ++yy) EXPECT_EQ(year_offset_arithmetic(yy), year_offset_arithmetic(yy - 28)) << yy;
}

TEST(DoomsdayDateTest, Table) {
  EXPECT_EQ(doomsday_date(4, false), 4);
  EXPECT_EQ(doomsday_date(2, true), 29);
  EXPECT_EQ(doomsday_date(2, false), 28);
  EXPECT_EQ(doomsday_date(1, true), 4);
  EXPECT_EQ(doomsday_date(1, false), 3);
  EXPECT_EQ(doomsday_date(12, false), 12);
  EXPECT_EQ(doomsday_date(12, true), 12);
  EXPECT_THROW(doomsday_date(0, false), RangeError);
  EXPECT_THROW(doomsday_date(13, true), RangeError);
}

TEST(WeekdayStandardTest, Examples) {
  EXPECT_EQ(weekday_standard(Date(2000, 4, 4)).index(), 2);
  EXPECT_EQ(weekday_standard(Date(2025, 3, 14)).index(), 5);
  EXPECT_EQ(weekday_standard(Date(1900, 2, 28)).index(), 3);
}

TEST(WeekdayStandardTest, DoomsdayOffsetVanishesOnDoomsdays) {
  for (int y = 1583; y <= 2400; ++y) {
    const bool leap = is_leap(y);
    for (int m = 1; m <= 12; ++m) {
      ASSERT_EQ(month_day_offset_arithmetic(doomsday_date(m, leap), m, leap), 0);
      const Weekday w = weekday_standard(Date(y, m, doomsday_date(m, leap)));
      ASSERT_EQ(w.index(), (century_anchor(y) + year_offset_arithmetic(y % 100)) % 7);
    }
  }
}

TEST(WeekdayStandardTest, ExhaustiveAgainstOracle) {
  for (Date d(1583, 1, 1);; d = next_day(d)) {
    ASSERT_EQ(weekday_standard(d), oracle_weekday(d)) << to_iso(d);
    if (d == Date(9999, 12, 31)) break;
  }
}

}  // namespace
}  // namespace calamity
