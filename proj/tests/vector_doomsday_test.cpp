#include "calamity/vector_doomsday.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <set>
#include <vector>

#include "calamity/conway.hpp"

namespace calamity {
namespace {

// Brute-force gaps straight from the anchor sets.
GapPair brute_gaps(int t) {
  const std::vector<int> below = {0, 7, 14, 21, 28};
  const std::vector<int> above = {7, 14, 21, 28, 35};
  int lower = 0;
  for (int a : below) {
    if (a <= t) lower = a;
  }
  int upper = 35;
  for (int a : above) {
    if (a >= t) {
      upper = a;
      break;
    }
  }
  if (t == lower) return {0, 0};
  return {t - lower, upper - t};
}

TEST(GapsTest, Examples) {
  EXPECT_EQ(gaps(7), (GapPair{0, 0}));
  EXPECT_EQ(gaps(3), (GapPair{3, 4}));
  EXPECT_EQ(gaps(30), (GapPair{2, 5}));
  EXPECT_EQ(gaps(29), (GapPair{1, 6}));
  EXPECT_EQ(gaps(31), (GapPair{3, 4}));
  EXPECT_EQ(gaps(28), (GapPair{0, 0}));
}

TEST(GapsTest, MatchesAnchorSetsAndSumsToSeven) {
  for (int t = 1; t <= 31; ++t) {
    const GapPair g = gaps(t);
    EXPECT_EQ(g, brute_gaps(t)) << t;
    EXPECT_TRUE((g.forward == 0 && g.backward == 0) || g.forward + g.backward == 7) << t;
  }
}

TEST(GapsTest, OutOfRange) {
  EXPECT_THROW(gaps(0), RangeError);
  EXPECT_THROW(gaps(32), RangeError);
}

TEST(VectorCodeTest, PublishedMonthCodes) {
  const int common[] = {43, 0, 0, 34, 52, 16, 34, 61, 25, 43, 0, 25};
  for (int m = 1; m <= 12; ++m) EXPECT_EQ(vector_code(m, false).value(), common[m - 1]) << m;
  EXPECT_EQ(vector_code(1, true).value(), 34);
  EXPECT_EQ(vector_code(2, true).value(), 61);
  for (int m = 3; m <= 12; ++m) EXPECT_EQ(vector_code(m, true), vector_code(m, false));
}

TEST(VectorCodeTest, RejectsNonCodes) {
  EXPECT_THROW(VectorCode(1, 5), DomainError);
  EXPECT_THROW(VectorCode(0, 7), DomainError);
  EXPECT_THROW(VectorCode(7, 0), DomainError);
  EXPECT_THROW(VectorCode::from_value(15), DomainError);
  EXPECT_THROW(VectorCode::from_value(100), DomainError);
  EXPECT_EQ(VectorCode::from_value(61), VectorCode(6, 1));
  EXPECT_EQ(VectorCode(0, 0).str(), "00");
}

TEST(SquareKnotTest, Examples) {
  const VectorCode dec = vector_code(12, false);
  EXPECT_EQ(square_knot_forward(25, dec), 6);
  EXPECT_EQ(square_knot_backward(25, dec), 1);
  EXPECT_EQ(square_knot_forward(8, vector_code(3, false)), 1);
  EXPECT_EQ(square_knot_backward(1, vector_code(11, false)), 6);
}

TEST(SquareKnotTest, SelfConsistencyAtDoomsdays) {
  for (bool leap : {false, true}) {
    for (int m = 1; m <= 12; ++m) {
      const int dm = doomsday_date(m, leap);
      EXPECT_EQ(square_knot_forward(dm, vector_code(m, leap)), 0) << m;
      EXPECT_EQ(square_knot_backward(dm, vector_code(m, leap)), 0) << m;
    }
  }
}

TEST(SquareKnotTest, ExhaustiveMatchesSubtraction) {
  for (bool leap : {false, true}) {
    for (int m = 1; m <= 12; ++m) {
      const int dm = doomsday_date(m, leap);
      const VectorCode v = vector_code(m, leap);
      for (int t = 1; t <= month_length_unchecked(leap, m); ++t) {
        EXPECT_EQ(square_knot_forward(t, v), floor_mod(t - dm, 7));
        EXPECT_EQ(square_knot_backward(t, v), floor_mod(dm - t, 7));
      }
    }
  }
}

TEST(SquareKnotTest, DirectionsCancel) {
  for (VectorCode code : code_vocabulary()) {
    for (int t = 1; t <= 31; ++t) {
      EXPECT_EQ((square_knot_forward(t, code) + square_knot_backward(t, code)) % 7, 0);
    }
  }
}

// Pairing same directions under addition yields t + d_m, which is off from
// t - d_m by 2 d_m; under subtraction it is correct.
TEST(SquareKnotTest, SameDirectionPairing) {
  int coincidences = 0;
  for (int m = 1; m <= 12; ++m) {
    const int dm = doomsday_date(m, false);
    const VectorCode v = vector_code(m, false);
    for (int t = 1; t <= month_length_unchecked(false, m); ++t) {
      const int added = floor_mod(gaps(t).forward + v.units(), 7);
      EXPECT_EQ(added, floor_mod(t + dm, 7));
      EXPECT_EQ(floor_mod(added - floor_mod(t - dm, 7), 7), floor_mod(2 * dm, 7));
      if (added == floor_mod(t - dm, 7)) {
        ++coincidences;
        EXPECT_EQ(dm % 7, 0);
      }
      EXPECT_EQ(floor_mod(gaps(t).forward - gaps(dm).forward, 7), floor_mod(t - dm, 7));
    }
  }
  // Only the zero-code months (Feb, Mar, Nov) coincide, on every day.
  EXPECT_EQ(coincidences, 28 + 31 + 30);
}

TEST(CodeVocabularyTest, SevenCodes) {
  std::vector<int> values;
  for (VectorCode c : code_vocabulary()) values.push_back(c.value());
  EXPECT_EQ(values, (std::vector<int>{0, 16, 25, 34, 43, 52, 61}));
  EXPECT_TRUE(in_vocabulary(61));
  EXPECT_EQ(vector_code(8, false).value(), 61);
  EXPECT_FALSE(in_vocabulary(15));
  EXPECT_FALSE(in_vocabulary(70));
}

TEST(CodeVocabularyTest, MonthCodesUseEveryPairInBothOrientations) {
  std::set<int> seen;
  for (bool leap : {false, true}) {
    for (int m = 1; m <= 12; ++m) {
      const VectorCode v = vector_code(m, leap);
      EXPECT_TRUE(in_vocabulary(v.value()));
      EXPECT_TRUE(v.is_zero() || v.tens() + v.units() == 7);
      seen.insert(v.value());
    }
  }
  for (int pair : {16, 25, 34}) {
    EXPECT_TRUE(seen.count(pair)) << pair;
    EXPECT_TRUE(seen.count((pair % 10) * 10 + pair / 10)) << pair;
  }
  EXPECT_TRUE(seen.count(0));
}

}  // namespace
}  // namespace calamity
