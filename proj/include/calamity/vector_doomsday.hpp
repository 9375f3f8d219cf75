#pragma once

// Vectorized doomsdays.
//
// Month anchors are the multiples of 7 bracketing a day of month: 0, 7, 14,
// 21, 28 below and 7, 14, 21, 28, 35 above. A day t has a forward gap (t
// minus the anchor below) and a backward gap (the anchor above minus t); on an
// anchor both are zero, otherwise they sum to 7.
//
// A month's code packs the doomsday's gaps as two digits: tens = backward
// gap, units = forward gap. The square knot rule crosses directions: the
// target's forward gap plus the code's tens digit is (t - d_m) mod 7, the
// target's backward gap plus the code's units digit is (d_m - t) mod 7.

#include <algorithm>
#include <array>
#include <string>
#include <vector>

#include "calamity/calendar.hpp"
#include "calamity/conway.hpp"

namespace calamity {

struct GapPair {
  int forward = 0;
  int backward = 0;

  friend constexpr bool operator==(const GapPair&, const GapPair&) = default;
};

inline void require_day_of_month(int t) {
  if (t < 1 || t > 31) throw RangeError("day of month " + std::to_string(t) + " outside [1, 31]");
}

inline GapPair gaps(int t) {
  require_day_of_month(t);
  const int forward = t % 7;
  return {forward, forward == 0 ? 0 : 7 - forward};
}

/// Two-digit month code. Stored as digits so the digit-sum invariant is
/// checkable without decoding.
class VectorCode {
 public:
  constexpr VectorCode() = default;

  /// Throws DomainError unless both digits are 0 or they sum to 7.
  constexpr VectorCode(int tens, int units) : tens_(tens), units_(units) {
    const bool zero = tens == 0 && units == 0;
    const bool complementary = tens >= 1 && tens <= 6 && units >= 1 && units <= 6 && tens + units == 7;
    if (!zero && !complementary) {
      throw DomainError("digits " + std::to_string(tens) + std::to_string(units) +
                        " are not a vector code");
    }
  }

  static constexpr VectorCode from_gaps(GapPair g) { return VectorCode(g.backward, g.forward); }

  /// Parses the composed number (0, 16, 25, ...). Throws DomainError outside
  /// the vocabulary.
  static VectorCode from_value(int value) {
    if (value < 0 || value > 99) throw DomainError("vector code " + std::to_string(value) + " out of range");
    return VectorCode(value / 10, value % 10);
  }

  constexpr int tens() const noexcept { return tens_; }
  constexpr int units() const noexcept { return units_; }
  constexpr int value() const noexcept { return 10 * tens_ + units_; }
  constexpr bool is_zero() const noexcept { return tens_ == 0; }

  std::string str() const { return std::string{static_cast<char>('0' + tens_), static_cast<char>('0' + units_)}; }

  friend constexpr bool operator==(const VectorCode&, const VectorCode&) = default;
  friend constexpr auto operator<=>(const VectorCode& a, const VectorCode& b) { return a.value() <=> b.value(); }

 private:
  int tens_ = 0;
  int units_ = 0;
};

/// The code for the month's traditional doomsday, e.g. January 43, June 16.
inline VectorCode vector_code(int month, bool leap) {
  return VectorCode::from_gaps(gaps(doomsday_date(month, leap)));
}

/// Days after doomsday: (g_F(t) + tens) mod 7.
inline int square_knot_forward(int t, VectorCode code) {
  return (gaps(t).forward + code.tens()) % 7;
}

/// Days before doomsday: (g_B(t) + units) mod 7. Callers subtract it.
inline int square_knot_backward(int t, VectorCode code) {
  return (gaps(t).backward + code.units()) % 7;
}

/// Every code the gap construction can produce, ascending:
/// 00, 16, 25, 34, 43, 52, 61.
inline std::vector<VectorCode> code_vocabulary() {
  std::vector<VectorCode> codes;
  for (int t = 1; t <= 31; ++t) codes.push_back(VectorCode::from_gaps(gaps(t)));
  std::sort(codes.begin(), codes.end());
  codes.erase(std::unique(codes.begin(), codes.end()), codes.end());
  return codes;
}

inline bool in_vocabulary(int value) {
  const auto vocab = code_vocabulary();
  return std::any_of(vocab.begin(), vocab.end(), [&](VectorCode c) { return c.value() == value; });
}

}  // namespace calamity
