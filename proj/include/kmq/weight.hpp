#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace kmq {

using Int = std::int64_t;

// A point (level, finite part, energy) of Z x Lambda x Z.  The finite part is
// written in fundamental-weight coordinates (Dynkin labels).  For finite-type
// data level and energy stay 0.
struct AffineWeight {
  Int level = 0;
  std::vector<Int> finite;
  Int energy = 0;

  AffineWeight() = default;
  AffineWeight(Int lvl, std::vector<Int> fin, Int en)
      : level(lvl), finite(std::move(fin)), energy(en) {}

  AffineWeight& operator+=(const AffineWeight& o);
  AffineWeight& operator-=(const AffineWeight& o);
  AffineWeight& operator*=(Int c);

  friend bool operator==(const AffineWeight&, const AffineWeight&) = default;
  friend auto operator<=>(const AffineWeight&, const AffineWeight&) = default;
};

AffineWeight operator+(AffineWeight a, const AffineWeight& b);
AffineWeight operator-(AffineWeight a, const AffineWeight& b);
AffineWeight operator-(AffineWeight a);
AffineWeight operator*(Int c, AffineWeight a);

// "(level; f1,f2,...; energy)"
std::string to_string(const AffineWeight& w);

}  // namespace kmq
