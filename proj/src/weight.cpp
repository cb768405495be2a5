#include "kmq/weight.hpp"

#include <cassert>
#include <sstream>

namespace kmq {

AffineWeight& AffineWeight::operator+=(const AffineWeight& o) {
  assert(finite.size() == o.finite.size());
  level += o.level;
  for (std::size_t i = 0; i < finite.size(); ++i) finite[i] += o.finite[i];
  energy += o.energy;
  return *this;
}

AffineWeight& AffineWeight::operator-=(const AffineWeight& o) {
  assert(finite.size() == o.finite.size());
  level -= o.level;
  for (std::size_t i = 0; i < finite.size(); ++i) finite[i] -= o.finite[i];
  energy -= o.energy;
  return *this;
}

AffineWeight& AffineWeight::operator*=(Int c) {
  level *= c;
  for (auto& x : finite) x *= c;
  energy *= c;
  return *this;
}

AffineWeight operator+(AffineWeight a, const AffineWeight& b) { return a += b; }
AffineWeight operator-(AffineWeight a, const AffineWeight& b) { return a -= b; }
AffineWeight operator-(AffineWeight a) { return a *= -1; }
AffineWeight operator*(Int c, AffineWeight a) { return a *= c; }

std::string to_string(const AffineWeight& w) {
  std::ostringstream os;
  os << '(' << w.level << ';';
  for (std::size_t i = 0; i < w.finite.size(); ++i) os << (i ? "," : " ") << w.finite[i];
  os << "; " << w.energy << ')';
  return os.str();
}

}  // namespace kmq
