#pragma once

#include <compare>
#include <iosfwd>
#include <string>

#include "dualrect/rational.hpp"

namespace dualrect {

/// A rectangle "lying down": long() >= short_side() > 0.
class Rectangle {
 public:
  /// Sorts the sides; throws DomainError(NonPositiveSide) if either is <= 0.
  Rectangle(const Rational& s1, const Rational& s2);

  const Rational& long_side() const { return long_; }
  const Rational& short_side() const { return short_; }

  Rational area() const { return long_ * short_; }
  Rational perimeter() const { return 2 * (long_ + short_); }

  /// Number of sides (0..2) that are integers.
  int integral_sides() const;

  std::string str() const;

  friend bool operator==(const Rectangle&, const Rectangle&) = default;
  friend std::strong_ordering operator<=>(const Rectangle& x,
                                          const Rectangle& y) {
    if (auto c = x.long_ <=> y.long_; c != 0) return c;
    return x.short_ <=> y.short_;
  }

 private:
  Rational long_;
  Rational short_;
};

inline Rectangle make_rectangle(const Rational& s1, const Rational& s2) {
  return Rectangle(s1, s2);
}

struct Measures {
  Rational area;
  Rational perimeter;
};

inline Measures measures(const Rectangle& r) {
  return {r.area(), r.perimeter()};
}

/// Each rectangle's area equals the other's perimeter.
bool is_dual(const Rectangle& r1, const Rectangle& r2);

/// area == perimeter; equivalently (long-2)(short-2) == 4.
bool is_self_dual(const Rectangle& r);

/// Two dual rectangles with first <= second in (long, short) order.
class DualPair {
 public:
  /// Throws DomainError(NotDual) unless is_dual(r1, r2).
  DualPair(const Rectangle& r1, const Rectangle& r2);

  const Rectangle& first() const { return first_; }
  const Rectangle& second() const { return second_; }

  bool is_self_dual() const { return first_ == second_; }
  int integral_sides() const {
    return first_.integral_sides() + second_.integral_sides();
  }

  /// "(6,4)(10,2)"
  std::string str() const;

  friend bool operator==(const DualPair&, const DualPair&) = default;
  friend std::strong_ordering operator<=>(const DualPair& x,
                                          const DualPair& y) {
    if (auto c = x.first_ <=> y.first_; c != 0) return c;
    return x.second_ <=> y.second_;
  }

 private:
  Rectangle first_;
  Rectangle second_;
};

inline DualPair canonicalize_pair(const Rectangle& r1, const Rectangle& r2) {
  return DualPair(r1, r2);
}

/// Solves ab = 2c + 2d, cd = 2a + 2b for a and c given the short sides b, d:
///
///   a = (2d^2 + 4b) / (bd - 4),   c = (4d + 2b^2) / (bd - 4).
///
/// Requires b, d > 0. bd = 4 leaves the system without a solution
/// (DomainError Inconsistent); bd < 4 solves algebraically but gives
/// non-positive sides (DomainError NoPositiveSolution).
DualPair solve_partner(const Rational& b, const Rational& d);

std::ostream& operator<<(std::ostream& os, const Rectangle& r);
std::ostream& operator<<(std::ostream& os, const DualPair& p);

}  // namespace dualrect
