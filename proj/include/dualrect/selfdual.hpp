#pragma once

#include <iosfwd>
#include <string>

#include "dualrect/rational.hpp"
#include "dualrect/rectangle.hpp"

namespace dualrect {

struct PlanePoint {
  Rational x;
  Rational y;

  std::string str() const;
  friend bool operator==(const PlanePoint&, const PlanePoint&) = default;
};

/// Point on the branch x > 2 of the hyperbola (x - 2)(y - 2) = 4, i.e. a
/// self-dual rectangle with sides x and y. These points form an abelian
/// group under `add` with identity (4, 4).
class HyperbolaPoint {
 public:
  /// (x, 2x/(x - 2)); throws DomainError(OffHyperbola) unless x > 2.
  static HyperbolaPoint from_x(const Rational& x);
  /// Validates (x - 2)(y - 2) == 4 and x > 2.
  static HyperbolaPoint from_xy(const Rational& x, const Rational& y);
  static HyperbolaPoint identity();

  const Rational& x() const { return x_; }
  const Rational& y() const { return y_; }
  PlanePoint plane() const { return {x_, y_}; }

  /// u = (x - 2)/2. u is a group isomorphism onto the positive rationals
  /// under multiplication: u(P + Q) = u(P) u(Q).
  Rational u() const { return (x_ - 2) / 2; }

  std::string str() const;
  friend bool operator==(const HyperbolaPoint&,
                         const HyperbolaPoint&) = default;

 private:
  HyperbolaPoint(Rational x, Rational y)
      : x_(std::move(x)), y_(std::move(y)) {}

  Rational x_;
  Rational y_;
};

inline HyperbolaPoint hyperbola_point(const Rational& x) {
  return HyperbolaPoint::from_x(x);
}

/// Orthocentre of the triangle O P Q in closed form:
/// (2 + 8/((p-2)(q-2)), 2 + (p-2)(q-2)/2). Also defined for P == Q.
PlanePoint orthocentre_formula(const HyperbolaPoint& p,
                               const HyperbolaPoint& q);

/// Intersection of two altitudes of triangle ABC, solved exactly.
/// Throws DomainError(DegenerateTriangle) when A, B, C are collinear.
PlanePoint orthocentre_geometric(const PlanePoint& a, const PlanePoint& b,
                                 const PlanePoint& c);

/// Reflection of the orthocentre of O P Q in y = x.
HyperbolaPoint add(const HyperbolaPoint& p, const HyperbolaPoint& q);

inline HyperbolaPoint double_point(const HyperbolaPoint& p) {
  return add(p, p);
}

/// (y, x).
HyperbolaPoint inverse(const HyperbolaPoint& p);

/// n-fold sum of p; negative n sums the inverse.
HyperbolaPoint multiply(long n, const HyperbolaPoint& p);

/// P and inverse(P) give the same rectangle.
Rectangle to_rectangle(const HyperbolaPoint& p);
/// (long, short); throws DomainError(NotSelfDual) otherwise.
HyperbolaPoint from_rectangle(const Rectangle& r);

std::ostream& operator<<(std::ostream& os, const PlanePoint& p);
std::ostream& operator<<(std::ostream& os, const HyperbolaPoint& p);

}  // namespace dualrect
