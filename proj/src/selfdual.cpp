#include "dualrect/selfdual.hpp"

#include <ostream>

#include "dualrect/errors.hpp"

namespace dualrect {

std::string PlanePoint::str() const {
  return "(" + x.str() + "," + y.str() + ")";
}

HyperbolaPoint HyperbolaPoint::from_x(const Rational& x) {
  if (x <= 2) {
    throw DomainError(Errc::OffHyperbola,
                      "hyperbola point needs x > 2, got " + x.str());
  }
  return HyperbolaPoint(x, 2 * x / (x - 2));
}

HyperbolaPoint HyperbolaPoint::from_xy(const Rational& x, const Rational& y) {
  if (x <= 2 || (x - 2) * (y - 2) != 4) {
    throw DomainError(Errc::OffHyperbola, "(" + x.str() + "," + y.str() +
                                              ") is not on (x-2)(y-2)=4, x>2");
  }
  return HyperbolaPoint(x, y);
}

HyperbolaPoint HyperbolaPoint::identity() { return HyperbolaPoint(4, 4); }

std::string HyperbolaPoint::str() const {
  return "(" + x_.str() + "," + y_.str() + ")";
}

PlanePoint orthocentre_formula(const HyperbolaPoint& p,
                               const HyperbolaPoint& q) {
  const Rational m = (p.x() - 2) * (q.x() - 2);
  return {2 + 8 / m, 2 + m / 2};
}

PlanePoint orthocentre_geometric(const PlanePoint& a, const PlanePoint& b,
                                 const PlanePoint& c) {
  // Altitude through A is perpendicular to BC: (X - A).(C - B) = 0.
  // Altitude through B is perpendicular to CA: (X - B).(C - A) = 0.
  const Rational u1 = c.x - b.x, v1 = c.y - b.y;
  const Rational u2 = c.x - a.x, v2 = c.y - a.y;
  const Rational r1 = a.x * u1 + a.y * v1;
  const Rational r2 = b.x * u2 + b.y * v2;
  const Rational det = u1 * v2 - v1 * u2;
  if (det.is_zero()) {
    throw DomainError(Errc::DegenerateTriangle,
                      "collinear vertices " + a.str() + " " + b.str() + " " +
                          c.str());
  }
  return {(r1 * v2 - v1 * r2) / det, (u1 * r2 - r1 * u2) / det};
}

HyperbolaPoint add(const HyperbolaPoint& p, const HyperbolaPoint& q) {
  const PlanePoint h = orthocentre_formula(p, q);
  return HyperbolaPoint::from_xy(h.y, h.x);
}

HyperbolaPoint inverse(const HyperbolaPoint& p) {
  return HyperbolaPoint::from_xy(p.y(), p.x());
}

HyperbolaPoint multiply(long n, const HyperbolaPoint& p) {
  // Binary exponentiation in the multiplicative image u = (x - 2)/2.
  return HyperbolaPoint::from_x(2 + 2 * p.u().pow(n));
}

Rectangle to_rectangle(const HyperbolaPoint& p) {
  return Rectangle(p.x(), p.y());
}

HyperbolaPoint from_rectangle(const Rectangle& r) {
  if (!is_self_dual(r)) {
    throw DomainError(Errc::NotSelfDual, r.str() + " is not self-dual");
  }
  return HyperbolaPoint::from_xy(r.long_side(), r.short_side());
}

std::ostream& operator<<(std::ostream& os, const PlanePoint& p) {
  return os << p.str();
}

std::ostream& operator<<(std::ostream& os, const HyperbolaPoint& p) {
  return os << p.str();
}

}  // namespace dualrect
