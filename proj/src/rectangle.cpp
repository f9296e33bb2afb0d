#include "dualrect/rectangle.hpp"

#include <ostream>
#include <utility>

#include "dualrect/errors.hpp"

namespace dualrect {

Rectangle::Rectangle(const Rational& s1, const Rational& s2) {
  if (!s1.is_positive() || !s2.is_positive()) {
    throw DomainError(Errc::NonPositiveSide,
                      "rectangle sides must be positive, got " + s1.str() +
                          " and " + s2.str());
  }
  if (s1 >= s2) {
    long_ = s1;
    short_ = s2;
  } else {
    long_ = s2;
    short_ = s1;
  }
}

int Rectangle::integral_sides() const {
  return static_cast<int>(long_.is_integer()) +
         static_cast<int>(short_.is_integer());
}

std::string Rectangle::str() const {
  return "(" + long_.str() + "," + short_.str() + ")";
}

bool is_dual(const Rectangle& r1, const Rectangle& r2) {
  return r1.area() == r2.perimeter() && r2.area() == r1.perimeter();
}

bool is_self_dual(const Rectangle& r) { return r.area() == r.perimeter(); }

namespace {

std::pair<Rectangle, Rectangle> ordered(const Rectangle& r1,
                                        const Rectangle& r2) {
  if (r2 < r1) return {r2, r1};
  return {r1, r2};
}

}  // namespace

DualPair::DualPair(const Rectangle& r1, const Rectangle& r2)
    : first_(ordered(r1, r2).first), second_(ordered(r1, r2).second) {
  if (!is_dual(r1, r2)) {
    throw DomainError(Errc::NotDual,
                      r1.str() + " and " + r2.str() + " are not dual");
  }
}

std::string DualPair::str() const { return first_.str() + second_.str(); }

DualPair solve_partner(const Rational& b, const Rational& d) {
  if (!b.is_positive() || !d.is_positive()) {
    throw DomainError(Errc::NonPositiveSide,
                      "b and d must be positive, got b=" + b.str() +
                          " d=" + d.str());
  }
  const Rational det = b * d - 4;
  if (det.is_zero()) {
    throw DomainError(Errc::Inconsistent,
                      "inconsistent: bd=4 (b=" + b.str() + ", d=" + d.str() +
                          ")");
  }
  const Rational a = (2 * d * d + 4 * b) / det;
  const Rational c = (4 * d + 2 * b * b) / det;
  if (!a.is_positive() || !c.is_positive()) {
    throw DomainError(Errc::NoPositiveSolution,
                      "no positive solution: bd<4 gives a=" + a.str() +
                          ", c=" + c.str());
  }
  return DualPair(Rectangle(a, b), Rectangle(c, d));
}

std::ostream& operator<<(std::ostream& os, const Rectangle& r) {
  return os << r.str();
}

std::ostream& operator<<(std::ostream& os, const DualPair& p) {
  return os << p.str();
}

}  // namespace dualrect
