#include "dualrect/rational.hpp"

#include <ostream>

#include "dualrect/errors.hpp"

namespace dualrect {

const char* to_string(Errc code) noexcept {
  switch (code) {
    case Errc::ZeroDenominator: return "zero denominator";
    case Errc::DivisionByZero: return "division by zero";
    case Errc::Parse: return "parse error";
    case Errc::NonPositiveSide: return "non-positive side";
    case Errc::NotDual: return "rectangles are not dual";
    case Errc::Inconsistent: return "inconsistent";
    case Errc::NoPositiveSolution: return "no positive solution";
    case Errc::NegativeInput: return "negative input";
    case Errc::Precondition: return "precondition violated";
    case Errc::OffHyperbola: return "point not on hyperbola branch";
    case Errc::NotSelfDual: return "rectangle is not self-dual";
    case Errc::DegenerateTriangle: return "degenerate triangle";
    case Errc::OffSurface: return "point not on surface";
    case Errc::CoincidentPoints: return "coincident points";
    case Errc::DegenerateLine: return "degenerate line";
  }
  return "unknown error";
}

Rational::Rational(const Integer& num, const Integer& den) {
  if (den == 0) {
    throw DomainError(Errc::ZeroDenominator, "rational with zero denominator");
  }
  q_ = mpq_class(num, den);
  q_.canonicalize();
}

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char ch : s) {
    if (ch < '0' || ch > '9') return false;
  }
  return true;
}

}  // namespace

Rational Rational::parse(std::string_view text) {
  const auto fail = [&] {
    return DomainError(Errc::Parse,
                       "malformed fraction '" + std::string(text) + "'");
  };
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && body.front() == '-') {
    negative = true;
    body.remove_prefix(1);
  }
  const auto slash = body.find('/');
  const std::string_view num_text = body.substr(0, slash);
  const std::string_view den_text =
      slash == std::string_view::npos ? std::string_view("1")
                                      : body.substr(slash + 1);
  if (!all_digits(num_text) || !all_digits(den_text)) throw fail();

  Integer num(std::string(num_text), 10);
  Integer den(std::string(den_text), 10);
  if (den == 0) {
    throw DomainError(Errc::Parse,
                      "zero denominator in '" + std::string(text) + "'");
  }
  if (negative) num = -num;
  return Rational(num, den);
}

std::string Rational::str() const {
  if (is_integer()) return q_.get_num().get_str();
  return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

Rational Rational::abs() const { return Rational(mpq_class(::abs(q_))); }

Rational Rational::reciprocal() const {
  if (is_zero()) {
    throw DomainError(Errc::DivisionByZero, "reciprocal of zero");
  }
  return Rational(q_.get_den(), q_.get_num());
}

Rational Rational::pow(long n) const {
  Rational base = n < 0 ? reciprocal() : *this;
  unsigned long e = n < 0 ? -static_cast<unsigned long>(n)
                          : static_cast<unsigned long>(n);
  Integer num, den;
  mpz_pow_ui(num.get_mpz_t(), base.q_.get_num_mpz_t(), e);
  mpz_pow_ui(den.get_mpz_t(), base.q_.get_den_mpz_t(), e);
  // Powers of a reduced fraction stay reduced.
  mpq_class q;
  q.get_num() = num;
  q.get_den() = den;
  return Rational(std::move(q));
}

Rational operator+(const Rational& x, const Rational& y) {
  return Rational(mpq_class(x.q_ + y.q_));
}

Rational operator-(const Rational& x, const Rational& y) {
  return Rational(mpq_class(x.q_ - y.q_));
}

Rational operator*(const Rational& x, const Rational& y) {
  return Rational(mpq_class(x.q_ * y.q_));
}

Rational operator/(const Rational& x, const Rational& y) {
  if (y.is_zero()) {
    throw DomainError(Errc::DivisionByZero,
                      "division of " + x.str() + " by zero");
  }
  return Rational(mpq_class(x.q_ / y.q_));
}

Rational operator-(const Rational& x) { return Rational(mpq_class(-x.q_)); }

std::ostream& operator<<(std::ostream& os, const Rational& x) {
  return os << x.str();
}

Integer common_denominator(std::initializer_list<Rational> values) {
  Integer l = 1;
  for (const Rational& v : values) {
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), v.raw().get_den_mpz_t());
  }
  return l;
}

}  // namespace dualrect

std::size_t std::hash<dualrect::Rational>::operator()(
    const dualrect::Rational& x) const noexcept {
  const std::size_t h1 = mpz_get_ui(x.raw().get_num_mpz_t());
  const std::size_t h2 = mpz_get_ui(x.raw().get_den_mpz_t());
  return h1 * 1000003u ^ h2 ^ static_cast<std::size_t>(x.sign() + 1);
}
