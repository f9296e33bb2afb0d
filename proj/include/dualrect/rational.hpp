#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstddef>
#include <functional>
#include <initializer_list>
#include <iosfwd>
#include <string>
#include <string_view>

namespace dualrect {

/// Arbitrary-precision signed integer.
using Integer = mpz_class;

/// Exact fraction in lowest terms with a positive denominator.
///
/// Zero is stored as 0/1 and the sign lives on the numerator, so two
/// Rationals are equal exactly when their numerators and denominators are.
/// Instances are immutable once built; all arithmetic returns new values.
class Rational {
 public:
  Rational() = default;
  Rational(long value) : q_(value) {}  // NOLINT(google-explicit-constructor)
  explicit Rational(const Integer& value) : q_(value) {}

  /// Throws DomainError(ZeroDenominator) when `den` is zero.
  Rational(const Integer& num, const Integer& den);
  Rational(long num, long den) : Rational(Integer(num), Integer(den)) {}

  /// Parses `[-]digits[/digits]`; throws DomainError(Parse) otherwise.
  static Rational parse(std::string_view text);

  std::string str() const;

  Integer numerator() const { return q_.get_num(); }
  Integer denominator() const { return q_.get_den(); }

  bool is_integer() const { return q_.get_den() == 1; }
  int sign() const { return sgn(q_); }
  bool is_zero() const { return sign() == 0; }
  bool is_positive() const { return sign() > 0; }

  Rational abs() const;
  /// 1/x; throws DomainError(DivisionByZero) for zero.
  Rational reciprocal() const;
  /// x^n for any integer n; negative powers of zero throw.
  Rational pow(long n) const;

  friend Rational operator+(const Rational& x, const Rational& y);
  friend Rational operator-(const Rational& x, const Rational& y);
  friend Rational operator*(const Rational& x, const Rational& y);
  friend Rational operator/(const Rational& x, const Rational& y);
  friend Rational operator-(const Rational& x);

  Rational& operator+=(const Rational& y) { return *this = *this + y; }
  Rational& operator-=(const Rational& y) { return *this = *this - y; }
  Rational& operator*=(const Rational& y) { return *this = *this * y; }
  Rational& operator/=(const Rational& y) { return *this = *this / y; }

  friend bool operator==(const Rational& x, const Rational& y) {
    return x.q_ == y.q_;
  }
  friend std::strong_ordering operator<=>(const Rational& x,
                                          const Rational& y) {
    const int c = cmp(x.q_, y.q_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater
                          : std::strong_ordering::equal);
  }

  const mpq_class& raw() const { return q_; }

 private:
  explicit Rational(mpq_class q) : q_(std::move(q)) {}

  mpq_class q_;
};

std::ostream& operator<<(std::ostream& os, const Rational& x);

/// Least common multiple of the denominators of `values`' entries.
Integer common_denominator(std::initializer_list<Rational> values);

inline namespace literals {
/// Test/readability helper: "343/88"_q.
inline Rational operator""_q(const char* text, std::size_t len) {
  return Rational::parse(std::string_view(text, len));
}
}  // namespace literals

}  // namespace dualrect

template <>
struct std::hash<dualrect::Rational> {
  std::size_t operator()(const dualrect::Rational& x) const noexcept;
};
