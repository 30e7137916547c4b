#pragma once

#include <compare>
#include <concepts>
#include <ostream>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace critcross {

using BigInt = boost::multiprecision::cpp_int;

/// Floor division with a nonnegative remainder: a == q*d + r, 0 <= r < d.
struct FloorDivision {
  BigInt quotient;
  BigInt remainder;
};
FloorDivision floor_divide(const BigInt& a, const BigInt& d);

BigInt parse_bigint(std::string_view text);
std::string to_string(const BigInt& value);

/// Exact fraction, always in lowest terms with a positive denominator.
class Rational {
 public:
  Rational() : num_(0), den_(1) {}
  Rational(BigInt value) : num_(std::move(value)), den_(1) {}  // NOLINT: implicit by intent
  template <std::integral T>
  Rational(T value) : num_(value), den_(1) {}  // NOLINT
  Rational(BigInt numerator, BigInt denominator);

  /// Accepts "p", "p/q", or a decimal such as "-3.125" (converted exactly).
  static Rational parse(std::string_view text);

  const BigInt& num() const { return num_; }
  const BigInt& den() const { return den_; }

  bool is_integer() const { return den_ == 1; }
  BigInt floor() const;
  BigInt ceil() const;

  Rational& operator+=(const Rational& rhs);
  Rational& operator-=(const Rational& rhs);
  Rational& operator*=(const Rational& rhs);
  Rational& operator/=(const Rational& rhs);

  friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
  friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
  friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
  friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }
  Rational operator-() const { return Rational(BigInt(-num_), den_); }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

  /// "p" for integers, "p/q" otherwise.
  std::string str() const;
  /// Decimal rendering rounded half away from zero to `digits` fractional digits.
  std::string to_decimal(int digits) const;

 private:
  void normalize();

  BigInt num_;
  BigInt den_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

}  // namespace critcross
