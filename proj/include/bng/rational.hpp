#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>

#include <gmpxx.h>

namespace bng {

/// Arbitrary-precision integer.
using Integer = mpz_class;

Integer to_integer(std::int64_t v);

/// Returns the value when it fits in a signed 64-bit integer.
std::optional<std::int64_t> to_int64(const Integer& v);

/// Exact rational number, always held in lowest terms with a positive
/// denominator.
class Rational {
 public:
  Rational() = default;
  Rational(std::int64_t v);  // NOLINT(google-explicit-constructor)
  Rational(const Integer& v);  // NOLINT(google-explicit-constructor)

  /// Throws Error(InvalidArgument) when den is zero.
  Rational(const Integer& num, const Integer& den);
  static Rational of(std::int64_t num, std::int64_t den);

  /// Parses "p", "-p" or "p/q".
  static Rational parse(const std::string& text);

  Integer num() const { return value_.get_num(); }
  Integer den() const { return value_.get_den(); }

  int sign() const { return sgn(value_); }
  bool is_zero() const { return sign() == 0; }
  bool is_integer() const { return value_.get_den() == 1; }

  Rational floor() const;

  /// "p" for integers, "p/q" otherwise.
  std::string str() const;

  /// Decimal rendering rounded half away from zero to `places` digits.
  std::string to_fixed(int places) const;

  Rational& operator+=(const Rational& o);
  Rational& operator-=(const Rational& o);
  Rational& operator*=(const Rational& o);
  /// Throws Error(InvalidArgument) on division by zero.
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  Rational operator-() const;

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.value_ == b.value_;
  }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

 private:
  explicit Rational(mpq_class v) : value_(std::move(v)) {}
  mpq_class value_{0};
};

}  // namespace bng
