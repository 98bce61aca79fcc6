#include "bng/rational.hpp"

#include <limits>

#include "bng/error.hpp"

namespace bng {

Integer to_integer(std::int64_t v) {
  static_assert(sizeof(long) == sizeof(std::int64_t), "LP64 expected");
  return Integer(static_cast<long>(v));
}

std::optional<std::int64_t> to_int64(const Integer& v) {
  if (!v.fits_slong_p()) return std::nullopt;
  return static_cast<std::int64_t>(v.get_si());
}

Rational::Rational(std::int64_t v) : value_(to_integer(v)) {}

Rational::Rational(const Integer& v) : value_(v) {}

Rational::Rational(const Integer& num, const Integer& den) {
  if (den == 0) throw Error(ErrorCode::InvalidArgument, "rational with zero denominator");
  value_ = mpq_class(num, den);
  value_.canonicalize();
}

Rational Rational::of(std::int64_t num, std::int64_t den) {
  return Rational(to_integer(num), to_integer(den));
}

Rational Rational::parse(const std::string& text) {
  const auto slash = text.find('/');
  Integer num;
  Integer den = 1;
  try {
    if (slash == std::string::npos) {
      num = Integer(text, 10);
    } else {
      num = Integer(text.substr(0, slash), 10);
      den = Integer(text.substr(slash + 1), 10);
    }
  } catch (const std::invalid_argument&) {
    throw Error(ErrorCode::Parse, "not a rational number: '" + text + "'");
  }
  return Rational(num, den);
}

Rational Rational::floor() const {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), value_.get_num_mpz_t(), value_.get_den_mpz_t());
  return Rational(q);
}

std::string Rational::str() const {
  if (is_integer()) return value_.get_num().get_str();
  return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

std::string Rational::to_fixed(int places) const {
  Integer scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(places));
  // |v| * 10^places, rounded half up on the magnitude.
  Integer mag = abs(value_.get_num()) * scale * 2 + value_.get_den();
  Integer twice_den = value_.get_den() * 2;
  Integer scaled;
  mpz_fdiv_q(scaled.get_mpz_t(), mag.get_mpz_t(), twice_den.get_mpz_t());

  std::string digits = scaled.get_str();
  if (places > 0) {
    if (digits.size() <= static_cast<std::size_t>(places)) {
      digits.insert(0, static_cast<std::size_t>(places) + 1 - digits.size(), '0');
    }
    digits.insert(digits.size() - static_cast<std::size_t>(places), ".");
  }
  if (sign() < 0 && scaled != 0) digits.insert(0, "-");
  return digits;
}

Rational& Rational::operator+=(const Rational& o) {
  value_ += o.value_;
  return *this;
}

Rational& Rational::operator-=(const Rational& o) {
  value_ -= o.value_;
  return *this;
}

Rational& Rational::operator*=(const Rational& o) {
  value_ *= o.value_;
  return *this;
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw Error(ErrorCode::InvalidArgument, "division by zero");
  value_ /= o.value_;
  return *this;
}

Rational Rational::operator-() const { return Rational(mpq_class(-value_)); }

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::SlopeOutOfRange: return "SlopeOutOfRange";
    case ErrorCode::InvalidQuotientRank: return "InvalidQuotientRank";
    case ErrorCode::ThresholdViolated: return "ThresholdViolated";
    case ErrorCode::OutOfStrip: return "OutOfStrip";
    case ErrorCode::RankOne: return "RankOne";
    case ErrorCode::EmptyLocus: return "EmptyLocus";
    case ErrorCode::InvalidK: return "InvalidK";
    case ErrorCode::InvalidTuple: return "InvalidTuple";
    case ErrorCode::Parse: return "Parse";
    case ErrorCode::Io: return "Io";
  }
  return "Unknown";
}

}  // namespace bng
