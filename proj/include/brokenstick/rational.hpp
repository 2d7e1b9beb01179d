#pragma once

#include <compare>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace brokenstick {

using BigInt = mpz_class;

/**
 * Arbitrary-precision fraction, always stored in lowest terms with a
 * positive denominator.
 *
 * Thin value wrapper over GMP's mpq_class. Every arithmetic operation
 * returns a canonical result.
 */
class ExactRational {
public:
  ExactRational() = default;
  ExactRational(long value) : value_(value) {}
  explicit ExactRational(const BigInt &value) : value_(value) {}

  /// Throws InvalidDomain if den == 0.
  ExactRational(const BigInt &num, const BigInt &den);

  /// Parses decimal integer strings; throws InvalidDomain on malformed input.
  static ExactRational from_strings(std::string_view num, std::string_view den);

  BigInt numerator() const { return value_.get_num(); }
  BigInt denominator() const { return value_.get_den(); }

  std::string numerator_string() const { return value_.get_num().get_str(); }
  std::string denominator_string() const { return value_.get_den().get_str(); }

  /// "num/den", or just "num" when the denominator is 1.
  std::string to_string() const;

  /// Nearest double, ties to even (may underflow to 0 or overflow to inf).
  double to_double() const;

  /// Natural log of a positive value, finite even when to_double() underflows.
  double log() const;

  /// Rounded to `significant` digits (half away from zero) and formatted
  /// the way printf's %.<significant>g formats a double.
  std::string to_decimal(int significant = 15) const;

  int sign() const { return sgn(value_); }
  bool in_unit_interval() const { return sign() >= 0 && value_ <= 1; }

  const mpq_class &raw() const { return value_; }

  ExactRational &operator+=(const ExactRational &o) { value_ += o.value_; return *this; }
  ExactRational &operator-=(const ExactRational &o) { value_ -= o.value_; return *this; }
  ExactRational &operator*=(const ExactRational &o) { value_ *= o.value_; return *this; }
  /// Throws InvalidDomain on division by zero.
  ExactRational &operator/=(const ExactRational &o);

  friend ExactRational operator+(ExactRational a, const ExactRational &b) { return a += b; }
  friend ExactRational operator-(ExactRational a, const ExactRational &b) { return a -= b; }
  friend ExactRational operator*(ExactRational a, const ExactRational &b) { return a *= b; }
  friend ExactRational operator/(ExactRational a, const ExactRational &b) { return a /= b; }
  friend ExactRational operator-(const ExactRational &a) {
    ExactRational r;
    r.value_ = -a.value_;
    return r;
  }

  friend bool operator==(const ExactRational &a, const ExactRational &b) {
    return a.value_ == b.value_;
  }
  friend std::strong_ordering operator<=>(const ExactRational &a, const ExactRational &b) {
    const int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

private:
  mpq_class value_{0};
};

/// log(x) for x > 0, valid far outside the double exponent range.
double log_big(const BigInt &x);

BigInt factorial(unsigned n);
BigInt binomial(unsigned n, unsigned k);
BigInt pow2(unsigned e);

} // namespace brokenstick
