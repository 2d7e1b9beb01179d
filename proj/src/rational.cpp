#include "brokenstick/rational.hpp"

#include <cmath>
#include <numbers>

#include "brokenstick/error.hpp"

namespace brokenstick {

void require_polygon_domain(int k, int n) {
  if (k < 3 || k > n) {
    throw InvalidDomain("require 3 <= k <= n, got k=" + std::to_string(k) +
                        " n=" + std::to_string(n));
  }
}

ExactRational::ExactRational(const BigInt &num, const BigInt &den) {
  if (den == 0) {
    throw InvalidDomain("zero denominator");
  }
  value_ = mpq_class(num, den);
  value_.canonicalize();
}

namespace {

BigInt parse_integer(std::string_view text) {
  std::string_view digits = text;
  if (!digits.empty() && (digits.front() == '-' || digits.front() == '+')) {
    digits.remove_prefix(1);
  }
  if (digits.empty()) {
    throw InvalidDomain("empty integer string");
  }
  for (char c : digits) {
    if (c < '0' || c > '9') {
      throw InvalidDomain("malformed integer string: " + std::string(text));
    }
  }
  std::string s(text.front() == '+' ? text.substr(1) : text);
  return BigInt(s, 10);
}

BigInt pow10(unsigned e) {
  BigInt r;
  mpz_ui_pow_ui(r.get_mpz_t(), 10, e);
  return r;
}

// floor(num * 10^shift / den), shift may be negative.
BigInt scaled_floor(const BigInt &num, const BigInt &den, long shift) {
  BigInt top = num;
  BigInt bottom = den;
  if (shift >= 0) {
    top *= pow10(static_cast<unsigned>(shift));
  } else {
    bottom *= pow10(static_cast<unsigned>(-shift));
  }
  BigInt q;
  mpz_fdiv_q(q.get_mpz_t(), top.get_mpz_t(), bottom.get_mpz_t());
  return q;
}

} // namespace

ExactRational ExactRational::from_strings(std::string_view num, std::string_view den) {
  return ExactRational(parse_integer(num), parse_integer(den));
}

std::string ExactRational::to_string() const {
  if (value_.get_den() == 1) {
    return value_.get_num().get_str();
  }
  return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

ExactRational &ExactRational::operator/=(const ExactRational &o) {
  if (o.sign() == 0) {
    throw InvalidDomain("division by zero");
  }
  value_ /= o.value_;
  return *this;
}

double ExactRational::to_double() const {
  // mpq_get_d truncates; divide with two spare bits and round by hand.
  if (sign() == 0) {
    return 0.0;
  }
  BigInt a = abs(value_.get_num());
  BigInt b = value_.get_den();
  long shift = 53 - (static_cast<long>(mpz_sizeinbase(a.get_mpz_t(), 2)) -
                     static_cast<long>(mpz_sizeinbase(b.get_mpz_t(), 2)));
  if (shift >= 0) {
    a <<= static_cast<mp_bitcnt_t>(shift);
  } else {
    b <<= static_cast<mp_bitcnt_t>(-shift);
  }
  if (a < (b << 53)) {
    a <<= 1;
    ++shift;
  }
  BigInt q;
  BigInt r;
  mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  // q has exactly 54 bits: 53 kept plus one guard bit
  const bool guard = mpz_tstbit(q.get_mpz_t(), 0) != 0;
  q >>= 1;
  if (guard && (r != 0 || mpz_tstbit(q.get_mpz_t(), 0) != 0)) {
    ++q;
  }
  const double magnitude = std::ldexp(q.get_d(), static_cast<int>(1 - shift));
  return sign() < 0 ? -magnitude : magnitude;
}

double log_big(const BigInt &x) {
  if (x <= 0) {
    throw InvalidDomain("log of non-positive integer");
  }
  long exp2 = 0;
  const double mantissa = mpz_get_d_2exp(&exp2, x.get_mpz_t());
  return std::log(mantissa) + static_cast<double>(exp2) * std::numbers::ln2;
}

double ExactRational::log() const {
  if (sign() <= 0) {
    throw InvalidDomain("log of non-positive rational");
  }
  return log_big(value_.get_num()) - log_big(value_.get_den());
}

std::string ExactRational::to_decimal(int significant) const {
  if (significant < 1) {
    throw InvalidDomain("significant digits must be positive");
  }
  if (sign() == 0) {
    return "0";
  }
  const BigInt num = abs(value_.get_num());
  const BigInt den = value_.get_den();
  const long digits = significant;
  const BigInt lower = pow10(static_cast<unsigned>(digits - 1));
  const BigInt upper = pow10(static_cast<unsigned>(digits));

  // Decimal exponent x with 10^x <= value < 10^(x+1).
  long x = static_cast<long>(mpz_sizeinbase(num.get_mpz_t(), 10)) -
           static_cast<long>(mpz_sizeinbase(den.get_mpz_t(), 10));
  BigInt t = scaled_floor(num, den, digits - 1 - x);
  while (t >= upper) {
    ++x;
    t = scaled_floor(num, den, digits - 1 - x);
  }
  while (t < lower) {
    --x;
    t = scaled_floor(num, den, digits - 1 - x);
  }

  // Round half away from zero: floor(2 * v * 10^s) decides the half.
  const BigInt twice = scaled_floor(2 * num, den, digits - 1 - x);
  BigInt q = t;
  if (twice - 2 * t >= 1) {
    ++q;
  }
  if (q == upper) {
    q = lower;
    ++x;
  }

  std::string mantissa = q.get_str();
  std::string out = sign() < 0 ? "-" : "";
  if (x < -4 || x >= digits) {
    std::string frac = mantissa.substr(1);
    while (!frac.empty() && frac.back() == '0') {
      frac.pop_back();
    }
    out += mantissa.substr(0, 1);
    if (!frac.empty()) {
      out += "." + frac;
    }
    out += x < 0 ? "e-" : "e+";
    std::string e = std::to_string(x < 0 ? -x : x);
    if (e.size() < 2) {
      e.insert(0, "0");
    }
    return out + e;
  }

  std::string int_part;
  std::string frac_part;
  if (x >= 0) {
    int_part = mantissa.substr(0, static_cast<size_t>(x) + 1);
    frac_part = mantissa.substr(static_cast<size_t>(x) + 1);
  } else {
    int_part = "0";
    frac_part = std::string(static_cast<size_t>(-x - 1), '0') + mantissa;
  }
  while (!frac_part.empty() && frac_part.back() == '0') {
    frac_part.pop_back();
  }
  out += int_part;
  if (!frac_part.empty()) {
    out += "." + frac_part;
  }
  return out;
}

BigInt factorial(unsigned n) {
  BigInt r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

BigInt binomial(unsigned n, unsigned k) {
  BigInt r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

BigInt pow2(unsigned e) {
  BigInt r;
  mpz_ui_pow_ui(r.get_mpz_t(), 2, e);
  return r;
}

} // namespace brokenstick
