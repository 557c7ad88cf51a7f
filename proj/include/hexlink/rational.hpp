#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>

namespace hexlink {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Signals an arithmetic identity that must hold by construction (e.g. the
// vector part of h*conj(h) canceling). Hitting it means a bug, not bad input.
struct InternalError : std::logic_error {
  using std::logic_error::logic_error;
};

inline BigInt rat_num(const Rational& r) { return boost::multiprecision::numerator(r); }
inline BigInt rat_den(const Rational& r) { return boost::multiprecision::denominator(r); }

inline std::optional<BigInt> int_sqrt_exact(const BigInt& n) {
  if (n < 0) return std::nullopt;
  BigInt r = boost::multiprecision::sqrt(n);
  if (r * r == n) return r;
  return std::nullopt;
}

// Exact square root of a nonnegative rational, when one exists.
inline std::optional<Rational> rat_sqrt_exact(const Rational& r) {
  if (r < 0) return std::nullopt;
  auto n = int_sqrt_exact(rat_num(r));
  if (!n) return std::nullopt;
  auto d = int_sqrt_exact(rat_den(r));
  if (!d) return std::nullopt;
  return Rational(*n, *d);
}

// Doubles are dyadic rationals, so this conversion is exact.
inline Rational rational_from_double(double x) {
  if (!std::isfinite(x)) throw Error("cannot convert non-finite double to rational");
  if (x == 0.0) return Rational(0);
  int exp = 0;
  double m = std::frexp(x, &exp);  // x = m * 2^exp, 0.5 <= |m| < 1
  // 53 bits of mantissa
  long long mant = static_cast<long long>(std::ldexp(m, 53));
  exp -= 53;
  Rational r(mant);
  if (exp >= 0) {
    r *= Rational(BigInt(1) << exp);
  } else {
    r /= Rational(BigInt(1) << -exp);
  }
  return r;
}

// Accepts "p/q", integers, and decimal notation with optional exponent
// ("-3", "0.125", "1.5e-3"). Decimal strings convert exactly.
inline Rational parse_rational(const std::string& text) {
  std::string s = text;
  auto fail = [&]() -> Rational { throw Error("cannot parse rational literal '" + text + "'"); };
  if (s.empty()) return fail();
  auto slash = s.find('/');
  if (slash != std::string::npos) {
    std::string num = s.substr(0, slash), den = s.substr(slash + 1);
    if (num.empty() || den.empty()) return fail();
    try {
      BigInt n(num), d(den);
      if (d == 0) throw Error("zero denominator in '" + text + "'");
      return Rational(n, d);
    } catch (const std::exception&) {
      return fail();
    }
  }
  bool neg = false;
  std::size_t pos = 0;
  if (s[pos] == '+' || s[pos] == '-') {
    neg = s[pos] == '-';
    ++pos;
  }
  std::string digits;
  long long frac_digits = 0, exponent = 0;
  bool seen_digit = false;
  while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
    digits += s[pos++];
    seen_digit = true;
  }
  if (pos < s.size() && s[pos] == '.') {
    ++pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
      digits += s[pos++];
      ++frac_digits;
      seen_digit = true;
    }
  }
  if (!seen_digit) return fail();
  if (pos < s.size() && (s[pos] == 'e' || s[pos] == 'E')) {
    ++pos;
    bool eneg = false;
    if (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) {
      eneg = s[pos] == '-';
      ++pos;
    }
    if (pos >= s.size()) return fail();
    long long e = 0;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
      e = e * 10 + (s[pos++] - '0');
      if (e > 100000) return fail();
    }
    exponent = eneg ? -e : e;
  }
  if (pos != s.size()) return fail();
  BigInt mant(digits.empty() ? "0" : digits);
  if (neg) mant = -mant;
  long long net = exponent - frac_digits;
  Rational r(mant);
  BigInt p10 = 1;
  for (long long i = 0; i < std::llabs(net); ++i) p10 *= 10;
  if (net >= 0) {
    r *= Rational(p10);
  } else {
    r /= Rational(p10);
  }
  return r;
}

inline std::string format_rational(const Rational& r) {
  std::ostringstream os;
  os << rat_num(r);
  if (rat_den(r) != 1) os << '/' << rat_den(r);
  return os.str();
}

}  // namespace hexlink
