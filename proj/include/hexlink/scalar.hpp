#pragma once

#include <cmath>
#include <optional>

#include "hexlink/rational.hpp"

namespace hexlink {

// The two scalar backends. Exact rationals carry every algebraic identity
// literally; doubles serve the numerical motion tracker. Comparisons on the
// float backend use a relative tolerance of 1e-9 unless a caller scales it.
//
// mag() maps a value into an ordered magnitude type so that tolerance logic
// can be shared between real and complex coefficients.
template <class K>
struct scalar_traits;

template <>
struct scalar_traits<Rational> {
  static constexpr bool exact = true;
  using mag_type = Rational;
  static bool is_zero(const Rational& v) { return v == 0; }
  static mag_type mag(const Rational& v) { return v < 0 ? Rational(-v) : v; }
  static bool mag_near_zero(const mag_type& m, const mag_type& /*scale*/) { return m == 0; }
  static bool near_zero(const Rational& v, const mag_type& /*scale*/) { return v == 0; }
  static double to_double(const Rational& v) { return v.convert_to<double>(); }
  static Rational from_int(long long v) { return Rational(v); }
};

template <>
struct scalar_traits<double> {
  static constexpr bool exact = false;
  static constexpr double tolerance = 1e-9;
  using mag_type = double;
  static bool is_zero(double v) { return std::fabs(v) <= tolerance; }
  static mag_type mag(double v) { return std::fabs(v); }
  static bool mag_near_zero(double m, double scale) {
    return m <= tolerance * std::max(1.0, scale);
  }
  static bool near_zero(double v, double scale) { return mag_near_zero(std::fabs(v), scale); }
  static double to_double(double v) { return v; }
  static double from_int(long long v) { return static_cast<double>(v); }
};

// Complex numbers over an arbitrary scalar field. std::complex is only
// specified for floating point, and we need exact Gaussian rationals, so we
// keep our own minimal type. The complex unit is written `im` throughout and
// commutes with the quaternion units.
template <class K>
struct Complex {
  K re{};
  K im{};

  Complex() = default;
  Complex(K r) : re(std::move(r)) {}
  Complex(K r, K i) : re(std::move(r)), im(std::move(i)) {}
  explicit Complex(int v) : re(scalar_traits<K>::from_int(v)) {}

  static Complex unit_im() { return Complex(K{}, scalar_traits<K>::from_int(1)); }

  friend Complex operator+(const Complex& a, const Complex& b) {
    return Complex(a.re + b.re, a.im + b.im);
  }
  friend Complex operator-(const Complex& a, const Complex& b) {
    return Complex(a.re - b.re, a.im - b.im);
  }
  friend Complex operator*(const Complex& a, const Complex& b) {
    return Complex(a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re);
  }
  Complex operator-() const { return Complex(-re, -im); }
  Complex& operator+=(const Complex& o) { return *this = *this + o; }
  Complex& operator-=(const Complex& o) { return *this = *this - o; }
  Complex& operator*=(const Complex& o) { return *this = *this * o; }
  friend bool operator==(const Complex& a, const Complex& b) = default;

  Complex conj() const { return Complex(re, -im); }
  K norm2() const { return re * re + im * im; }

  friend Complex operator/(const Complex& a, const Complex& b) {
    K n = b.norm2();
    if (scalar_traits<K>::exact && scalar_traits<K>::is_zero(n)) {
      throw Error("complex division by zero");
    }
    return Complex((a.re * b.re + a.im * b.im) / n, (a.im * b.re - a.re * b.im) / n);
  }
};

template <class K>
struct scalar_traits<Complex<K>> {
  static constexpr bool exact = scalar_traits<K>::exact;
  using base_traits = scalar_traits<K>;
  using mag_type = typename base_traits::mag_type;
  static bool is_zero(const Complex<K>& v) {
    return base_traits::is_zero(v.re) && base_traits::is_zero(v.im);
  }
  static mag_type mag(const Complex<K>& v) { return base_traits::mag(v.re) + base_traits::mag(v.im); }
  static bool mag_near_zero(const mag_type& m, const mag_type& scale) {
    return base_traits::mag_near_zero(m, scale);
  }
  static bool near_zero(const Complex<K>& v, const mag_type& scale) {
    return mag_near_zero(mag(v), scale);
  }
  static Complex<K> from_int(long long v) { return Complex<K>(base_traits::from_int(v)); }
};

using CRat = Complex<Rational>;
using CDouble = Complex<double>;

template <class K>
bool complex_exactly_zero(const Complex<K>& z) {
  return z.re == K{} && z.im == K{};
}

template <class K>
double complex_abs(const Complex<K>& z) {
  double r = scalar_traits<K>::to_double(z.re), i = scalar_traits<K>::to_double(z.im);
  return std::hypot(r, i);
}

// Square root in Q(i), when it exists. For z = x + iy with y != 0 a root
// a + ib needs |z| rational, a^2 = (x + |z|)/2 a rational square, b = y/(2a).
inline std::optional<CRat> complex_rat_sqrt(const CRat& z) {
  if (z.im == 0) {
    if (z.re >= 0) {
      auto r = rat_sqrt_exact(z.re);
      if (!r) return std::nullopt;
      return CRat(*r, Rational(0));
    }
    auto r = rat_sqrt_exact(-z.re);
    if (!r) return std::nullopt;
    return CRat(Rational(0), *r);
  }
  auto mod = rat_sqrt_exact(z.norm2());
  if (!mod) return std::nullopt;
  Rational a2 = (z.re + *mod) / 2;
  auto a = rat_sqrt_exact(a2);
  if (!a || *a == 0) return std::nullopt;
  Rational b = z.im / (2 * *a);
  return CRat(*a, b);
}

}  // namespace hexlink
