#pragma once

#include <array>
#include <cmath>
#include <type_traits>
#include <utility>

#include "hexlink/scalar.hpp"

namespace hexlink {

template <class K>
K ring_one() {
  return K(1);
}

template <class K>
struct Vec3 {
  K x{}, y{}, z{};

  friend Vec3 operator+(const Vec3& a, const Vec3& b) { return {a.x + b.x, a.y + b.y, a.z + b.z}; }
  friend Vec3 operator-(const Vec3& a, const Vec3& b) { return {a.x - b.x, a.y - b.y, a.z - b.z}; }
  Vec3 operator-() const { return {-x, -y, -z}; }
  friend Vec3 operator*(const K& s, const Vec3& v) { return {s * v.x, s * v.y, s * v.z}; }
  friend bool operator==(const Vec3&, const Vec3&) = default;

  K dot(const Vec3& o) const { return x * o.x + y * o.y + z * o.z; }
  Vec3 cross(const Vec3& o) const {
    return {y * o.z - z * o.y, z * o.x - x * o.z, x * o.y - y * o.x};
  }
  K norm2() const { return dot(*this); }
  bool is_zero() const { return x == K{} && y == K{} && z == K{}; }
};

// Quaternion w + x*i + y*j + z*k over a commutative coefficient ring.
template <class K>
struct Quat {
  K w{}, x{}, y{}, z{};

  Quat() = default;
  Quat(K w_, K x_, K y_, K z_) : w(std::move(w_)), x(std::move(x_)), y(std::move(y_)), z(std::move(z_)) {}
  static Quat scalar(K s) { return Quat(std::move(s), K{}, K{}, K{}); }
  static Quat vector(const Vec3<K>& v) { return Quat(K{}, v.x, v.y, v.z); }

  Vec3<K> vec() const { return {x, y, z}; }

  friend Quat operator+(const Quat& a, const Quat& b) {
    return Quat(a.w + b.w, a.x + b.x, a.y + b.y, a.z + b.z);
  }
  friend Quat operator-(const Quat& a, const Quat& b) {
    return Quat(a.w - b.w, a.x - b.x, a.y - b.y, a.z - b.z);
  }
  Quat operator-() const { return Quat(-w, -x, -y, -z); }
  friend Quat operator*(const K& s, const Quat& q) { return Quat(s * q.w, s * q.x, s * q.y, s * q.z); }
  friend bool operator==(const Quat&, const Quat&) = default;

  friend Quat operator*(const Quat& a, const Quat& b) {
    return Quat(a.w * b.w - a.x * b.x - a.y * b.y - a.z * b.z,
                a.w * b.x + a.x * b.w + a.y * b.z - a.z * b.y,
                a.w * b.y - a.x * b.z + a.y * b.w + a.z * b.x,
                a.w * b.z + a.x * b.y - a.y * b.x + a.z * b.w);
  }

  Quat conj() const { return Quat(w, -x, -y, -z); }
};

// Dual number primal + eps*dual with eps^2 = 0.
template <class K>
struct DualNumber {
  K primal{}, dual{};

  DualNumber() = default;
  DualNumber(K p, K d) : primal(std::move(p)), dual(std::move(d)) {}

  friend DualNumber operator+(const DualNumber& a, const DualNumber& b) {
    return {a.primal + b.primal, a.dual + b.dual};
  }
  friend DualNumber operator-(const DualNumber& a, const DualNumber& b) {
    return {a.primal - b.primal, a.dual - b.dual};
  }
  friend DualNumber operator*(const DualNumber& a, const DualNumber& b) {
    return {a.primal * b.primal, a.primal * b.dual + a.dual * b.primal};
  }
  friend bool operator==(const DualNumber&, const DualNumber&) = default;
};

// Dual quaternion p + eps*d in coefficient order (1, i, j, k, e, ei, ej, ek).
// eps is central and squares to zero; the quaternion units obey the Hamilton
// relations. Instantiated over rationals, doubles, and their
// complexifications (the complex unit im commutes with everything).
template <class K>
struct DualQuat {
  Quat<K> p{};  // primal
  Quat<K> d{};  // dual

  DualQuat() = default;
  DualQuat(Quat<K> p_, Quat<K> d_) : p(std::move(p_)), d(std::move(d_)) {}
  static DualQuat scalar(K s) { return DualQuat(Quat<K>::scalar(std::move(s)), Quat<K>{}); }
  static DualQuat one() { return scalar(ring_one<K>()); }
  static DualQuat from_coefficients(const std::array<K, 8>& c) {
    return DualQuat(Quat<K>(c[0], c[1], c[2], c[3]), Quat<K>(c[4], c[5], c[6], c[7]));
  }

  std::array<K, 8> coefficients() const { return {p.w, p.x, p.y, p.z, d.w, d.x, d.y, d.z}; }

  friend DualQuat operator+(const DualQuat& a, const DualQuat& b) { return {a.p + b.p, a.d + b.d}; }
  friend DualQuat operator-(const DualQuat& a, const DualQuat& b) { return {a.p - b.p, a.d - b.d}; }
  DualQuat operator-() const { return {-p, -d}; }
  friend DualQuat operator*(const K& s, const DualQuat& q) { return {s * q.p, s * q.d}; }
  friend bool operator==(const DualQuat&, const DualQuat&) = default;

  friend DualQuat operator*(const DualQuat& a, const DualQuat& b) {
    return {a.p * b.p, a.p * b.d + a.d * b.p};
  }

  // Multiplies by the dual number s + eps*t.
  DualQuat scale(const DualNumber<K>& f) const {
    return {f.primal * p, f.primal * d + f.dual * p};
  }

  bool is_zero() const { return *this == DualQuat{}; }
};

template <class K>
DualQuat<K> mul(const DualQuat<K>& a, const DualQuat<K>& b) {
  return a * b;
}

// Conjugation negates the six vector coefficients and fixes 1 and eps.
template <class K>
DualQuat<K> conj(const DualQuat<K>& a) {
  return DualQuat<K>(a.p.conj(), a.d.conj());
}

namespace detail {

template <class K>
typename scalar_traits<K>::mag_type max_abs_coeff(const DualQuat<K>& a) {
  typename scalar_traits<K>::mag_type m{};
  for (const K& c : a.coefficients()) {
    auto v = scalar_traits<K>::mag(c);
    if (m < v) m = v;
  }
  return m;
}

template <class K>
void require_scalar_dual(const DualQuat<K>& v, const DualQuat<K>& source, const char* what) {
  auto scale = max_abs_coeff(source);
  scale = scale * scale;
  auto coeffs = v.coefficients();
  for (int c = 1; c <= 3; ++c) {
    if (!scalar_traits<K>::near_zero(coeffs[c], scale) ||
        !scalar_traits<K>::near_zero(coeffs[c + 4], scale)) {
      throw InternalError(std::string("vector part failed to cancel in ") + what);
    }
  }
}

}  // namespace detail

// norm(a) = a * conj(a), always a dual number.
template <class K>
DualNumber<K> norm(const DualQuat<K>& a) {
  DualQuat<K> n = a * conj(a);
  detail::require_scalar_dual(n, a, "norm");
  return DualNumber<K>(n.p.w, n.d.w);
}

// trace(a) = a + conj(a).
template <class K>
DualNumber<K> trace(const DualQuat<K>& a) {
  DualQuat<K> t = a + conj(a);
  return DualNumber<K>(t.p.w, t.d.w);
}

// True iff a^2 = -1 (within the backend tolerance): a represents a directed
// line via its Pluecker coordinates.
template <class K>
bool is_line(const DualQuat<K>& a) {
  DualQuat<K> sq = a * a + DualQuat<K>::one();
  if constexpr (scalar_traits<K>::exact) {
    return sq.is_zero();
  } else {
    auto scale = detail::max_abs_coeff(a);
    scale = scale * scale;
    for (const K& c : sq.coefficients()) {
      if (!scalar_traits<K>::near_zero(c, scale)) return false;
    }
    return true;
  }
}

template <class K>
class Line {
 public:
  static Line from_dualquat(DualQuat<K> value) {
    if (!is_line(value)) throw Error("dual quaternion does not satisfy h^2 = -1");
    return Line(std::move(value));
  }

  // Primal part = normalized direction, dual part = point x direction.
  // On the exact backend the direction norm must be a rational square.
  static Line from_point_direction(const Vec3<K>& point, const Vec3<K>& direction) {
    static_assert(std::is_same_v<K, Rational> || std::is_same_v<K, double>,
                  "lines are built over a real scalar backend");
    if (direction.is_zero()) throw Error("line direction must be nonzero");
    K n2 = direction.norm2();
    K inv_len{};
    if constexpr (scalar_traits<K>::exact) {
      auto root = rat_sqrt_exact(n2);
      if (!root) {
        throw Error(
            "direction norm is irrational; exact lines need directions with "
            "rational length (axis-aligned or Pythagorean quadruples)");
      }
      inv_len = Rational(1) / *root;
    } else {
      inv_len = 1.0 / std::sqrt(n2);
    }
    Vec3<K> dir = inv_len * direction;
    Vec3<K> moment = point.cross(dir);
    return Line(DualQuat<K>(Quat<K>::vector(dir), Quat<K>::vector(moment)));
  }

  const DualQuat<K>& value() const { return value_; }
  Vec3<K> direction() const { return value_.p.vec(); }
  Vec3<K> moment() const { return value_.d.vec(); }

  // The point on the line closest to the origin.
  Vec3<K> anchor() const { return direction().cross(moment()); }

  Line negated() const { return Line(-value_); }

  friend bool operator==(const Line&, const Line&) = default;

 private:
  explicit Line(DualQuat<K> value) : value_(std::move(value)) {}
  DualQuat<K> value_;
};

template <class K>
DualQuat<K> inverse(const DualQuat<K>& g) {
  DualNumber<K> n = norm(g);
  auto scale = detail::max_abs_coeff(g);
  if (scalar_traits<K>::near_zero(n.primal, scale * scale)) {
    throw Error("dual quaternion is not invertible (norm has zero primal part)");
  }
  K inv_p = ring_one<K>() / n.primal;
  DualNumber<K> inv_n(inv_p, -(n.dual * inv_p * inv_p));
  return conj(g).scale(inv_n);
}

// Conjugation action of an invertible displacement on a line: g^{-1} h g.
// With g in joint-factor form (t - h_axis) this moves h the way the joint
// rotation moves the downstream link.
template <class K>
Line<K> act(const DualQuat<K>& g, const Line<K>& h) {
  DualQuat<K> moved = inverse(g) * h.value() * g;
  if constexpr (std::is_same_v<K, double>) {
    // Project back onto the unit/Pluecker constraints to shed rounding drift.
    Vec3<K> dir = moved.p.vec();
    K len = std::sqrt(dir.norm2());
    if (len == K{}) throw Error("degenerate line after action");
    dir = (ring_one<K>() / len) * dir;
    Vec3<K> m = (ring_one<K>() / len) * moved.d.vec();
    m = m - m.dot(dir) * dir;
    return Line<K>::from_dualquat(DualQuat<K>(Quat<K>::vector(dir), Quat<K>::vector(m)));
  } else {
    return Line<K>::from_dualquat(moved);
  }
}

template <class K>
DualQuat<Complex<K>> complexify(const DualQuat<K>& a) {
  auto c = a.coefficients();
  std::array<Complex<K>, 8> out;
  for (int i = 0; i < 8; ++i) out[i] = Complex<K>(c[i]);
  return DualQuat<Complex<K>>::from_coefficients(out);
}

// Complex conjugation of all coefficients (not quaternion conjugation); a
// ring automorphism of the complexified algebra.
template <class K>
DualQuat<Complex<K>> complex_conj(const DualQuat<Complex<K>>& a) {
  auto c = a.coefficients();
  std::array<Complex<K>, 8> out;
  for (int i = 0; i < 8; ++i) out[i] = c[i].conj();
  return DualQuat<Complex<K>>::from_coefficients(out);
}

}  // namespace hexlink
