#pragma once

#include <array>
#include <string>
#include <vector>

#include "hexlink/dualquat.hpp"
#include "hexlink/numeric.hpp"

namespace hexlink {

inline int mod6(int i) { return ((i % 6) + 6) % 6; }

// A point of the projective line, stored as (u : v). The infinite point is
// (1 : 0); it is the identity rotation of a joint.
template <class K>
struct ProjectiveParam {
  K u{};
  K v{};

  static ProjectiveParam infinity() { return {ring_one<K>(), K{}}; }
  static ProjectiveParam finite(K t) { return {std::move(t), ring_one<K>()}; }
  bool is_infinite() const { return scalar_traits<K>::is_zero(v); }
};

// Per-joint invariants of consecutive axes: angle cosine c, Bennett ratio b,
// offset s. Index i refers to the pair (h_i, h_{i+1}) for c and b, and to
// the axis h_i for s. f_i = c_i * b_i; d_i = |b_i| sin(phi_i) >= 0 (the sign
// of the plain distance is not well-defined, so it is reported nonnegative).
template <class K>
struct DHParams {
  std::array<K, 6> c{};
  std::array<K, 6> b{};
  std::array<K, 6> s{};

  K f(int i) const { return c[mod6(i)] * b[mod6(i)]; }

  double d(int i) const {
    int k = mod6(i);
    double cd = scalar_traits<K>::to_double(c[k]);
    double bd = scalar_traits<K>::to_double(b[k]);
    return std::fabs(bd) * std::sqrt(std::max(0.0, 1.0 - cd * cd));
  }

  void validate() const {
    for (int i = 0; i < 6; ++i) {
      K margin = ring_one<K>() - c[i] * c[i];
      if (scalar_traits<K>::near_zero(margin, ring_one<K>()) || margin < K{}) {
        throw Error("adjacent axes parallel at joint " + std::to_string(i + 1) +
                    " (|c| >= 1)");
      }
    }
  }

  // Orientation flip of axis i multiplies c_i, b_i, c_{i-1}, b_{i-1}, s_i
  // by -1 and keeps everything else.
  DHParams flipped(int i) const {
    DHParams out = *this;
    int k = mod6(i);
    int prev = mod6(i - 1);
    out.c[k] = -out.c[k];
    out.b[k] = -out.b[k];
    out.c[prev] = -out.c[prev];
    out.b[prev] = -out.b[prev];
    out.s[k] = -out.s[k];
    return out;
  }
};

namespace detail {

template <class K>
bool directions_parallel(const Vec3<K>& a, const Vec3<K>& b) {
  // Unit direction vectors: the cross product norm is sin^2 of the angle.
  K cr = a.cross(b).norm2();
  return scalar_traits<K>::near_zero(cr, ring_one<K>());
}

// Parameter of the foot of the common normal with `other` on `line`, in the
// parametrization anchor + t * direction.
template <class K>
K normal_foot_param(const Line<K>& line, const Line<K>& other) {
  Vec3<K> pa = line.anchor(), pb = other.anchor();
  Vec3<K> za = line.direction(), zb = other.direction();
  K c = za.dot(zb);
  K denom = ring_one<K>() - c * c;
  if (scalar_traits<K>::near_zero(denom, ring_one<K>())) {
    throw Error("common normal undefined for parallel axes");
  }
  Vec3<K> delta = pb - pa;
  return (delta.dot(za) - c * delta.dot(zb)) / denom;
}

}  // namespace detail

// An ordered 6-tuple of joint axes, indices cyclic mod 6. Adjacent axes may
// not be parallel (and in particular h_i != +-h_{i+1}).
template <class K>
class Linkage6R {
 public:
  static Linkage6R from_lines(std::array<Line<K>, 6> axes) {
    for (int i = 0; i < 6; ++i) {
      const auto& a = axes[i];
      const auto& b = axes[mod6(i + 1)];
      if (detail::directions_parallel(a.direction(), b.direction())) {
        throw Error("adjacent axes parallel at joint " + std::to_string(i + 1));
      }
    }
    return Linkage6R(std::move(axes));
  }

  const Line<K>& axis(int i) const { return axes_[mod6(i)]; }
  const std::array<Line<K>, 6>& axes() const { return axes_; }

  Linkage6R flipped(int i) const {
    std::array<Line<K>, 6> out = axes_;
    out[mod6(i)] = out[mod6(i)].negated();
    return Linkage6R(std::move(out));
  }

 private:
  explicit Linkage6R(std::array<Line<K>, 6> axes) : axes_(std::move(axes)) {}
  std::array<Line<K>, 6> axes_;
};

// Product of the joint factors (u_k - v_k h_k) for k = i+1 .. j (cyclic,
// empty when i == j), over the complexified algebra. Each factor is
// homogeneous of degree one in its (u, v).
template <class K>
DualQuat<Complex<K>> chain_product(const Linkage6R<K>& L,
                                   const std::array<ProjectiveParam<Complex<K>>, 6>& t, int i,
                                   int j) {
  DualQuat<Complex<K>> prod = DualQuat<Complex<K>>::one();
  int steps = mod6(j - i);
  for (int n = 1; n <= steps; ++n) {
    int k = mod6(i + n);
    DualQuat<Complex<K>> factor =
        DualQuat<Complex<K>>::scalar(t[k].u) - t[k].v * complexify(L.axis(k).value());
    prod = prod * factor;
  }
  return prod;
}

template <class K>
struct ClosureCheck {
  typename scalar_traits<K>::mag_type residual{};
  bool scalar_nonzero = false;
  // The full product vanished identically: a bond-like degeneracy, distinct
  // from closure success.
  bool degenerate = false;

  bool closed() const {
    return !degenerate && scalar_nonzero && scalar_traits<K>::mag_near_zero(residual, {});
  }
};

// Measures how far a real parameter tuple is from the closure condition:
// the product of all six joint factors must be a nonzero real scalar.
template <class K>
ClosureCheck<K> closure_residual(const Linkage6R<K>& L, const std::array<ProjectiveParam<K>, 6>& t) {
  DualQuat<K> prod = DualQuat<K>::one();
  for (int k = 0; k < 6; ++k) {
    DualQuat<K> factor = DualQuat<K>::scalar(t[k].u) - t[k].v * L.axis(k).value();
    prod = prod * factor;
  }
  auto coeffs = prod.coefficients();
  ClosureCheck<K> out;
  auto scale = detail::max_abs_coeff(prod);
  if (scalar_traits<K>::mag_near_zero(scale, ring_one<K>())) {
    out.degenerate = true;
    return out;
  }
  typename scalar_traits<K>::mag_type worst{};
  for (int c = 1; c < 8; ++c) {
    auto m = scalar_traits<K>::mag(coeffs[c]);
    if (worst < m) worst = m;
  }
  auto head = scalar_traits<K>::mag(coeffs[0]);
  out.scalar_nonzero = !scalar_traits<K>::mag_near_zero(head, scale);
  if (out.scalar_nonzero) out.residual = worst / head;
  return out;
}

// Extracts the Denavit-Hartenberg invariants. With the scalar part of
// h_i h_{i+1} written u + v*eps, c_i = -u and b_i = -v / (1 - u^2). The
// offset s_i is the signed distance along h_i from the foot of the common
// normal with h_{i-1} to the foot of the common normal with h_{i+1}.
template <class K>
DHParams<K> dh_from_lines(const Linkage6R<K>& L) {
  DHParams<K> out;
  for (int i = 0; i < 6; ++i) {
    DualQuat<K> prod = L.axis(i).value() * L.axis(i + 1).value();
    K u = prod.p.w;
    K v = prod.d.w;
    K denom = ring_one<K>() - u * u;
    if (scalar_traits<K>::near_zero(denom, ring_one<K>())) {
      throw Error("adjacent axes parallel at joint " + std::to_string(i + 1));
    }
    out.c[i] = -u;
    out.b[i] = -v / denom;
  }
  for (int i = 0; i < 6; ++i) {
    K next = detail::normal_foot_param(L.axis(i), L.axis(i + 1));
    K prev = detail::normal_foot_param(L.axis(i), L.axis(i - 1));
    out.s[i] = next - prev;
  }
  return out;
}

template <class K>
struct ClosingDiagnostic {
  // Deviations (realized - requested) of the parameters the open-chain
  // construction cannot prescribe: they are determined by the cycle closing
  // up. Consistent parameter sets (the mobile families) close to zero here.
  K c6{}, b6{}, s6{}, s1{};
};

template <class K>
struct SynthResult {
  Linkage6R<K> linkage;
  DHParams<K> realized;
  ClosingDiagnostic<K> closing;
};

// Builds an open chain of six axes realizing c_1..c_5, b_1..b_5, s_2..s_5:
// h_1 along the z-axis through the origin, each next axis placed by a twist
// of angle phi_i at normal distance d_i = b_i sin(phi_i) after sliding the
// offset s_i along the current axis. All joint angles are held at zero. The
// closing parameters (c_6, b_6, s_6, s_1) of the built chain are reported as
// a diagnostic, not forced.
template <class K>
SynthResult<K> lines_from_dh(const DHParams<K>& params) {
  params.validate();
  Line<K> z_axis = Line<K>::from_point_direction({}, {K{}, K{}, ring_one<K>()});
  std::array<Line<K>, 6> axes = {z_axis, z_axis, z_axis, z_axis, z_axis, z_axis};
  Vec3<K> x{ring_one<K>(), K{}, K{}};
  Vec3<K> z{K{}, K{}, ring_one<K>()};
  Vec3<K> foot{};  // incoming normal foot on the current axis
  for (int i = 0; i < 5; ++i) {
    K sin2 = ring_one<K>() - params.c[i] * params.c[i];
    K sin_phi{};
    if constexpr (scalar_traits<K>::exact) {
      auto root = rat_sqrt_exact(sin2);
      if (!root) {
        throw Error("sin(phi_" + std::to_string(i + 1) +
                    ") is irrational; exact synthesis needs 1 - c^2 to be a "
                    "rational square");
      }
      sin_phi = *root;
    } else {
      sin_phi = std::sqrt(std::max(0.0, sin2));
    }
    Vec3<K> out_foot = (i == 0) ? foot : foot + params.s[i] * z;
    Vec3<K> z_next = params.c[i] * z + sin_phi * z.cross(x);
    Vec3<K> foot_next = out_foot + (params.b[i] * sin_phi) * x;
    axes[i + 1] = Line<K>::from_point_direction(foot_next, z_next);
    z = z_next;
    foot = foot_next;
  }
  SynthResult<K> out{Linkage6R<K>::from_lines(std::move(axes)), {}, {}};
  out.realized = dh_from_lines(out.linkage);
  out.closing.c6 = out.realized.c[5] - params.c[5];
  out.closing.b6 = out.realized.b[5] - params.b[5];
  out.closing.s6 = out.realized.s[5] - params.s[5];
  out.closing.s1 = out.realized.s[0] - params.s[0];
  return out;
}

namespace detail {

inline int rational_rank8(std::vector<std::array<Rational, 8>> rows) {
  int rank = 0;
  for (int col = 0; col < 8 && rank < static_cast<int>(rows.size()); ++col) {
    int pivot = -1;
    for (int r = rank; r < static_cast<int>(rows.size()); ++r) {
      if (rows[r][col] != 0) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) continue;
    std::swap(rows[rank], rows[pivot]);
    for (int r = rank + 1; r < static_cast<int>(rows.size()); ++r) {
      if (rows[r][col] == 0) continue;
      Rational factor = rows[r][col] / rows[rank][col];
      for (int cc = col; cc < 8; ++cc) rows[r][cc] -= factor * rows[rank][cc];
    }
    ++rank;
  }
  return rank;
}

template <class K>
int rank8(const std::vector<DualQuat<K>>& elements) {
  if constexpr (scalar_traits<K>::exact) {
    std::vector<std::array<Rational, 8>> rows;
    rows.reserve(elements.size());
    for (const auto& e : elements) rows.push_back(e.coefficients());
    return rational_rank8(std::move(rows));
  } else {
    std::vector<std::array<double, 8>> rows;
    rows.reserve(elements.size());
    for (const auto& e : elements) rows.push_back(e.coefficients());
    return svd_rank8(rows);
  }
}

}  // namespace detail

// Dimension of the linear span of {1, a, b, c, ab, ac, bc, abc}; always even
// and one of 4, 6, 8 for joint axes.
template <class K>
int triple_coupling_dimension(const Line<K>& a, const Line<K>& b, const Line<K>& c) {
  const DualQuat<K>&A = a.value(), &B = b.value(), &C = c.value();
  std::vector<DualQuat<K>> span = {DualQuat<K>::one(), A, B, C, A * B, A * C, B * C, A * B * C};
  return detail::rank8(span);
}

// Coupling dimension of the consecutive triple (h_i, h_{i+1}, h_{i+2}).
template <class K>
int coupling_dimension(const Linkage6R<K>& L, int i) {
  return triple_coupling_dimension(L.axis(i), L.axis(i + 1), L.axis(i + 2));
}

template <class K>
std::array<int, 6> coupling_dimensions(const Linkage6R<K>& L) {
  std::array<int, 6> out;
  for (int i = 0; i < 6; ++i) out[i] = coupling_dimension(L, i);
  return out;
}

// Coupling dimensions characterized by the invariants: the triple starting
// at i is 4-dimensional iff b_i = b_{i+1} = 0 and s_{i+1} = 0 (concurrent
// axes), 6-dimensional iff b_i^2 = b_{i+1}^2 != 0 and s_{i+1} = 0 (Bennett
// triple), and 8-dimensional otherwise.
template <class K>
std::array<int, 6> coupling_dimensions_from_params(const DHParams<K>& P) {
  std::array<int, 6> out;
  for (int i = 0; i < 6; ++i) {
    const K& bi = P.b[i];
    const K& bn = P.b[mod6(i + 1)];
    const K& sn = P.s[mod6(i + 1)];
    K scale = ring_one<K>() + bi * bi + bn * bn;
    bool squares_match = scalar_traits<K>::near_zero(bi * bi - bn * bn, scale);
    bool offset_zero = scalar_traits<K>::near_zero(sn, scale);
    if (squares_match && offset_zero) {
      bool both_zero = scalar_traits<K>::near_zero(bi, scale) && scalar_traits<K>::near_zero(bn, scale);
      out[i] = both_zero ? 4 : 6;
    } else {
      out[i] = 8;
    }
  }
  return out;
}

}  // namespace hexlink
