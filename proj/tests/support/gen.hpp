#pragma once

#include <algorithm>
#include <optional>
#include <random>

#include "hexlink/linkage.hpp"
#include "hexlink/quadpoly.hpp"

namespace hexlink::testgen {

inline Rational rand_rat(std::mt19937_64& rng, int num_range = 4, int den_max = 3) {
  std::uniform_int_distribution<int> num(-num_range, num_range);
  std::uniform_int_distribution<int> den(1, den_max);
  return Rational(num(rng), den(rng));
}

// Unit directions with rational coordinates from the four-square identity:
// (m^2+n^2-p^2-q^2, 2(mq+np), 2(nq-mp)) has norm m^2+n^2+p^2+q^2.
inline std::optional<Vec3<Rational>> rand_rational_direction(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> pick(-3, 3);
  Rational m(pick(rng)), n(pick(rng)), p(pick(rng)), q(pick(rng));
  Rational d = m * m + n * n + p * p + q * q;
  if (d == 0) return std::nullopt;
  Vec3<Rational> v{m * m + n * n - p * p - q * q, 2 * (m * q + n * p), 2 * (n * q - m * p)};
  if (v.is_zero()) return std::nullopt;
  return v;
}

inline Line<Rational> rand_rational_line(std::mt19937_64& rng) {
  for (;;) {
    auto dir = rand_rational_direction(rng);
    if (!dir) continue;
    Vec3<Rational> point{rand_rat(rng), rand_rat(rng), rand_rat(rng)};
    return Line<Rational>::from_point_direction(point, *dir);
  }
}

// A random rational linkage with no parallel adjacent or opposite axes and
// all triple coupling dimensions equal to 8.
inline Linkage6R<Rational> rand_rational_linkage(std::mt19937_64& rng) {
  for (;;) {
    std::array<std::optional<Line<Rational>>, 6> axes;
    for (auto& a : axes) a = rand_rational_line(rng);
    bool ok = true;
    for (int i = 0; i < 6 && ok; ++i) {
      for (int off : {1, 3}) {
        auto cr = axes[i]->direction().cross(axes[(i + off) % 6]->direction());
        if (cr.is_zero()) ok = false;
      }
    }
    if (!ok) continue;
    std::array<Line<Rational>, 6> arr = {*axes[0], *axes[1], *axes[2], *axes[3], *axes[4], *axes[5]};
    Linkage6R<Rational> L = Linkage6R<Rational>::from_lines(arr);
    auto dims = coupling_dimensions(L);
    if (std::all_of(dims.begin(), dims.end(), [](int d) { return d == 8; })) return L;
  }
}

inline Linkage6R<double> to_double_linkage(const Linkage6R<Rational>& L) {
  auto conv = [](const Line<Rational>& l) {
    auto c = l.value().coefficients();
    std::array<double, 8> out;
    for (int i = 0; i < 8; ++i) out[i] = scalar_traits<Rational>::to_double(c[i]);
    return Line<double>::from_dualquat(DualQuat<double>::from_coefficients(out));
  };
  std::array<Line<double>, 6> axes = {conv(L.axis(0)), conv(L.axis(1)), conv(L.axis(2)),
                                      conv(L.axis(3)), conv(L.axis(4)), conv(L.axis(5))};
  return Linkage6R<double>::from_lines(axes);
}

// Orthogonal twists, zero offsets, mirrored Bennett ratios: a mobile member
// of the square-sum family with all triple coupling dimensions 8 whenever
// the three magnitudes are pairwise distinct and nonzero.
inline DHParams<Rational> rand_orthogonal_mobile_params(std::mt19937_64& rng) {
  for (;;) {
    Rational b1 = rand_rat(rng, 9, 2), b3 = rand_rat(rng, 9, 2), b5 = rand_rat(rng, 9, 2);
    auto sq = [](const Rational& r) { return r * r; };
    if (b1 == 0 || b3 == 0 || b5 == 0) continue;
    if (sq(b1) == sq(b3) || sq(b3) == sq(b5) || sq(b1) == sq(b5)) continue;
    DHParams<Rational> P;
    P.b = {b1, b5, b3, b1, b5, b3};
    return P;
  }
}

}  // namespace hexlink::testgen
