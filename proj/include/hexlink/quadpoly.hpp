#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <variant>
#include <vector>

#include "hexlink/linkage.hpp"

namespace hexlink {

inline constexpr std::uint64_t kDefaultElimSeed = 0x48455844u;

// Monic quadratic x^2 + a1 x + a0 with complex coefficients.
template <class K>
struct QuadPoly {
  Complex<K> a1{};
  Complex<K> a0{};

  friend bool operator==(const QuadPoly&, const QuadPoly&) = default;

  // q(x + w), again monic.
  QuadPoly shifted(const Complex<K>& w) const {
    return {a1 + w + w, a0 + a1 * w + w * w};
  }

  QuadPoly conjugated() const { return {a1.conj(), a0.conj()}; }

  // Mean of the two roots.
  Complex<K> root_mean() const {
    K half = ring_one<K>() / scalar_traits<K>::from_int(2);
    return Complex<K>(-a1.re * half, -a1.im * half);
  }
};

template <class K>
double quad_poly_distance(const QuadPoly<K>& p, const QuadPoly<K>& q) {
  return std::max(complex_abs(p.a1 - q.a1), complex_abs(p.a0 - q.a0));
}

namespace detail {

// Quadratic extension F[r]/(r^2 - delta) with the defining delta carried per
// value; a missing delta marks values living in the base field (their
// r-component is zero), so mixed arithmetic stays well-defined.
template <class F>
struct QuadExt {
  F a{};
  F b{};
  std::optional<F> delta{};

  QuadExt() = default;
  QuadExt(F base) : a(std::move(base)) {}
  explicit QuadExt(int v) : a(F(v)) {}
  QuadExt(F a_, F b_, std::optional<F> delta_)
      : a(std::move(a_)), b(std::move(b_)), delta(std::move(delta_)) {}

  static QuadExt radical(F delta_) { return QuadExt(F{}, F(1), std::move(delta_)); }

  static std::optional<F> merge(const std::optional<F>& x, const std::optional<F>& y) {
    if (!x) return y;
    if (!y) return x;
    if (!(*x == *y)) throw InternalError("mixed quadratic extensions");
    return x;
  }

  friend QuadExt operator+(const QuadExt& x, const QuadExt& y) {
    return QuadExt(x.a + y.a, x.b + y.b, merge(x.delta, y.delta));
  }
  friend QuadExt operator-(const QuadExt& x, const QuadExt& y) {
    return QuadExt(x.a - y.a, x.b - y.b, merge(x.delta, y.delta));
  }
  QuadExt operator-() const { return QuadExt(-a, -b, delta); }
  friend QuadExt operator*(const QuadExt& x, const QuadExt& y) {
    auto d = merge(x.delta, y.delta);
    F cross = x.a * y.b + x.b * y.a;
    F base = x.a * y.a;
    if (!(x.b == F{}) && !(y.b == F{})) {
      if (!d) throw InternalError("radical product without a defining delta");
      base += x.b * y.b * *d;
    }
    return QuadExt(std::move(base), std::move(cross), d);
  }
  friend bool operator==(const QuadExt& x, const QuadExt& y) {
    return x.a == y.a && x.b == y.b;
  }

  QuadExt conj_radical() const { return QuadExt(a, -b, delta); }

  // 1/x via the radical conjugate; valid whenever delta is not a square in F
  // (then a^2 - b^2 delta = 0 only for x = 0).
  QuadExt inverse() const {
    F n = a * a;
    if (!(b == F{})) {
      if (!delta) throw InternalError("radical inverse without a defining delta");
      n = n - b * b * *delta;
    }
    F inv = F(1) / n;
    return QuadExt(a * inv, -b * inv, delta);
  }
  friend QuadExt operator/(const QuadExt& x, const QuadExt& y) { return x * y.inverse(); }
};

template <class K>
bool elim_zero(const Complex<K>& v, double scale) {
  if constexpr (scalar_traits<K>::exact) {
    return complex_exactly_zero(v);
  } else {
    return complex_abs(v) <= 1e-9 * std::max(1.0, scale);
  }
}

template <class K>
double elim_mag(const Complex<K>& v) {
  return complex_abs(v);
}

template <class K>
bool elim_zero(const QuadExt<Complex<K>>& v, double scale) {
  if constexpr (scalar_traits<K>::exact) {
    return complex_exactly_zero(v.a) && complex_exactly_zero(v.b);
  } else {
    return elim_mag(v) <= 1e-9 * std::max(1.0, scale);
  }
}

template <class K>
double elim_mag(const QuadExt<Complex<K>>& v) {
  double root = v.delta ? std::sqrt(complex_abs(*v.delta)) : 0.0;
  return complex_abs(v.a) + complex_abs(v.b) * root;
}

}  // namespace detail

// Generator of the bond line G for the joint pair (h1, h4):
// g = (im - h1)(im + h4). It spans, together with eps*g, the intersection of
// the right ideal of (im - h1) with the left annihilator of (im - h4).
template <class K>
struct GeneratorG {
  DualQuat<Complex<K>> value;

  static GeneratorG make(const Line<K>& h1, const Line<K>& h4) {
    if (detail::directions_parallel(h1.direction(), h4.direction())) {
      throw Error("opposite axes h1 and h4 are parallel; the standard bond-line generator degenerates");
    }
    auto im_dq = DualQuat<Complex<K>>::scalar(Complex<K>::unit_im());
    GeneratorG g{(im_dq - complexify(h1.value())) * (im_dq + complexify(h4.value()))};
    if (g.value.is_zero()) throw InternalError("bond-line generator vanished");
    return g;
  }
};

namespace detail {

// One root chain of the bilinear system: the joint parameters (t2, t3) in
// homogeneous coordinates and the resulting quad-polynomial root x, all
// living either in the base field or in one quadratic extension of it.
template <class E>
struct SolutionChain {
  E u2, v2, u3, v3;
  E x;
  int multiplicity = 1;
};

template <class K>
class QuadPolyElimination {
  using F = Complex<K>;
  using Ext = QuadExt<F>;

 public:
  QuadPolyElimination(const Line<K>& h1, const Line<K>& h2, const Line<K>& h3, const Line<K>& h4,
                      std::uint64_t seed)
      : seed_(seed) {
    if (detail::directions_parallel(h1.direction(), h2.direction()))
      throw Error("h1 parallel to h2: quad polynomial degree drops below 2");
    if (detail::directions_parallel(h3.direction(), h4.direction()))
      throw Error("h3 parallel to h4: quad polynomial degree drops below 2");
    if (triple_coupling_dimension(h1, h2, h3) != 8)
      throw Error("coupling dimension of (h1, h2, h3) must be 8");
    g_ = GeneratorG<K>::make(h1, h4).value;
    auto im_dq = DualQuat<F>::scalar(F::unit_im());
    DualQuat<F> a1 = im_dq - complexify(h1.value());
    DualQuat<F> b4 = im_dq - complexify(h4.value());
    DualQuat<F> h2c = complexify(h2.value());
    DualQuat<F> h3c = complexify(h3.value());
    // coefficients of u2u3, u2v3, v2u3, v2v3 in (im-h1)(u2-v2 h2)(u3-v3 h3)(im-h4)
    w_[0] = a1 * b4;
    w_[1] = -(a1 * (h3c * b4));
    w_[2] = -((a1 * h2c) * b4);
    w_[3] = (a1 * h2c) * (h3c * b4);
    // same for the partial product m = (im-h1)(u2-v2 h2)(u3-v3 h3)
    m_[0] = a1;
    m_[1] = -(a1 * h3c);
    m_[2] = -(a1 * h2c);
    m_[3] = (a1 * h2c) * h3c;
    scale_ = 1.0;
    for (const auto& wq : w_) {
      for (const auto& coeff : wq.coefficients()) scale_ = std::max(scale_, elim_mag(coeff));
    }
  }

  QuadPoly<K> run() {
    std::mt19937_64 rng(seed_);
    std::string last_error = "degenerate elimination";
    for (int attempt = 0; attempt < 5; ++attempt) {
      try {
        return attempt_solve(rng);
      } catch (const RetryableError& e) {
        last_error = e.what();
      }
    }
    throw Error("intersection not zero-dimensional: " + last_error);
  }

 private:
  struct RetryableError : std::runtime_error {
    using std::runtime_error::runtime_error;
  };

  F random_small(std::mt19937_64& rng) const {
    std::uniform_int_distribution<int> dist(-9, 9);
    return F(scalar_traits<K>::from_int(dist(rng)), scalar_traits<K>::from_int(dist(rng)));
  }

  std::array<F, 4> combine(const std::array<DualQuat<F>, 4>& corners, const std::array<F, 8>& weights) const {
    std::array<F, 4> out{};
    for (int t = 0; t < 4; ++t) {
      auto coeffs = corners[t].coefficients();
      F acc{};
      for (int c = 0; c < 8; ++c) acc += weights[c] * coeffs[c];
      out[t] = acc;
    }
    return out;
  }

  QuadPoly<K> attempt_solve(std::mt19937_64& rng) {
    std::array<F, 8> lambda, mu;
    for (auto& v : lambda) v = random_small(rng);
    for (auto& v : mu) v = random_small(rng);
    auto solutions = solve_direction(lambda, mu, /*swapped=*/false);
    if (!solutions) {
      solutions = solve_direction(lambda, mu, /*swapped=*/true);
    }
    if (!solutions) {
      throw RetryableError("joint parameters underdetermined in both elimination orders");
    }
    return assemble(*solutions);
  }

  // Either a pair of base-field chains (possibly one chain of multiplicity
  // two) or a single extension chain standing for a conjugate pair of roots.
  struct Solutions {
    std::vector<SolutionChain<F>> base;
    std::optional<SolutionChain<Ext>> extension;
  };

  std::optional<Solutions> solve_direction(const std::array<F, 8>& lambda, const std::array<F, 8>& mu,
                                           bool swapped) {
    std::array<DualQuat<F>, 4> w = w_;
    if (swapped) std::swap(w[1], w[2]);
    auto lam = combine(w, lambda);
    auto muc = combine(w, mu);
    // Eliminating the first parameter from the two pencils leaves a binary
    // quadratic A u^2 + B uv + C v^2 in the second parameter.
    F A = lam[0] * muc[2] - lam[2] * muc[0];
    F B = lam[0] * muc[3] + lam[1] * muc[2] - lam[2] * muc[1] - lam[3] * muc[0];
    F C = lam[1] * muc[3] - lam[3] * muc[1];
    double combo_scale = std::max({elim_mag(A), elim_mag(B), elim_mag(C)});
    if (elim_zero(A, scale_ * scale_) && elim_zero(B, scale_ * scale_) && elim_zero(C, scale_ * scale_)) {
      throw RetryableError("resultant of the random combinations vanished identically");
    }
    Solutions out;
    bool a_zero = elim_zero(A, combo_scale);
    bool b_zero = elim_zero(B, combo_scale);
    if (!a_zero) {
      F disc = B * B - F(4) * A * C;
      std::optional<F> sqrt_disc;
      bool disc_zero = false;
      if constexpr (scalar_traits<K>::exact) {
        if (complex_exactly_zero(disc)) {
          disc_zero = true;
        } else {
          auto root = complex_rat_sqrt(CRat(disc.re, disc.im));
          if (root) sqrt_disc = F(root->re, root->im);
        }
      }
      F two_a = A + A;
      if (disc_zero) {
        auto chain = solve_chain<F>(-B, two_a, swapped);
        if (!chain) return std::nullopt;
        chain->multiplicity = 2;
        out.base.push_back(*chain);
      } else if (sqrt_disc) {
        auto c1 = solve_chain<F>(-B + *sqrt_disc, two_a, swapped);
        auto c2 = solve_chain<F>(-B - *sqrt_disc, two_a, swapped);
        if (!c1 || !c2) return std::nullopt;
        out.base.push_back(*c1);
        out.base.push_back(*c2);
      } else {
        auto chain = solve_chain<Ext>(Ext(-B) + Ext::radical(disc), Ext(two_a), swapped);
        if (!chain) return std::nullopt;
        out.extension = *chain;
      }
    } else if (!b_zero) {
      // One root at infinity, one affine.
      auto inf = solve_chain<F>(F(1), F{}, swapped);
      auto fin = solve_chain<F>(-C, B, swapped);
      if (!inf || !fin) return std::nullopt;
      out.base.push_back(*inf);
      out.base.push_back(*fin);
    } else {
      auto inf = solve_chain<F>(F(1), F{}, swapped);
      if (!inf) return std::nullopt;
      inf->multiplicity = 2;
      out.base.push_back(*inf);
    }
    return out;
  }

  // Given the second parameter (us : vs) -- t3 in the plain order, t2 in the
  // swapped one -- recovers the other parameter from the full coordinate
  // system, then the point m on the bond line and its affine coordinate x.
  template <class E>
  std::optional<SolutionChain<E>> solve_chain(E us, E vs, bool swapped) {
    std::array<DualQuat<F>, 4> w = w_;
    if (swapped) std::swap(w[1], w[2]);
    std::array<std::array<F, 8>, 4> wc;
    for (int t = 0; t < 4; ++t) wc[t] = w[t].coefficients();
    // Coefficients of the first parameter (uf, vf) per coordinate.
    std::array<E, 8> pc, qc;
    double pivot_scale = 0.0;
    int pivot = -1;
    double pivot_mag = 0.0;
    for (int c = 0; c < 8; ++c) {
      pc[c] = E(wc[0][c]) * us + E(wc[1][c]) * vs;
      qc[c] = E(wc[2][c]) * us + E(wc[3][c]) * vs;
      pivot_scale = std::max({pivot_scale, elim_mag(pc[c]), elim_mag(qc[c])});
      double m = std::max(elim_mag(pc[c]), elim_mag(qc[c]));
      if (m > pivot_mag) {
        pivot_mag = m;
        pivot = c;
      }
    }
    if (pivot < 0 || (elim_zero(pc[pivot], pivot_scale) && elim_zero(qc[pivot], pivot_scale))) {
      return std::nullopt;  // first parameter underdetermined
    }
    E uf = -qc[pivot];
    E vf = pc[pivot];
    for (int c = 0; c < 8; ++c) {
      E cross = pc[c] * uf + qc[c] * vf;
      if (!elim_zero(cross, pivot_scale * pivot_scale)) {
        throw RetryableError("resultant root does not solve the full coordinate system");
      }
    }
    SolutionChain<E> chain;
    if (swapped) {
      chain.u2 = us;
      chain.v2 = vs;
      chain.u3 = uf;
      chain.v3 = vf;
    } else {
      chain.u2 = uf;
      chain.v2 = vf;
      chain.u3 = us;
      chain.v3 = vs;
    }
    chain.x = extract_x(chain);
    return chain;
  }

  // Solves m = y (1 + x eps) g coordinatewise: y from the primal part, x
  // from the dual part.
  template <class E>
  E extract_x(const SolutionChain<E>& chain) {
    E p00 = chain.u2 * chain.u3;
    E p01 = chain.u2 * chain.v3;
    E p10 = chain.v2 * chain.u3;
    E p11 = chain.v2 * chain.v3;
    std::array<std::array<F, 8>, 4> mc;
    for (int t = 0; t < 4; ++t) mc[t] = m_[t].coefficients();
    std::array<E, 8> m_coeff;
    double m_scale = 0.0;
    for (int c = 0; c < 8; ++c) {
      m_coeff[c] = E(mc[0][c]) * p00 + E(mc[1][c]) * p01 + E(mc[2][c]) * p10 + E(mc[3][c]) * p11;
      m_scale = std::max(m_scale, elim_mag(m_coeff[c]));
    }
    auto gc = g_.coefficients();
    int gp_pivot = -1;
    double gp_mag = 0.0;
    double g_scale = 0.0;
    for (int c = 0; c < 4; ++c) {
      double m = elim_mag(gc[c]);
      g_scale = std::max(g_scale, std::max(m, elim_mag(gc[c + 4])));
      if (m > gp_mag) {
        gp_mag = m;
        gp_pivot = c;
      }
    }
    if (gp_pivot < 0 || elim_zero(gc[gp_pivot], g_scale)) {
      throw Error("bond-line generator has vanishing primal part");
    }
    E y = m_coeff[gp_pivot] * E(F(1) / gc[gp_pivot]);
    double y_scale = std::max(m_scale, 1.0);
    if (elim_zero(y, y_scale)) {
      throw Error("intersection point lies in the exceptional plane (parallel axes upstream?)");
    }
    // Consistency of the primal part: m_p must be proportional to g_p.
    for (int c = 0; c < 4; ++c) {
      E cross = m_coeff[c] * E(gc[gp_pivot]) - m_coeff[gp_pivot] * E(gc[c]);
      if (!elim_zero(cross, m_scale * g_scale)) {
        throw RetryableError("primal part of m is not proportional to the generator");
      }
    }
    // Dual part: m_d = y g_d + x y g_p.
    std::optional<E> x;
    for (int c = 0; c < 4; ++c) {
      E rhs = m_coeff[c + 4] - y * E(gc[c + 4]);
      if (elim_zero(gc[c], g_scale)) {
        if (!elim_zero(rhs, m_scale * std::max(1.0, g_scale))) {
          throw RetryableError("dual part of m is inconsistent with the generator");
        }
        continue;
      }
      E candidate = rhs / (y * E(gc[c]));
      if (!x) {
        x = candidate;
      } else if (!elim_zero(*x - candidate, std::max(1.0, elim_mag(*x)))) {
        throw RetryableError("inconsistent affine coordinate on the bond line");
      }
    }
    if (!x) throw Error("bond-line generator has vanishing primal part");
    return *x;
  }

  QuadPoly<K> assemble(const Solutions& sols) {
    if (sols.extension) {
      const auto& x = sols.extension->x;
      if (!sols.base.empty()) throw InternalError("mixed base and extension chains");
      if (!x.delta) {
        // The radical cancelled out: the two x values coincide.
        return QuadPoly<K>{-(x.a + x.a), x.a * x.a};
      }
      F sum = x.a + x.a;
      F prod = x.a * x.a - x.b * x.b * *x.delta;
      return QuadPoly<K>{-sum, prod};
    }
    int total = 0;
    for (const auto& c : sols.base) total += c.multiplicity;
    if (total != 2) throw RetryableError("expected two intersection points counted with multiplicity");
    std::array<F, 2> roots;
    int idx = 0;
    for (const auto& c : sols.base) {
      for (int m = 0; m < c.multiplicity; ++m) roots[idx++] = c.x;
    }
    return QuadPoly<K>{-(roots[0] + roots[1]), roots[0] * roots[1]};
  }

  std::uint64_t seed_;
  DualQuat<Complex<K>> g_;
  std::array<DualQuat<Complex<K>>, 4> w_;
  std::array<DualQuat<Complex<K>>, 4> m_;
  double scale_;
};

}  // namespace detail

// The quad polynomial of four joint axes: the monic quadratic whose roots
// are the affine coordinates x with y (1 + x eps) g on the coupling variety
// of (h1, h2, h3), where g spans the bond line of the pair (h1, h4) with
// both bond parameters fixed at +im. Computed by eliminating (t2, t3) from
// the bilinear coordinate system of (im - h1)(t2 - h2)(t3 - h3)(im - h4) via
// resultants of two random linear combinations, with projective handling of
// parameters at infinity and seeded re-randomization on degenerate draws.
template <class K>
QuadPoly<K> quad_poly_elim(const Line<K>& h1, const Line<K>& h2, const Line<K>& h3,
                           const Line<K>& h4, std::uint64_t seed = kDefaultElimSeed) {
  detail::QuadPolyElimination<K> elim(h1, h2, h3, h4, seed);
  return elim.run();
}

// The motion-invariant quad polynomials Q_k^+/Q_k^- for k = 1..6 (stored
// 0-based), mean-centered so that the linear coefficients of opposite pairs
// cancel exactly.
template <class K>
struct InvariantQuadSet {
  std::array<QuadPoly<K>, 6> qplus{};
  std::array<QuadPoly<K>, 6> qminus{};
};

namespace detail {

template <class K>
std::array<QuadPoly<K>, 6> invariant_quads_one_family(const DHParams<K>& P) {
  std::array<QuadPoly<K>, 6> out;
  K two = scalar_traits<K>::from_int(2);
  K four = scalar_traits<K>::from_int(4);
  for (int k = 0; k < 6; ++k) {
    const K& ck1 = P.c[mod6(k + 1)];
    const K& bk = P.b[k];
    const K& bk2 = P.b[mod6(k + 2)];
    const K& sk1 = P.s[mod6(k + 1)];
    const K& sk2 = P.s[mod6(k + 2)];
    Complex<K> shift((P.f(k) - P.f(k + 2) - P.f(k + 3) + P.f(k + 5)) / two,
                     (P.s[mod6(k + 3)] - P.s[k]) / four);
    Complex<K> constant(ck1 * (bk * bk2 - sk1 * sk2) / two,
                        (sk1 * (bk - bk2 * ck1) + sk2 * (bk2 - bk * ck1)) / two);
    out[k].a1 = shift + shift;
    out[k].a0 = shift * shift + constant;
  }
  return out;
}

}  // namespace detail

// Closed-form invariant quad polynomials in the Denavit-Hartenberg
// parameters. The minus family is the plus family of the linkage with the
// odd-indexed axes reversed, i.e. the substitution b -> -b, c -> -c and
// s_k -> (-1)^k s_k.
template <class K>
InvariantQuadSet<K> invariant_quads(const DHParams<K>& P) {
  P.validate();
  InvariantQuadSet<K> out;
  out.qplus = detail::invariant_quads_one_family(P);
  DHParams<K> flipped = P;
  for (int i = 0; i < 6; ++i) {
    flipped.c[i] = -flipped.c[i];
    flipped.b[i] = -flipped.b[i];
    if (i % 2 == 0) flipped.s[i] = -flipped.s[i];  // 1-based odd offsets
  }
  out.qminus = detail::invariant_quads_one_family(flipped);
  return out;
}

// gcd data of the opposite pair (Q_k, Q_{k+3}) in one sign family: both are
// monic quadratics, so the gcd degree is 2 iff they are identical and at
// least 1 iff their resultant vanishes.
template <class K>
struct BondPairCondition {
  int pair_index = 0;  // 0, 1, 2 for the pairs (1,4), (2,5), (3,6)
  char sign = '+';
  int gcd_degree = 0;
  Complex<K> resultant{};
  bool identical = false;
};

template <class K>
struct BondConditionReport {
  std::array<BondPairCondition<K>, 6> entries{};  // pairs x signs

  const BondPairCondition<K>& entry(int pair_index, char sign) const {
    return entries[pair_index + (sign == '+' ? 0 : 3)];
  }
};

namespace detail {

template <class K>
Complex<K> monic_quadratic_resultant(const QuadPoly<K>& q1, const QuadPoly<K>& q2) {
  Complex<K> alpha = q2.a1 - q1.a1;
  Complex<K> beta = q2.a0 - q1.a0;
  return alpha * alpha * q1.a0 - alpha * beta * q1.a1 + beta * beta;
}

template <class K>
BondPairCondition<K> bond_pair_condition(const QuadPoly<K>& qa, const QuadPoly<K>& qb, int pair_index,
                                         char sign) {
  BondPairCondition<K> out;
  out.pair_index = pair_index;
  out.sign = sign;
  out.resultant = monic_quadratic_resultant(qa, qb);
  double scale = 1.0;
  for (double m : {complex_abs(qa.a1), complex_abs(qa.a0), complex_abs(qb.a1), complex_abs(qb.a0)}) {
    scale = std::max(scale, m);
  }
  auto coeff_zero = [&](const Complex<K>& v, double s) {
    if constexpr (scalar_traits<K>::exact) {
      return complex_exactly_zero(v);
    } else {
      return complex_abs(v) <= 1e-8 * s;
    }
  };
  out.identical = coeff_zero(qa.a1 - qb.a1, scale) && coeff_zero(qa.a0 - qb.a0, scale * scale);
  if (out.identical) {
    out.gcd_degree = 2;
  } else if (coeff_zero(out.resultant, scale * scale * scale * scale)) {
    out.gcd_degree = 1;
  } else {
    out.gcd_degree = 0;
  }
  return out;
}

}  // namespace detail

// Necessary conditions for bonds connecting opposite joints: the number of
// bonds joining h_k and h_{k+3} with equal (resp. opposite) parameter signs
// is bounded by the gcd degree of (Q_k^+, Q_{k+3}^+) (resp. the minus pair).
template <class K>
BondConditionReport<K> bond_conditions(const DHParams<K>& P) {
  InvariantQuadSet<K> quads = invariant_quads(P);
  BondConditionReport<K> out;
  for (int k = 0; k < 3; ++k) {
    out.entries[k] = detail::bond_pair_condition(quads.qplus[k], quads.qplus[k + 3], k, '+');
    out.entries[k + 3] = detail::bond_pair_condition(quads.qminus[k], quads.qminus[k + 3], k, '-');
  }
  return out;
}

// Elimination-based invariant quad set of a concrete linkage: the raw quad
// polynomials of all six consecutive quadruples, each pair centered by the
// mean of its four roots.
template <class K>
struct EliminationQuads {
  std::array<QuadPoly<K>, 6> raw{};       // Q_{h_k,...,h_{k+3}}
  std::array<QuadPoly<K>, 6> centered{};  // shifted to zero root mean per opposite pair
  std::array<Complex<K>, 3> pair_means{};
};

template <class K>
EliminationQuads<K> elimination_quads(const Linkage6R<K>& L, std::uint64_t seed = kDefaultElimSeed) {
  EliminationQuads<K> out;
  K quarter = ring_one<K>() / scalar_traits<K>::from_int(4);
  for (int k = 0; k < 6; ++k) {
    out.raw[k] = quad_poly_elim(L.axis(k), L.axis(k + 1), L.axis(k + 2), L.axis(k + 3), seed);
  }
  for (int k = 0; k < 3; ++k) {
    Complex<K> sum = -(out.raw[k].a1 + out.raw[k + 3].a1);
    Complex<K> mean(sum.re * quarter, sum.im * quarter);
    out.pair_means[k] = mean;
    out.centered[k] = out.raw[k].shifted(mean);
    out.centered[k + 3] = out.raw[k + 3].shifted(mean);
  }
  return out;
}

template <class K>
InvariantQuadSet<K> invariant_quads_by_elimination(const Linkage6R<K>& L,
                                                   std::uint64_t seed = kDefaultElimSeed) {
  InvariantQuadSet<K> out;
  out.qplus = elimination_quads(L, seed).centered;
  Linkage6R<K> flipped = L.flipped(0).flipped(2).flipped(4);
  out.qminus = elimination_quads(flipped, seed).centered;
  return out;
}

template <class K>
struct CrosscheckReport {
  bool match = false;
  double max_deviation = 0.0;
  InvariantQuadSet<K> from_formula{};
  InvariantQuadSet<K> from_elimination{};
};

// The convention-pinning oracle: the mean-centered elimination quad
// polynomials must equal the closed-form invariant quad polynomials of the
// extracted Denavit-Hartenberg parameters, exactly on the rational backend.
template <class K>
CrosscheckReport<K> crosscheck_invariant_vs_elim(const Linkage6R<K>& L,
                                                 std::uint64_t seed = kDefaultElimSeed) {
  CrosscheckReport<K> out;
  out.from_formula = invariant_quads(dh_from_lines(L));
  out.from_elimination = invariant_quads_by_elimination(L, seed);
  for (int k = 0; k < 6; ++k) {
    out.max_deviation = std::max(
        {out.max_deviation, quad_poly_distance(out.from_formula.qplus[k], out.from_elimination.qplus[k]),
         quad_poly_distance(out.from_formula.qminus[k], out.from_elimination.qminus[k])});
  }
  if constexpr (scalar_traits<K>::exact) {
    out.match = true;
    for (int k = 0; k < 6; ++k) {
      out.match = out.match && out.from_formula.qplus[k] == out.from_elimination.qplus[k] &&
                  out.from_formula.qminus[k] == out.from_elimination.qminus[k];
    }
  } else {
    out.match = out.max_deviation <= 1e-9;
  }
  return out;
}

}  // namespace hexlink
