#pragma once

#include "tpb/poly.hpp"
#include "tpb/polyq.hpp"

#include <optional>
#include <string>
#include <vector>

namespace tpb {

/// y^2 + a1 xy + a3 y = x^3 + a2 x^2 + a4 x + a6.
template <class S>
struct Weierstrass {
  S a1, a2, a3, a4, a6;

  static Weierstrass short_form(const S& a, const S& b) {
    const S z = zero_like(a);
    return {z, z, z, a, b};
  }
  bool is_short() const { return is_zero(a1) && is_zero(a2) && is_zero(a3); }
  friend bool operator==(const Weierstrass& x, const Weierstrass& y) {
    return x.a1 == y.a1 && x.a2 == y.a2 && x.a3 == y.a3 && x.a4 == y.a4 && x.a6 == y.a6;
  }
};

using WeierstrassCurve = Weierstrass<Rational>;

template <class S>
struct Invariants {
  S b2, b4, b6, b8, c4, c6, disc;
  std::optional<S> j;
  bool singular() const { return is_zero(disc); }
};

template <class S>
Invariants<S> invariants(const Weierstrass<S>& e) {
  const S b2 = e.a1 * e.a1 + from_int_like(e.a1, 4) * e.a2;
  const S b4 = from_int_like(e.a1, 2) * e.a4 + e.a1 * e.a3;
  const S b6 = e.a3 * e.a3 + from_int_like(e.a1, 4) * e.a6;
  const S b8 = e.a1 * e.a1 * e.a6 + from_int_like(e.a1, 4) * e.a2 * e.a6 - e.a1 * e.a3 * e.a4 + e.a2 * e.a3 * e.a3 -
               e.a4 * e.a4;
  const S c4 = b2 * b2 - from_int_like(e.a1, 24) * b4;
  const S c6 = -(b2 * b2 * b2) + from_int_like(e.a1, 36) * b2 * b4 - from_int_like(e.a1, 216) * b6;
  const S disc = -(b2 * b2 * b8) - from_int_like(e.a1, 8) * b4 * b4 * b4 - from_int_like(e.a1, 27) * b6 * b6 +
                 from_int_like(e.a1, 9) * b2 * b4 * b6;
  Invariants<S> out{b2, b4, b6, b8, c4, c6, disc, std::nullopt};
  if (!is_zero(disc)) out.j = c4 * c4 * c4 / disc;
  return out;
}

/// Throws SingularCurve when the discriminant vanishes.
template <class S>
Invariants<S> require_nonsingular(const Weierstrass<S>& e) {
  auto inv = invariants(e);
  if (inv.singular()) fail(ErrorCode::SingularCurve, "discriminant vanishes");
  return inv;
}

/// Short model y^2 = x^3 + A x + B isomorphic over Q via x_s = x + b2/12.
struct ShortModel {
  Rational a, b;
  Rational x_shift;  // x_s = x + x_shift
};
ShortModel short_model(const WeierstrassCurve& e);

/// Model with p-integral coefficients and v_p(disc) minimal, via x -> u^2 x.
WeierstrassCurve minimal_at_p(const WeierstrassCurve& e, std::int64_t p);

enum class ReductionTag { GoodOrdinary, GoodSupersingular, Multiplicative, Additive };
std::string to_string(ReductionTag tag);

struct ReductionType {
  ReductionTag tag;
  Valuation v_disc, v_c4, v_j;
  WeierstrassCurve minimal;
  bool good() const { return tag == ReductionTag::GoodOrdinary || tag == ReductionTag::GoodSupersingular; }
};

ReductionType reduction_type(const WeierstrassCurve& e, std::int64_t p);

/// Short model (A, B) of the reduction mod p of a p-integral model (p >= 5).
std::pair<ModInt, ModInt> reduce_short(const WeierstrassCurve& e, std::int64_t p);

/// Hasse invariant test for y^2 = x^3 + a x + b over F_p.
bool is_supersingular(const ModInt& a, const ModInt& b);

/// #E(F_p) by counting square roots of the right-hand side.
std::int64_t count_points(const ModInt& a, const ModInt& b);

template <class S>
struct CurvePoint {
  bool infinity = true;
  S x{}, y{};
  static CurvePoint at_infinity() { return {}; }
  static CurvePoint affine(S x, S y) { return {false, std::move(x), std::move(y)}; }
  friend bool operator==(const CurvePoint& p, const CurvePoint& q) {
    return p.infinity == q.infinity && (p.infinity || (p.x == q.x && p.y == q.y));
  }
};

template <class S>
bool on_curve(const Weierstrass<S>& e, const CurvePoint<S>& p) {
  if (p.infinity) return true;
  const S lhs = p.y * p.y + e.a1 * p.x * p.y + e.a3 * p.y;
  const S rhs = p.x * p.x * p.x + e.a2 * p.x * p.x + e.a4 * p.x + e.a6;
  return lhs == rhs;
}

template <class S>
CurvePoint<S> point_neg(const Weierstrass<S>& e, const CurvePoint<S>& p) {
  if (p.infinity) return p;
  return CurvePoint<S>::affine(p.x, -p.y - e.a1 * p.x - e.a3);
}

/// Chord-tangent addition without the membership check.
template <class S>
CurvePoint<S> point_add_unchecked(const Weierstrass<S>& e, const CurvePoint<S>& p, const CurvePoint<S>& q) {
  if (p.infinity) return q;
  if (q.infinity) return p;
  S lambda, nu;
  if (p.x == q.x) {
    const S denom = p.y + p.y + e.a1 * p.x + e.a3;
    if (!(p.y == q.y) || is_zero(denom)) return CurvePoint<S>::at_infinity();
    const S three = from_int_like(p.x, 3), two = from_int_like(p.x, 2);
    lambda = (three * p.x * p.x + two * e.a2 * p.x + e.a4 - e.a1 * p.y) / denom;
  } else {
    lambda = (q.y - p.y) / (q.x - p.x);
  }
  nu = p.y - lambda * p.x;
  const S x3 = lambda * lambda + e.a1 * lambda - e.a2 - p.x - q.x;
  const S y3 = -(lambda + e.a1) * x3 - nu - e.a3;
  return CurvePoint<S>::affine(x3, y3);
}

template <class S>
CurvePoint<S> point_add(const Weierstrass<S>& e, const CurvePoint<S>& p, const CurvePoint<S>& q) {
  if (!on_curve(e, p) || !on_curve(e, q)) fail(ErrorCode::PointNotOnCurve, "point_add input not on curve");
  return point_add_unchecked(e, p, q);
}

template <class S>
CurvePoint<S> point_mul_unchecked(const Weierstrass<S>& e, const CurvePoint<S>& p, BigInt n) {
  CurvePoint<S> base = n < 0 ? point_neg(e, p) : p;
  if (n < 0) n = -n;
  CurvePoint<S> out = CurvePoint<S>::at_infinity();
  for (long i = static_cast<long>(mpz_sizeinbase(n.get_mpz_t(), 2)) - 1; i >= 0; --i) {
    out = point_add_unchecked(e, out, out);
    if (mpz_tstbit(n.get_mpz_t(), static_cast<mp_bitcnt_t>(i))) out = point_add_unchecked(e, out, base);
  }
  return out;
}

template <class S>
CurvePoint<S> point_mul_n(const Weierstrass<S>& e, const CurvePoint<S>& p, const BigInt& n) {
  if (!on_curve(e, p)) fail(ErrorCode::PointNotOnCurve, "point_mul_n input not on curve");
  return point_mul_unchecked(e, p, n);
}

/// The reduced division polynomials g_n of y^2 = x^3 + a x + b, where
/// psi_n = g_n for odd n and psi_n = 2y g_n for even n; returns g_0..g_n.
template <class S>
std::vector<Poly<S>> division_polynomials(const S& a, const S& b, int n) {
  const auto k = [&](long v) { return from_int_like(a, v); };
  const Poly<S> f(std::vector<S>{b, a, zero_like(a), one_like(a)}, a);
  const Poly<S> big_f = f * k(4);
  const Poly<S> f2 = big_f * big_f;
  std::vector<Poly<S>> g;
  g.push_back(Poly<S>(a));
  g.push_back(Poly<S>::constant(one_like(a)));
  g.push_back(Poly<S>::constant(one_like(a)));
  g.push_back(Poly<S>(std::vector<S>{-(a * a), k(12) * b, k(6) * a, zero_like(a), k(3)}, a));
  g.push_back(Poly<S>(std::vector<S>{k(-16) * b * b - k(2) * a * a * a, k(-8) * a * b, k(-10) * a * a, k(40) * b,
                                     k(10) * a, zero_like(a), k(2)},
                      a));
  for (int i = 5; i <= n; ++i) {
    const int m = i / 2;
    const auto gi = [&](int j) -> const Poly<S>& { return g[static_cast<std::size_t>(j)]; };
    if (i % 2 == 1) {
      const Poly<S> t1 = gi(m + 2) * pow(gi(m), 3), t2 = gi(m - 1) * pow(gi(m + 1), 3);
      g.push_back(m % 2 == 0 ? f2 * t1 - t2 : t1 - f2 * t2);
    } else {
      g.push_back(gi(m) * (gi(m + 2) * gi(m - 1) * gi(m - 1) - gi(m - 2) * gi(m + 1) * gi(m + 1)));
    }
  }
  g.resize(static_cast<std::size_t>(std::max(n, 0)) + 1, Poly<S>(a));
  return g;
}

/// Polynomial in x vanishing exactly at the x-coordinates of the nonzero
/// points of order dividing n: g_n for odd n, f * g_n for even n.
template <class S>
Poly<S> division_poly_x(const S& a, const S& b, int n) {
  if (n < 2) fail(ErrorCode::InvalidArgument, "division_poly_x needs n >= 2");
  const Poly<S> gn = division_polynomials(a, b, n).back();
  if (n % 2 == 1) return gn;
  return Poly<S>(std::vector<S>{b, a, zero_like(a), one_like(a)}, a) * gn;
}

std::string to_string(const WeierstrassCurve& e);

}  // namespace tpb
