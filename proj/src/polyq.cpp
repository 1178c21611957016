#include "tpb/polyq.hpp"

namespace tpb {

QPoly qpoly(std::initializer_list<long> coeffs_low_first) {
  std::vector<Rational> c;
  for (long v : coeffs_low_first) c.emplace_back(v);
  return QPoly(std::move(c), kQ);
}

QPoly to_qpoly(const ZPoly& f) {
  return map_coeffs(f, kQ, [](const BigInt& a) { return Rational(a); });
}

BigInt content(const ZPoly& f) {
  BigInt g = 0;
  for (const auto& a : f.coeffs()) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), a.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

ZPoly primitive_part(const ZPoly& f) {
  if (f.is_zero()) return f;
  BigInt g = content(f);
  if (sgn(f.lead()) < 0) g = -g;
  return map_coeffs(f, kZ, [&](const BigInt& a) { return BigInt(a / g); });
}

ZPoly primitive_part(const QPoly& f) {
  if (f.is_zero()) return ZPoly(kZ);
  BigInt l = 1;
  for (const auto& a : f.coeffs()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), a.get_den_mpz_t());
  return primitive_part(map_coeffs(f, kZ, [&](const Rational& a) { return BigInt(a.get_num() * (l / a.get_den())); }));
}

ZPoly pseudo_rem(const ZPoly& a, const ZPoly& b) {
  if (b.is_zero()) fail(ErrorCode::InvalidArgument, "pseudo-remainder by zero");
  const int db = b.degree();
  std::vector<BigInt> r = a.coeffs();
  if (a.degree() < db) return a;
  const BigInt& lb = b.lead();
  for (int i = a.degree(); i >= db; --i) {
    const BigInt c = r[static_cast<std::size_t>(i)];
    for (auto& t : r) t *= lb;
    for (int j = 0; j <= db; ++j) r[static_cast<std::size_t>(i - db + j)] -= c * b.coeffs()[static_cast<std::size_t>(j)];
  }
  r.resize(static_cast<std::size_t>(db));
  return ZPoly(std::move(r), kZ);
}

ZPoly exact_div(const ZPoly& a, const ZPoly& b) {
  if (b.is_zero()) fail(ErrorCode::InvalidArgument, "division by zero polynomial");
  const int db = b.degree();
  if (a.is_zero()) return a;
  if (a.degree() < db) fail(ErrorCode::InvalidArgument, "inexact polynomial division");
  std::vector<BigInt> r = a.coeffs();
  std::vector<BigInt> q(static_cast<std::size_t>(a.degree() - db + 1));
  for (int i = a.degree(); i >= db; --i) {
    BigInt& top = r[static_cast<std::size_t>(i)];
    if (top == 0) continue;
    if (!mpz_divisible_p(top.get_mpz_t(), b.lead().get_mpz_t()))
      fail(ErrorCode::InvalidArgument, "inexact polynomial division");
    const BigInt c = top / b.lead();
    q[static_cast<std::size_t>(i - db)] = c;
    for (int j = 0; j <= db; ++j) r[static_cast<std::size_t>(i - db + j)] -= c * b.coeffs()[static_cast<std::size_t>(j)];
  }
  for (int i = 0; i < db; ++i)
    if (r[static_cast<std::size_t>(i)] != 0) fail(ErrorCode::InvalidArgument, "inexact polynomial division");
  return ZPoly(std::move(q), kZ);
}

bool divides(const ZPoly& b, const ZPoly& a) {
  try {
    exact_div(a, b);
    return true;
  } catch (const Error&) {
    return false;
  }
}

QPoly poly_gcd(const QPoly& f, const QPoly& g) {
  if (f.is_zero() && g.is_zero()) fail(ErrorCode::UndefinedGcd, "gcd(0, 0)");
  if (f.is_zero()) return monic(g);
  if (g.is_zero()) return monic(f);
  ZPoly a = primitive_part(f), b = primitive_part(g);
  if (a.degree() < b.degree()) std::swap(a, b);
  // Subresultant PRS (Collins/Brown): coefficients grow only polynomially.
  BigInt gs = 1, h = 1;
  while (true) {
    const int delta = a.degree() - b.degree();
    ZPoly r = pseudo_rem(a, b);
    if (r.is_zero()) break;
    if (r.degree() == 0) return QPoly::constant(Rational(1));
    const BigInt divisor = gs * ipow(h, static_cast<unsigned long>(delta));
    a = std::move(b);
    b = map_coeffs(r, kZ, [&](const BigInt& c) { return BigInt(c / divisor); });
    gs = a.lead();
    if (delta == 0) {
      // h unchanged
    } else {
      h = ipow(gs, static_cast<unsigned long>(delta)) / ipow(h, static_cast<unsigned long>(delta - 1));
    }
  }
  return monic(to_qpoly(primitive_part(b)));
}

FpPoly poly_gcd(const FpPoly& f, const FpPoly& g) { return euclid_gcd(f, g); }

QPoly squarefree_part(const QPoly& f) {
  if (f.is_zero()) fail(ErrorCode::UndefinedInput, "squarefree part of zero");
  if (f.degree() == 0) return QPoly::constant(Rational(1));
  return monic(f / poly_gcd(f, derivative(f)));
}

FpPoly reduce_mod_p(const QPoly& f, std::int64_t p) {
  return map_coeffs(f, ModInt(0, p), [p](const Rational& a) { return ModInt(reduce_mod(a, p), p); });
}

FpPoly reduce_mod_p(const ZPoly& f, std::int64_t p) {
  return map_coeffs(f, ModInt(0, p), [p](const BigInt& a) { return ModInt(reduce_mod(a, p), p); });
}

BigInt determinant(std::vector<std::vector<BigInt>> m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  // Bareiss elimination: every division below is exact.
  BigInt prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t piv = k + 1;
      while (piv < n && m[piv][k] == 0) ++piv;
      if (piv == n) return 0;
      std::swap(m[k], m[piv]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
      m[i][k] = 0;
    }
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

}  // namespace tpb
