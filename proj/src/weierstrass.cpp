#include "tpb/weierstrass.hpp"

#include <algorithm>

namespace tpb {

namespace {

BigInt floor_div(const BigInt& a, long b) {
  BigInt q;
  mpz_fdiv_q_ui(q.get_mpz_t(), a.get_mpz_t(), static_cast<unsigned long>(b));
  return q;
}

Rational scale_pow(const Rational& a, std::int64_t p, long e) {
  if (e >= 0) return a * Rational(ipow(p, static_cast<unsigned long>(e)));
  return a / Rational(ipow(p, static_cast<unsigned long>(-e)));
}

bool p_integral(const Rational& a, std::int64_t p) {
  const auto v = valuation_p(a, p);
  return v.is_infinite() || v.value() >= 0;
}

}  // namespace

ShortModel short_model(const WeierstrassCurve& e) {
  const auto inv = invariants(e);
  return {-inv.c4 / 48, -inv.c6 / 864, inv.b2 / 12};
}

WeierstrassCurve minimal_at_p(const WeierstrassCurve& e, std::int64_t p) {
  require_prime(p);
  if (p < 5) fail(ErrorCode::UnsupportedPrime, "minimal models are computed for p >= 5 only");
  const auto inv = require_nonsingular(e);
  // Largest k with v(c4) >= 4k, v(c6) >= 6k, v(disc) >= 12k.
  BigInt k = floor_div(BigInt(valuation_p(inv.disc, p).value()), 12);
  const auto v4 = valuation_p(inv.c4, p), v6 = valuation_p(inv.c6, p);
  if (!v4.is_infinite()) k = std::min(k, floor_div(BigInt(v4.value()), 4));
  if (!v6.is_infinite()) k = std::min(k, floor_div(BigInt(v6.value()), 6));
  const long kk = k.get_si();
  WeierstrassCurve scaled{scale_pow(e.a1, p, -kk), scale_pow(e.a2, p, -2 * kk), scale_pow(e.a3, p, -3 * kk),
                          scale_pow(e.a4, p, -4 * kk), scale_pow(e.a6, p, -6 * kk)};
  const bool integral = p_integral(scaled.a1, p) && p_integral(scaled.a2, p) && p_integral(scaled.a3, p) &&
                        p_integral(scaled.a4, p) && p_integral(scaled.a6, p);
  if (integral) return scaled;
  return WeierstrassCurve::short_form(scale_pow(-27 * inv.c4, p, -4 * kk), scale_pow(-54 * inv.c6, p, -6 * kk));
}

std::string to_string(ReductionTag tag) {
  switch (tag) {
    case ReductionTag::GoodOrdinary: return "GoodOrdinary";
    case ReductionTag::GoodSupersingular: return "GoodSupersingular";
    case ReductionTag::Multiplicative: return "Multiplicative";
    case ReductionTag::Additive: return "Additive";
  }
  return "?";
}

std::pair<ModInt, ModInt> reduce_short(const WeierstrassCurve& e, std::int64_t p) {
  const auto inv = invariants(e);
  return {ModInt(reduce_mod(Rational(-inv.c4 / 48), p), p), ModInt(reduce_mod(Rational(-inv.c6 / 864), p), p)};
}

ReductionType reduction_type(const WeierstrassCurve& e, std::int64_t p) {
  const WeierstrassCurve m = minimal_at_p(e, p);
  const auto inv = invariants(m);
  ReductionType out{ReductionTag::Additive, valuation_p(inv.disc, p), valuation_p(inv.c4, p),
                    valuation_p(*inv.j, p), m};
  if (out.v_disc == Valuation(0)) {
    const auto [a, b] = reduce_short(m, p);
    out.tag = is_supersingular(a, b) ? ReductionTag::GoodSupersingular : ReductionTag::GoodOrdinary;
  } else if (out.v_c4 == Valuation(0)) {
    out.tag = ReductionTag::Multiplicative;
  }
  return out;
}

bool is_supersingular(const ModInt& a, const ModInt& b) {
  const std::int64_t p = a.modulus();
  if (p < 5) fail(ErrorCode::UnsupportedPrime, "Hasse test implemented for p >= 5");
  if ((ModInt(4, p) * a * a * a + ModInt(27, p) * b * b).is_zero())
    fail(ErrorCode::SingularCurve, "x^3 + ax + b has a repeated root mod " + std::to_string(p));
  const Poly<ModInt> f(std::vector<ModInt>{b, a, ModInt(0, p), ModInt(1, p)}, a);
  return pow(f, static_cast<unsigned>((p - 1) / 2)).coeff(static_cast<int>(p - 1)).is_zero();
}

std::int64_t count_points(const ModInt& a, const ModInt& b) {
  const std::int64_t p = a.modulus();
  std::vector<int> sqrt_count(static_cast<std::size_t>(p), 0);
  for (std::int64_t y = 0; y < p; ++y) ++sqrt_count[static_cast<std::size_t>(mulmod(y, y, p))];
  std::int64_t n = 1;
  for (std::int64_t x = 0; x < p; ++x) {
    const ModInt xm(x, p);
    n += sqrt_count[static_cast<std::size_t>((xm * xm * xm + a * xm + b).value())];
  }
  return n;
}

std::string to_string(const WeierstrassCurve& e) {
  return "[" + to_string(e.a1) + "," + to_string(e.a2) + "," + to_string(e.a3) + "," + to_string(e.a4) + "," +
         to_string(e.a6) + "]";
}

}  // namespace tpb
