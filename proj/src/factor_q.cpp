#include "tpb/factor_q.hpp"

#include <algorithm>
#include <numeric>

namespace tpb {

namespace {

ZPoly lift_int(const FpPoly& f) {
  return map_coeffs(f, kZ, [](const ModInt& a) { return BigInt(static_cast<long>(a.value())); });
}

ZPoly reduce_coeffs(const ZPoly& f, const BigInt& m, bool symmetric) {
  return map_coeffs(f, kZ, [&](const BigInt& a) {
    BigInt r;
    mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
    if (symmetric && 2 * r > m) r -= m;
    return r;
  });
}

FpPoly product_mod(const std::vector<FpPoly>& fs, std::size_t lo, std::size_t hi) {
  FpPoly out = FpPoly::constant(one_like(fs[lo].zero()));
  for (std::size_t i = lo; i < hi; ++i) out *= fs[i];
  return out;
}

// Lifts monic F = prod(factors) mod l to monic factors mod l^k.
void hensel_tree(const ZPoly& target, const std::vector<FpPoly>& factors, std::size_t lo, std::size_t hi,
                 std::int64_t l, int k, std::vector<ZPoly>& out) {
  const BigInt lk = ipow(l, static_cast<unsigned long>(k));
  if (hi - lo == 1) {
    out.push_back(reduce_coeffs(target, lk, false));
    return;
  }
  const std::size_t mid = lo + (hi - lo) / 2;
  const FpPoly g = product_mod(factors, lo, mid), h = product_mod(factors, mid, hi);
  const auto eg = ext_gcd(g, h);
  ZPoly gz = lift_int(g), hz = lift_int(h);
  BigInt mod = l;
  for (int i = 1; i < k; ++i) {
    const ZPoly diff = target - gz * hz;
    const ZPoly e = map_coeffs(diff, kZ, [&](const BigInt& a) { return BigInt(a / mod); });
    const FpPoly el = reduce_mod_p(e, l);
    const FpPoly dg = (el * eg.t) % g, dh = (el * eg.s) % h;
    gz = reduce_coeffs(gz + lift_int(dg) * mod, mod * l, false);
    hz = reduce_coeffs(hz + lift_int(dh) * mod, mod * l, false);
    mod *= l;
  }
  hensel_tree(gz, factors, lo, mid, l, k, out);
  hensel_tree(hz, factors, mid, hi, l, k, out);
}

std::vector<ZPoly> factor_monic_squarefree(const ZPoly& f) {
  const int d = f.degree();
  if (d <= 1) return {f};
  // Pick a prime keeping f squarefree; prefer the one with fewest modular factors.
  std::int64_t best_l = 0;
  std::vector<FpPoly> best;
  int tried = 0;
  for (std::int64_t l = 3; tried < 6; l += 2) {
    if (!is_prime(l)) continue;
    const FpPoly fl = reduce_mod_p(f, l);
    if (euclid_gcd(fl, derivative(fl)).degree() != 0) continue;
    ++tried;
    std::vector<FpPoly> fs;
    for (auto& fc : factor_ff(fl)) fs.push_back(fc.poly);
    if (best_l == 0 || fs.size() < best.size()) {
      best_l = l;
      best = std::move(fs);
    }
    if (best.size() == 1) break;
  }
  if (best.size() == 1) return {f};
  BigInt maxc = 0;
  for (const auto& c : f.coeffs()) maxc = std::max<BigInt>(maxc, abs(c));
  const BigInt bound = 2 * ipow(2, static_cast<unsigned long>(d)) * (d + 1) * maxc;
  int k = 1;
  BigInt lk = best_l;
  while (lk <= bound) {
    lk *= best_l;
    ++k;
  }
  std::vector<ZPoly> lifted;
  hensel_tree(f, best, 0, best.size(), best_l, k, lifted);

  std::vector<ZPoly> found;
  ZPoly rest = f;
  std::size_t s = 1;
  while (2 * s <= lifted.size()) {
    bool hit = false;
    std::vector<std::size_t> idx(s);
    std::iota(idx.begin(), idx.end(), 0);
    while (true) {
      ZPoly cand = ZPoly::constant(BigInt(1));
      for (auto i : idx) cand = reduce_coeffs(cand * lifted[i], lk, true);
      if (divides(cand, rest)) {
        found.push_back(cand);
        rest = exact_div(rest, cand);
        for (auto it = idx.rbegin(); it != idx.rend(); ++it) lifted.erase(lifted.begin() + static_cast<std::ptrdiff_t>(*it));
        hit = true;
        break;
      }
      // next combination
      std::size_t pos = s;
      while (pos > 0 && idx[pos - 1] == lifted.size() - s + pos - 1) --pos;
      if (pos == 0) break;
      ++idx[pos - 1];
      for (std::size_t j = pos; j < s; ++j) idx[j] = idx[j - 1] + 1;
    }
    if (!hit) ++s;
  }
  if (rest.degree() > 0) found.push_back(rest);
  return found;
}

}  // namespace

std::vector<ZPoly> factor_squarefree_z(const ZPoly& f0) {
  const ZPoly f = primitive_part(f0);
  const int d = f.degree();
  if (d <= 1) return {f};
  // Monic transform F(y) = a^{d-1} f(y / a).
  const BigInt a = f.lead();
  std::vector<BigInt> c(static_cast<std::size_t>(d) + 1);
  for (int i = 0; i < d; ++i) c[static_cast<std::size_t>(i)] = f.coeff(i) * ipow(a, static_cast<unsigned long>(d - 1 - i));
  c.back() = 1;
  std::vector<ZPoly> out;
  for (const auto& g : factor_monic_squarefree(ZPoly(std::move(c), kZ))) {
    std::vector<BigInt> h;
    for (int i = 0; i <= g.degree(); ++i) h.push_back(g.coeff(i) * ipow(a, static_cast<unsigned long>(i)));
    out.push_back(primitive_part(ZPoly(std::move(h), kZ)));
  }
  return out;
}

std::vector<Factor<Rational>> squarefree_factorization_q(const QPoly& f) {
  if (f.is_zero()) fail(ErrorCode::UndefinedInput, "squarefree factorization of zero");
  std::vector<Factor<Rational>> out;
  QPoly a = monic(f);
  if (a.degree() <= 0) return out;
  QPoly b = derivative(a);
  QPoly c = poly_gcd(a, b);
  QPoly w = a / c;
  QPoly y = b / c;
  QPoly z = y - derivative(w);
  for (int i = 1; w.degree() > 0; ++i) {
    const QPoly g = z.is_zero() ? w : poly_gcd(w, z);
    if (g.degree() > 0) out.push_back({monic(g), i});
    w = w / g;
    y = z / g;
    z = y - derivative(w);
  }
  return out;
}

std::vector<Factor<Rational>> factor_q(const QPoly& f) {
  std::vector<Factor<Rational>> out;
  for (const auto& sq : squarefree_factorization_q(f))
    for (const auto& g : factor_squarefree_z(primitive_part(sq.poly))) out.push_back({monic(to_qpoly(g)), sq.multiplicity});
  std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) { return poly_less(x.poly, y.poly); });
  return out;
}

}  // namespace tpb
