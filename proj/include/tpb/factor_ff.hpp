#pragma once

#include "tpb/gfq.hpp"
#include "tpb/poly.hpp"

#include <algorithm>
#include <optional>
#include <random>
#include <utility>
#include <vector>

namespace tpb {

// Finite-field scalar traits for ModInt (prime modulus) and GFq.

inline BigInt field_order(const ModInt& a) { return BigInt(static_cast<long>(a.modulus())); }
inline BigInt field_order(const GFq& a) { return a.field()->order(); }
inline std::int64_t field_characteristic(const ModInt& a) { return a.modulus(); }
inline std::int64_t field_characteristic(const GFq& a) { return a.characteristic(); }

inline ModInt random_like(const ModInt& like, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::int64_t> dist(0, like.modulus() - 1);
  return ModInt(dist(rng), like.modulus());
}
inline GFq random_like(const GFq& like, std::mt19937_64& rng) { return GFq::random(like.field(), rng); }

/// The unique p-th root in a finite field.
inline ModInt pth_root(const ModInt& a) { return a; }
inline GFq pth_root(const GFq& a) {
  const int m = a.field()->degree();
  return m == 1 ? a : a.pow(ipow(a.characteristic(), static_cast<unsigned long>(m - 1)));
}

template <class S>
struct Factor {
  Poly<S> poly;
  int multiplicity;
};

template <class S>
Poly<S> pth_root_poly(const Poly<S>& f) {
  const int p = static_cast<int>(field_characteristic(f.zero()));
  std::vector<S> c;
  for (int i = 0; i <= f.degree(); i += p) c.push_back(pth_root(f.coeff(i)));
  return Poly<S>(std::move(c), f.zero());
}

/// Squarefree decomposition f = lc * prod g_i^{m_i} with the g_i squarefree
/// and pairwise coprime (Musser's algorithm with p-th root descent).
template <class S>
std::vector<Factor<S>> squarefree_factorization(const Poly<S>& f) {
  if (f.is_zero()) fail(ErrorCode::UndefinedInput, "squarefree factorization of zero");
  std::vector<Factor<S>> out;
  const Poly<S> a = monic(f);
  if (a.degree() <= 0) return out;
  const int p = static_cast<int>(field_characteristic(f.zero()));
  const Poly<S> b = derivative(a);
  if (b.is_zero()) {
    for (auto& fc : squarefree_factorization(pth_root_poly(a))) out.push_back({fc.poly, fc.multiplicity * p});
    return out;
  }
  Poly<S> c = euclid_gcd(a, b);
  Poly<S> w = a / c;
  int i = 1;
  while (w.degree() > 0) {
    Poly<S> y = euclid_gcd(w, c);
    Poly<S> z = w / y;
    if (z.degree() > 0) out.push_back({monic(z), i});
    ++i;
    w = std::move(y);
    c = c / w;
  }
  if (c.degree() > 0)
    for (auto& fc : squarefree_factorization(pth_root_poly(c))) out.push_back({fc.poly, fc.multiplicity * p});
  return out;
}

/// Monic squarefree part: the product of the distinct monic irreducible factors.
template <class S>
Poly<S> squarefree_part_ff(const Poly<S>& f) {
  Poly<S> out = Poly<S>::constant(one_like(f.zero()));
  for (const auto& fc : squarefree_factorization(f)) out *= fc.poly;
  return out;
}

/// Distinct-degree factorization of a monic squarefree polynomial: pairs
/// (product of all irreducible factors of degree d, d).
template <class S>
std::vector<std::pair<Poly<S>, int>> distinct_degree_factorization(const Poly<S>& f) {
  std::vector<std::pair<Poly<S>, int>> out;
  const BigInt q = field_order(f.zero());
  const Poly<S> x = Poly<S>::x(f.zero());
  Poly<S> rest = monic(f);
  Poly<S> h = x % rest;
  for (int d = 1; 2 * d <= rest.degree(); ++d) {
    h = powmod(h, q, rest);
    Poly<S> g = euclid_gcd(h - x, rest);
    if (g.degree() > 0) {
      out.emplace_back(g, d);
      rest = rest / g;
      h = h % rest;
    }
  }
  if (rest.degree() > 0) out.emplace_back(rest, rest.degree());
  return out;
}

/// Equal-degree splitting (Cantor-Zassenhaus) for odd field order.
template <class S>
std::vector<Poly<S>> equal_degree_factorization(const Poly<S>& f, int d, std::mt19937_64& rng) {
  if (f.degree() <= d) return {monic(f)};
  const BigInt q = field_order(f.zero());
  if (q % 2 == 0) fail(ErrorCode::UnsupportedPrime, "equal-degree splitting needs odd characteristic");
  const BigInt e = (ipow(q, static_cast<unsigned long>(d)) - 1) / 2;
  const Poly<S> one = Poly<S>::constant(one_like(f.zero()));
  while (true) {
    std::vector<S> c;
    for (int i = 0; i < f.degree(); ++i) c.push_back(random_like(f.zero(), rng));
    const Poly<S> a(std::move(c), f.zero());
    if (a.degree() < 1) continue;
    Poly<S> g = euclid_gcd(a, f);
    if (g.degree() == 0) g = euclid_gcd(powmod(a, e, f) - one, f);
    if (g.degree() > 0 && g.degree() < f.degree()) {
      auto left = equal_degree_factorization(g, d, rng);
      auto right = equal_degree_factorization(f / g, d, rng);
      left.insert(left.end(), right.begin(), right.end());
      return left;
    }
  }
}

template <class S>
bool poly_less(const Poly<S>& a, const Poly<S>& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  for (int i = a.degree(); i >= 0; --i) {
    const auto sa = tpb::to_string(a.coeff(i)), sb = tpb::to_string(b.coeff(i));
    if (sa != sb) return sa.size() != sb.size() ? sa.size() < sb.size() : sa < sb;
  }
  return false;
}

/// Complete factorization into monic irreducibles with multiplicities,
/// sorted by degree; deterministic for a fixed seed.
template <class S>
std::vector<Factor<S>> factor_ff(const Poly<S>& f, std::uint64_t seed = 0x7470620001ULL) {
  std::mt19937_64 rng(seed);
  std::vector<Factor<S>> out;
  for (const auto& sq : squarefree_factorization(f))
    for (const auto& [g, d] : distinct_degree_factorization(sq.poly))
      for (auto& h : equal_degree_factorization(g, d, rng)) out.push_back({h, sq.multiplicity});
  std::sort(out.begin(), out.end(), [](const Factor<S>& a, const Factor<S>& b) { return poly_less(a.poly, b.poly); });
  return out;
}

/// Square root in a finite field of odd order (Tonelli-Shanks), if one exists.
template <class S>
std::optional<S> sqrt_ff(const S& a, std::mt19937_64& rng) {
  if (tpb::is_zero(a)) return a;
  const BigInt q = field_order(a);
  const S one = one_like(a);
  if (!(a.pow(BigInt((q - 1) / 2)) == one)) return std::nullopt;
  BigInt t = q - 1;
  unsigned s = 0;
  while (t % 2 == 0) {
    t /= 2;
    ++s;
  }
  S z = one;
  do {
    z = random_like(a, rng);
  } while (tpb::is_zero(z) || z.pow(BigInt((q - 1) / 2)) == one);
  S c = z.pow(t);
  S x = a.pow(BigInt((t + 1) / 2));
  S b = a.pow(t);
  unsigned m = s;
  while (!(b == one)) {
    unsigned i = 0;
    S b2 = b;
    while (!(b2 == one)) {
      b2 = b2 * b2;
      ++i;
    }
    S g = c;
    for (unsigned k = 0; k + i + 1 < m; ++k) g = g * g;
    x = x * g;
    c = g * g;
    b = b * c;
    m = i;
  }
  return x;
}

/// Minimal polynomial over F_p of an element of F_{p^m}.
inline Poly<ModInt> minimal_polynomial(const GFq& a) {
  const auto p = a.characteristic();
  std::vector<GFq> conj{a};
  for (GFq c = a.frobenius(); !(c == a); c = c.frobenius()) conj.push_back(c);
  Poly<GFq> prod = Poly<GFq>::constant(one_like(a));
  for (const auto& c : conj) prod *= Poly<GFq>(std::vector<GFq>{-c, one_like(a)}, a);
  std::vector<ModInt> out;
  for (const auto& c : prod.coeffs()) out.emplace_back(c.prime_field_value(), p);
  return Poly<ModInt>(std::move(out), ModInt(0, p));
}

inline Poly<GFq> lift_to(const Poly<ModInt>& f, const FqFieldPtr& field) {
  return map_coeffs(f, GFq(field), [&](const ModInt& a) { return GFq(field, a.value()); });
}

struct ExtensionRoot {
  GFq value;
  int multiplicity;
  /// Degree of the smallest field containing the root.
  int degree;
};

/// All roots of f in F_{p^j} for j <= max_degree, each reported once in its
/// minimal field F_{p^j} together with its multiplicity.
inline std::vector<ExtensionRoot> roots_in_extension(const Poly<ModInt>& f, int max_degree) {
  if (f.is_zero()) fail(ErrorCode::UndefinedInput, "roots of the zero polynomial");
  std::vector<ExtensionRoot> out;
  std::mt19937_64 rng(0x726f6f7473ULL);
  const auto p = f.zero().modulus();
  for (const auto& fc : factor_ff(f)) {
    const int j = fc.poly.degree();
    if (j > max_degree) continue;
    const auto field = FqField::make(p, j);
    for (const auto& lin : equal_degree_factorization(lift_to(fc.poly, field), 1, rng))
      out.push_back({-lin.coeff(0), fc.multiplicity, j});
  }
  return out;
}

}  // namespace tpb
