#include "tpb/torsion_search.hpp"

#include <algorithm>
#include <numeric>

namespace tpb {

namespace {

constexpr std::int64_t kFilterPrime = 2147483629;  // largest prime below 2^31

BinaryForm<ModInt> reduce_form(const BinaryForm<Rational>& f, std::int64_t p) {
  const auto prim = primitive_form(f);
  std::vector<ModInt> c;
  for (const auto& x : prim.coeffs()) c.emplace_back(reduce_mod(x, p), p);
  return BinaryForm<ModInt>(f.degree(), std::move(c), ModInt(0, p));
}

// Common part of two binary forms: (infinity multiplicity, gcd of the finite parts).
template <class S>
std::pair<int, Poly<S>> common_part(const BinaryForm<S>& f, const BinaryForm<S>& g) {
  const int inf = std::min(f.infinity_multiplicity(), g.infinity_multiplicity());
  return {inf, poly_gcd(f.dehomogenize(), g.dehomogenize())};
}

int points_above(int order) { return order <= 2 ? 1 : 2; }

BinaryForm<Rational> form_of(const QPoly& f) { return BinaryForm<Rational>::from_poly(f, f.degree()); }

struct Pieces {
  std::vector<BinaryForm<Rational>> forms;  // index n - 1
};

Pieces image_pieces(const StandardProjection& p, int max_order) {
  Pieces out;
  for (int n = 1; n <= max_order; ++n) out.forms.push_back(torsion_image_form(p, n));
  return out;
}

}  // namespace

QPoly exact_order_x_poly(const Rational& a, const Rational& b, int n) {
  if (n < 2) fail(ErrorCode::InvalidArgument, "exact order locus needs n >= 2");
  QPoly f = division_poly_x(a, b, n);
  for (int d = 2; d < n; ++d) {
    if (n % d != 0) continue;
    auto [quo, rem] = divrem(f, exact_order_x_poly(a, b, d));
    if (!rem.is_zero()) fail(ErrorCode::Internal, "division polynomial locus not divisible by a sublocus");
    f = quo;
  }
  return monic(f);
}

BinaryForm<Rational> torsion_image_form(const StandardProjection& p, int n) {
  if (n < 1) fail(ErrorCode::InvalidArgument, "torsion order must be positive");
  if (n == 1) {
    const auto [x, z] = p.twist.apply(Rational(1), Rational(0));
    return BinaryForm<Rational>::vanishing_at(x, z);
  }
  return primitive_form(p.twist.push(form_of(exact_order_x_poly(p.a, p.b, n))));
}

TorsionXLocus torsion_x_poly(const StandardProjection& p, int max_order) {
  if (max_order < 1) fail(ErrorCode::InvalidArgument, "order bound must be positive");
  BinaryForm<Rational> total(0, {Rational(1)}, Rational(0));
  for (int n = 1; n <= max_order; ++n) total = total * torsion_image_form(p, n);
  total = primitive_form(total);
  const bool inf = total.infinity_multiplicity() > 0;
  return {to_qpoly(primitive_part(total.dehomogenize())), inf};
}

long TorsionReport::count_coprime_to(std::int64_t p) const {
  long out = 0;
  for (const auto& f : factors)
    if (f.order1 % p != 0 && f.order2 % p != 0) out += f.degree();
  if (infinity_is_common && infinity_order1 % p != 0 && infinity_order2 % p != 0) ++out;
  return out;
}

long TorsionReport::pair_count_coprime_to(std::int64_t p) const {
  long out = 0;
  for (const auto& f : factors)
    if (f.order1 % p != 0 && f.order2 % p != 0) out += f.degree() * points_above(f.order1) * points_above(f.order2);
  if (infinity_is_common && infinity_order1 % p != 0 && infinity_order2 % p != 0)
    out += points_above(infinity_order1) * points_above(infinity_order2);
  return out;
}

TorsionReport common_projective_torsion(const StandardProjection& p1, const StandardProjection& p2, int max_order) {
  if (max_order < 1) fail(ErrorCode::InvalidArgument, "order bound must be positive");
  if (branch_disjoint_generic(p1, p2).equal_as_sets)
    fail(ErrorCode::BranchLociCoincide, "branch quartics of " + p1.label + " and " + p2.label + " agree up to scalar");
  const Pieces s1 = image_pieces(p1, max_order), s2 = image_pieces(p2, max_order);
  TorsionReport out;
  out.max_order = max_order;
  for (int n1 = 1; n1 <= max_order; ++n1) {
    const auto& f = s1.forms[static_cast<std::size_t>(n1 - 1)];
    for (int n2 = 1; n2 <= max_order; ++n2) {
      const auto& g = s2.forms[static_cast<std::size_t>(n2 - 1)];
      const bool inf = f.infinity_multiplicity() > 0 && g.infinity_multiplicity() > 0;
      if (inf) {
        out.infinity_is_common = true;
        out.infinity_order1 = n1;
        out.infinity_order2 = n2;
        out.pair_count += points_above(n1) * points_above(n2);
      }
      const auto fp = reduce_form(f, kFilterPrime), gp = reduce_form(g, kFilterPrime);
      const QPoly fd = f.dehomogenize(), gd = g.dehomogenize();
      if (fp.dehomogenize().degree() == fd.degree() && gp.dehomogenize().degree() == gd.degree() &&
          poly_gcd(fp.dehomogenize(), gp.dehomogenize()).degree() == 0)
        continue;
      const QPoly h = poly_gcd(fd, gd);
      if (h.degree() <= 0) continue;
      for (const auto& fac : factor_q(h)) {
        CommonFactor cf;
        cf.factor = fac.poly;
        cf.multiplicity = fac.multiplicity;
        cf.order1 = n1;
        cf.order2 = n2;
        out.pair_count += static_cast<long>(cf.degree()) * points_above(n1) * points_above(n2);
        out.factors.push_back(std::move(cf));
      }
    }
  }
  std::sort(out.factors.begin(), out.factors.end(), [](const CommonFactor& x, const CommonFactor& y) {
    if (x.degree() != y.degree()) return x.degree() < y.degree();
    return poly_less(x.factor, y.factor);
  });
  for (const auto& f : out.factors) out.count += f.degree();
  if (out.infinity_is_common) ++out.count;
  return out;
}

AuxiliaryPrimeCheck auxiliary_prime_admissible(const StandardProjection& p1, const StandardProjection& p2,
                                               int max_order, std::int64_t l) {
  AuxiliaryPrimeCheck out{l, false, {}};
  if (!is_prime(l) || l < 5) {
    out.reason = "auxiliary prime must be a prime >= 5";
    return out;
  }
  if (l <= max_order) {
    out.reason = "auxiliary prime divides a torsion order <= N";
    return out;
  }
  const auto l1 = local_model(p1, l), l2 = local_model(p2, l);
  if (!l1.reduction.good() || !l2.reduction.good()) {
    out.reason = "bad reduction at the auxiliary prime";
    return out;
  }
  if (!l1.twist_invertible || !l2.twist_invertible) {
    out.reason = "projection twist degenerates mod the auxiliary prime";
    return out;
  }
  // Points that are distinct over Qbar must stay distinct: the parts of the two
  // torsion loci outside their common part may not meet mod l. Branch points are
  // 2-torsion images, so this also keeps the branch loci apart mod l.
  const Pieces s1 = image_pieces(p1, max_order), s2 = image_pieces(p2, max_order);
  BinaryForm<Rational> t1(0, {Rational(1)}, Rational(0)), t2 = t1;
  for (const auto& f : s1.forms) t1 = t1 * f;
  for (const auto& g : s2.forms) t2 = t2 * g;
  const auto [inf, h] = common_part(t1, t2);
  auto cofactor = [&](const BinaryForm<Rational>& t) {
    const QPoly quo = divrem(t.dehomogenize(), h).first;
    const int inf_left = t.infinity_multiplicity() - inf;
    return BinaryForm<Rational>::from_poly(quo, quo.degree() + inf_left);
  };
  const auto c1 = cofactor(t1), c2 = cofactor(t2);
  const auto r1 = reduce_form(c1, l), r2 = reduce_form(c2, l);
  const auto [inf_l, h_l] = common_part(r1, r2);
  if (inf_l > 0 || h_l.degree() > 0) {
    out.reason = "distinct torsion images collide mod the auxiliary prime";
    return out;
  }
  // The common part itself must stay squarefree.
  const auto hl = reduce_form(BinaryForm<Rational>::from_poly(h, h.degree() + inf), l);
  const auto hd = hl.dehomogenize();
  if (hl.infinity_multiplicity() != inf || poly_gcd(hd, derivative(hd)).degree() > 0) {
    out.reason = "common torsion images collide mod the auxiliary prime";
    return out;
  }
  out.admissible = true;
  return out;
}

long ff_oracle_common(const StandardProjection& p1, const StandardProjection& p2, int max_order, std::int64_t l,
                      EnumerationMode mode) {
  const auto check = auxiliary_prime_admissible(p1, p2, max_order, l);
  if (!check.admissible) fail(ErrorCode::InadmissibleAuxiliaryPrime, std::to_string(l) + ": " + check.reason);
  std::array<std::vector<BinaryForm<ModInt>>, 2> images;
  const std::array<const StandardProjection*, 2> ps{&p1, &p2};
  for (int i = 0; i < 2; ++i) {
    const LocalModel lm = local_model(*ps[static_cast<std::size_t>(i)], l);
    auto& out = images[static_cast<std::size_t>(i)];
    const auto& m = lm.twist_bar;
    out.push_back(normalize_form(BinaryForm<ModInt>::vanishing_at(m[0], m[2])));
    if (max_order < 2) continue;
    const FfTorsion t = torsion_enumerate_ff(lm.a_bar, lm.b_bar, max_order, mode);
    if (!t.complete()) fail(ErrorCode::Internal, "incomplete torsion enumeration at " + std::to_string(l));
    for (const auto& [n, polys] : t.x_minpolys)
      for (const auto& f : polys)
        out.push_back(normalize_form(lm.twist.push_mod(BinaryForm<ModInt>::from_poly(f, f.degree()))));
  }
  long count = 0;
  for (const auto& f : images[0])
    if (std::find(images[1].begin(), images[1].end(), f) != images[1].end()) count += f.degree();
  return count;
}

}  // namespace tpb
