#include "tpb/projection.hpp"

#include "tpb/factor_ff.hpp"

#include <algorithm>

namespace tpb {

namespace {

BigInt lcm_den(std::initializer_list<const Rational*> xs) {
  BigInt l = 1;
  for (const auto* x : xs) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x->get_den_mpz_t());
  return l;
}

bool is_finite_nonneg(const Valuation& v) { return !v.is_infinite() && v.value() >= 0; }

long floor_div(long a, long b) { return a >= 0 ? a / b : -((-a + b - 1) / b); }

std::size_t distinct_common_roots(const BinaryForm<Rational>& f, const BinaryForm<Rational>& g) {
  std::size_t n = (f.infinity_multiplicity() > 0 && g.infinity_multiplicity() > 0) ? 1 : 0;
  const QPoly h = poly_gcd(f.dehomogenize(), g.dehomogenize());
  if (h.degree() > 0) n += static_cast<std::size_t>(squarefree_part(h).degree());
  return n;
}

std::size_t distinct_common_roots(const BinaryForm<ModInt>& f, const BinaryForm<ModInt>& g) {
  std::size_t n = (f.infinity_multiplicity() > 0 && g.infinity_multiplicity() > 0) ? 1 : 0;
  const FpPoly h = euclid_gcd(f.dehomogenize(), g.dehomogenize());
  if (h.degree() > 0) n += static_cast<std::size_t>(squarefree_part_ff(h).degree());
  return n;
}

ProjPointFp apply_bar(const std::array<ModInt, 4>& m, const ModInt& x, const ModInt& z) {
  ProjPointFp out{m[0] * x + m[1] * z, m[2] * x + m[3] * z};
  if (!out.z.is_zero()) {
    out.x = out.x / out.z;
    out.z = ModInt(1, x.modulus());
  } else {
    out.x = ModInt(1, x.modulus());
  }
  return out;
}

std::vector<ProjPointFp> rational_roots(const BinaryForm<ModInt>& f) {
  std::vector<ProjPointFp> out;
  const auto p = f.zero().modulus();
  const FpPoly h = f.dehomogenize();
  if (h.degree() > 0)
    for (const auto& r : roots_in_extension(h, 1)) out.push_back({ModInt(r.value.prime_field_value(), p), ModInt(1, p)});
  if (f.infinity_multiplicity() > 0) out.push_back({ModInt(1, p), ModInt(0, p)});
  return out;
}

}  // namespace

Mobius::Mobius(const Rational& a, const Rational& b, const Rational& c, const Rational& d) {
  const BigInt l = lcm_den({&a, &b, &c, &d});
  std::array<Rational, 4> in{a, b, c, d};
  BigInt g = 0;
  for (std::size_t i = 0; i < 4; ++i) {
    m_[i] = BigInt(in[i] * l);
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), m_[i].get_mpz_t());
  }
  if (m_[0] * m_[3] - m_[1] * m_[2] == 0) fail(ErrorCode::InvalidArgument, "Mobius matrix is singular");
  for (auto& v : m_) v /= g;
  const auto first = std::find_if(m_.begin(), m_.end(), [](const BigInt& v) { return v != 0; });
  if (*first < 0)
    for (auto& v : m_) v = -v;
}

Mobius Mobius::operator*(const Mobius& o) const {
  return Mobius(Rational(a() * o.a() + b() * o.c()), Rational(a() * o.b() + b() * o.d()),
                Rational(c() * o.a() + d() * o.c()), Rational(c() * o.b() + d() * o.d()));
}

Mobius Mobius::inverse() const { return Mobius(Rational(d()), Rational(-b()), Rational(-c()), Rational(a())); }

std::pair<Rational, Rational> Mobius::apply(const Rational& x, const Rational& z) const {
  const Rational u = Rational(a()) * x + Rational(b()) * z, v = Rational(c()) * x + Rational(d()) * z;
  if (v == 0) return {Rational(1), Rational(0)};
  return {u / v, Rational(1)};
}

BinaryForm<Rational> Mobius::push(const BinaryForm<Rational>& f) const {
  return f.substitute(Rational(d()), Rational(-b()), Rational(-c()), Rational(a()));
}

std::array<ModInt, 4> Mobius::reduce(std::int64_t p) const {
  return {ModInt(reduce_mod(a(), p), p), ModInt(reduce_mod(b(), p), p), ModInt(reduce_mod(c(), p), p),
          ModInt(reduce_mod(d(), p), p)};
}

BinaryForm<ModInt> Mobius::push_mod(const BinaryForm<ModInt>& f) const {
  const auto m = reduce(f.zero().modulus());
  return f.substitute(m[3], -m[1], -m[2], m[0]);
}

std::string Mobius::to_string() const {
  return a().get_str() + "," + b().get_str() + "," + c().get_str() + "," + d().get_str();
}

BinaryForm<Rational> primitive_form(const BinaryForm<Rational>& f) {
  if (f.is_zero()) return f;
  BigInt l = 1, g = 0;
  for (const auto& c : f.coeffs()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
  std::vector<BigInt> ints;
  for (const auto& c : f.coeffs()) {
    ints.emplace_back(c * l);
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), ints.back().get_mpz_t());
  }
  int top = f.degree();
  while (ints[static_cast<std::size_t>(top)] == 0) --top;
  if (ints[static_cast<std::size_t>(top)] < 0) g = -g;
  std::vector<Rational> out;
  for (const auto& v : ints) out.emplace_back(v / g);
  return BinaryForm<Rational>(f.degree(), std::move(out), f.zero());
}

BinaryForm<ModInt> normalize_form(const BinaryForm<ModInt>& f) {
  if (f.is_zero()) return f;
  int top = f.degree();
  while (f.coeff(top).is_zero()) --top;
  return f * f.coeff(top).inverse();
}

StandardProjection StandardProjection::from_curve(const WeierstrassCurve& e, const Mobius& m, std::string label) {
  require_nonsingular(e);
  const ShortModel s = short_model(e);
  return {std::move(label), s.a, s.b, m * Mobius(Rational(1), -s.x_shift, Rational(0), Rational(1))};
}

BinaryForm<Rational> branch_form(const StandardProjection& p) {
  const Rational z(0);
  const BinaryForm<Rational> base(4, {p.b, p.a, z, Rational(1), z}, z);
  return primitive_form(p.twist.push(base));
}

GenericBranchVerdict branch_disjoint_generic(const StandardProjection& p1, const StandardProjection& p2) {
  const auto f1 = branch_form(p1), f2 = branch_form(p2);
  const Rational res = resultant(f1, f2);
  return {res != 0, proportional(f1, f2), res};
}

Poly<ModInt> LocalModel::cubic_bar() const {
  return Poly<ModInt>(std::vector<ModInt>{b_bar, a_bar, ModInt(0, p), ModInt(1, p)}, a_bar);
}

LocalModel local_model(const StandardProjection& proj, std::int64_t p) {
  require_prime(p);
  if (p < 5) fail(ErrorCode::UnsupportedPrime, "local models are computed for p >= 5 only");
  const auto va = valuation_p(proj.a, p), vb = valuation_p(proj.b, p);
  if (va.is_infinite() && vb.is_infinite()) fail(ErrorCode::SingularCurve, "y^2 = x^3 is singular");
  long k = 1L << 40;
  if (!va.is_infinite()) k = std::min(k, floor_div(va.value(), 4));
  if (!vb.is_infinite()) k = std::min(k, floor_div(vb.value(), 6));
  const auto scale = [&](const Rational& v, long e) {
    return e >= 0 ? Rational(v / Rational(ipow(p, static_cast<unsigned long>(e))))
                  : Rational(v * Rational(ipow(p, static_cast<unsigned long>(-e))));
  };
  LocalModel out{p,
                 k,
                 scale(proj.a, 4 * k),
                 scale(proj.b, 6 * k),
                 proj.twist * Mobius(scale(Rational(1), -2 * k), Rational(0), Rational(0), Rational(1)),
                 ModInt(0, p),
                 ModInt(0, p),
                 {},
                 false,
                 reduction_type(proj.curve(), p)};
  if (!is_finite_nonneg(valuation_p(out.a, p)) && out.a != 0) fail(ErrorCode::Internal, "local model not integral");
  out.a_bar = ModInt(reduce_mod(out.a, p), p);
  out.b_bar = ModInt(reduce_mod(out.b, p), p);
  out.twist_bar = out.twist.reduce(p);
  out.twist_invertible = reduce_mod(out.twist.det(), p) != 0;
  return out;
}

SimplestAssumptionCertificate check_assumption_simplest(const StandardProjection& p1, const StandardProjection& p2,
                                                        std::int64_t p) {
  const auto l1 = local_model(p1, p), l2 = local_model(p2, p);
  if (!l1.reduction.good() || !l2.reduction.good())
    fail(ErrorCode::PreconditionViolated, "simplest assumption needs good reduction of both curves at " + std::to_string(p));
  const Rational res = resultant(branch_form(p1), branch_form(p2));
  SimplestAssumptionCertificate out{false, BigInt(res), valuation_p(res, p),
                                    l1.twist_invertible && l2.twist_invertible};
  out.pass = out.twists_invertible && out.valuation == Valuation(0);
  return out;
}

std::string ProjPointFp::to_string() const {
  return "(" + std::to_string(x.value()) + ":" + std::to_string(z.value()) + ")";
}

namespace {

SpecialFibreData special_fibre(const LocalModel& lm) {
  const auto p = lm.p;
  const ModInt zero(0, p), one(1, p);
  SpecialFibreData out{lm.reduction.tag, std::nullopt, BinaryForm<ModInt>(0, {one}, zero), {}, lm.twist_invertible};
  const auto& m = lm.twist_bar;
  const auto push = [&](const BinaryForm<ModInt>& f) { return normalize_form(f.substitute(m[3], -m[1], -m[2], m[0])); };
  if (lm.reduction.good()) {
    out.branch = push(BinaryForm<ModInt>(4, {lm.b_bar, lm.a_bar, zero, one, zero}, zero));
    out.rational_branch_points = rational_roots(out.branch);
    return out;
  }
  const FpPoly f = lm.cubic_bar();
  const FpPoly g = euclid_gcd(f, derivative(f));
  if (g.degree() != 1) fail(ErrorCode::Internal, "nodal cubic without a unique double root");
  const ModInt x0 = -g.coeff(0), x1 = -(x0 + x0);
  out.node_image = apply_bar(m, x0, one);
  // Z (X - x1 Z): the normalization is branched over x1 and infinity.
  out.branch = push(BinaryForm<ModInt>(2, {-x1, one, zero}, zero));
  out.rational_branch_points = {apply_bar(m, x1, one), apply_bar(m, one, zero)};
  return out;
}

}  // namespace

MixedAssumptionReport check_assumption_mixed(const StandardProjection& p1, const StandardProjection& p2,
                                             std::int64_t p) {
  const std::array<LocalModel, 2> lm{local_model(p1, p), local_model(p2, p)};
  int nodal = 0;
  for (const auto& l : lm) {
    if (l.reduction.tag == ReductionTag::Additive)
      fail(ErrorCode::PreconditionViolated, "additive reduction at " + std::to_string(p));
    if (l.reduction.tag == ReductionTag::Multiplicative) ++nodal;
  }
  if (nodal == 0) fail(ErrorCode::PreconditionViolated, "mixed assumption needs a multiplicative curve");

  MixedAssumptionReport out{p, {special_fibre(lm[0]), special_fibre(lm[1])}, false, false, false, false, 0, 0, false};
  const auto g1 = branch_form(p1), g2 = branch_form(p2);
  out.generic_branch_distinct = !proportional(g1, g2);
  out.common_branch_points_generic = static_cast<int>(distinct_common_roots(g1, g2));
  out.twists_invertible = lm[0].twist_invertible && lm[1].twist_invertible;
  if (!out.twists_invertible) return out;
  const auto& b1 = out.curves[0].branch;
  const auto& b2 = out.curves[1].branch;
  out.common_branch_points_special = static_cast<int>(distinct_common_roots(b1, b2));
  out.special_branch_disjoint = !resultant(b1, b2).is_zero();
  out.nodes_separated = true;
  for (const auto& c : out.curves) {
    if (!c.node_image) continue;
    for (const auto& other : out.curves)
      if (other.branch(c.node_image->x, c.node_image->z).is_zero()) out.nodes_separated = false;
  }
  if (out.curves[0].node_image && out.curves[1].node_image && *out.curves[0].node_image == *out.curves[1].node_image)
    out.nodes_separated = false;
  out.pass = out.generic_branch_distinct && out.special_branch_disjoint && out.nodes_separated;
  return out;
}

}  // namespace tpb
