#include "tpb/torsion_ff.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace tpb {

namespace {

// Jacobian coordinates on y^2 = x^3 + a x + b over GF(q^k); Z = 0 is infinity.
struct Jac {
  GFq X, Y, Z;
};

class JacCurve {
 public:
  JacCurve(GFq a, GFq b) : a_(std::move(a)), b_(std::move(b)) {}

  Jac infinity() const { return {one(), one(), zero()}; }
  Jac from_affine(const GFq& x, const GFq& y) const { return {x, y, one()}; }
  static bool is_inf(const Jac& p) { return p.Z.is_zero(); }

  Jac dbl(const Jac& p) const {
    if (is_inf(p) || p.Y.is_zero()) return infinity();
    const GFq xx = p.X * p.X, yy = p.Y * p.Y, zz = p.Z * p.Z;
    const GFq s = k(4) * p.X * yy;
    const GFq m = k(3) * xx + a_ * zz * zz;
    const GFq x3 = m * m - s - s;
    return {x3, m * (s - x3) - k(8) * yy * yy, k(2) * p.Y * p.Z};
  }

  Jac add(const Jac& p, const Jac& q) const {
    if (is_inf(p)) return q;
    if (is_inf(q)) return p;
    const GFq z1z1 = p.Z * p.Z, z2z2 = q.Z * q.Z;
    const GFq u1 = p.X * z2z2, u2 = q.X * z1z1;
    const GFq s1 = p.Y * q.Z * z2z2, s2 = q.Y * p.Z * z1z1;
    if (u1 == u2) return s1 == s2 ? dbl(p) : infinity();
    const GFq h = u2 - u1, r = s2 - s1;
    const GFq hh = h * h, hhh = hh * h;
    const GFq x3 = r * r - hhh - k(2) * u1 * hh;
    return {x3, r * (u1 * hh - x3) - s1 * hhh, p.Z * q.Z * h};
  }

  Jac neg(const Jac& p) const { return {p.X, -p.Y, p.Z}; }

  Jac mul(const Jac& p, const BigInt& n) const {
    Jac out = infinity();
    for (long i = static_cast<long>(mpz_sizeinbase(n.get_mpz_t(), 2)) - 1; i >= 0; --i) {
      out = dbl(out);
      if (mpz_tstbit(n.get_mpz_t(), static_cast<mp_bitcnt_t>(i))) out = add(out, p);
    }
    return n == 0 ? infinity() : out;
  }

  bool equal(const Jac& p, const Jac& q) const {
    if (is_inf(p) || is_inf(q)) return is_inf(p) && is_inf(q);
    const GFq z1z1 = p.Z * p.Z, z2z2 = q.Z * q.Z;
    return p.X * z2z2 == q.X * z1z1 && p.Y * q.Z * z2z2 == q.Y * p.Z * z1z1;
  }

  GFq affine_x(const Jac& p) const {
    const GFq zi = p.Z.inverse();
    return p.X * zi * zi;
  }

  GFq rhs(const GFq& x) const { return x * x * x + a_ * x + b_; }

  Jac random_point(std::mt19937_64& rng) const {
    while (true) {
      const GFq x = GFq::random(a_.field(), rng);
      const auto y = sqrt_ff(rhs(x), rng);
      if (y) return from_affine(x, *y);
    }
  }

 private:
  GFq one() const { return GFq(a_.field(), 1); }
  GFq zero() const { return GFq(a_.field(), 0); }
  GFq k(std::int64_t v) const { return GFq(a_.field(), v); }
  GFq a_, b_;
};

std::vector<std::pair<std::int64_t, int>> factorize_small(int n) {
  std::vector<std::pair<std::int64_t, int>> out;
  for (int d = 2; d * d <= n; ++d) {
    int e = 0;
    while (n % d == 0) {
      n /= d;
      ++e;
    }
    if (e > 0) out.emplace_back(d, e);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

// Basis (U, V) of the r-Sylow subgroup of E(F_{q^k}), with orders r^a >= r^b.
struct SylowBasis {
  Jac u, v;
  int a, b;
};

// Discrete log of t in <u> (order r^a) by Pohlig-Hellman; nullopt when t is not in <u>.
std::optional<BigInt> dlog(const JacCurve& e, const Jac& t, const Jac& u, std::int64_t r, int a) {
  if (a == 0) return JacCurve::is_inf(t) ? std::optional<BigInt>(0) : std::nullopt;
  const Jac gamma = e.mul(u, ipow(r, static_cast<unsigned long>(a - 1)));
  BigInt d = 0, rk = 1;
  for (int i = 0; i < a; ++i) {
    const Jac rest = e.add(t, e.neg(e.mul(u, d)));
    const Jac h = e.mul(rest, ipow(r, static_cast<unsigned long>(a - 1 - i)));
    std::int64_t digit = -1;
    Jac acc = e.infinity();
    for (std::int64_t delta = 0; delta < r; ++delta) {
      if (e.equal(acc, h)) {
        digit = delta;
        break;
      }
      acc = e.add(acc, gamma);
    }
    if (digit < 0) return std::nullopt;
    d += digit * rk;
    rk *= r;
  }
  if (!e.equal(e.mul(u, d), t)) return std::nullopt;
  return d;
}

int order_exponent(const JacCurve& e, Jac p, std::int64_t r) {
  int j = 0;
  while (!JacCurve::is_inf(p)) {
    p = e.mul(p, BigInt(static_cast<long>(r)));
    ++j;
  }
  return j;
}

SylowBasis sylow_basis(const JacCurve& e, std::int64_t r, int s, const BigInt& cofactor, std::mt19937_64& rng) {
  SylowBasis out{e.infinity(), e.infinity(), 0, 0};
  if (s == 0) return out;
  for (int attempt = 0; attempt < 2000; ++attempt) {
    const Jac rp = e.mul(e.random_point(rng), cofactor);
    const int j = order_exponent(e, rp, r);
    if (j > out.a) {
      out.u = rp;
      out.a = j;
    }
    if (out.a == s) {
      out.b = 0;
      return out;
    }
    const int b = s - out.a;
    if (b > out.a) continue;
    const BigInt rb = ipow(r, static_cast<unsigned long>(b));
    const auto d = dlog(e, e.mul(rp, rb), out.u, r, out.a);
    if (!d || *d % rb != 0) continue;
    const Jac cand = e.add(rp, e.neg(e.mul(out.u, BigInt(*d / rb))));
    const Jac w = e.mul(cand, ipow(r, static_cast<unsigned long>(b - 1)));
    if (JacCurve::is_inf(w)) continue;
    // w must avoid the order-r subgroup of <u>.
    const Jac socle = e.mul(out.u, ipow(r, static_cast<unsigned long>(out.a - 1)));
    bool inside = false;
    Jac acc = socle;
    for (std::int64_t delta = 1; delta < r && !inside; ++delta, acc = e.add(acc, socle)) inside = e.equal(acc, w);
    if (inside) continue;
    out.v = cand;
    out.b = b;
    return out;
  }
  fail(ErrorCode::Internal, "Sylow basis search did not converge");
}

// Adds x to the list unless one of the recorded minimal polynomials already vanishes at it.
void record_x(const GFq& x, std::vector<Poly<ModInt>>& polys) {
  for (const auto& f : polys) {
    GFq acc(x.field());
    for (int i = f.degree(); i >= 0; --i) acc = acc * x + GFq(x.field(), f.coeff(i).value());
    if (acc.is_zero()) return;
  }
  polys.push_back(minimal_polynomial(x));
}

void enumerate_structured(const ModInt& a, const ModInt& b, int n, FfTorsion& out) {
  const std::int64_t q = a.modulus();
  const std::int64_t trace = q + 1 - count_points(a, b);
  const auto primes = factorize_small(n);
  std::mt19937_64 rng(0x746f7273ULL ^ static_cast<std::uint64_t>(n * 1000003 + q));
  const BigInt nn = BigInt(n) * n;
  for (int k = 1; k <= n * n + 1; ++k) {
    const BigInt qk = ipow(q, static_cast<unsigned long>(k));
    if ((qk - 1) % n != 0) continue;
    const BigInt order = group_order_extension(q, trace, k);
    if (order % nn != 0) continue;
    const auto field = FqField::make(q, k);
    const JacCurve e(GFq(field, a.value()), GFq(field, b.value()));
    std::vector<std::array<Jac, 2>> gens;
    std::vector<BigInt> prime_powers;
    bool contained = true;
    for (const auto& [r, ex] : primes) {
      int s = 0;
      BigInt cof = order;
      while (cof % r == 0) {
        cof /= r;
        ++s;
      }
      const SylowBasis sb = sylow_basis(e, r, s, cof, rng);
      if (sb.b < ex) {
        contained = false;
        break;
      }
      gens.push_back({e.mul(sb.u, ipow(r, static_cast<unsigned long>(sb.a - ex))),
                      e.mul(sb.v, ipow(r, static_cast<unsigned long>(sb.b - ex)))});
      prime_powers.push_back(ipow(r, static_cast<unsigned long>(ex)));
    }
    if (!contained) continue;
    out.field_degree[n] = k;
    // Points of exact order n: every prime-power component has exact order r^e.
    std::vector<std::vector<Jac>> comps;
    for (std::size_t t = 0; t < gens.size(); ++t) {
      const long pe = prime_powers[t].get_si();
      const long r = primes[t].first;
      std::vector<Jac> exact;
      Jac row = e.infinity();
      for (long i = 0; i < pe; ++i, row = e.add(row, gens[t][0])) {
        Jac pt = row;
        for (long j = 0; j < pe; ++j, pt = e.add(pt, gens[t][1]))
          if (i % r != 0 || j % r != 0) exact.push_back(pt);
      }
      comps.push_back(std::move(exact));
    }
    std::vector<Jac> points{e.infinity()};
    for (const auto& c : comps) {
      std::vector<Jac> next;
      for (const auto& p : points)
        for (const auto& t : c) next.push_back(e.add(p, t));
      points = std::move(next);
    }
    auto& polys = out.x_minpolys[n];
    for (const auto& p : points) record_x(e.affine_x(p), polys);
    return;
  }
  fail(ErrorCode::Internal, "no extension field holds the " + std::to_string(n) + "-torsion");
}

void enumerate_brute(const ModInt& a, const ModInt& b, int max_order, int max_extension, FfTorsion& out) {
  const std::int64_t q = a.modulus();
  std::mt19937_64 rng(0x62727574ULL);
  constexpr long kMaxFieldSize = 2'000'000;
  for (int j = 1; j <= max_extension; ++j) {
    const BigInt size = ipow(q, static_cast<unsigned long>(j));
    if (size > kMaxFieldSize) break;
    const auto field = FqField::make(q, j);
    const GFq fa(field, a.value()), fb(field, b.value());
    std::vector<std::int64_t> digits(static_cast<std::size_t>(j), 0);
    for (long idx = 0; idx < size.get_si(); ++idx) {
      long v = idx;
      for (int t = 0; t < j; ++t, v /= q) digits[static_cast<std::size_t>(t)] = v % q;
      const GFq x(field, digits);
      if (minimal_polynomial(x).degree() != j) continue;
      const GFq f = x * x * x + fa * x + fb;
      // Non-square f: (f x, f^2) lies on the twist y^2 = x^3 + a f^2 x + b f^3 with the same order.
      Weierstrass<GFq> curve = Weierstrass<GFq>::short_form(fa, fb);
      CurvePoint<GFq> pt;
      if (const auto y = sqrt_ff(f, rng)) {
        pt = CurvePoint<GFq>::affine(x, *y);
      } else {
        curve = Weierstrass<GFq>::short_form(fa * f * f, fb * f * f * f);
        pt = CurvePoint<GFq>::affine(f * x, f * f);
      }
      CurvePoint<GFq> acc = pt;
      for (int ord = 1; ord <= max_order; ++ord) {
        if (acc.infinity) {
          if (ord >= 2 && std::gcd(ord, static_cast<int>(q)) == 1) {
            auto& polys = out.x_minpolys[ord];
            const auto mp = minimal_polynomial(x);
            if (std::find(polys.begin(), polys.end(), mp) == polys.end()) polys.push_back(mp);
          }
          break;
        }
        acc = point_add_unchecked(curve, acc, pt);
      }
    }
  }
  for (int n = 2; n <= max_order; ++n) {
    if (n % q == 0) continue;
    const long expected = n == 2 ? 3 : exact_order_count(n) / 2;
    if (out.x_count(n) != expected) out.incomplete_orders.push_back(n);
  }
}

}  // namespace

long exact_order_count(int n) {
  long out = static_cast<long>(n) * n;
  for (const auto& [r, e] : factorize_small(n)) out = out / (r * r) * (r * r - 1);
  return out;
}

int FfTorsion::x_count(int n) const {
  const auto it = x_minpolys.find(n);
  if (it == x_minpolys.end()) return 0;
  int total = 0;
  for (const auto& f : it->second) total += f.degree();
  return total;
}

std::vector<Poly<ModInt>> FfTorsion::dividing(int n) const {
  std::vector<Poly<ModInt>> out;
  for (const auto& [d, polys] : x_minpolys)
    if (d >= 2 && n % d == 0) out.insert(out.end(), polys.begin(), polys.end());
  return out;
}

BigInt group_order_extension(std::int64_t q, std::int64_t trace, int k) {
  BigInt s0 = 2, s1 = trace;
  for (int i = 1; i < k; ++i) {
    const BigInt s2 = trace * s1 - BigInt(static_cast<long>(q)) * s0;
    s0 = s1;
    s1 = s2;
  }
  return ipow(q, static_cast<unsigned long>(k)) + 1 - (k == 0 ? BigInt(2) : s1);
}

FfTorsion torsion_enumerate_ff(const ModInt& a, const ModInt& b, int max_order, EnumerationMode mode,
                               int max_extension) {
  const std::int64_t q = a.modulus();
  require_prime(q);
  if (q < 5) fail(ErrorCode::UnsupportedPrime, "torsion enumeration needs q >= 5");
  if ((ModInt(4, q) * a * a * a + ModInt(27, q) * b * b).is_zero())
    fail(ErrorCode::SingularCurve, "singular curve over F_" + std::to_string(q));
  FfTorsion out;
  out.q = q;
  out.max_order = max_order;
  out.mode = mode;
  for (int n = 2; n <= max_order; ++n)
    if (n % q == 0) out.skipped_orders.push_back(n);
  if (mode == EnumerationMode::BruteForce) {
    enumerate_brute(a, b, max_order, max_extension, out);
  } else {
    for (int n = 2; n <= max_order; ++n)
      if (n % q != 0) enumerate_structured(a, b, n, out);
  }
  for (auto& [n, polys] : out.x_minpolys)
    std::sort(polys.begin(), polys.end(), [](const auto& x, const auto& y) { return poly_less(x, y); });
  return out;
}

}  // namespace tpb
