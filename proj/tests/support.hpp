#pragma once

#include "tpb/cli_reports.hpp"
#include "tpb/canonical_frobenius.hpp"
#include "tpb/torsion_search.hpp"

#include <fstream>
#include <map>
#include <random>
#include <sstream>

namespace tpbtest {

using namespace tpb;

/// n/d in lowest terms (mpq_class(n, d) alone is not canonical).
inline Rational rat(long n, long d = 1) {
  Rational r(n, d);
  r.canonicalize();
  return r;
}

inline WeierstrassCurve short_curve(long a, long b) { return WeierstrassCurve::short_form(Rational(a), Rational(b)); }

inline StandardProjection projection(long a, long b, const Mobius& m = Mobius(), const std::string& label = "E") {
  return StandardProjection::from_curve(short_curve(a, b), m, label);
}

inline std::vector<CurveSpec> corpus() {
  std::ifstream in(std::string(TPB_DATA_DIR) + "/corpus.txt");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_curve_specs(ss.str());
}

inline const CurveSpec& corpus_entry(const std::vector<CurveSpec>& specs, const std::string& label) {
  for (const auto& s : specs)
    if (s.label == label) return s;
  fail(ErrorCode::SpecError, "missing corpus curve " + label);
}

inline Poly<ModInt> fp_poly(std::initializer_list<long> low_first, std::int64_t p) {
  std::vector<ModInt> c;
  for (long v : low_first) c.emplace_back(v, p);
  return Poly<ModInt>(c, ModInt(0, p));
}

inline Poly<ModInt> random_fp_poly(std::mt19937_64& rng, int degree, std::int64_t p) {
  std::vector<ModInt> c;
  for (int i = 0; i <= degree; ++i) c.emplace_back(static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(p)), p);
  if (c.back().is_zero()) c.back() = ModInt(1, p);
  return Poly<ModInt>(c, ModInt(0, p));
}

/// #E(F_p) for y^2 = x^3 + a x + b by checking every (x, y).
inline long brute_point_count(std::int64_t a, std::int64_t b, std::int64_t p) {
  long n = 1;
  for (std::int64_t x = 0; x < p; ++x)
    for (std::int64_t y = 0; y < p; ++y)
      if ((y * y - x * x * x - a * x - b) % p == 0) ++n;
  return n;
}

inline Mobius random_mobius(std::mt19937_64& rng, long span = 7) {
  while (true) {
    std::array<long, 4> v{};
    for (auto& x : v) x = static_cast<long>(rng() % static_cast<std::uint64_t>(2 * span + 1)) - span;
    if (v[0] * v[3] - v[1] * v[2] != 0) return Mobius(rat(v[0]), rat(v[1]), rat(v[2]), rat(v[3]));
  }
}

/// Pairs of projections drawn from three families: unrelated curves with random
/// twists, curves sharing the 2-torsion point x = 0, and curves y^2 = x^3 + b
/// sharing the 3-torsion point x = 0.
inline std::pair<StandardProjection, StandardProjection> random_pair(std::mt19937_64& rng, int family) {
  auto pick = [&](long lo, long hi) { return lo + static_cast<long>(rng() % static_cast<std::uint64_t>(hi - lo + 1)); };
  while (true) {
    try {
      if (family == 0) {
        const auto p1 = projection(pick(-6, 6), pick(-6, 6), random_mobius(rng, 3), "R1");
        const auto p2 = projection(pick(-6, 6), pick(-6, 6), random_mobius(rng, 3), "R2");
        if (branch_disjoint_generic(p1, p2).equal_as_sets) continue;
        return {p1, p2};
      }
      if (family == 1) {
        const WeierstrassCurve e1{rat(0), rat(pick(-5, 5)), rat(0), rat(pick(-5, 5)), rat(0)};
        const WeierstrassCurve e2{rat(0), rat(pick(-5, 5)), rat(0), rat(pick(-5, 5)), rat(0)};
        const Mobius m(rat(1), rat(0), rat(pick(-3, 3)), rat(1));
        const auto p1 = StandardProjection::from_curve(e1, m, "T1");
        const auto p2 = StandardProjection::from_curve(e2, m, "T2");
        if (branch_disjoint_generic(p1, p2).equal_as_sets) continue;
        return {p1, p2};
      }
      const long b1 = pick(1, 9), b2 = pick(-9, -1);
      const auto p1 = projection(0, b1, Mobius(), "C1");
      const auto p2 = projection(0, b2, Mobius(rat(1), rat(0), rat(pick(1, 4)), rat(1)), "C2");
      return {p1, p2};
    } catch (const Error&) {
    }
  }
}

/// Smallest primes >= start admissible as auxiliary primes for the pair.
inline std::vector<std::int64_t> auxiliary_primes(const StandardProjection& p1, const StandardProjection& p2, int n,
                                                  std::size_t count, std::int64_t start = 7) {
  std::vector<std::int64_t> out;
  for (std::int64_t l = start; out.size() < count && l < 400; ++l) {
    if (!is_prime(l)) continue;
    if (auxiliary_prime_admissible(p1, p2, n, l).admissible) out.push_back(l);
  }
  return out;
}

// Sparse integer polynomials in x, y, z reduced mod m, used to re-expand witnesses.
using Mono = std::array<int, 3>;
struct Sparse {
  std::int64_t m;
  std::map<Mono, std::int64_t> t;
};

inline Sparse add(Sparse a, const Sparse& b, std::int64_t sign = 1) {
  for (const auto& [k, v] : b.t) a.t[k] = ((a.t[k] + sign * v) % a.m + a.m) % a.m;
  std::erase_if(a.t, [](const auto& kv) { return kv.second == 0; });
  return a;
}

inline Sparse mul(const Sparse& a, const Sparse& b) {
  Sparse out{a.m, {}};
  for (const auto& [ka, va] : a.t)
    for (const auto& [kb, vb] : b.t) {
      const Mono k{ka[0] + kb[0], ka[1] + kb[1], ka[2] + kb[2]};
      out.t[k] = (out.t[k] + va * vb) % a.m;
    }
  std::erase_if(out.t, [](const auto& kv) { return kv.second == 0; });
  return out;
}

inline Sparse scale(Sparse a, std::int64_t s) {
  for (auto& [k, v] : a.t) v = (v * s % a.m + a.m) % a.m;
  std::erase_if(a.t, [](const auto& kv) { return kv.second == 0; });
  return a;
}

inline Sparse sparse(const Cubic& f, std::int64_t m) {
  Sparse out{m, {}};
  const auto ms = monomials(f.degree());
  for (std::size_t i = 0; i < ms.size(); ++i)
    if (f.coeffs()[i].value() != 0) out.t[{ms[i][0], ms[i][1], ms[i][2]}] = f.coeffs()[i].value() % m;
  return out;
}

inline Sparse sparse_pow(const Sparse& a, int e) {
  Sparse out{a.m, {{Mono{0, 0, 0}, 1}}};
  for (int i = 0; i < e; ++i) out = mul(out, a);
  return out;
}

// e(x^p + p f'_x, ...) - e^p - p c e over Z/p^2, expanded term by term.
inline bool independent_witness_check(const LiftProblem& pr, const LiftSolution& sol) {
  const std::int64_t p = pr.p, m = p * p;
  const Sparse e = sparse(pr.e, m);
  std::array<Sparse, 3> g;
  for (int v = 0; v < 3; ++v) {
    Sparse base{m, {}};
    Mono k{0, 0, 0};
    k[static_cast<std::size_t>(v)] = static_cast<int>(p);
    base.t[k] = 1;
    g[static_cast<std::size_t>(v)] = add(base, scale(sparse((*sol.f_prime)[static_cast<std::size_t>(v)], m), p));
  }
  Sparse lhs{m, {}};
  for (const auto& [k, c] : e.t)
    lhs = add(lhs, scale(mul(mul(sparse_pow(g[0], k[0]), sparse_pow(g[1], k[1])), sparse_pow(g[2], k[2])), c));
  lhs = add(lhs, sparse_pow(e, static_cast<int>(p)), -1);
  lhs = add(lhs, scale(mul(sparse(*sol.c, m), e), p), -1);
  return lhs.t.empty();
}

}  // namespace tpbtest
