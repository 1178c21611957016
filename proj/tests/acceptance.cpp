// Acceptance run: one line per criterion, nonzero exit if any fails.
#include "support.hpp"

#include <chrono>
#include <functional>
#include <iostream>
#include <set>

using namespace tpbtest;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
  void expect(bool ok, const std::string& what) {
    if (ok) return;
    if (pass) detail = what;
    pass = false;
  }
};

BigInt big_pow(std::int64_t b, long e) {
  BigInt out = 1;
  for (long i = 0; i < e; ++i) out *= b;
  return out;
}

// 1: bound formulas.
Outcome check_formulas() {
  Outcome o;
  for (std::int64_t p = 5; p <= 97; ++p) {
    if (!is_prime(p)) continue;
    const BigInt P(static_cast<long>(p));
    const std::string at = " at p=" + std::to_string(p);
    o.expect(coarse_bound(p) == 2 * P * P * P + 8, "coarse" + at);
    o.expect(supersingular_bound(p) == 2 * P * P + 8, "supersingular" + at);
    o.expect(split_bound(p, 2) == 2 * P + 8, "split(2)" + at);
    o.expect(split_bound(p, 1) == 2 * P * P + 8, "split(1)" + at);
    o.expect(mixed_bound(p) == 2 * P * P * P + 2, "mixed" + at);
    for (long d = 1; d <= 3; ++d)
      for (long e = 1; e <= 3; ++e) o.expect(intersection_degree_bound(d, e, p) == (d + e) * P * P, "degree" + at);
  }
  o.expect(coarse_bound(5) == 258 && supersingular_bound(5) == 58 && split_bound(5, 2) == 18 && mixed_bound(5) == 252,
           "p=5 values");
  return o;
}

// 2: Witt vectors.
Outcome check_witt() {
  Outcome o;
  using WQ = W2<GFq>;
  std::mt19937_64 rng(2024);
  for (std::int64_t p : {3, 5, 7, 11}) {
    for (int m = 1; m <= 2; ++m) {
      const auto f = FqField::make(p, m);
      const GFq z0(f, 0);
      const WQ zero = WQ::zero(z0, p), one = WQ::one(z0, p);
      auto rnd = [&]() -> WQ { return WQ(GFq::random(f, rng), GFq::random(f, rng), p); };
      for (int i = 0; i < 500; ++i) {
        const WQ x = rnd(), y = rnd(), z = rnd();
        const bool ok = (x + y) + z == x + (y + z) && x + y == y + x && (x * y) * z == x * (y * z) && x * y == y * x &&
                        x * (y + z) == x * y + x * z && x + zero == x && x * one == x && x + (-x) == zero;
        o.expect(ok, "ring axiom at p=" + std::to_string(p));
      }
    }
    const auto f = FqField::make(p, 2);
    const GFq z0(f, 0);
    for (int i = 0; i < 125; ++i) {
      const GFq a0 = GFq::random(f, rng), a1 = GFq::random(f, rng);
      o.expect(WQ(a0, z0, p) + WQ(z0, a1, p) == WQ(a0, a1, p), "(a0,0)+(0,a1) at p=" + std::to_string(p));
    }
    const WQ one = WQ::one(z0, p);
    o.expect(one.times(static_cast<std::uint64_t>(p)) == WQ(z0, GFq(f, 1), p), "p*(1,0)");
    o.expect(one.times(static_cast<std::uint64_t>(p * p)) == WQ::zero(z0, p), "p^2 = 0");
  }
  return o;
}

// 3: Hasse classifier against point counts.
Outcome check_supersingular() {
  Outcome o;
  for (std::int64_t p : {5, 7}) {
    for (std::int64_t a = 0; a < p; ++a)
      for (std::int64_t b = 0; b < p; ++b) {
        if ((4 * a * a * a + 27 * b * b) % p == 0) continue;
        const long trace = p + 1 - brute_point_count(a, b, p);
        o.expect(is_supersingular(ModInt(a, p), ModInt(b, p)) == (trace % p == 0),
                 "classifier at (" + std::to_string(a) + "," + std::to_string(b) + ") mod " + std::to_string(p));
      }
  }
  for (std::int64_t p : {5, 7, 13}) {
    std::set<std::int64_t> js;
    for (std::int64_t a = 0; a < p; ++a)
      for (std::int64_t b = 0; b < p; ++b) {
        const ModInt A(a, p), B(b, p);
        const ModInt four_a3 = ModInt(4, p) * A * A * A, disc = four_a3 + ModInt(27, p) * B * B;
        if (disc.is_zero()) continue;
        const long trace = p + 1 - brute_point_count(a, b, p);
        if (trace % p != 0) continue;
        js.insert((ModInt(1728, p) * four_a3 / disc).value());
      }
    o.expect(js.size() == 1, "supersingular j count at p=" + std::to_string(p) + " is " + std::to_string(js.size()));
  }
  return o;
}

// 4: division polynomials against the torsion enumeration.
Outcome check_division_polynomials() {
  Outcome o;
  std::mt19937_64 rng(404);
  for (std::int64_t q : {5, 7, 11, 13}) {
    int curves = 0;
    while (curves < 25) {
      const std::int64_t a = static_cast<std::int64_t>(rng() % q), b = static_cast<std::int64_t>(rng() % q);
      if ((4 * a * a * a + 27 * b * b) % q == 0) continue;
      ++curves;
      const ModInt A(a, q), B(b, q);
      const auto tor = torsion_enumerate_ff(A, B, 7);
      for (int n = 2; n <= 7; ++n) {
        if (n % q == 0) continue;
        std::set<std::vector<std::int64_t>> from_psi, from_points;
        for (const auto& fc : factor_ff(division_poly_x(A, B, n))) {
          std::vector<std::int64_t> c;
          for (const auto& v : fc.poly.coeffs()) c.push_back(v.value());
          from_psi.insert(c);
        }
        for (const auto& f : tor.dividing(n)) {
          std::vector<std::int64_t> c;
          for (const auto& v : f.coeffs()) c.push_back(v.value());
          from_points.insert(c);
        }
        o.expect(from_psi == from_points, "n=" + std::to_string(n) + " on (" + std::to_string(a) + "," +
                                              std::to_string(b) + ") over F_" + std::to_string(q));
      }
    }
  }
  return o;
}

// 5: common torsion against the finite-field oracle.
Outcome check_common_torsion() {
  Outcome o;
  const auto demo = common_projective_torsion(projection(-1, 0), projection(-4, 0), 2);
  o.expect(demo.factors.size() == 1 && demo.factors[0].factor == qpoly({0, 1}) && demo.infinity_is_common &&
               demo.count == 2,
           "demo pair");
  std::mt19937_64 rng(505);
  for (int i = 0; i < 20; ++i) {
    const auto [p1, p2] = random_pair(rng, i % 3);
    const int n = 2 + i % 5;
    const auto rep = common_projective_torsion(p1, p2, n);
    const auto aux = auxiliary_primes(p1, p2, n, 2);
    o.expect(aux.size() == 2, "no two auxiliary primes for pair " + std::to_string(i));
    for (auto l : aux)
      o.expect(ff_oracle_common(p1, p2, n, l) == rep.count,
               "pair " + std::to_string(i) + " N=" + std::to_string(n) + " at l=" + std::to_string(l));
  }
  return o;
}

Cubic random_change(const Cubic& e, std::int64_t p, std::mt19937_64& rng) {
  const std::int64_t m = p * p;
  while (true) {
    std::array<std::array<std::int64_t, 3>, 3> g{};
    for (auto& row : g)
      for (auto& v : row) v = static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(m));
    const std::int64_t det = g[0][0] * (g[1][1] * g[2][2] - g[1][2] * g[2][1]) -
                             g[0][1] * (g[1][0] * g[2][2] - g[1][2] * g[2][0]) +
                             g[0][2] * (g[1][0] * g[2][1] - g[1][1] * g[2][0]);
    if (det % p == 0) continue;
    std::array<Cubic, 3> lin{Cubic(1, ModInt(0, m)), Cubic(1, ModInt(0, m)), Cubic(1, ModInt(0, m))};
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 3; ++j) {
        Monomial mono{0, 0, 0};
        mono[j] = 1;
        lin[i].set_coeff(mono, ModInt(g[i][j], m));
      }
    return e.substitute(lin);
  }
}

// 6: Frobenius lifts.
Outcome check_frobenius() {
  Outcome o;
  auto solve_checked = [&](const LiftProblem& pr) -> bool {
    const auto sol = frobenius_lift_test(pr);
    if (sol.solvable) o.expect(independent_witness_check(pr, sol), "witness fails re-expansion");
    return sol.solvable;
  };
  for (std::int64_t p : {7, 13}) {
    o.expect(splitting_verdict(short_curve(0, 1), p).tag == SplittingTag::SplitsModP2,
             "y^2 = x^3 + 1 not split at " + std::to_string(p));
    o.expect(solve_checked(assemble_defect(weierstrass_cubic(short_curve(0, 1)), p)), "CM cubic unsolvable");
  }
  std::mt19937_64 rng(606);
  const std::int64_t p = 7;
  Cubic split = reduce_ternary(weierstrass_cubic(short_curve(0, 1)), p * p);
  Cubic bent = split;
  bent.add_coeff({2, 1, 0}, ModInt(p, p * p));
  for (const Cubic& e : {split, bent}) {
    const bool base = solve_checked(assemble_defect(e, p));
    for (int i = 0; i < 10; ++i)
      o.expect(solve_checked(assemble_defect(random_change(e, p, rng), p)) == base, "verdict moved under a change");
  }
  int spaces = 0;
  while (spaces < 50) {
    Cubic e0(3, ModInt(0, 5));
    for (const auto& mono : monomials(3)) e0.set_coeff(mono, ModInt(static_cast<std::int64_t>(rng() % 5), 5));
    if (!is_smooth_cubic(e0) || cubic_hasse_invariant(e0).is_zero()) continue;
    ++spaces;
    o.expect(canonical_lift_space(e0, 5).nonempty, "empty lift space for " + e0.to_string());
  }
  return o;
}

// 7: largeness and total bounds.
Outcome check_largeness() {
  Outcome o;
  const auto ord = total_bound(3, 5, {{OrbitTag::OrdinaryNonSplit, 3, 1}, {OrbitTag::OrdinaryNonSplit, 3, 1}});
  o.expect(ord.r == 6 && ord.bound == 8 * big_pow(3, 27), "ordinary w=1");
  const auto ss = total_bound(3, 5, {{OrbitTag::Supersingular, 3}, {OrbitTag::Supersingular, 3}});
  o.expect(ss.r == 3 && ss.bound == 8 * big_pow(3, 15), "supersingular");
  return o;
}

// 8: multiplicative reduction.
Outcome check_mixed() {
  Outcome o;
  const auto specs = corpus();
  const auto& m = corpus_entry(specs, "M");
  const auto& partner = corpus_entry(specs, "P");
  const auto rt = reduction_type(m.curve, 11);
  o.expect(rt.tag == ReductionTag::Multiplicative && rt.v_disc == Valuation(11), "classification");
  const auto tate = tate_parameter_valuation(m.curve, 11);
  o.expect(tate.v_q == 11 && tate.pth_power_necessary, "Tate valuation");
  o.expect(reduction_type(partner.curve, 11).tag == ReductionTag::GoodOrdinary, "partner not good ordinary");
  o.expect(check_assumption_mixed(m.projection(), partner.projection(), 11).pass, "mixed checklist");
  const auto cert = certify(m.projection(), partner.projection(), 11);
  o.expect(cert.theorem == BoundTheorem::Mixed && cert.bound == BigInt(2664) && !cert.conditional, "certificate");
  const bool note = std::any_of(cert.notes.begin(), cert.notes.end(),
                                [](const std::string& s) { return s.find("discharged") != std::string::npos; });
  o.expect(note, "discharge note");
  return o;
}

// 9: observed counts never exceed certified bounds.
Outcome check_soundness() {
  Outcome o;
  const auto specs = corpus();
  int certified = 0;
  for (std::size_t i = 0; i < specs.size(); ++i) {
    for (std::size_t j = i + 1; j < specs.size(); ++j) {
      const auto p1 = specs[i].projection(), p2 = specs[j].projection();
      std::optional<TorsionReport> rep;
      for (std::int64_t p = 5; p <= 31; ++p) {
        if (!is_prime(p)) continue;
        const auto cert = certify(p1, p2, p);
        if (!cert.has_bound()) continue;
        if (!rep) rep = common_projective_torsion(p1, p2, 12);
        const long seen = cert.counts_pairs ? rep->pair_count_coprime_to(p) : rep->count_coprime_to(p);
        o.expect(BigInt(seen) <= *cert.bound, specs[i].label + "," + specs[j].label + " at p=" + std::to_string(p));
        ++certified;
      }
    }
  }
  o.expect(certified > 0, "nothing certified");
  o.detail = o.pass ? std::to_string(certified) + " certificates checked" : o.detail;
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    std::string name;
    std::function<Outcome()> run;
    long budget_ms;
  };
  const std::vector<Criterion> criteria{
      {"bound formula replay", check_formulas, 1000},
      {"Witt ring suite", check_witt, 5000},
      {"supersingular classifier vs point counts", check_supersingular, 10000},
      {"division polynomials vs torsion enumeration", check_division_polynomials, 120000},
      {"common torsion vs finite-field oracle", check_common_torsion, 300000},
      {"Frobenius lift soundness and examples", check_frobenius, 180000},
      {"largeness and total bound replay", check_largeness, 1000},
      {"multiplicative reduction pipeline", check_mixed, 10000},
      {"desk-scale soundness", check_soundness, 600000}};
  int failures = 0;
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    const auto start = std::chrono::steady_clock::now();
    Outcome out;
    try {
      out = criteria[k].run();
    } catch (const std::exception& e) {
      out.pass = false;
      out.detail = std::string("exception: ") + e.what();
    }
    const auto ms =
        std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
    if (out.pass && ms > criteria[k].budget_ms) {
      out.pass = false;
      out.detail = "over the " + std::to_string(criteria[k].budget_ms) + " ms budget";
    }
    if (!out.pass) ++failures;
    std::cout << "criterion " << (k + 1) << ": " << (out.pass ? "PASS" : "FAIL") << "  " << criteria[k].name << " ("
              << ms << " ms)";
    if (!out.detail.empty()) std::cout << "  [" << out.detail << "]";
    std::cout << std::endl;
  }
  return failures == 0 ? 0 : 1;
}
