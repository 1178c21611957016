#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "support.hpp"

using namespace tpbtest;

namespace {

Cubic cm_cubic(std::int64_t p) { return reduce_ternary(weierstrass_cubic(short_curve(0, 1)), p * p); }

Cubic random_unimodular_change(const Cubic& e, std::int64_t p, std::mt19937_64& rng) {
  const std::int64_t m = p * p;
  while (true) {
    std::array<std::array<std::int64_t, 3>, 3> g{};
    for (auto& row : g)
      for (auto& v : row) v = static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(m));
    const std::int64_t det = g[0][0] * (g[1][1] * g[2][2] - g[1][2] * g[2][1]) -
                             g[0][1] * (g[1][0] * g[2][2] - g[1][2] * g[2][0]) +
                             g[0][2] * (g[1][0] * g[2][1] - g[1][1] * g[2][0]);
    if (det % p == 0) continue;
    const ModInt z(0, m);
    std::array<Cubic, 3> lin{Cubic(1, z), Cubic(1, z), Cubic(1, z)};
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) {
        Monomial mono{0, 0, 0};
        mono[static_cast<std::size_t>(j)] = 1;
        lin[static_cast<std::size_t>(i)].set_coeff(mono, ModInt(g[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)], m));
      }
    return e.substitute(lin);
  }
}

}  // namespace

TEST_CASE("defect fixture at p = 7") {
  const auto pr = assemble_defect(parse_ternary_form("x^3+z^3-y^2*z"), 7);
  CHECK(pr.defect.degree() == 21);
  CHECK(pr.defect.to_string() ==
        "1*x^18*y^2*z + 6*x^18*z^3 + 4*x^15*y^4*z^2 + 6*x^15*y^2*z^4 + 4*x^15*z^6 + 5*x^12*y^6*z^3 + "
        "6*x^12*y^4*z^5 + 1*x^12*y^2*z^7 + 2*x^12*z^9 + 2*x^9*y^8*z^4 + 6*x^9*y^6*z^6 + 5*x^9*y^4*z^8 + "
        "6*x^9*y^2*z^10 + 2*x^9*z^12 + 3*x^6*y^10*z^5 + 6*x^6*y^8*z^7 + 2*x^6*y^6*z^9 + 5*x^6*y^4*z^11 + "
        "1*x^6*y^2*z^13 + 4*x^6*z^15 + 6*x^3*y^12*z^6 + 6*x^3*y^10*z^8 + 6*x^3*y^8*z^10 + 6*x^3*y^6*z^12 + "
        "6*x^3*y^4*z^14 + 6*x^3*y^2*z^16 + 6*x^3*z^18 + 6*y^12*z^9 + 3*y^10*z^11 + 2*y^8*z^13 + 5*y^6*z^15 + "
        "4*y^4*z^17 + 1*y^2*z^19");
}

TEST_CASE("defect agrees with an expansion over Q") {
  for (const char* text : {"x^3+z^3-y^2*z", "x^3 + 2*x*z^2 - y^2*z + x*y*z + 3*z^3", "y^2*z - x^3 + 5*x*z^2 - 7*z^3"}) {
    for (std::int64_t p : {5, 7, 11}) {
      const TernaryForm<Rational> e = parse_ternary_form(text);
      try {
        const auto pr = assemble_defect(e, p);
        const TernaryForm<Rational> diff = e.inflate(static_cast<int>(p)) - e.pow(static_cast<unsigned>(p));
        const auto d = reduce_ternary(diff * Rational(Rational(1) / p), p);
        CHECK(d == pr.defect);
      } catch (const Error& err) {
        CHECK(err.code() == ErrorCode::SingularReduction);
      }
    }
  }
}

TEST_CASE("degenerate cubics are rejected") {
  CHECK_THROWS_AS(assemble_defect(parse_ternary_form("x^3"), 7), Error);
  try {
    assemble_defect(parse_ternary_form("x^3"), 7);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::SingularReduction);
  }
  CHECK_THROWS_AS(assemble_defect(parse_ternary_form("x*y*z"), 5), Error);
  CHECK_THROWS_AS(assemble_defect(parse_ternary_form("y^2*z - x^3"), 5), Error);
}

TEST_CASE("smoothness and Hasse invariant agree with the Weierstrass side") {
  for (std::int64_t p : {5, 7}) {
    for (long a = 0; a < p; ++a)
      for (long b = 0; b < p; ++b) {
        const Cubic e = reduce_ternary(weierstrass_cubic(short_curve(a, b)), p);
        const bool smooth = (4 * a * a * a + 27 * b * b) % p != 0;
        CHECK(is_smooth_cubic(e) == smooth);
        if (smooth) CHECK(cubic_hasse_invariant(e).is_zero() == is_supersingular(ModInt(a, p), ModInt(b, p)));
      }
  }
  // Three lines with a conjugate pair of intersections: singular, though no F_5 point is.
  CHECK_FALSE(is_smooth_cubic(reduce_ternary(parse_ternary_form("x^3 - 2*x*y^2"), 5)));
}

TEST_CASE("CM cubic lifts at p = 7 and 13") {
  for (std::int64_t p : {7, 13}) {
    const auto pr = assemble_defect(cm_cubic(p), p);
    const auto sol = frobenius_lift_test(pr);
    REQUIRE(sol.solvable);
    CHECK(verify_lift_witness(pr, sol));
    CHECK(independent_witness_check(pr, sol));
    CHECK(sol.unknowns == 3 * (p + 1) * (p + 2) / 2 + (3 * p - 1) * (3 * p - 2) / 2);
    CHECK(splitting_verdict(short_curve(0, 1), p).tag == SplittingTag::SplitsModP2);
  }
}

TEST_CASE("witness soundness on perturbed and random cubics") {
  const std::int64_t p = 7, m = 49;
  Cubic e = cm_cubic(p);
  e.add_coeff({2, 1, 0}, ModInt(p, m));
  const auto pr = assemble_defect(e, p);
  const auto sol = frobenius_lift_test(pr);
  if (sol.solvable) {
    CHECK(verify_lift_witness(pr, sol));
    CHECK(independent_witness_check(pr, sol));
  }
  std::mt19937_64 rng(77);
  int solved = 0;
  for (int i = 0; i < 30; ++i) {
    Cubic r(3, ModInt(0, 25));
    for (const auto& mono : monomials(3)) r.set_coeff(mono, ModInt(static_cast<std::int64_t>(rng() % 25), 25));
    Cubic rb = reduce_ternary(map_coeffs(r, Rational(0), [](const ModInt& v) { return Rational(v.value()); }), 5);
    if (!is_smooth_cubic(rb) || cubic_hasse_invariant(rb).is_zero()) continue;
    const auto prr = assemble_defect(r, 5);
    const auto s = frobenius_lift_test(prr);
    if (!s.solvable) continue;
    ++solved;
    CHECK(verify_lift_witness(prr, s));
    CHECK(independent_witness_check(prr, s));
  }
  MESSAGE("solvable random cubics: " << solved);
}

TEST_CASE("tampered witnesses fail verification") {
  const auto pr = assemble_defect(cm_cubic(7), 7);
  auto sol = frobenius_lift_test(pr);
  REQUIRE(sol.solvable);
  sol.c->add_coeff({0, 0, 18}, ModInt(1, 7));
  CHECK_FALSE(verify_lift_witness(pr, sol));
  CHECK_FALSE(independent_witness_check(pr, sol));
}

TEST_CASE("verdict is invariant under unimodular changes") {
  std::mt19937_64 rng(15);
  const std::int64_t p = 7;
  const Cubic base = cm_cubic(p);
  Cubic other = base;
  other.add_coeff({2, 1, 0}, ModInt(p, p * p));
  for (const Cubic& e : {base, other}) {
    const bool expected = frobenius_lift_test(assemble_defect(e, p)).solvable;
    for (int i = 0; i < 5; ++i) {
      const Cubic moved = random_unimodular_change(e, p, rng);
      CHECK(frobenius_lift_test(assemble_defect(moved, p)).solvable == expected);
    }
  }
}

TEST_CASE("splitting verdicts and preconditions") {
  CHECK_THROWS_AS(splitting_verdict(short_curve(0, 1), 5), Error);
  try {
    splitting_verdict(short_curve(0, 1), 5);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::PreconditionViolated);
  }
  CHECK_THROWS_AS(splitting_verdict(short_curve(0, 1), 31), Error);
  bool found_nonsplit = false, found_split = false;
  for (long a = -3; a <= 3 && !(found_nonsplit && found_split); ++a)
    for (long b = -3; b <= 3; ++b) {
      if (4 * a * a * a + 27 * b * b == 0) continue;
      const auto rt = reduction_type(short_curve(a, b), 5);
      if (rt.tag != ReductionTag::GoodOrdinary) continue;
      const auto v = splitting_verdict(short_curve(a, b), 5);
      (v.tag == SplittingTag::NonSplitModP2 ? found_nonsplit : found_split) = true;
      CHECK(v.w_lower_bound() == (v.tag == SplittingTag::SplitsModP2 ? 2 : 1));
      REQUIRE(v.witness.has_value());
      CHECK(v.witness->solvable == (v.tag == SplittingTag::SplitsModP2));
    }
  CHECK(found_nonsplit);
}

TEST_CASE("canonical lift space") {
  const std::int64_t p = 5;
  std::mt19937_64 rng(50);
  int tested = 0;
  while (tested < 50) {
    Cubic e0(3, ModInt(0, p));
    for (const auto& mono : monomials(3)) e0.set_coeff(mono, ModInt(static_cast<std::int64_t>(rng() % p), p));
    if (!is_smooth_cubic(e0) || cubic_hasse_invariant(e0).is_zero()) continue;
    const auto space = canonical_lift_space(e0, p);
    CHECK(space.nonempty);
    REQUIRE(space.e1_particular.has_value());
    CHECK(space.contains(*space.e1_particular));
    ++tested;
  }
  const std::int64_t q = 7;
  const Cubic e0 = reduce_ternary(weierstrass_cubic(short_curve(0, 1)), q);
  const auto space = canonical_lift_space(e0, q);
  CHECK(space.contains(Cubic(3, ModInt(0, q))));
  CHECK_THROWS_AS(canonical_lift_space(reduce_ternary(weierstrass_cubic(short_curve(0, 1)), 5), 5), Error);
}

TEST_CASE("Tate parameter valuation") {
  const auto specs = corpus();
  const auto t1 = tate_parameter_valuation(corpus_entry(specs, "M").curve, 11);
  CHECK(t1.v_q == 11);
  CHECK(t1.pth_power_necessary);
  const WeierstrassCurve e11{rat(0), rat(-1), rat(1), rat(-10), rat(-20)};
  const auto t2 = tate_parameter_valuation(e11, 11);
  CHECK(t2.v_q == 5);
  CHECK_FALSE(t2.pth_power_necessary);
  CHECK_THROWS_AS(tate_parameter_valuation(short_curve(-1, 0), 11), Error);
}
