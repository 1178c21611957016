#include "tpb/canonical_frobenius.hpp"

namespace tpb {

namespace {

std::size_t binom2(int n) { return static_cast<std::size_t>(n) * static_cast<std::size_t>(n - 1) / 2; }

Cubic to_modulus(const Cubic& f, std::int64_t m) {
  return map_coeffs(f, ModInt(0, m), [m](const ModInt& v) { return ModInt(v.value(), m); });
}

void require_lift_prime(std::int64_t p) {
  require_prime(p);
  if (p < 5) fail(ErrorCode::UnsupportedPrime, "Frobenius lift test needs p >= 5");
}

// Column layout: [e1 (optional, 10)] [f'_x] [f'_y] [f'_z] [c].
struct SystemLayout {
  int p;
  bool with_e1;
  std::size_t e1_cols() const { return with_e1 ? monomial_count(3) : 0; }
  std::size_t fp_cols() const { return monomial_count(p); }
  std::size_t c_cols() const { return monomial_count(3 * p - 3); }
  std::size_t f_offset(int v) const { return e1_cols() + static_cast<std::size_t>(v) * fp_cols(); }
  std::size_t c_offset() const { return e1_cols() + 3 * fp_cols(); }
  std::size_t cols() const { return c_offset() + c_cols(); }
  std::size_t rows() const { return monomial_count(3 * p); }
};

LinearSystem build_system(const LiftProblem& pr, bool with_e1) {
  const int p = static_cast<int>(pr.p);
  const SystemLayout lay{p, with_e1};
  LinearSystem sys(pr.p, static_cast<Eigen::Index>(lay.rows()), static_cast<Eigen::Index>(lay.cols()));
  const int dd = 3 * p;
  auto row = [dd](const Monomial& m) { return static_cast<Eigen::Index>(monomial_index(dd, m[0], m[1])); };
  auto add = [&](Eigen::Index r, std::size_t c, std::int64_t v) {
    auto& cell = sys.matrix(r, static_cast<Eigen::Index>(c));
    cell = normalize_mod(cell + v, pr.p);
  };
  if (with_e1) {
    const auto ms = monomials(3);
    for (std::size_t j = 0; j < ms.size(); ++j) add(row({ms[j][0] * p, ms[j][1] * p, ms[j][2] * p}), j, 1);
  }
  const auto mp = monomials(p);
  const auto m2p = monomials(2 * p);
  for (int v = 0; v < 3; ++v) {
    const Cubic g = pr.e_bar.partial(v).inflate(p);
    for (std::size_t k = 0; k < m2p.size(); ++k) {
      const std::int64_t gv = g.coeffs()[k].value();
      if (gv == 0) continue;
      for (std::size_t j = 0; j < mp.size(); ++j)
        add(row({m2p[k][0] + mp[j][0], m2p[k][1] + mp[j][1], m2p[k][2] + mp[j][2]}), lay.f_offset(v) + j, gv);
    }
  }
  const auto m3 = monomials(3);
  const auto mc = monomials(3 * p - 3);
  for (std::size_t k = 0; k < m3.size(); ++k) {
    const std::int64_t ev = pr.e_bar.coeffs()[k].value();
    if (ev == 0) continue;
    for (std::size_t j = 0; j < mc.size(); ++j)
      add(row({m3[k][0] + mc[j][0], m3[k][1] + mc[j][1], m3[k][2] + mc[j][2]}), lay.c_offset() + j, -ev);
  }
  const auto md = monomials(dd);
  for (std::size_t k = 0; k < md.size(); ++k)
    sys.rhs(static_cast<Eigen::Index>(k)) = normalize_mod(-pr.defect.coeffs()[k].value(), pr.p);
  return sys;
}

Cubic form_from(const FpVector& x, std::size_t offset, int degree, std::int64_t p) {
  Cubic f(degree, ModInt(0, p));
  const auto ms = monomials(degree);
  for (std::size_t j = 0; j < ms.size(); ++j) f.set_coeff(ms[j], ModInt(x(static_cast<Eigen::Index>(offset + j)), p));
  return f;
}

}  // namespace

TernaryForm<ModInt> reduce_ternary(const TernaryForm<Rational>& e, std::int64_t modulus) {
  return map_coeffs(e, ModInt(0, modulus), [modulus](const Rational& v) { return ModInt(reduce_mod(v, modulus), modulus); });
}

TernaryForm<Rational> weierstrass_cubic(const WeierstrassCurve& e) {
  TernaryForm<Rational> f(3, Rational(0));
  f.set_coeff({0, 2, 1}, Rational(1));
  f.set_coeff({1, 1, 1}, e.a1);
  f.set_coeff({0, 1, 2}, e.a3);
  f.set_coeff({3, 0, 0}, Rational(-1));
  f.set_coeff({2, 0, 1}, Rational(-e.a2));
  f.set_coeff({1, 0, 2}, Rational(-e.a4));
  f.set_coeff({0, 0, 3}, Rational(-e.a6));
  return f;
}

bool is_smooth_cubic(const Cubic& e_bar) {
  const std::int64_t p = e_bar.zero().modulus();
  require_lift_prime(p);
  if (e_bar.degree() != 3) fail(ErrorCode::InvalidArgument, "expected a cubic form");
  if (e_bar.is_zero()) return false;
  // Singular cubics have a singular point over F_{p^2} unless they are a triangle
  // of conjugate lines over F_{p^3}, which has no F_p-point; smooth cubics always have one.
  const auto field = FqField::make(p, 2);
  const auto lift = [&](const Cubic& f) {
    return map_coeffs(f, GFq(field), [&](const ModInt& v) { return GFq(field, v.value()); });
  };
  const std::array<TernaryForm<GFq>, 3> grad{lift(e_bar.partial(0)), lift(e_bar.partial(1)), lift(e_bar.partial(2))};
  const TernaryForm<GFq> eq = lift(e_bar);
  std::vector<GFq> elems;
  const long q2 = p * p;
  for (long i = 0; i < q2; ++i) elems.emplace_back(field, std::vector<std::int64_t>{i % p, i / p});
  const GFq one(field, 1), zero(field, 0);
  bool rational_point = false;
  auto visit = [&](const GFq& x, const GFq& y, const GFq& z) {
    if (!rational_point && x.in_prime_field() && y.in_prime_field() && z.in_prime_field() && eq(x, y, z).is_zero())
      rational_point = true;
    return grad[0](x, y, z).is_zero() && grad[1](x, y, z).is_zero() && grad[2](x, y, z).is_zero();
  };
  for (const auto& x : elems)
    for (const auto& y : elems)
      if (visit(x, y, one)) return false;
  for (const auto& x : elems)
    if (visit(x, one, zero)) return false;
  if (visit(one, zero, zero)) return false;
  return rational_point;
}

ModInt cubic_hasse_invariant(const Cubic& e_bar) {
  const std::int64_t p = e_bar.zero().modulus();
  const int k = static_cast<int>(p - 1);
  return e_bar.pow(static_cast<unsigned>(k)).coeff(k, k, k);
}

LiftProblem assemble_defect(const Cubic& e_mod_p2, std::int64_t p) {
  require_lift_prime(p);
  if (e_mod_p2.zero().modulus() != p * p) fail(ErrorCode::RingMismatch, "lift problem needs a form over Z/p^2");
  if (e_mod_p2.degree() != 3) fail(ErrorCode::InvalidArgument, "expected a cubic form");
  LiftProblem out{p, e_mod_p2, to_modulus(e_mod_p2, p), Cubic(3 * static_cast<int>(p), ModInt(0, p))};
  if (!is_smooth_cubic(out.e_bar)) fail(ErrorCode::SingularReduction, "cubic is singular mod " + std::to_string(p));
  const Cubic diff = e_mod_p2.inflate(static_cast<int>(p)) - e_mod_p2.pow(static_cast<unsigned>(p));
  out.defect = map_coeffs(diff, ModInt(0, p), [p](const ModInt& v) {
    if (v.value() % p != 0) fail(ErrorCode::Internal, "Frobenius defect not divisible by p");
    return ModInt(v.value() / p, p);
  });
  return out;
}

LiftProblem assemble_defect(const TernaryForm<Rational>& e, std::int64_t p) {
  require_lift_prime(p);
  return assemble_defect(reduce_ternary(e, p * p), p);
}

LiftSolution frobenius_lift_test(const LiftProblem& problem) {
  const LinearSystem sys = build_system(problem, false);
  const AffineSolution sol = solve_affine(sys, false);
  LiftSolution out;
  out.unknowns = static_cast<long>(sys.matrix.cols());
  out.equations = static_cast<long>(sys.matrix.rows());
  out.rank = static_cast<long>(sol.rank);
  out.kernel_dimension = static_cast<long>(sol.kernel_dimension);
  out.solvable = sol.solvable;
  if (!sol.solvable) return out;
  const int p = static_cast<int>(problem.p);
  const SystemLayout lay{p, false};
  out.f_prime = std::array<Cubic, 3>{form_from(sol.particular, lay.f_offset(0), p, problem.p),
                                     form_from(sol.particular, lay.f_offset(1), p, problem.p),
                                     form_from(sol.particular, lay.f_offset(2), p, problem.p)};
  out.c = form_from(sol.particular, lay.c_offset(), 3 * p - 3, problem.p);
  return out;
}

bool verify_lift_witness(const LiftProblem& problem, const LiftSolution& solution) {
  if (!solution.solvable || !solution.f_prime || !solution.c) return false;
  const std::int64_t p = problem.p, p2 = p * p;
  const ModInt pp(p, p2);
  std::array<Cubic, 3> g{Cubic(static_cast<int>(p), ModInt(0, p2)), Cubic(static_cast<int>(p), ModInt(0, p2)),
                         Cubic(static_cast<int>(p), ModInt(0, p2))};
  for (int v = 0; v < 3; ++v) {
    Monomial m{0, 0, 0};
    m[static_cast<std::size_t>(v)] = static_cast<int>(p);
    g[static_cast<std::size_t>(v)] = to_modulus((*solution.f_prime)[static_cast<std::size_t>(v)], p2) * pp;
    g[static_cast<std::size_t>(v)].add_coeff(m, ModInt(1, p2));
  }
  const Cubic lhs = problem.e.substitute(g) - problem.e.pow(static_cast<unsigned>(p));
  const Cubic rhs = to_modulus(*solution.c, p2) * problem.e * pp;
  return lhs == rhs;
}

bool CanonicalLiftSpace::contains(const Cubic& e1) const {
  if (!nonempty) return false;
  const Cubic diff = e1 - *e1_particular;
  const auto n = static_cast<Eigen::Index>(monomial_count(3));
  LinearSystem sys(p, n, static_cast<Eigen::Index>(e1_directions.size()));
  for (std::size_t j = 0; j < e1_directions.size(); ++j)
    for (Eigen::Index i = 0; i < n; ++i)
      sys.matrix(i, static_cast<Eigen::Index>(j)) = e1_directions[j].coeffs()[static_cast<std::size_t>(i)].value();
  for (Eigen::Index i = 0; i < n; ++i) sys.rhs(i) = diff.coeffs()[static_cast<std::size_t>(i)].value();
  return solve_affine(sys, false).solvable;
}

CanonicalLiftSpace canonical_lift_space(const Cubic& e0, std::int64_t p) {
  require_lift_prime(p);
  if (e0.zero().modulus() != p) fail(ErrorCode::RingMismatch, "canonical lift space needs a cubic over F_p");
  if (!is_smooth_cubic(e0)) fail(ErrorCode::SingularReduction, "cubic is singular mod " + std::to_string(p));
  if (cubic_hasse_invariant(e0).is_zero()) fail(ErrorCode::NotOrdinary, "cubic is supersingular mod " + std::to_string(p));
  const LiftProblem pr = assemble_defect(to_modulus(e0, p * p), p);
  const LinearSystem sys = build_system(pr, true);
  const AffineSolution sol = solve_affine(sys, true);
  CanonicalLiftSpace out;
  out.p = p;
  out.nonempty = sol.solvable;
  if (!sol.solvable) return out;
  out.e1_particular = form_from(sol.particular, 0, 3, p);
  const auto n = static_cast<Eigen::Index>(monomial_count(3));
  LinearSystem span(p, n, static_cast<Eigen::Index>(sol.kernel.size()));
  for (std::size_t j = 0; j < sol.kernel.size(); ++j) {
    const Cubic d = form_from(sol.kernel[j], 0, 3, p);
    if (d.is_zero()) continue;
    out.e1_directions.push_back(d);
    for (Eigen::Index i = 0; i < n; ++i) span.matrix(i, static_cast<Eigen::Index>(j)) = d.coeffs()[static_cast<std::size_t>(i)].value();
  }
  out.e1_dimension = static_cast<long>(solve_affine(span, false).rank);
  return out;
}

std::string to_string(SplittingTag tag) {
  return tag == SplittingTag::SplitsModP2 ? "SplitsModP2" : "NonSplitModP2";
}

SplittingVerdict splitting_verdict(const WeierstrassCurve& e, std::int64_t p) {
  require_lift_prime(p);
  const ReductionType rt = reduction_type(e, p);
  if (rt.tag != ReductionTag::GoodOrdinary)
    fail(ErrorCode::PreconditionViolated, "splitting verdict needs good ordinary reduction at " + std::to_string(p) +
                                              ", found " + to_string(rt.tag));
  if (p > kMaxSplittingPrime)
    fail(ErrorCode::UnsupportedPrime, "splitting verdicts are computed for p <= " + std::to_string(kMaxSplittingPrime));
  const LiftProblem pr = assemble_defect(weierstrass_cubic(rt.minimal), p);
  SplittingVerdict out;
  out.p = p;
  LiftSolution sol = frobenius_lift_test(pr);
  if (sol.solvable) {
    if (!verify_lift_witness(pr, sol)) fail(ErrorCode::SoundnessAlarm, "Frobenius lift witness failed re-expansion");
    out.tag = SplittingTag::SplitsModP2;
  }
  out.witness = std::move(sol);
  return out;
}

TateParameterCheck tate_parameter_valuation(const WeierstrassCurve& e, std::int64_t p) {
  const ReductionType rt = reduction_type(e, p);
  if (rt.tag != ReductionTag::Multiplicative)
    fail(ErrorCode::PreconditionViolated, "Tate parameter needs multiplicative reduction at " + std::to_string(p) +
                                              ", found " + to_string(rt.tag));
  TateParameterCheck out;
  out.v_q = -rt.v_j.value();
  out.pth_power_necessary = out.v_q == p;
  return out;
}

}  // namespace tpb
