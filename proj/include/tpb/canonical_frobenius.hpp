#pragma once

#include "tpb/gfq.hpp"
#include "tpb/linear_system.hpp"
#include "tpb/ternary_form.hpp"
#include "tpb/weierstrass.hpp"

#include <array>
#include <optional>
#include <vector>

namespace tpb {

using Cubic = TernaryForm<ModInt>;

/// Coefficients of an integral (p-integral) form reduced into Z/modulus.
TernaryForm<ModInt> reduce_ternary(const TernaryForm<Rational>& e, std::int64_t modulus);
/// y^2 z + a1 x y z + a3 y z^2 - x^3 - a2 x^2 z - a4 x z^2 - a6 z^3.
TernaryForm<Rational> weierstrass_cubic(const WeierstrassCurve& e);

/// No singular point over the algebraic closure of F_p (p >= 5).
bool is_smooth_cubic(const Cubic& e_bar);
/// Coefficient of (xyz)^{p-1} in e^{p-1}; nonzero exactly for ordinary smooth cubics.
ModInt cubic_hasse_invariant(const Cubic& e_bar);

struct LiftProblem {
  std::int64_t p;
  Cubic e;       // over Z/p^2
  Cubic e_bar;   // e mod p
  Cubic defect;  // degree 3p over F_p, e(x^p, y^p, z^p) - e^p = p * defect
};
LiftProblem assemble_defect(const Cubic& e_mod_p2, std::int64_t p);
LiftProblem assemble_defect(const TernaryForm<Rational>& e, std::int64_t p);

struct LiftSolution {
  bool solvable = false;
  std::optional<std::array<Cubic, 3>> f_prime;  // degree p forms over F_p
  std::optional<Cubic> c;                       // degree 3p - 3 over F_p
  long unknowns = 0, equations = 0, rank = 0, kernel_dimension = 0;
};

/// Solves defect + (grad e)(x^p, y^p, z^p) . f' - c e = 0 over F_p.
LiftSolution frobenius_lift_test(const LiftProblem& problem);
/// Re-expands e(f + p f') - e^p - p c e over Z/p^2 and checks that it vanishes.
bool verify_lift_witness(const LiftProblem& problem, const LiftSolution& solution);

/// Solutions (e1, f', c) of the lift equations for e = e_int + p e1, projected to e1.
struct CanonicalLiftSpace {
  std::int64_t p = 0;
  bool nonempty = false;
  std::optional<Cubic> e1_particular;
  std::vector<Cubic> e1_directions;  // spanning set of the e1 directions
  long e1_dimension = 0;
  /// Whether e_int + p e1 admits a Frobenius lift.
  bool contains(const Cubic& e1) const;
};
CanonicalLiftSpace canonical_lift_space(const Cubic& e0, std::int64_t p);

enum class SplittingTag { NonSplitModP2, SplitsModP2 };
std::string to_string(SplittingTag tag);

struct SplittingVerdict {
  std::int64_t p = 0;
  SplittingTag tag = SplittingTag::NonSplitModP2;
  std::optional<LiftSolution> witness;
  /// Serre-Tate valuation certified by the verdict: exactly 1 when non-split, at least 2 otherwise.
  int w_lower_bound() const { return tag == SplittingTag::SplitsModP2 ? 2 : 1; }
};

/// Largest prime for which splitting verdicts are computed.
inline constexpr std::int64_t kMaxSplittingPrime = 23;

/// Connected-etale splitting mod p^2 for a curve with good ordinary reduction at p.
SplittingVerdict splitting_verdict(const WeierstrassCurve& e, std::int64_t p);

struct TateParameterCheck {
  long v_q = 0;
  /// v(q) = p, necessary for q to be a p-th power of a uniformiser.
  bool pth_power_necessary = false;
};
TateParameterCheck tate_parameter_valuation(const WeierstrassCurve& e, std::int64_t p);

}  // namespace tpb
