#pragma once

#include "tpb/binary_form.hpp"
#include "tpb/weierstrass.hpp"

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace tpb {

/// x -> (a x + b) / (c x + d), stored as an integral primitive matrix whose
/// first nonzero entry is positive.
class Mobius {
 public:
  Mobius() : Mobius(1, 0, 0, 1) {}
  Mobius(const Rational& a, const Rational& b, const Rational& c, const Rational& d);
  static Mobius identity() { return Mobius(); }

  const BigInt& a() const { return m_[0]; }
  const BigInt& b() const { return m_[1]; }
  const BigInt& c() const { return m_[2]; }
  const BigInt& d() const { return m_[3]; }
  BigInt det() const { return a() * d() - b() * c(); }

  /// (this o o)(x) = this(o(x)).
  Mobius operator*(const Mobius& o) const;
  Mobius inverse() const;
  friend bool operator==(const Mobius& x, const Mobius& y) { return x.m_ == y.m_; }

  /// Image of the projective point (x : z), returned as a normalized pair.
  std::pair<Rational, Rational> apply(const Rational& x, const Rational& z) const;
  /// The form whose roots are the images of the roots of f.
  BinaryForm<Rational> push(const BinaryForm<Rational>& f) const;
  BinaryForm<ModInt> push_mod(const BinaryForm<ModInt>& f) const;
  std::array<ModInt, 4> reduce(std::int64_t p) const;

  std::string to_string() const;

 private:
  std::array<BigInt, 4> m_;
};

/// Integral primitive scalar multiple with positive leading nonzero coefficient.
BinaryForm<Rational> primitive_form(const BinaryForm<Rational>& f);
/// Monic-at-top normalization over a field (first nonzero coefficient from X^d down is 1).
BinaryForm<ModInt> normalize_form(const BinaryForm<ModInt>& f);

/// A short Weierstrass curve y^2 = x^3 + A x + B with the projection twist o x.
struct StandardProjection {
  std::string label;
  Rational a, b;
  Mobius twist;

  /// Projection m o x of a long Weierstrass model, rewritten on its short model.
  static StandardProjection from_curve(const WeierstrassCurve& e, const Mobius& m, std::string label = {});
  WeierstrassCurve curve() const { return WeierstrassCurve::short_form(a, b); }
};

/// Branch divisor Z (X^3 + A X Z^2 + B Z^3) pushed forward by the twist,
/// scaled to an integral primitive quartic.
BinaryForm<Rational> branch_form(const StandardProjection& p);

struct GenericBranchVerdict {
  bool disjoint;       // resultant nonzero: no common branch point over Qbar
  bool equal_as_sets;  // the branch quartics are proportional
  Rational resultant;
};
GenericBranchVerdict branch_disjoint_generic(const StandardProjection& p1, const StandardProjection& p2);

/// The projection over Z_(p): minimal short model (A', B') and twist m' with
/// x = p^{2k} x', both reduced mod p.
struct LocalModel {
  std::int64_t p;
  long scaling_exponent;  // k
  Rational a, b;          // minimal short model over Q
  Mobius twist;           // m' acting on x'
  ModInt a_bar, b_bar;
  std::array<ModInt, 4> twist_bar;
  bool twist_invertible;  // det m' is a unit at p
  ReductionType reduction;
  /// x'^3 + A' x' + B' mod p.
  Poly<ModInt> cubic_bar() const;
};
LocalModel local_model(const StandardProjection& p, std::int64_t prime);

struct SimplestAssumptionCertificate {
  bool pass;
  BigInt resultant;  // of the integral primitive branch quartics
  Valuation valuation;
  bool twists_invertible;
};
SimplestAssumptionCertificate check_assumption_simplest(const StandardProjection& p1, const StandardProjection& p2,
                                                        std::int64_t p);

/// A point of P^1(F_p) written (x : z).
struct ProjPointFp {
  ModInt x, z;
  std::string to_string() const;
  friend bool operator==(const ProjPointFp& u, const ProjPointFp& v) { return (u.x * v.z - u.z * v.x).is_zero(); }
};

struct SpecialFibreData {
  ReductionTag tag;
  std::optional<ProjPointFp> node_image;
  /// Branch divisor of the normalization (degree 4 if good, 2 if nodal).
  BinaryForm<ModInt> branch;
  /// Its F_p-rational points (all of them in the nodal case).
  std::vector<ProjPointFp> rational_branch_points;
  bool twist_invertible;
};

struct MixedAssumptionReport {
  std::int64_t p;
  std::array<SpecialFibreData, 2> curves;
  bool generic_branch_distinct;    // branch quartics over Q not proportional
  bool special_branch_disjoint;    // normalization branch sets mod p disjoint
  bool nodes_separated;            // node images avoid branch points and each other
  bool twists_invertible;
  int common_branch_points_generic;
  int common_branch_points_special;
  bool pass;
};
MixedAssumptionReport check_assumption_mixed(const StandardProjection& p1, const StandardProjection& p2,
                                             std::int64_t p);

}  // namespace tpb
