#pragma once

#include "tpb/factor_q.hpp"
#include "tpb/projection.hpp"
#include "tpb/torsion_ff.hpp"

#include <map>
#include <vector>

namespace tpb {

/// Monic polynomial whose roots are the x-coordinates of the points of exact order n >= 2.
QPoly exact_order_x_poly(const Rational& a, const Rational& b, int n);

/// Images under the projection of the points of exact order n, as a binary form
/// over Q (n = 1 is the origin O).
BinaryForm<Rational> torsion_image_form(const StandardProjection& p, int n);

struct TorsionXLocus {
  QPoly poly;     // squarefree, integral primitive
  bool infinity;  // some torsion point of order <= N maps to (1 : 0)
};
/// Images of all torsion points of order <= N, O included.
TorsionXLocus torsion_x_poly(const StandardProjection& p, int max_order);

struct CommonFactor {
  QPoly factor{Rational(0)};  // monic irreducible over Q
  int multiplicity = 1;
  int degree() const { return factor.degree(); }
  int order1 = 0;  // exact torsion order on the first curve
  int order2 = 0;  // and on the second
};

struct TorsionReport {
  int max_order = 0;
  std::vector<CommonFactor> factors;
  bool infinity_is_common = false;
  int infinity_order1 = 0, infinity_order2 = 0;
  /// Common points of P^1 over Qbar.
  long count = 0;
  /// Pairs (t1, t2) of torsion points with equal image.
  long pair_count = 0;
  /// Common points whose torsion orders on both curves are coprime to p.
  long count_coprime_to(std::int64_t p) const;
  long pair_count_coprime_to(std::int64_t p) const;
};

TorsionReport common_projective_torsion(const StandardProjection& p1, const StandardProjection& p2, int max_order);

struct AuxiliaryPrimeCheck {
  std::int64_t prime;
  bool admissible;
  std::string reason;  // empty when admissible
};
/// Conditions under which reduction mod l preserves the common torsion count.
AuxiliaryPrimeCheck auxiliary_prime_admissible(const StandardProjection& p1, const StandardProjection& p2,
                                               int max_order, std::int64_t l);

/// Common projective images over F_l-bar of the torsion of order <= N, counted
/// from an enumeration of the torsion of both reductions.
long ff_oracle_common(const StandardProjection& p1, const StandardProjection& p2, int max_order, std::int64_t l,
                      EnumerationMode mode = EnumerationMode::Structured);

}  // namespace tpb
