#pragma once

#include "tpb/poly.hpp"

#include <vector>

namespace tpb {

using QPoly = Poly<Rational>;
using ZPoly = Poly<BigInt>;
using FpPoly = Poly<ModInt>;

inline const Rational kQ{0};
inline const BigInt kZ{0};

QPoly qpoly(std::initializer_list<long> coeffs_low_first);
QPoly to_qpoly(const ZPoly& f);

BigInt content(const ZPoly& f);
/// Integral primitive multiple of f with positive leading coefficient.
ZPoly primitive_part(const QPoly& f);
ZPoly primitive_part(const ZPoly& f);

/// Pseudo-remainder lc(b)^{deg a - deg b + 1} a mod b over Z.
ZPoly pseudo_rem(const ZPoly& a, const ZPoly& b);
/// Exact quotient a / b over Z; throws when b does not divide a.
ZPoly exact_div(const ZPoly& a, const ZPoly& b);
bool divides(const ZPoly& b, const ZPoly& a);

/// Monic gcd over Q via content stripping and the subresultant remainder sequence.
QPoly poly_gcd(const QPoly& f, const QPoly& g);
/// Monic gcd over a prime field.
FpPoly poly_gcd(const FpPoly& f, const FpPoly& g);

/// Monic squarefree part over Q (same roots, all simple).
QPoly squarefree_part(const QPoly& f);

/// Reduction of a p-integral rational polynomial mod p.
FpPoly reduce_mod_p(const QPoly& f, std::int64_t p);
FpPoly reduce_mod_p(const ZPoly& f, std::int64_t p);

/// Determinant by fraction-free Gaussian elimination over Z.
BigInt determinant(std::vector<std::vector<BigInt>> m);

}  // namespace tpb
