#pragma once

#include "tpb/factor_ff.hpp"
#include "tpb/weierstrass.hpp"

#include <map>
#include <vector>

namespace tpb {

enum class EnumerationMode {
  /// Builds a basis of E[n] inside E(F_{q^k}) for the smallest sufficient k.
  Structured,
  /// Scans every x in F_{q^j}, j <= max_extension, and orders points by the group law.
  BruteForce,
};

/// Torsion of y^2 = x^3 + a x + b over the algebraic closure of F_q, recorded
/// as minimal polynomials over F_q of the x-coordinates, grouped by exact order.
struct FfTorsion {
  std::int64_t q = 0;
  int max_order = 0;
  EnumerationMode mode = EnumerationMode::Structured;
  std::map<int, std::vector<Poly<ModInt>>> x_minpolys;
  /// Structured mode: degree k of the field F_{q^k} that holds E[n].
  std::map<int, int> field_degree;
  /// Orders divisible by q are not enumerated.
  std::vector<int> skipped_orders;
  /// Orders whose points were not all found (brute force beyond the extension cap).
  std::vector<int> incomplete_orders;
  bool complete() const { return skipped_orders.empty() && incomplete_orders.empty(); }

  /// Distinct x-coordinates of exact order n.
  int x_count(int n) const;
  /// Minimal polynomials for all orders d | n with d >= 2.
  std::vector<Poly<ModInt>> dividing(int n) const;
};

/// Number of points of exact order n in (Z/n)^2 (Jordan's totient J_2).
long exact_order_count(int n);

FfTorsion torsion_enumerate_ff(const ModInt& a, const ModInt& b, int max_order,
                               EnumerationMode mode = EnumerationMode::Structured, int max_extension = 6);

/// E(F_{q^k}) order from the trace of Frobenius over F_q.
BigInt group_order_extension(std::int64_t q, std::int64_t trace, int k);

}  // namespace tpb
