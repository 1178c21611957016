#pragma once

#include "tpb/bigint.hpp"
#include "tpb/modint.hpp"

#include <cstdint>
#include <string>

namespace tpb {

// Uniform scalar interface used by the polynomial and linear-algebra templates.
// Every scalar type provides is_zero, from_int_like, inverse and to_string.

inline bool is_zero(const Rational& a) { return sgn(a) == 0; }
inline bool is_zero(const BigInt& a) { return sgn(a) == 0; }
inline bool is_zero(const ModInt& a) { return a.is_zero(); }

inline Rational from_int_like(const Rational&, std::int64_t v) { return Rational(static_cast<long>(v)); }
inline BigInt from_int_like(const BigInt&, std::int64_t v) { return BigInt(static_cast<long>(v)); }
inline ModInt from_int_like(const ModInt& like, std::int64_t v) { return ModInt(v, like.modulus()); }

inline Rational inverse(const Rational& a) {
  if (is_zero(a)) fail(ErrorCode::InvalidArgument, "inverse of zero");
  return Rational(1) / a;
}
inline ModInt inverse(const ModInt& a) { return a.inverse(); }
inline BigInt inverse(const BigInt& a) {
  if (a != 1 && a != -1) fail(ErrorCode::InvalidArgument, "integer " + a.get_str() + " is not a unit");
  return a;
}

inline std::string to_string(const ModInt& a) { return std::to_string(a.value()); }

template <class S>
S zero_like(const S& like) {
  return from_int_like(like, 0);
}
template <class S>
S one_like(const S& like) {
  return from_int_like(like, 1);
}

}  // namespace tpb
