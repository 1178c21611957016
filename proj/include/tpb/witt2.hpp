#pragma once

#include "tpb/bigint.hpp"
#include "tpb/error.hpp"
#include "tpb/scalar.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace tpb {

/// binom(p, i) / p reduced mod p, for i = 0..p.
std::vector<std::int64_t> witt_carry_coefficients(std::int64_t p);

template <class A>
A power(const A& a, std::uint64_t e) {
  A out = one_like(a), b = a;
  while (e != 0) {
    if (e & 1U) out = out * b;
    e >>= 1U;
    if (e != 0) b = b * b;
  }
  return out;
}

/// Length-2 Witt vector (a0, a1) over a coefficient ring A of characteristic p.
template <class A>
class W2 {
 public:
  W2(A a0, A a1, std::int64_t p) : a0_(std::move(a0)), a1_(std::move(a1)), p_(p) {}

  /// (a, 0).
  static W2 teichmuller(const A& a, std::int64_t p) { return W2(a, zero_like(a), p); }
  static W2 zero(const A& like, std::int64_t p) { return W2(zero_like(like), zero_like(like), p); }
  static W2 one(const A& like, std::int64_t p) { return W2(one_like(like), zero_like(like), p); }

  const A& a0() const { return a0_; }
  const A& a1() const { return a1_; }
  std::int64_t p() const { return p_; }

  friend W2 operator+(const W2& x, const W2& y) {
    x.check(y);
    A carry = zero_like(x.a0_);
    const std::uint64_t p = static_cast<std::uint64_t>(x.p_);
    const auto coeff = witt_carry_coefficients(x.p_);
    for (std::uint64_t i = 1; i < p; ++i) {
      const std::int64_t k = coeff[i];
      if (k == 0) continue;
      carry = carry + power(x.a0_, i) * power(y.a0_, p - i) * from_int_like(x.a0_, k);
    }
    return W2(x.a0_ + y.a0_, x.a1_ + y.a1_ - carry, x.p_);
  }
  friend W2 operator*(const W2& x, const W2& y) {
    x.check(y);
    const auto p = static_cast<std::uint64_t>(x.p_);
    return W2(x.a0_ * y.a0_, power(x.a0_, p) * y.a1_ + power(y.a0_, p) * x.a1_, x.p_);
  }
  /// Additive inverse; componentwise for odd p.
  W2 operator-() const {
    if (p_ == 2) fail(ErrorCode::UnsupportedPrime, "Witt negation implemented for odd p only");
    return W2(-a0_, -a1_, p_);
  }
  friend W2 operator-(const W2& x, const W2& y) { return x + (-y); }
  friend bool operator==(const W2& x, const W2& y) { return x.p_ == y.p_ && x.a0_ == y.a0_ && x.a1_ == y.a1_; }

  /// (a0^p, a1^p).
  W2 frobenius() const {
    const auto p = static_cast<std::uint64_t>(p_);
    return W2(power(a0_, p), power(a1_, p), p_);
  }

  /// n-fold sum by double-and-add.
  W2 times(std::uint64_t n) const {
    W2 out = zero(a0_, p_), b = *this;
    while (n != 0) {
      if (n & 1U) out = out + b;
      n >>= 1U;
      if (n != 0) b = b + b;
    }
    return out;
  }

  std::string to_string() const { return "(" + tpb::to_string(a0_) + "," + tpb::to_string(a1_) + ")"; }

 private:
  void check(const W2& o) const {
    if (o.p_ != p_) fail(ErrorCode::RingMismatch, "Witt vectors over different characteristics");
  }

  A a0_, a1_;
  std::int64_t p_;
};

}  // namespace tpb
