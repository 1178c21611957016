#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

namespace tpb {

using BigInt = mpz_class;
using Rational = mpq_class;

/// p-adic valuation value: an integer or +infinity (the valuation of zero).
class Valuation {
 public:
  constexpr Valuation() = default;
  constexpr explicit Valuation(long v) : value_(v), infinite_(false) {}
  static constexpr Valuation infinity() {
    Valuation v;
    v.infinite_ = true;
    return v;
  }

  constexpr bool is_infinite() const { return infinite_; }
  long value() const;

  friend Valuation operator+(Valuation a, Valuation b) {
    if (a.infinite_ || b.infinite_) return infinity();
    return Valuation(a.value_ + b.value_);
  }
  friend constexpr bool operator==(const Valuation& a, const Valuation& b) {
    return a.infinite_ == b.infinite_ && (a.infinite_ || a.value_ == b.value_);
  }
  friend constexpr std::strong_ordering operator<=>(const Valuation& a, const Valuation& b) {
    if (a.infinite_ || b.infinite_) return a.infinite_ <=> b.infinite_;
    return a.value_ <=> b.value_;
  }

  std::string to_string() const;

 private:
  long value_ = 0;
  bool infinite_ = false;
};

bool is_prime(const BigInt& n);
bool is_prime(std::int64_t n);
void require_prime(std::int64_t p);

/// v_p(r); throws InvalidPrime when p is not prime.
Valuation valuation_p(const Rational& r, std::int64_t p);
Valuation valuation_p(const BigInt& n, std::int64_t p);

BigInt ipow(const BigInt& base, unsigned long exponent);
BigInt ipow(std::int64_t base, unsigned long exponent);

/// Parses "n", "-n", "n/d" exactly; throws SpecError on malformed input or d = 0.
Rational parse_rational(std::string_view text);
std::string to_string(const Rational& r);
std::string to_string(const BigInt& n);

/// r reduced into Z/modulus; the denominator must be a unit modulo `modulus`.
std::int64_t reduce_mod(const Rational& r, std::int64_t modulus);
std::int64_t reduce_mod(const BigInt& n, std::int64_t modulus);

/// Symmetric representative of `value` modulo `modulus` in (-modulus/2, modulus/2].
BigInt symmetric_mod(const BigInt& value, const BigInt& modulus);

}  // namespace tpb
