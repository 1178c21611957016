#pragma once

#include "tpb/bigint.hpp"
#include "tpb/error.hpp"

#include <cstdint>
#include <ostream>

namespace tpb {

inline std::int64_t mulmod(std::int64_t a, std::int64_t b, std::int64_t m) {
  return static_cast<std::int64_t>((static_cast<__int128>(a) * b) % m);
}

inline std::int64_t normalize_mod(std::int64_t a, std::int64_t m) {
  a %= m;
  return a < 0 ? a + m : a;
}

/// Residue class in Z/nZ with the modulus carried at runtime. With a prime
/// modulus this is the prime field F_p; with p^2 it is W_2(F_p) = Z/p^2.
class ModInt {
 public:
  ModInt() = default;
  ModInt(std::int64_t value, std::int64_t modulus) : v_(normalize_mod(value, modulus)), m_(modulus) {}

  std::int64_t value() const { return v_; }
  std::int64_t modulus() const { return m_; }
  bool is_zero() const { return v_ == 0; }

  ModInt& operator+=(const ModInt& o) {
    check(o);
    v_ += o.v_;
    if (v_ >= m_) v_ -= m_;
    return *this;
  }
  ModInt& operator-=(const ModInt& o) {
    check(o);
    v_ -= o.v_;
    if (v_ < 0) v_ += m_;
    return *this;
  }
  ModInt& operator*=(const ModInt& o) {
    check(o);
    v_ = mulmod(v_, o.v_, m_);
    return *this;
  }
  ModInt& operator/=(const ModInt& o) { return *this *= o.inverse(); }

  friend ModInt operator+(ModInt a, const ModInt& b) { return a += b; }
  friend ModInt operator-(ModInt a, const ModInt& b) { return a -= b; }
  friend ModInt operator*(ModInt a, const ModInt& b) { return a *= b; }
  friend ModInt operator/(ModInt a, const ModInt& b) { return a /= b; }
  ModInt operator-() const { return ModInt(v_ == 0 ? 0 : m_ - v_, m_, Raw{}); }

  friend bool operator==(const ModInt& a, const ModInt& b) { return a.v_ == b.v_ && a.m_ == b.m_; }

  ModInt inverse() const;
  ModInt pow(std::uint64_t e) const;
  ModInt pow(const BigInt& e) const;

  friend std::ostream& operator<<(std::ostream& os, const ModInt& a) { return os << a.v_; }

 private:
  struct Raw {};
  ModInt(std::int64_t v, std::int64_t m, Raw) : v_(v), m_(m) {}
  void check(const ModInt& o) const {
    if (o.m_ != m_) fail(ErrorCode::RingMismatch, "moduli " + std::to_string(m_) + " and " + std::to_string(o.m_));
  }

  std::int64_t v_ = 0;
  std::int64_t m_ = 1;
};

}  // namespace tpb
