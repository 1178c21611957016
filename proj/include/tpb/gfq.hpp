#pragma once

#include "tpb/scalar.hpp"

#include <cstdint>
#include <memory>
#include <random>
#include <string>
#include <vector>

namespace tpb {

/// The finite field F_{p^m} = F_p[t]/(M(t)). Without an explicit modulus the
/// lexicographically smallest monic irreducible polynomial of degree m is
/// used, so the same (p, m) always yields the same field presentation.
class FqField {
 public:
  static std::shared_ptr<const FqField> make(std::int64_t p, int m);
  static std::shared_ptr<const FqField> with_modulus(std::int64_t p, std::vector<std::int64_t> monic_modulus);

  std::int64_t characteristic() const { return p_; }
  int degree() const { return static_cast<int>(modulus_.size()) - 1; }
  /// Monic modulus, lowest coefficient first.
  const std::vector<std::int64_t>& modulus() const { return modulus_; }
  BigInt order() const { return ipow(p_, static_cast<unsigned long>(degree())); }
  /// Human-readable presentation, e.g. "GF(5^2) = F_5[t]/(t^2+4t+2)".
  std::string describe() const;

 private:
  FqField(std::int64_t p, std::vector<std::int64_t> modulus) : p_(p), modulus_(std::move(modulus)) {}
  std::int64_t p_;
  std::vector<std::int64_t> modulus_;
};

using FqFieldPtr = std::shared_ptr<const FqField>;

bool is_irreducible_mod_p(const std::vector<std::int64_t>& monic, std::int64_t p);

/// Element of F_{p^m}: coordinates in the power basis 1, t, ..., t^{m-1}.
class GFq {
 public:
  GFq() = default;
  explicit GFq(FqFieldPtr field) : field_(std::move(field)), c_(static_cast<std::size_t>(field_->degree()), 0) {}
  GFq(FqFieldPtr field, std::int64_t value);
  GFq(FqFieldPtr field, std::vector<std::int64_t> coords);

  /// The class of t.
  static GFq generator(const FqFieldPtr& field);
  static GFq random(const FqFieldPtr& field, std::mt19937_64& rng);

  const FqFieldPtr& field() const { return field_; }
  std::int64_t characteristic() const { return field_->characteristic(); }
  const std::vector<std::int64_t>& coords() const { return c_; }
  bool is_zero() const;
  /// True when the element lies in the prime field.
  bool in_prime_field() const;
  std::int64_t prime_field_value() const;

  GFq& operator+=(const GFq& o);
  GFq& operator-=(const GFq& o);
  GFq& operator*=(const GFq& o);
  GFq& operator/=(const GFq& o) { return *this *= o.inverse(); }
  friend GFq operator+(GFq a, const GFq& b) { return a += b; }
  friend GFq operator-(GFq a, const GFq& b) { return a -= b; }
  friend GFq operator*(GFq a, const GFq& b) { return a *= b; }
  friend GFq operator/(GFq a, const GFq& b) { return a /= b; }
  GFq operator-() const;
  friend bool operator==(const GFq& a, const GFq& b) { return a.c_ == b.c_ && same_field(a, b); }
  friend bool operator<(const GFq& a, const GFq& b) { return a.c_ < b.c_; }

  GFq inverse() const;
  GFq pow(const BigInt& e) const;
  GFq pow(std::uint64_t e) const { return pow(BigInt(static_cast<unsigned long>(e))); }
  /// x -> x^p.
  GFq frobenius() const { return pow(static_cast<std::uint64_t>(characteristic())); }

  std::string to_string() const;

 private:
  static bool same_field(const GFq& a, const GFq& b);
  void check(const GFq& o) const;

  FqFieldPtr field_;
  std::vector<std::int64_t> c_;
};

inline bool is_zero(const GFq& a) { return a.is_zero(); }
inline GFq from_int_like(const GFq& like, std::int64_t v) { return GFq(like.field(), v); }
inline GFq inverse(const GFq& a) { return a.inverse(); }
inline std::string to_string(const GFq& a) { return a.to_string(); }

}  // namespace tpb
