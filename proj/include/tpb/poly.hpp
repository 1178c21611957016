#pragma once

#include "tpb/error.hpp"
#include "tpb/gfq.hpp"
#include "tpb/scalar.hpp"

#include <cstdint>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace tpb {

/// Dense univariate polynomial, lowest degree first. The zero prototype
/// carries the coefficient ring (modulus or field context) so that the zero
/// polynomial still knows where it lives.
template <class S>
class Poly {
 public:
  explicit Poly(const S& like) : zero_(zero_like(like)) {}
  Poly(std::vector<S> coeffs, const S& like) : c_(std::move(coeffs)), zero_(zero_like(like)) { trim(); }

  static Poly constant(const S& c) { return Poly(std::vector<S>{c}, c); }
  static Poly monomial(const S& c, int k) {
    std::vector<S> v(static_cast<std::size_t>(k) + 1, zero_like(c));
    v.back() = c;
    return Poly(std::move(v), c);
  }
  /// The polynomial x over the ring of `like`.
  static Poly x(const S& like) { return monomial(one_like(like), 1); }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<S>& coeffs() const { return c_; }
  const S& zero() const { return zero_; }
  const S& coeff(int i) const {
    return (i < 0 || i >= static_cast<int>(c_.size())) ? zero_ : c_[static_cast<std::size_t>(i)];
  }
  const S& lead() const { return c_.empty() ? zero_ : c_.back(); }
  void set_coeff(int i, const S& v) {
    if (i >= static_cast<int>(c_.size())) c_.resize(static_cast<std::size_t>(i) + 1, zero_);
    c_[static_cast<std::size_t>(i)] = v;
    trim();
  }

  S operator()(const S& x) const {
    S acc = zero_;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
  }

  Poly& operator+=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), zero_);
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] = c_[i] + o.c_[i];
    trim();
    return *this;
  }
  Poly& operator-=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), zero_);
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] = c_[i] - o.c_[i];
    trim();
    return *this;
  }
  Poly& operator*=(const S& s) {
    for (auto& a : c_) a = a * s;
    trim();
    return *this;
  }
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(Poly a, const S& s) { return a *= s; }
  friend Poly operator*(const S& s, Poly a) { return a *= s; }
  Poly operator-() const {
    Poly r = *this;
    for (auto& a : r.c_) a = -a;
    return r;
  }
  friend Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly(a.zero_);
    std::vector<S> out(a.c_.size() + b.c_.size() - 1, a.zero_);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (tpb::is_zero(a.c_[i])) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) out[i + j] = out[i + j] + a.c_[i] * b.c_[j];
    }
    return Poly(std::move(out), a.zero_);
  }
  Poly& operator*=(const Poly& o) { return *this = *this * o; }

  friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }

  std::string to_string(char var = 'x') const {
    if (c_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
      const S& a = c_[static_cast<std::size_t>(i)];
      if (tpb::is_zero(a)) continue;
      if (!first) os << " + ";
      first = false;
      const bool unit = a == one_like(a);
      if (!unit || i == 0) os << (i == 0 ? tpb_str(a) : "(" + tpb_str(a) + ")");
      if (i > 0) os << (unit ? "" : "*") << var;
      if (i > 1) os << '^' << i;
    }
    return os.str();
  }

 private:
  static std::string tpb_str(const S& a) { return tpb::to_string(a); }
  void trim() {
    while (!c_.empty() && tpb::is_zero(c_.back())) c_.pop_back();
  }

  std::vector<S> c_;
  S zero_;
};

/// Division with remainder; the divisor's leading coefficient must be invertible.
template <class S>
std::pair<Poly<S>, Poly<S>> divrem(const Poly<S>& a, const Poly<S>& b) {
  if (b.is_zero()) fail(ErrorCode::InvalidArgument, "polynomial division by zero");
  const int db = b.degree();
  if (a.degree() < db) return {Poly<S>(a.zero()), a};
  const S inv = inverse(b.lead());
  std::vector<S> r = a.coeffs();
  std::vector<S> q(static_cast<std::size_t>(a.degree() - db + 1), a.zero());
  for (int i = a.degree(); i >= db; --i) {
    const S c = r[static_cast<std::size_t>(i)] * inv;
    q[static_cast<std::size_t>(i - db)] = c;
    if (is_zero(c)) continue;
    for (int j = 0; j <= db; ++j) {
      auto& t = r[static_cast<std::size_t>(i - db + j)];
      t = t - c * b.coeffs()[static_cast<std::size_t>(j)];
    }
  }
  r.resize(static_cast<std::size_t>(db));
  return {Poly<S>(std::move(q), a.zero()), Poly<S>(std::move(r), a.zero())};
}

template <class S>
Poly<S> operator/(const Poly<S>& a, const Poly<S>& b) {
  return divrem(a, b).first;
}
template <class S>
Poly<S> operator%(const Poly<S>& a, const Poly<S>& b) {
  return divrem(a, b).second;
}

template <class S>
Poly<S> monic(const Poly<S>& f) {
  if (f.is_zero()) return f;
  return f * inverse(f.lead());
}

template <class S>
Poly<S> derivative(const Poly<S>& f) {
  std::vector<S> d;
  for (int i = 1; i <= f.degree(); ++i) d.push_back(f.coeff(i) * from_int_like(f.zero(), i));
  return Poly<S>(std::move(d), f.zero());
}

/// Monic gcd by the Euclidean algorithm over a field.
template <class S>
Poly<S> euclid_gcd(Poly<S> a, Poly<S> b) {
  if (a.is_zero() && b.is_zero()) fail(ErrorCode::UndefinedGcd, "gcd(0, 0)");
  while (!b.is_zero()) {
    Poly<S> r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return monic(a);
}

/// Extended Euclid: returns (g, s, t) with s*a + t*b = g, g monic.
template <class S>
struct ExtGcd {
  Poly<S> g, s, t;
};

template <class S>
ExtGcd<S> ext_gcd(const Poly<S>& a, const Poly<S>& b) {
  const S& z = a.zero();
  Poly<S> r0 = a, r1 = b;
  Poly<S> s0 = Poly<S>::constant(one_like(z)), s1(z);
  Poly<S> t0(z), t1 = Poly<S>::constant(one_like(z));
  while (!r1.is_zero()) {
    auto [q, r] = divrem(r0, r1);
    r0 = std::exchange(r1, r);
    s0 = std::exchange(s1, s0 - q * s1);
    t0 = std::exchange(t1, t0 - q * t1);
  }
  if (r0.is_zero()) fail(ErrorCode::UndefinedGcd, "gcd(0, 0)");
  const S inv = inverse(r0.lead());
  return {r0 * inv, s0 * inv, t0 * inv};
}

template <class S>
Poly<S> mulmod(const Poly<S>& a, const Poly<S>& b, const Poly<S>& m) {
  return (a * b) % m;
}

/// base^e mod m for e >= 0.
template <class S>
Poly<S> powmod(Poly<S> base, BigInt e, const Poly<S>& m) {
  Poly<S> out = Poly<S>::constant(one_like(m.zero())) % m;
  base = base % m;
  const auto bits = static_cast<long>(mpz_sizeinbase(e.get_mpz_t(), 2));
  if (e == 0) return out;
  for (long i = bits - 1; i >= 0; --i) {
    out = mulmod(out, out, m);
    if (mpz_tstbit(e.get_mpz_t(), static_cast<mp_bitcnt_t>(i))) out = mulmod(out, base, m);
  }
  return out;
}

template <class S>
Poly<S> pow(const Poly<S>& f, unsigned e) {
  Poly<S> out = Poly<S>::constant(one_like(f.zero())), b = f;
  while (e != 0) {
    if (e & 1U) out *= b;
    e >>= 1U;
    if (e != 0) b *= b;
  }
  return out;
}

/// f(g(x)).
template <class S>
Poly<S> compose(const Poly<S>& f, const Poly<S>& g) {
  Poly<S> acc(f.zero());
  for (int i = f.degree(); i >= 0; --i) acc = acc * g + Poly<S>::constant(f.coeff(i));
  return acc;
}

/// Coefficientwise ring change, e.g. reduction of an integral polynomial mod p.
template <class T, class S, class F>
Poly<T> map_coeffs(const Poly<S>& f, const T& like, F&& fn) {
  std::vector<T> out;
  out.reserve(f.coeffs().size());
  for (const auto& a : f.coeffs()) out.push_back(fn(a));
  return Poly<T>(std::move(out), like);
}

}  // namespace tpb

namespace tpb {

// Scalar interface for polynomials, so polynomial rings can serve as
// coefficient rings (e.g. for symbolic Witt vector identities).
template <class S>
bool is_zero(const Poly<S>& f) {
  return f.is_zero();
}
template <class S>
Poly<S> from_int_like(const Poly<S>& like, std::int64_t v) {
  return Poly<S>::constant(from_int_like(like.zero(), v));
}
template <class S>
std::string to_string(const Poly<S>& f) {
  return f.to_string();
}

}  // namespace tpb
