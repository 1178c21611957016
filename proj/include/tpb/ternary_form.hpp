#pragma once

#include "tpb/scalar.hpp"

#include <array>
#include <string>
#include <vector>

namespace tpb {

/// Exponent triple (a, b, c) of x^a y^b z^c.
using Monomial = std::array<int, 3>;

/// Monomials of degree d in graded lexicographic order: x^d, x^{d-1}y, ..., z^d.
std::vector<Monomial> monomials(int d);
inline std::size_t monomial_count(int d) { return static_cast<std::size_t>((d + 1) * (d + 2) / 2); }
inline std::size_t monomial_index(int d, int a, int b) {
  return static_cast<std::size_t>((d - a) * (d - a + 1) / 2 + (d - a - b));
}

/// Homogeneous polynomial of degree d in x, y, z, stored densely in graded lex order.
template <class S>
class TernaryForm {
 public:
  TernaryForm(int degree, const S& like)
      : d_(degree), c_(monomial_count(degree), zero_like(like)), zero_(zero_like(like)) {}

  /// Coordinate form x, y or z for var = 0, 1, 2.
  static TernaryForm variable(int var, const S& like) {
    TernaryForm f(1, like);
    f.c_[static_cast<std::size_t>(var)] = one_like(like);
    return f;
  }
  static TernaryForm constant(const S& c) {
    TernaryForm f(0, c);
    f.c_[0] = c;
    return f;
  }

  int degree() const { return d_; }
  const S& zero() const { return zero_; }
  const std::vector<S>& coeffs() const { return c_; }
  const S& coeff(int a, int b, int c) const {
    if (a < 0 || b < 0 || c < 0 || a + b + c != d_) return zero_;
    return c_[monomial_index(d_, a, b)];
  }
  const S& coeff(const Monomial& m) const { return coeff(m[0], m[1], m[2]); }
  void set_coeff(const Monomial& m, const S& v) { c_[monomial_index(d_, m[0], m[1])] = v; }
  void add_coeff(const Monomial& m, const S& v) {
    auto& t = c_[monomial_index(d_, m[0], m[1])];
    t = t + v;
  }
  bool is_zero() const {
    for (const auto& a : c_)
      if (!tpb::is_zero(a)) return false;
    return true;
  }

  TernaryForm& operator+=(const TernaryForm& o) {
    check_degree(o);
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] = c_[i] + o.c_[i];
    return *this;
  }
  TernaryForm& operator-=(const TernaryForm& o) {
    check_degree(o);
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] = c_[i] - o.c_[i];
    return *this;
  }
  friend TernaryForm operator+(TernaryForm a, const TernaryForm& b) { return a += b; }
  friend TernaryForm operator-(TernaryForm a, const TernaryForm& b) { return a -= b; }
  friend TernaryForm operator*(TernaryForm a, const S& s) {
    for (auto& c : a.c_) c = c * s;
    return a;
  }
  friend TernaryForm operator*(const TernaryForm& a, const TernaryForm& b) {
    TernaryForm out(a.d_ + b.d_, a.zero_);
    const auto ma = monomials(a.d_), mb = monomials(b.d_);
    for (std::size_t i = 0; i < ma.size(); ++i) {
      if (tpb::is_zero(a.c_[i])) continue;
      for (std::size_t j = 0; j < mb.size(); ++j) {
        if (tpb::is_zero(b.c_[j])) continue;
        auto& t = out.c_[monomial_index(out.d_, ma[i][0] + mb[j][0], ma[i][1] + mb[j][1])];
        t = t + a.c_[i] * b.c_[j];
      }
    }
    return out;
  }
  friend bool operator==(const TernaryForm& a, const TernaryForm& b) { return a.d_ == b.d_ && a.c_ == b.c_; }

  TernaryForm pow(unsigned e) const {
    TernaryForm out = constant(one_like(zero_)), base = *this;
    while (e != 0) {
      if (e & 1U) out = out * base;
      e >>= 1U;
      if (e != 0) base = base * base;
    }
    return out;
  }

  /// Partial derivative with respect to variable var.
  TernaryForm partial(int var) const {
    TernaryForm out(d_ > 0 ? d_ - 1 : 0, zero_);
    if (d_ == 0) return out;
    const auto ms = monomials(d_);
    for (std::size_t i = 0; i < ms.size(); ++i) {
      Monomial m = ms[i];
      if (m[static_cast<std::size_t>(var)] == 0 || tpb::is_zero(c_[i])) continue;
      const S k = from_int_like(zero_, m[static_cast<std::size_t>(var)]);
      --m[static_cast<std::size_t>(var)];
      out.add_coeff(m, c_[i] * k);
    }
    return out;
  }

  /// F(g0, g1, g2) for forms g_i of a common degree.
  TernaryForm substitute(const std::array<TernaryForm, 3>& g) const {
    const int e = g[0].degree();
    std::array<std::vector<TernaryForm>, 3> pw;
    for (int v = 0; v < 3; ++v) {
      pw[static_cast<std::size_t>(v)].push_back(constant(one_like(zero_)));
      for (int k = 1; k <= d_; ++k)
        pw[static_cast<std::size_t>(v)].push_back(pw[static_cast<std::size_t>(v)].back() * g[static_cast<std::size_t>(v)]);
    }
    TernaryForm out(d_ * e, zero_);
    const auto ms = monomials(d_);
    for (std::size_t i = 0; i < ms.size(); ++i) {
      if (tpb::is_zero(c_[i])) continue;
      const auto& m = ms[i];
      out += pw[0][static_cast<std::size_t>(m[0])] * pw[1][static_cast<std::size_t>(m[1])] *
             pw[2][static_cast<std::size_t>(m[2])] * c_[i];
    }
    return out;
  }

  /// F(x^k, y^k, z^k).
  TernaryForm inflate(int k) const {
    TernaryForm out(d_ * k, zero_);
    const auto ms = monomials(d_);
    for (std::size_t i = 0; i < ms.size(); ++i) out.set_coeff({ms[i][0] * k, ms[i][1] * k, ms[i][2] * k}, c_[i]);
    return out;
  }

  S operator()(const S& x, const S& y, const S& z) const {
    S acc = zero_;
    const auto ms = monomials(d_);
    for (std::size_t i = 0; i < ms.size(); ++i) {
      if (tpb::is_zero(c_[i])) continue;
      S t = c_[i];
      for (int k = 0; k < ms[i][0]; ++k) t = t * x;
      for (int k = 0; k < ms[i][1]; ++k) t = t * y;
      for (int k = 0; k < ms[i][2]; ++k) t = t * z;
      acc = acc + t;
    }
    return acc;
  }

  std::string to_string() const {
    std::string out;
    const auto ms = monomials(d_);
    static const char* var = "xyz";
    for (std::size_t i = 0; i < ms.size(); ++i) {
      if (tpb::is_zero(c_[i])) continue;
      if (!out.empty()) out += " + ";
      std::string term = tpb::to_string(c_[i]);
      for (int v = 0; v < 3; ++v) {
        const int k = ms[i][static_cast<std::size_t>(v)];
        if (k == 0) continue;
        term += std::string("*") + var[v];
        if (k > 1) term += "^" + std::to_string(k);
      }
      out += term;
    }
    return out.empty() ? "0" : out;
  }

 private:
  void check_degree(const TernaryForm& o) const {
    if (o.d_ != d_) fail(ErrorCode::InvalidArgument, "adding forms of different degrees");
  }

  int d_;
  std::vector<S> c_;
  S zero_;
};

template <class T, class S, class F>
TernaryForm<T> map_coeffs(const TernaryForm<S>& f, const T& like, F&& fn) {
  TernaryForm<T> out(f.degree(), like);
  const auto ms = monomials(f.degree());
  for (std::size_t i = 0; i < ms.size(); ++i) out.set_coeff(ms[i], fn(f.coeffs()[i]));
  return out;
}

}  // namespace tpb
