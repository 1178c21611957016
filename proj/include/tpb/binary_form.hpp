#pragma once

#include "tpb/poly.hpp"

#include <utility>
#include <vector>

namespace tpb {

/// Homogeneous F(X, Z) = sum_i c_i X^i Z^{d-i}.
template <class S>
class BinaryForm {
 public:
  BinaryForm(int degree, std::vector<S> coeffs, const S& like) : d_(degree), c_(std::move(coeffs)), zero_(zero_like(like)) {
    if (static_cast<int>(c_.size()) != d_ + 1) c_.resize(static_cast<std::size_t>(d_) + 1, zero_);
  }

  /// Homogenizes f(x) to degree d >= deg f; x = X/Z.
  static BinaryForm from_poly(const Poly<S>& f, int d) {
    if (f.degree() > d) fail(ErrorCode::InvalidArgument, "homogenization degree below polynomial degree");
    std::vector<S> c(static_cast<std::size_t>(d) + 1, f.zero());
    for (int i = 0; i <= f.degree(); ++i) c[static_cast<std::size_t>(i)] = f.coeff(i);
    return BinaryForm(d, std::move(c), f.zero());
  }
  /// The linear form vanishing at (x : z).
  static BinaryForm vanishing_at(const S& x, const S& z) { return BinaryForm(1, {x, -z}, x); }

  int degree() const { return d_; }
  const std::vector<S>& coeffs() const { return c_; }
  const S& coeff(int i) const { return c_[static_cast<std::size_t>(i)]; }
  const S& zero() const { return zero_; }
  bool is_zero() const {
    for (const auto& a : c_)
      if (!tpb::is_zero(a)) return false;
    return true;
  }

  /// F(x, 1).
  Poly<S> dehomogenize() const { return Poly<S>(c_, zero_); }

  /// Multiplicity of (1 : 0) as a root, i.e. the power of Z dividing F.
  int infinity_multiplicity() const {
    int k = 0;
    while (k <= d_ && tpb::is_zero(c_[static_cast<std::size_t>(d_ - k)])) ++k;
    return k;
  }

  S operator()(const S& x, const S& z) const {
    S acc = zero_;
    S zp = one_like(zero_);
    std::vector<S> zpow(static_cast<std::size_t>(d_) + 1, zp);
    for (int i = 1; i <= d_; ++i) zpow[static_cast<std::size_t>(i)] = zpow[static_cast<std::size_t>(i - 1)] * z;
    S xp = one_like(zero_);
    for (int i = 0; i <= d_; ++i) {
      acc = acc + c_[static_cast<std::size_t>(i)] * xp * zpow[static_cast<std::size_t>(d_ - i)];
      xp = xp * x;
    }
    return acc;
  }

  /// F(alpha X + beta Z, gamma X + delta Z).
  BinaryForm substitute(const S& alpha, const S& beta, const S& gamma, const S& delta) const {
    const Poly<S> u(std::vector<S>{beta, alpha}, zero_), v(std::vector<S>{delta, gamma}, zero_);
    std::vector<Poly<S>> upow{Poly<S>::constant(one_like(zero_))}, vpow{Poly<S>::constant(one_like(zero_))};
    for (int i = 1; i <= d_; ++i) {
      upow.push_back(upow.back() * u);
      vpow.push_back(vpow.back() * v);
    }
    Poly<S> acc(zero_);
    for (int i = 0; i <= d_; ++i) {
      if (tpb::is_zero(c_[static_cast<std::size_t>(i)])) continue;
      acc += (upow[static_cast<std::size_t>(i)] * vpow[static_cast<std::size_t>(d_ - i)]) * c_[static_cast<std::size_t>(i)];
    }
    return from_poly(acc, d_);
  }

  friend BinaryForm operator*(const BinaryForm& a, const BinaryForm& b) {
    std::vector<S> c(static_cast<std::size_t>(a.d_ + b.d_) + 1, a.zero_);
    for (int i = 0; i <= a.d_; ++i)
      for (int j = 0; j <= b.d_; ++j)
        c[static_cast<std::size_t>(i + j)] = c[static_cast<std::size_t>(i + j)] + a.coeff(i) * b.coeff(j);
    return BinaryForm(a.d_ + b.d_, std::move(c), a.zero_);
  }
  BinaryForm operator*(const S& s) const {
    BinaryForm r = *this;
    for (auto& a : r.c_) a = a * s;
    return r;
  }

  friend bool operator==(const BinaryForm& a, const BinaryForm& b) { return a.d_ == b.d_ && a.c_ == b.c_; }

  /// True when a = lambda * b for a nonzero scalar lambda.
  friend bool proportional(const BinaryForm& a, const BinaryForm& b) {
    if (a.d_ != b.d_ || a.is_zero() || b.is_zero()) return false;
    for (int i = 0; i <= a.d_; ++i)
      for (int j = i + 1; j <= a.d_; ++j)
        if (!(a.coeff(i) * b.coeff(j) == a.coeff(j) * b.coeff(i))) return false;
    for (int i = 0; i <= a.d_; ++i)
      if (tpb::is_zero(a.coeff(i)) != tpb::is_zero(b.coeff(i))) return false;
    return true;
  }

  std::string to_string() const {
    std::string out;
    for (int i = d_; i >= 0; --i) {
      const S& a = c_[static_cast<std::size_t>(i)];
      if (tpb::is_zero(a)) continue;
      if (!out.empty()) out += " + ";
      out += "(" + tpb::to_string(a) + ")";
      if (i > 0) out += "*X" + (i > 1 ? "^" + std::to_string(i) : std::string());
      if (d_ - i > 0) out += "*Z" + (d_ - i > 1 ? "^" + std::to_string(d_ - i) : std::string());
    }
    return out.empty() ? "0" : out;
  }

 private:
  int d_;
  std::vector<S> c_;
  S zero_;
};

/// Determinant over a field by Gaussian elimination.
template <class S>
S field_determinant(std::vector<std::vector<S>> m, const S& like) {
  const std::size_t n = m.size();
  S det = one_like(like);
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t piv = k;
    while (piv < n && tpb::is_zero(m[piv][k])) ++piv;
    if (piv == n) return zero_like(like);
    if (piv != k) {
      std::swap(m[piv], m[k]);
      det = -det;
    }
    det = det * m[k][k];
    const S inv = inverse(m[k][k]);
    for (std::size_t i = k + 1; i < n; ++i) {
      if (tpb::is_zero(m[i][k])) continue;
      const S f = m[i][k] * inv;
      for (std::size_t j = k; j < n; ++j) m[i][j] = m[i][j] - f * m[k][j];
    }
  }
  return det;
}

/// Sylvester resultant of binary forms taken with their formal degrees: zero
/// exactly when F and G share a projective root over the algebraic closure.
template <class S>
S resultant(const BinaryForm<S>& f, const BinaryForm<S>& g) {
  if (f.is_zero() || g.is_zero()) fail(ErrorCode::UndefinedResultant, "resultant with the zero form");
  const int d = f.degree(), e = g.degree(), n = d + e;
  if (n == 0) return one_like(f.zero());
  std::vector<std::vector<S>> m(static_cast<std::size_t>(n), std::vector<S>(static_cast<std::size_t>(n), f.zero()));
  for (int r = 0; r < e; ++r)
    for (int i = 0; i <= d; ++i) m[static_cast<std::size_t>(r)][static_cast<std::size_t>(r + i)] = f.coeff(d - i);
  for (int r = 0; r < d; ++r)
    for (int i = 0; i <= e; ++i) m[static_cast<std::size_t>(e + r)][static_cast<std::size_t>(r + i)] = g.coeff(e - i);
  return field_determinant(std::move(m), f.zero());
}

}  // namespace tpb
