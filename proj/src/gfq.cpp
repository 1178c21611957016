#include "tpb/gfq.hpp"

#include "tpb/poly.hpp"

#include <algorithm>
#include <sstream>

namespace tpb {

namespace {

std::vector<std::int64_t> prime_factors(int n) {
  std::vector<std::int64_t> out;
  for (int d = 2; d * d <= n; ++d) {
    if (n % d != 0) continue;
    out.push_back(d);
    while (n % d == 0) n /= d;
  }
  if (n > 1) out.push_back(n);
  return out;
}

// Increments the non-leading coefficients as a base-p counter; false on wrap.
bool next_candidate(std::vector<std::int64_t>& f, std::int64_t p) {
  for (std::size_t i = 0; i + 1 < f.size(); ++i) {
    if (++f[i] < p) return true;
    f[i] = 0;
  }
  return false;
}

}  // namespace

bool is_irreducible_mod_p(const std::vector<std::int64_t>& monic_coeffs, std::int64_t p) {
  const int m = static_cast<int>(monic_coeffs.size()) - 1;
  if (m < 1) return false;
  if (m == 1) return true;
  const ModInt zero(0, p);
  std::vector<ModInt> cs;
  for (auto c : monic_coeffs) cs.emplace_back(c, p);
  const Poly<ModInt> f(cs, zero);
  const Poly<ModInt> x = Poly<ModInt>::x(zero);
  // Rabin: x^{p^m} = x mod f and gcd(x^{p^{m/r}} - x, f) = 1 for primes r | m.
  std::vector<Poly<ModInt>> frob{x % f};
  for (int i = 1; i <= m; ++i) frob.push_back(powmod(frob.back(), BigInt(static_cast<long>(p)), f));
  if (!(frob[static_cast<std::size_t>(m)] == x % f)) return false;
  for (auto r : prime_factors(m)) {
    const Poly<ModInt> g = euclid_gcd(frob[static_cast<std::size_t>(m / r)] - x, f);
    if (g.degree() != 0) return false;
  }
  return true;
}

FqFieldPtr FqField::make(std::int64_t p, int m) {
  require_prime(p);
  if (m < 1) fail(ErrorCode::InvalidArgument, "extension degree must be positive");
  std::vector<std::int64_t> f(static_cast<std::size_t>(m) + 1, 0);
  f.back() = 1;
  do {
    if (is_irreducible_mod_p(f, p)) return FqFieldPtr(new FqField(p, f));
  } while (next_candidate(f, p));
  fail(ErrorCode::Internal, "no irreducible polynomial found");
}

FqFieldPtr FqField::with_modulus(std::int64_t p, std::vector<std::int64_t> monic_modulus) {
  require_prime(p);
  for (auto& c : monic_modulus) c = normalize_mod(c, p);
  if (monic_modulus.empty() || monic_modulus.back() != 1)
    fail(ErrorCode::InvalidArgument, "field modulus must be monic");
  if (!is_irreducible_mod_p(monic_modulus, p)) fail(ErrorCode::InvalidArgument, "field modulus is reducible");
  return FqFieldPtr(new FqField(p, std::move(monic_modulus)));
}

std::string FqField::describe() const {
  std::ostringstream os;
  os << "GF(" << p_ << '^' << degree() << ") = F_" << p_ << "[t]/(";
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    const auto c = modulus_[static_cast<std::size_t>(i)];
    if (c == 0) continue;
    if (!first) os << '+';
    first = false;
    if (c != 1 || i == 0) os << c;
    if (i > 0) os << 't';
    if (i > 1) os << '^' << i;
  }
  os << ')';
  return os.str();
}

GFq::GFq(FqFieldPtr field, std::int64_t value) : GFq(std::move(field)) {
  if (!c_.empty()) c_[0] = normalize_mod(value, field_->characteristic());
}

GFq::GFq(FqFieldPtr field, std::vector<std::int64_t> coords) : GFq(std::move(field)) {
  if (coords.size() > c_.size()) fail(ErrorCode::InvalidArgument, "too many coordinates for field");
  for (std::size_t i = 0; i < coords.size(); ++i) c_[i] = normalize_mod(coords[i], field_->characteristic());
}

GFq GFq::generator(const FqFieldPtr& field) {
  if (field->degree() == 1) return GFq(field, -field->modulus()[0]);
  GFq g(field);
  g.c_[1] = 1;
  return g;
}

GFq GFq::random(const FqFieldPtr& field, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::int64_t> dist(0, field->characteristic() - 1);
  GFq g(field);
  for (auto& c : g.c_) c = dist(rng);
  return g;
}

bool GFq::same_field(const GFq& a, const GFq& b) {
  return a.field_ == b.field_ ||
         (a.field_ && b.field_ && a.field_->characteristic() == b.field_->characteristic() &&
          a.field_->modulus() == b.field_->modulus());
}

void GFq::check(const GFq& o) const {
  if (!same_field(*this, o)) fail(ErrorCode::RingMismatch, "finite field elements from different fields");
}

bool GFq::is_zero() const {
  return std::all_of(c_.begin(), c_.end(), [](std::int64_t c) { return c == 0; });
}

bool GFq::in_prime_field() const {
  return std::all_of(c_.begin() + (c_.empty() ? 0 : 1), c_.end(), [](std::int64_t c) { return c == 0; });
}

std::int64_t GFq::prime_field_value() const {
  if (!in_prime_field()) fail(ErrorCode::InvalidArgument, "element is not in the prime field");
  return c_.empty() ? 0 : c_[0];
}

GFq& GFq::operator+=(const GFq& o) {
  check(o);
  const auto p = characteristic();
  for (std::size_t i = 0; i < c_.size(); ++i) {
    c_[i] += o.c_[i];
    if (c_[i] >= p) c_[i] -= p;
  }
  return *this;
}

GFq& GFq::operator-=(const GFq& o) {
  check(o);
  const auto p = characteristic();
  for (std::size_t i = 0; i < c_.size(); ++i) {
    c_[i] -= o.c_[i];
    if (c_[i] < 0) c_[i] += p;
  }
  return *this;
}

GFq GFq::operator-() const {
  GFq r = *this;
  const auto p = characteristic();
  for (auto& c : r.c_) c = c == 0 ? 0 : p - c;
  return r;
}

GFq& GFq::operator*=(const GFq& o) {
  check(o);
  const auto p = characteristic();
  const std::size_t m = c_.size();
  if (m == 1) {
    c_[0] = mulmod(c_[0], o.c_[0], p);
    return *this;
  }
  const auto& mod = field_->modulus();
  if (p < (1LL << 24) && m <= 128) {
    // Lazy reduction: partial sums stay below 2^63 for these sizes.
    std::vector<std::int64_t> r(2 * m - 1, 0);
    for (std::size_t i = 0; i < m; ++i) {
      if (c_[i] == 0) continue;
      for (std::size_t j = 0; j < m; ++j) r[i + j] += c_[i] * o.c_[j];
    }
    for (std::size_t i = r.size(); i-- > m;) {
      const std::int64_t c = r[i] % p;
      if (c == 0) continue;
      for (std::size_t j = 0; j < m; ++j) r[i - m + j] -= c * mod[j];
    }
    for (std::size_t i = 0; i < m; ++i) c_[i] = normalize_mod(r[i], p);
    return *this;
  }
  std::vector<__int128> prod(2 * m - 1, 0);
  for (std::size_t i = 0; i < m; ++i) {
    if (c_[i] == 0) continue;
    for (std::size_t j = 0; j < m; ++j) prod[i + j] += static_cast<__int128>(c_[i]) * o.c_[j];
  }
  std::vector<std::int64_t> r(2 * m - 1);
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = static_cast<std::int64_t>(prod[i] % p);
  for (std::size_t i = r.size(); i-- > m;) {
    const std::int64_t c = r[i];
    if (c == 0) continue;
    for (std::size_t j = 0; j < m; ++j) r[i - m + j] = normalize_mod(r[i - m + j] - mulmod(c, mod[j], p), p);
    r[i] = 0;
  }
  std::copy(r.begin(), r.begin() + static_cast<std::ptrdiff_t>(m), c_.begin());
  return *this;
}

GFq GFq::inverse() const {
  if (is_zero()) fail(ErrorCode::InvalidArgument, "inverse of zero in " + field_->describe());
  const auto p = characteristic();
  const ModInt zero(0, p);
  std::vector<ModInt> a, m;
  for (auto c : c_) a.emplace_back(c, p);
  for (auto c : field_->modulus()) m.emplace_back(c, p);
  const auto eg = ext_gcd(Poly<ModInt>(a, zero), Poly<ModInt>(m, zero));
  GFq out(field_);
  for (int i = 0; i <= eg.s.degree(); ++i) out.c_[static_cast<std::size_t>(i)] = eg.s.coeff(i).value();
  return out;
}

GFq GFq::pow(const BigInt& e) const {
  if (e < 0) return inverse().pow(BigInt(-e));
  GFq out(field_, 1);
  for (long i = static_cast<long>(mpz_sizeinbase(e.get_mpz_t(), 2)) - 1; i >= 0; --i) {
    out *= out;
    if (mpz_tstbit(e.get_mpz_t(), static_cast<mp_bitcnt_t>(i))) out *= *this;
  }
  return out;
}

std::string GFq::to_string() const {
  if (field_ && field_->degree() == 1) return std::to_string(c_[0]);
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < c_.size(); ++i) os << (i ? "," : "") << c_[i];
  os << ']';
  return os.str();
}

}  // namespace tpb
