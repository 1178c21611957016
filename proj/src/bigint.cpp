#include "tpb/bigint.hpp"

#include "tpb/error.hpp"

#include <cctype>

namespace tpb {

long Valuation::value() const {
  if (infinite_) fail(ErrorCode::InvalidArgument, "valuation is infinite");
  return value_;
}

std::string Valuation::to_string() const { return infinite_ ? "inf" : std::to_string(value_); }

bool is_prime(const BigInt& n) { return n >= 2 && mpz_probab_prime_p(n.get_mpz_t(), 40) > 0; }

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

void require_prime(std::int64_t p) {
  if (!is_prime(p)) fail(ErrorCode::InvalidPrime, std::to_string(p) + " is not prime");
}

Valuation valuation_p(const BigInt& n, std::int64_t p) {
  require_prime(p);
  if (n == 0) return Valuation::infinity();
  BigInt m = abs(n);
  const BigInt bp = static_cast<long>(p);
  long v = 0;
  while (mpz_divisible_p(m.get_mpz_t(), bp.get_mpz_t())) {
    m /= bp;
    ++v;
  }
  return Valuation(v);
}

Valuation valuation_p(const Rational& r, std::int64_t p) {
  require_prime(p);
  if (r == 0) return Valuation::infinity();
  return Valuation(valuation_p(r.get_num(), p).value() - valuation_p(r.get_den(), p).value());
}

BigInt ipow(const BigInt& base, unsigned long exponent) {
  BigInt out;
  mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), exponent);
  return out;
}

BigInt ipow(std::int64_t base, unsigned long exponent) { return ipow(BigInt(static_cast<long>(base)), exponent); }

Rational parse_rational(std::string_view text) {
  auto is_int = [](std::string_view s) {
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
    if (s.empty()) return false;
    for (char c : s)
      if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
  };
  const auto slash = text.find('/');
  std::string_view num = text.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
  if (!is_int(num) || !is_int(den) || den.front() == '-' || den.front() == '+')
    fail(ErrorCode::SpecError, "malformed rational '" + std::string(text) + "'");
  if (num.front() == '+') num.remove_prefix(1);
  const BigInt n{std::string(num)}, d{std::string(den)};
  if (d == 0) fail(ErrorCode::SpecError, "zero denominator in '" + std::string(text) + "'");
  Rational r(n, d);
  r.canonicalize();
  return r;
}

std::string to_string(const Rational& r) { return r.get_str(); }
std::string to_string(const BigInt& n) { return n.get_str(); }

std::int64_t reduce_mod(const BigInt& n, std::int64_t modulus) {
  BigInt m = static_cast<long>(modulus);
  BigInt r = n % m;
  if (r < 0) r += m;
  return r.get_si();
}

std::int64_t reduce_mod(const Rational& r, std::int64_t modulus) {
  BigInt m = static_cast<long>(modulus);
  BigInt den_inv;
  if (mpz_invert(den_inv.get_mpz_t(), r.get_den_mpz_t(), m.get_mpz_t()) == 0)
    fail(ErrorCode::InvalidArgument, "denominator of " + r.get_str() + " is not a unit mod " + std::to_string(modulus));
  return reduce_mod(BigInt(r.get_num() * den_inv), modulus);
}

BigInt symmetric_mod(const BigInt& value, const BigInt& modulus) {
  BigInt r = value % modulus;
  if (r < 0) r += modulus;
  if (2 * r > modulus) r -= modulus;
  return r;
}

}  // namespace tpb
