#include "tpb/modint.hpp"

#include <numeric>

namespace tpb {

ModInt ModInt::inverse() const {
  std::int64_t a = v_, b = m_, x0 = 1, x1 = 0;
  while (b != 0) {
    const std::int64_t q = a / b;
    a = std::exchange(b, a - q * b);
    x0 = std::exchange(x1, x0 - q * x1);
  }
  if (a != 1) fail(ErrorCode::InvalidArgument, std::to_string(v_) + " is not a unit mod " + std::to_string(m_));
  return ModInt(x0, m_);
}

ModInt ModInt::pow(std::uint64_t e) const {
  ModInt base = *this, out(1, m_);
  while (e != 0) {
    if (e & 1U) out *= base;
    base *= base;
    e >>= 1U;
  }
  return out;
}

ModInt ModInt::pow(const BigInt& e) const {
  if (e < 0) return inverse().pow(BigInt(-e));
  ModInt out(1, m_);
  for (long i = static_cast<long>(mpz_sizeinbase(e.get_mpz_t(), 2)) - 1; i >= 0; --i) {
    out *= out;
    if (mpz_tstbit(e.get_mpz_t(), static_cast<mp_bitcnt_t>(i))) out *= *this;
  }
  return out;
}

}  // namespace tpb
