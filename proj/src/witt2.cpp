#include "tpb/witt2.hpp"

namespace tpb {

std::vector<std::int64_t> witt_carry_coefficients(std::int64_t p) {
  require_prime(p);
  std::vector<std::int64_t> out(static_cast<std::size_t>(p) + 1, 0);
  BigInt binom = 1;
  for (std::int64_t i = 1; i < p; ++i) {
    binom = binom * (p - i + 1) / i;
    out[static_cast<std::size_t>(i)] = reduce_mod(BigInt(binom / p), p);
  }
  return out;
}

}  // namespace tpb
