#include "tpb/ternary_form.hpp"

namespace tpb {

std::vector<Monomial> monomials(int d) {
  std::vector<Monomial> out;
  out.reserve(monomial_count(d));
  for (int a = d; a >= 0; --a)
    for (int b = d - a; b >= 0; --b) out.push_back({a, b, d - a - b});
  return out;
}

}  // namespace tpb
