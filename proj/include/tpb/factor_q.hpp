#pragma once

#include "tpb/factor_ff.hpp"
#include "tpb/polyq.hpp"

#include <vector>

namespace tpb {

/// Squarefree decomposition over Q (Yun): monic pairwise coprime parts.
std::vector<Factor<Rational>> squarefree_factorization_q(const QPoly& f);

/// Irreducible factors over Z of a squarefree primitive polynomial
/// (Zassenhaus: modular factorization, Hensel lifting, recombination).
std::vector<ZPoly> factor_squarefree_z(const ZPoly& f);

/// Monic irreducible factors over Q with multiplicities, sorted by degree.
std::vector<Factor<Rational>> factor_q(const QPoly& f);

}  // namespace tpb
