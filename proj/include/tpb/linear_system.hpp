#pragma once

#include <Eigen/Dense>

#include <cstdint>
#include <vector>

namespace tpb {

using FpMatrix = Eigen::Matrix<std::int64_t, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
using FpVector = Eigen::Matrix<std::int64_t, Eigen::Dynamic, 1>;

/// A x = b over F_p; entries are kept reduced in [0, p).
struct LinearSystem {
  std::int64_t p = 0;
  FpMatrix matrix;
  FpVector rhs;

  LinearSystem() = default;
  LinearSystem(std::int64_t prime, Eigen::Index rows, Eigen::Index cols)
      : p(prime), matrix(FpMatrix::Zero(rows, cols)), rhs(FpVector::Zero(rows)) {}
};

struct AffineSolution {
  bool solvable = false;
  FpVector particular;
  /// Basis of the homogeneous kernel (empty when not requested or trivial).
  std::vector<FpVector> kernel;
  Eigen::Index rank = 0;
  Eigen::Index kernel_dimension = 0;
};

/// Gaussian elimination to reduced row echelon form. When solvable, the
/// particular solution has zeros in all free coordinates.
AffineSolution solve_affine(const LinearSystem& system, bool want_kernel = true);

/// (A x) mod p.
FpVector apply_mod(const FpMatrix& a, const FpVector& x, std::int64_t p);

}  // namespace tpb
