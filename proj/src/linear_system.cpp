#include "tpb/linear_system.hpp"

#include "tpb/modint.hpp"

namespace tpb {

AffineSolution solve_affine(const LinearSystem& system, bool want_kernel) {
  const std::int64_t p = system.p;
  const Eigen::Index rows = system.matrix.rows(), cols = system.matrix.cols();
  FpMatrix m(rows, cols + 1);
  m.leftCols(cols) = system.matrix.unaryExpr([p](std::int64_t v) { return normalize_mod(v, p); });
  m.col(cols) = system.rhs.unaryExpr([p](std::int64_t v) { return normalize_mod(v, p); });

  std::vector<Eigen::Index> pivots;
  Eigen::Index r = 0;
  for (Eigen::Index c = 0; c < cols && r < rows; ++c) {
    Eigen::Index piv = r;
    while (piv < rows && m(piv, c) == 0) ++piv;
    if (piv == rows) continue;
    if (piv != r) m.row(piv).swap(m.row(r));
    const std::int64_t inv = ModInt(m(r, c), p).inverse().value();
    for (Eigen::Index j = c; j <= cols; ++j) m(r, j) = mulmod(m(r, j), inv, p);
    for (Eigen::Index i = 0; i < rows; ++i) {
      if (i == r || m(i, c) == 0) continue;
      const std::int64_t f = m(i, c);
      for (Eigen::Index j = c; j <= cols; ++j) {
        if (m(r, j) == 0) continue;
        m(i, j) = normalize_mod(m(i, j) - mulmod(f, m(r, j), p), p);
      }
    }
    pivots.push_back(c);
    ++r;
  }

  AffineSolution out;
  out.rank = r;
  out.kernel_dimension = cols - r;
  for (Eigen::Index i = r; i < rows; ++i)
    if (m(i, cols) != 0) return out;
  out.solvable = true;
  out.particular = FpVector::Zero(cols);
  for (Eigen::Index i = 0; i < r; ++i) out.particular(pivots[static_cast<std::size_t>(i)]) = m(i, cols);
  if (!want_kernel) return out;
  std::vector<bool> is_pivot(static_cast<std::size_t>(cols), false);
  for (auto c : pivots) is_pivot[static_cast<std::size_t>(c)] = true;
  for (Eigen::Index f = 0; f < cols; ++f) {
    if (is_pivot[static_cast<std::size_t>(f)]) continue;
    FpVector v = FpVector::Zero(cols);
    v(f) = 1;
    for (Eigen::Index i = 0; i < r; ++i) v(pivots[static_cast<std::size_t>(i)]) = normalize_mod(-m(i, f), p);
    out.kernel.push_back(std::move(v));
  }
  return out;
}

FpVector apply_mod(const FpMatrix& a, const FpVector& x, std::int64_t p) {
  FpVector out = FpVector::Zero(a.rows());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    std::int64_t acc = 0;
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      if (a(i, j) != 0 && x(j) != 0) acc = normalize_mod(acc + mulmod(a(i, j), x(j), p), p);
    out(i) = acc;
  }
  return out;
}

}  // namespace tpb
