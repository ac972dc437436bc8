// Exact dense linear algebra over Rational, via Eigen with a custom scalar.
#pragma once

#include "dpstab/rational.hpp"
#include "dpstab/tpoly.hpp"

#include <Eigen/Dense>

#include <optional>
#include <vector>

namespace dpstab {

using MatQ = Eigen::Matrix<Rational, Eigen::Dynamic, Eigen::Dynamic>;
using VecQ = Eigen::Matrix<Rational, Eigen::Dynamic, 1>;

inline int rank_exact(const MatQ& a) {
  if (a.rows() == 0 || a.cols() == 0) return 0;
  Eigen::FullPivLU<MatQ> lu(a);
  lu.setThreshold(Rational(0));
  return static_cast<int>(lu.rank());
}

// Solves A x = b exactly; nullopt if inconsistent.
inline std::optional<VecQ> solve_exact(const MatQ& a, const VecQ& b) {
  if (a.cols() == 0) {
    for (Eigen::Index i = 0; i < b.size(); ++i)
      if (!b(i).is_zero()) return std::nullopt;
    return VecQ(0);
  }
  Eigen::FullPivLU<MatQ> lu(a);
  lu.setThreshold(Rational(0));
  VecQ x = lu.solve(b);
  VecQ r = a * x - b;
  for (Eigen::Index i = 0; i < r.size(); ++i)
    if (!r(i).is_zero()) return std::nullopt;
  return x;
}

// Determinant of a square matrix of t-polynomials (fraction-free Bareiss).
TPoly tpoly_det(std::vector<std::vector<TPoly>> m);

}  // namespace dpstab
