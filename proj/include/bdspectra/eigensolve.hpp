#ifndef BDSPECTRA_EIGENSOLVE_HPP
#define BDSPECTRA_EIGENSOLVE_HPP

#include <Eigen/Core>
#include <cmath>
#include <cstdint>
#include <limits>
#include <vector>

#include "bdspectra/tridiagonal_operator.hpp"

namespace bdspectra {

// Pivot arithmetic for the Sturm counts. Extended accumulates the LDL^T
// pivots in long double, pushing the resolvable-eigenvalue floor from
// ~1e3 ulp(scale) of double down by about three decades; useful when rho_0 is
// exponentially small.
enum class Precision { Standard, Extended };

struct SpectralResult {
  // rho_j >= 0 ascending for model operators (eigenvalues are -rho_j).
  Eigen::ArrayXd rhos;
  std::vector<Eigen::VectorXd> vectors;  // unit l2 norm
  Eigen::ArrayXd residuals;              // ||T phi_j + rho_j phi_j||_2
  // Set when |rho_j| fell under 1e3 ulp(scale): the value is pinned at the
  // resolution floor of the pivot arithmetic and has little relative accuracy.
  std::vector<bool> floor_flag;
  double scale = 0;  // max |diag|

  double spectral_gap() const { return rhos[1] - rhos[0]; }
};

namespace detail {

// Number of eigenvalues of the tridiagonal matrix strictly below x, read off
// the signs of the LDL^T pivots. Tiny pivots are clamped to -pivmin.
template <typename Scalar>
int sturm_count_at(const double* diag, const double* off, Eigen::Index n, Scalar x,
                   Scalar pivmin) {
  int count = 0;
  Scalar q = Scalar(diag[0]) - x;
  if (q < Scalar(0)) ++count;
  for (Eigen::Index i = 1; i < n; ++i) {
    if (std::abs(q) < pivmin) q = -pivmin;
    const Scalar e = Scalar(off[i - 1]);
    q = (Scalar(diag[i]) - x) - (e / q) * e;
    if (q < Scalar(0)) ++count;
  }
  return count;
}

template <typename Scalar>
Scalar sturm_pivmin(const double* off, Eigen::Index n) {
  Scalar max_e2(1);
  for (Eigen::Index i = 0; i + 1 < n; ++i) {
    const Scalar e2 = Scalar(off[i]) * Scalar(off[i]);
    if (e2 > max_e2) max_e2 = e2;
  }
  return std::numeric_limits<Scalar>::min() / std::numeric_limits<Scalar>::epsilon() * max_e2 *
         std::numeric_limits<Scalar>::epsilon();
}

}  // namespace detail

// Eigenvalues of op strictly below x.
int sturm_count(const TridiagonalOperator& op, double x);

// The k algebraically largest eigenvalues -rho_0 >= ... >= -rho_{k-1} by
// index bisection on the Sturm count, eigenvectors by inverse iteration with
// reorthogonalization inside near-degenerate clusters. tol is relative to
// max |diag|.
SpectralResult top_eigenpairs(const TridiagonalOperator& op, int k, double tol = 1e-13,
                              Precision precision = Precision::Standard);

// All eigenvalues (ascending) by cyclic Jacobi rotations on the dense
// symmetrization. Cross-validation oracle for tests; refuses N > 500.
Eigen::ArrayXd dense_oracle(const TridiagonalOperator& op);

}  // namespace bdspectra

#endif
