#ifndef BDSPECTRA_TRIDIAGONAL_OPERATOR_HPP
#define BDSPECTRA_TRIDIAGONAL_OPERATOR_HPP

#include <Eigen/Core>
#include <cstdint>
#include <iosfwd>

#include "bdspectra/model.hpp"

namespace bdspectra {

// Symmetric tridiagonal form of the killed generator, truncated to states
// 1..N. Arrays are 0-based: diag[n-1] = -(lambda_n + mu_n) and
// offdiag[n-1] = sqrt(lambda_n mu_{n+1}). State 0 (the cemetery) is never
// stored; killing at 0 shows up as the missing coupling below n = 1.
// Immutable after construction.
struct TridiagonalOperator {
  std::int64_t K = 0;
  Eigen::ArrayXd diag;
  Eigen::ArrayXd offdiag;

  Eigen::Index size() const { return diag.size(); }
  double max_abs_diag() const { return diag.abs().maxCoeff(); }

  // Matrix-vector product.
  Eigen::VectorXd apply(const Eigen::Ref<const Eigen::VectorXd>& v) const;
};

struct TruncationSpec {
  Eigen::Index N = 0;
  // Geometric decay rate of the minimal solution at the cut,
  // sqrt(lambda_N / mu_{N+1}); <= 1/2 by construction of choose_truncation.
  double tail_ratio = 0;
};

// Site potential V_n and its uniform lower bound -xi.
struct PotentialProfile {
  Eigen::ArrayXd V;
  double xi = 0;
};

// Smallest N >= 4 K x* with d(N/K)/b(N/K) >= 4, so the eigenvector tails
// contract by at least 1/2 per step at the cut. Hard cap 1e8.
TruncationSpec choose_truncation(const RateModel& model, std::int64_t K);
TruncationSpec choose_truncation(const RateModel& model, std::int64_t K, double x_star);

TridiagonalOperator build_operator(const RateModel& model, std::int64_t K,
                                   const TruncationSpec& trunc);

// V_n = lambda_n + mu_n - sqrt(lambda_n mu_{n+1}) - sqrt(lambda_{n-1} mu_n) 1_{n>1},
// evaluated on the operator's own entries.
PotentialProfile potential_profile(const TridiagonalOperator& op);

// Quadratic (Dirichlet) form of -op:
//   sum_n offdiag_n (phi(n+1)-phi(n))^2 + sum_n V_n phi(n)^2
// which equals -<phi, op phi> exactly for phi supported away from the cut.
double dirichlet_form(const TridiagonalOperator& op,
                      const Eigen::Ref<const Eigen::VectorXd>& phi);

// CSV dump, header "n,diag,offdiag" (offdiag empty on the last row).
void write_operator_csv(const TridiagonalOperator& op, std::ostream& out);

}  // namespace bdspectra

#endif
