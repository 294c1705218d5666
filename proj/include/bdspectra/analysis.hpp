#ifndef BDSPECTRA_ANALYSIS_HPP
#define BDSPECTRA_ANALYSIS_HPP

#include <Eigen/Core>
#include <cstdint>
#include <iosfwd>
#include <vector>

#include "bdspectra/eigensolve.hpp"
#include "bdspectra/limit_spectra.hpp"
#include "bdspectra/model.hpp"
#include "bdspectra/tridiagonal_operator.hpp"

namespace bdspectra {

// rho_j^(K) against the merged limit values eta_j over a ladder of K.
struct ConvergenceReport {
  std::vector<std::int64_t> K_list;
  int j_max = 0;
  MergedSequence etas;
  // (row j, column index of K)
  Eigen::MatrixXd rho;
  Eigen::MatrixXd abs_err;
};

ConvergenceReport spectrum_convergence(const RateModel& model,
                                       const std::vector<std::int64_t>& K_list, int j_max,
                                       double tol = 1e-13);

void write_convergence_csv(const ConvergenceReport& rep, std::ostream& out);

// Scaled grid around K x*: state n sits at x = (n - K x*)/sqrt(K), step
// functions carry height factor K^{1/4} so the embedding is an l2 isometry.
struct EmbeddingGrid {
  std::int64_t K = 0;
  double x_star = 0;

  double x_of(std::int64_t n) const {
    return (static_cast<double>(n) - static_cast<double>(K) * x_star) / std::sqrt(double(K));
  }
  double scale() const { return std::pow(static_cast<double>(K), 0.25); }
  double step_width() const { return 1.0 / std::sqrt(static_cast<double>(K)); }
};

// Window [n_l, n_r] = [floor((log K)^2), floor(K x* - K^{2/3} log K)] where
// eigenvectors of low-lying eigenvalues are exponentially small.
struct LocalizationReport {
  std::int64_t K = 0;
  int j = 0;
  std::int64_t n_l = 0;
  std::int64_t n_r = 0;
  bool window_empty = false;
  double mid_sup = 0;      // max |phi_j| on [n_l, n_r]; undefined when empty
  double mass_left = 0;    // sum of phi^2 over n < n_l
  double mass_right = 0;   // sum over n > n_r
  double mass_middle = 0;
};

std::int64_t localization_n_l(std::int64_t K);
std::int64_t localization_n_r(std::int64_t K, double x_star);

LocalizationReport localization_report(const SpectralResult& spec, std::int64_t K,
                                       double x_star, int j);

void write_localization_csv(const std::vector<LocalizationReport>& reports, std::ostream& out);

// L2 distance between the step embedding K^{1/4} phi_j restricted to n > n_r
// and the Hermite eigenfunction psi_{n_target}, minimized over the sign.
// Requires right mass >= 0.5 (throws SolverError otherwise: the eigenvector
// is boundary-type).
double compare_bulk_to_hermite(const SpectralResult& spec, const ModelConstants& consts,
                               std::int64_t K, int j, int n_target);

// l2 distance between phi_j restricted to n < n_l (renormalized) and the
// normalized branching eigenvector v_{m_target}, minimized over the sign.
// Requires left mass >= 0.5.
double compare_boundary_to_branching(const SpectralResult& spec, const ModelConstants& consts,
                                     std::int64_t K, int j, int m_target);

struct QuasiEigenvector {
  Eigen::VectorXd v;     // unit l2 norm, padded to the operator size
  double rho = 0;        // target point of the limit spectrum
  double residual = 0;   // ||L v + rho v||
};

// Midpoint sampling of psi_{n_target} on the embedding grid, renormalized;
// certifies an eigenvalue within `residual` of rho = n_target s1_step.
QuasiEigenvector quasi_eigenvector_bulk(const TridiagonalOperator& op,
                                        const ModelConstants& consts, int n_target);

// Branching eigenvector v_m zero-padded to N; rho = m s2_step.
QuasiEigenvector quasi_eigenvector_boundary(const TridiagonalOperator& op,
                                            const ModelConstants& consts, int m_target);

}  // namespace bdspectra

#endif
