#ifndef BDSPECTRA_QSD_HPP
#define BDSPECTRA_QSD_HPP

#include <Eigen/Core>
#include <cstdint>
#include <iosfwd>

#include "bdspectra/eigensolve.hpp"
#include "bdspectra/model.hpp"
#include "bdspectra/tridiagonal_operator.hpp"

namespace bdspectra {

// Reversibility weights pi_n = lambda_1...lambda_{n-1} / (mu_1...mu_n), kept
// in log space: they span hundreds of orders of magnitude already at K ~ 50.
// log_pi[n-1] = log pi_n.
struct PiWeights {
  Eigen::ArrayXd log_pi;
};

PiWeights pi_weights(const RateModel& model, std::int64_t K, Eigen::Index N);

struct QsdResult {
  Eigen::ArrayXd nu;  // quasi-stationary law on states 1..N, sums to 1
  double rho0 = 0;
  bool rho0_floor = false;
  double mean_T_exact = 0;       // 1 / rho0
  double mean_T_asymptotic = 0;  // closed-form large-K approximation
  double ratio = 0;              // asymptotic / exact
};

// nu_n proportional to sqrt(pi_n) phi_0(n), evaluated in log space with a
// single max-shift, sign fixed so the ground state is positive. Throws
// SolverError if the ground vector genuinely changes sign.
QsdResult qsd_from_ground_state(const TridiagonalOperator& op, const SpectralResult& spec,
                                const PiWeights& pi);

// Large-K mean extinction time from the quasi-stationary law:
//   sqrt(2 pi) e^{K h0} / ( b* (sqrt(b/d) - sqrt(d/b))|_{1/K} sqrt(K H''(x*)) )
// computed in log space. Throws ModelError if b(1/K) <= d(1/K).
double mean_extinction_asymptotic(const ModelConstants& consts, const RateModel& model,
                                  std::int64_t K);
double log_mean_extinction_asymptotic(const ModelConstants& consts, const RateModel& model,
                                      std::int64_t K);

void write_qsd_csv(const QsdResult& qsd, std::ostream& out);
// {"K":..., "rho0":..., "mean_T_exact":..., "mean_T_asymptotic":..., "ratio":...}
void write_qsd_summary_json(const QsdResult& qsd, std::int64_t K, std::ostream& out);

}  // namespace bdspectra

#endif
