#ifndef BDSPECTRA_SIMULATE_HPP
#define BDSPECTRA_SIMULATE_HPP

#include <Eigen/Core>
#include <cstdint>
#include <iosfwd>
#include <variant>
#include <vector>

#include "bdspectra/model.hpp"
#include "bdspectra/qsd.hpp"
#include "bdspectra/rng.hpp"

namespace bdspectra {

struct FixedInitial {
  std::int64_t n = 1;
};

// Initial state drawn from a quasi-stationary law (inverse CDF).
struct QsdInitial {
  Eigen::ArrayXd nu;
};

struct SimulationConfig {
  std::uint64_t seed = 0;
  std::int64_t n_traj = 1;
  double t_max = 0;
  std::variant<FixedInitial, QsdInitial> initial = FixedInitial{};
};

struct TrajectoryResult {
  double extinction_time = 0;  // censoring time when censored
  bool censored = false;
  std::int64_t n_events = 0;
  std::int64_t initial_state = 0;
};

// One exact jump-chain trajectory: exponential holding time with rate
// lambda_n + mu_n, then a birth with probability lambda_n/(lambda_n + mu_n).
// Absorbed at 0.
TrajectoryResult gillespie_trajectory(const RateModel& model, std::int64_t K,
                                      std::uint64_t seed, std::int64_t initial_state,
                                      double t_max);

std::int64_t sample_initial_from_qsd(const Eigen::ArrayXd& nu, SplitMix64& rng);
std::int64_t sample_initial_from_qsd(const QsdResult& qsd, std::uint64_t seed);

struct ExtinctionStats {
  std::vector<double> times;  // per trajectory; censoring time when censored
  std::vector<bool> censored;
  std::vector<std::int64_t> initial_states;
  double mean = 0;    // over uncensored trajectories
  double stderr_ = 0;
  double censored_fraction = 0;
  bool censoring_bias_flag = false;  // censored fraction above 1%
  std::vector<std::pair<double, double>> survival_curve;  // (t, fraction alive)
};

// n_traj independent trajectories with per-trajectory seeds
// seed_i = mix64(cfg.seed, i); bit-identical for a fixed config.
ExtinctionStats extinction_study(const RateModel& model, std::int64_t K,
                                 const SimulationConfig& cfg);

// Least-squares slope of log P(T > t) over the middle two quartiles of the
// uncensored extinction times.
double survival_log_slope(const ExtinctionStats& stats);

void write_times_csv(const ExtinctionStats& stats, std::ostream& out);
void write_survival_csv(const ExtinctionStats& stats, std::ostream& out);

}  // namespace bdspectra

#endif
