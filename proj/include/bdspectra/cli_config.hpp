#ifndef BDSPECTRA_CLI_CONFIG_HPP
#define BDSPECTRA_CLI_CONFIG_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "bdspectra/model.hpp"

namespace bdspectra {

// Merged view of config-file values and command-line flags (flags win).
struct CliConfig {
  std::optional<std::string> model;
  std::optional<double> lambda;
  std::optional<double> mu;
  std::optional<double> theta;
  std::optional<std::int64_t> K;
  std::vector<std::int64_t> K_list;
  int num_eigs = 6;
  double tol = 1e-13;
  std::uint64_t seed = 42;
  std::int64_t trajectories = 1000;
  std::optional<double> t_max;
  int eta_count = 7;
  std::string out = "-";
  std::string format = "csv";
};

// Flat key = value text with one optional [model] section. Unknown keys are
// rejected (ConfigError). Recognized keys: model, lambda, mu, theta, K,
// K_list (comma separated), num_eigs, tol, seed, trajectories, t_max, count,
// out, format.
void apply_config_file(CliConfig& cfg, const std::string& path);

// Builds the RateModel named by cfg; throws ConfigError naming the missing
// flag when a required parameter is absent.
RateModel make_model(const CliConfig& cfg);

std::vector<std::int64_t> parse_k_list(const std::string& text);

}  // namespace bdspectra

#endif
