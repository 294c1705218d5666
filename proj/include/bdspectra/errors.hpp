#ifndef BDSPECTRA_ERRORS_HPP
#define BDSPECTRA_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace bdspectra {

// Rate functions returned something non-finite, or a model violates the
// standing assumptions in a way that blocks a computation.
struct ModelError : std::runtime_error {
  explicit ModelError(const std::string& what) : std::runtime_error(what) {}
};

// Adaptive quadrature failed to reach the requested tolerance.
struct IntegrationError : std::runtime_error {
  explicit IntegrationError(const std::string& what) : std::runtime_error(what) {}
};

// Truncation search exceeded its hard cap.
struct TruncationError : std::runtime_error {
  explicit TruncationError(const std::string& what) : std::runtime_error(what) {}
};

// Eigensolver failure (non-convergence, sign-changing ground state, ...).
struct SolverError : std::runtime_error {
  explicit SolverError(const std::string& what) : std::runtime_error(what) {}
};

// Bad CLI flags or config file.
struct ConfigError : std::runtime_error {
  explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace bdspectra

#endif
