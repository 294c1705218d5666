#ifndef BDSPECTRA_NUMERICS_HPP
#define BDSPECTRA_NUMERICS_HPP

#include <functional>
#include <string>

namespace bdspectra {

// Adaptive Gauss-Legendre quadrature of f over (a, b) to absolute tolerance
// abs_tol. Endpoints are never evaluated (all nodes are interior), so
// integrands with removable endpoint singularities are fine.
double integrate_adaptive(const std::function<double(double)>& f, double a, double b,
                          double abs_tol);

// Root of f on [a, b] by bisection; requires a sign change.
double bisect_root(const std::function<double(double)>& f, double a, double b,
                   double x_rel_tol);

// Shortest round-trip decimal for a double (std::to_chars), used everywhere a
// float goes into CSV/JSON so reruns are byte-identical.
std::string format_double(double x);

// Runs fn(i) for i in [0, n). Thread count is capped by the BD_SPECTRA_THREADS
// environment variable (default: hardware concurrency). fn must be safe to
// call concurrently for distinct i.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn);

}  // namespace bdspectra

#endif
