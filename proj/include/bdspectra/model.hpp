#ifndef BDSPECTRA_MODEL_HPP
#define BDSPECTRA_MODEL_HPP

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace bdspectra {

// Population model given by per-capita birth/death rate functions b, d with
// b(0) = d(0) = 0. Built-ins:
//   Logistic: b = lambda x,        d = x (mu + x)
//   AGE:      b = lambda x,        d = x (mu + x^theta),  0 < theta < 1
//   Smith:    b = lambda x/(1+x),  d = x (mu + x)/(1+x)
// Custom models supply b and d directly; derivatives are then taken by
// central differences.
class RateModel {
 public:
  enum class Kind { Logistic, AGE, Smith, Custom };
  using RateFn = std::function<double(double)>;

  static RateModel logistic(double lambda, double mu);
  static RateModel age(double lambda, double mu, double theta);
  static RateModel smith(double lambda, double mu);
  static RateModel custom(RateFn b, RateFn d);

  double b(double x) const;
  double d(double x) const;

  Kind kind() const { return kind_; }
  double lambda() const { return lambda_; }
  double mu() const { return mu_; }
  double theta() const { return theta_; }
  bool has_analytic_derivatives() const { return kind_ != Kind::Custom; }

  // d/dx of b and d; analytic for built-ins, central differences (relative
  // step 1e-6) for Custom. scale sets the absolute step at x = 0.
  double b_prime(double x, double scale = 1.0) const;
  double d_prime(double x, double scale = 1.0) const;

  std::string name() const;

 private:
  RateModel(Kind kind, double lambda, double mu, double theta, RateFn b, RateFn d);

  Kind kind_;
  double lambda_ = 0, mu_ = 0, theta_ = 0;
  RateFn custom_b_, custom_d_;
};

// Derived constants of a model around its two fixed points.
struct ModelConstants {
  double bp0 = 0;      // b'(0)
  double dp0 = 0;      // d'(0)
  double x_star = 0;   // unique positive root of b - d
  double bp_star = 0;  // b'(x*)
  double dp_star = 0;  // d'(x*)
  double b_star = 0;   // b(x*) = d(x*)
  double h2_star = 0;  // H''(x*) = d'/d - b'/b at x*
  double h0 = 0;       // integral of log(b/d) over (0, x*)
  double s1_step = 0;  // d'(x*) - b'(x*)
  double s2_step = 0;  // b'(0) - d'(0)
};

struct AssumptionCheck {
  std::string name;
  bool pass = false;
  // First grid point where the check failed (NaN when it passed).
  double first_offending_x;
  std::string detail;
};

struct AssumptionReport {
  std::vector<AssumptionCheck> checks;
  bool all_pass() const;
  const AssumptionCheck* find(const std::string& name) const;
};

// Scaled jump rates (K b(n/K), K d(n/K)); (0, 0) at n = 0 exactly.
// Throws ModelError if either rate comes out non-finite.
std::pair<double, double> rates_at(const RateModel& model, std::int64_t K, std::int64_t n);

// x* by doubling-search bracket + bisection on b - d, h0 by adaptive
// quadrature, derivatives analytic or by differences.
ModelConstants model_constants(const RateModel& model);

// The unique positive root of b - d (bracket by doubling search from x = 1,
// then bisection). Throws ModelError when no sign change is found below 1e6.
double find_fixed_point(const RateModel& model);

// Samples the standing assumptions on a grid (default: 200 log-spaced points
// in [1e-3, 1e3]). Failures are reported, not thrown.
AssumptionReport check_assumptions(const RateModel& model, const std::vector<double>& grid);
AssumptionReport check_assumptions(const RateModel& model);

std::vector<double> default_assumption_grid();

}  // namespace bdspectra

#endif
