#include "bdspectra/model.hpp"

#include <cmath>
#include <limits>
#include <utility>

#include "bdspectra/errors.hpp"
#include "bdspectra/numerics.hpp"

namespace bdspectra {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();
constexpr double kFdRelStep = 1e-6;
constexpr double kBracketMax = 1e6;

void require_positive(double v, const char* name) {
  if (!(v > 0)) throw ModelError(std::string(name) + " must be positive");
}

}  // namespace

RateModel::RateModel(Kind kind, double lambda, double mu, double theta, RateFn b, RateFn d)
    : kind_(kind), lambda_(lambda), mu_(mu), theta_(theta),
      custom_b_(std::move(b)), custom_d_(std::move(d)) {}

RateModel RateModel::logistic(double lambda, double mu) {
  require_positive(lambda, "lambda");
  require_positive(mu, "mu");
  return RateModel(Kind::Logistic, lambda, mu, 0, nullptr, nullptr);
}

RateModel RateModel::age(double lambda, double mu, double theta) {
  require_positive(lambda, "lambda");
  require_positive(mu, "mu");
  if (!(theta > 0 && theta < 1)) throw ModelError("theta must lie in (0, 1)");
  return RateModel(Kind::AGE, lambda, mu, theta, nullptr, nullptr);
}

RateModel RateModel::smith(double lambda, double mu) {
  require_positive(lambda, "lambda");
  require_positive(mu, "mu");
  return RateModel(Kind::Smith, lambda, mu, 0, nullptr, nullptr);
}

RateModel RateModel::custom(RateFn b, RateFn d) {
  if (!b || !d) throw ModelError("custom model needs both rate functions");
  RateModel m(Kind::Custom, 0, 0, 0, std::move(b), std::move(d));
  if (std::abs(m.b(0.0)) > 1e-12 || std::abs(m.d(0.0)) > 1e-12) {
    throw ModelError("custom model must satisfy b(0) = d(0) = 0");
  }
  return m;
}

double RateModel::b(double x) const {
  switch (kind_) {
    case Kind::Logistic:
    case Kind::AGE:
      return lambda_ * x;
    case Kind::Smith:
      return lambda_ * x / (1.0 + x);
    case Kind::Custom:
      return custom_b_(x);
  }
  return kNaN;
}

double RateModel::d(double x) const {
  switch (kind_) {
    case Kind::Logistic:
      return x * (mu_ + x);
    case Kind::AGE:
      return x * (mu_ + std::pow(x, theta_));
    case Kind::Smith:
      return x * (mu_ + x) / (1.0 + x);
    case Kind::Custom:
      return custom_d_(x);
  }
  return kNaN;
}

namespace {

// Central difference away from 0; second-order one-sided at 0 (the rates are
// only defined for x >= 0).
double fd_derivative(const std::function<double(double)>& f, double x, double scale) {
  const double h = kFdRelStep * std::max(std::abs(x), scale);
  if (x > h) {
    return (f(x + h) - f(x - h)) / (2 * h);
  }
  return (4 * f(x + h) - f(x + 2 * h) - 3 * f(x)) / (2 * h);
}

}  // namespace

double RateModel::b_prime(double x, double scale) const {
  switch (kind_) {
    case Kind::Logistic:
    case Kind::AGE:
      return lambda_;
    case Kind::Smith:
      return lambda_ / ((1.0 + x) * (1.0 + x));
    case Kind::Custom:
      return fd_derivative([this](double t) { return b(t); }, x, scale);
  }
  return kNaN;
}

double RateModel::d_prime(double x, double scale) const {
  switch (kind_) {
    case Kind::Logistic:
      return mu_ + 2 * x;
    case Kind::AGE:
      return mu_ + (1.0 + theta_) * std::pow(x, theta_);
    case Kind::Smith:
      return (mu_ + 2 * x + x * x) / ((1.0 + x) * (1.0 + x));
    case Kind::Custom:
      return fd_derivative([this](double t) { return d(t); }, x, scale);
  }
  return kNaN;
}

std::string RateModel::name() const {
  switch (kind_) {
    case Kind::Logistic: return "logistic";
    case Kind::AGE: return "age";
    case Kind::Smith: return "smith";
    case Kind::Custom: return "custom";
  }
  return "?";
}

std::pair<double, double> rates_at(const RateModel& model, std::int64_t K, std::int64_t n) {
  if (K < 1) throw ModelError("rates_at: K must be >= 1");
  if (n < 0) throw ModelError("rates_at: n must be >= 0");
  if (n == 0) return {0.0, 0.0};
  const double x = static_cast<double>(n) / static_cast<double>(K);
  const double lam = static_cast<double>(K) * model.b(x);
  const double mu = static_cast<double>(K) * model.d(x);
  if (!std::isfinite(lam) || !std::isfinite(mu)) {
    throw ModelError("non-finite rate at n=" + std::to_string(n) + ", K=" + std::to_string(K));
  }
  return {lam, mu};
}

double find_fixed_point(const RateModel& model) {
  const auto f = [&](double x) { return model.b(x) - model.d(x); };
  // Doubling search from 1 for the sign change of b - d; b > d near 0 by the
  // standing assumptions, so shrink first if f(1) is already negative.
  double lo = 1.0;
  double f_lo = f(lo);
  if (f_lo == 0) return lo;
  if (f_lo < 0) {
    while (f_lo < 0) {
      lo *= 0.5;
      if (lo < 1e-12) throw ModelError("fixed point not found: b - d never positive");
      f_lo = f(lo);
      if (f_lo == 0) return lo;
    }
    return bisect_root(f, lo, 2 * lo, 1e-14);
  }
  double hi = 2.0;
  while (f(hi) > 0) {
    hi *= 2;
    if (hi > kBracketMax) {
      throw ModelError("fixed point not found: no sign change of b - d below 1e6");
    }
  }
  return bisect_root(f, lo, hi, 1e-14);
}

ModelConstants model_constants(const RateModel& model) {
  ModelConstants c;
  c.x_star = find_fixed_point(model);
  c.bp0 = model.b_prime(0.0, c.x_star);
  c.dp0 = model.d_prime(0.0, c.x_star);
  c.bp_star = model.b_prime(c.x_star, c.x_star);
  c.dp_star = model.d_prime(c.x_star, c.x_star);
  c.b_star = model.b(c.x_star);
  c.s1_step = c.dp_star - c.bp_star;
  c.s2_step = c.bp0 - c.dp0;
  if (!(c.bp0 > c.dp0) || !(c.dp0 > 0)) {
    throw ModelError("model violates b'(0) > d'(0) > 0");
  }
  if (!(c.s1_step > 0)) throw ModelError("model violates d'(x*) > b'(x*)");
  c.h2_star = c.dp_star / model.d(c.x_star) - c.bp_star / c.b_star;
  c.h0 = integrate_adaptive(
      [&](double x) { return std::log(model.b(x) / model.d(x)); }, 0.0, c.x_star, 1e-10);
  return c;
}

std::vector<double> default_assumption_grid() {
  std::vector<double> grid;
  grid.reserve(200);
  for (int i = 0; i < 200; ++i) {
    grid.push_back(std::pow(10.0, -3.0 + 6.0 * i / 199.0));
  }
  return grid;
}

AssumptionReport check_assumptions(const RateModel& model) {
  return check_assumptions(model, default_assumption_grid());
}

AssumptionReport check_assumptions(const RateModel& model, const std::vector<double>& grid) {
  if (grid.empty()) throw ModelError("check_assumptions: empty grid");
  AssumptionReport rep;
  const double slack = 1.0 - 1e-12;

  auto monotone_check = [&](const std::string& name,
                            const std::function<double(double)>& f) {
    AssumptionCheck chk{name, true, kNaN, ""};
    double prev = f(grid.front());
    for (std::size_t i = 1; i < grid.size(); ++i) {
      const double cur = f(grid[i]);
      if (!(cur >= prev * slack) && !(cur >= prev - 1e-12)) {
        chk.pass = false;
        chk.first_offending_x = grid[i];
        chk.detail = "decreases between consecutive grid points";
        break;
      }
      prev = cur;
    }
    rep.checks.push_back(chk);
  };

  monotone_check("b_over_x_nondecreasing", [&](double x) { return model.b(x) / x; });
  monotone_check("d_over_x_nondecreasing", [&](double x) { return model.d(x) / x; });
  monotone_check("log_d_over_b_nondecreasing",
                 [&](double x) { return std::log(model.d(x) / model.b(x)); });

  {
    // b/d must trend to 0 at the top of the grid.
    AssumptionCheck chk{"b_over_d_vanishes_at_infinity", true, kNaN, ""};
    const std::size_t tail_start = grid.size() - std::max<std::size_t>(2, grid.size() / 10);
    double prev = model.b(grid[tail_start]) / model.d(grid[tail_start]);
    for (std::size_t i = tail_start + 1; i < grid.size(); ++i) {
      const double cur = model.b(grid[i]) / model.d(grid[i]);
      if (cur > prev * (1.0 + 1e-12)) {
        chk.pass = false;
        chk.first_offending_x = grid[i];
        chk.detail = "b/d not decreasing on the largest grid points";
        break;
      }
      prev = cur;
    }
    if (chk.pass && prev > 0.5) {
      chk.pass = false;
      chk.first_offending_x = grid.back();
      chk.detail = "b/d still above 0.5 at the top of the grid";
    }
    rep.checks.push_back(chk);
  }

  {
    AssumptionCheck chk{"births_prevail_at_low_density", true, kNaN, ""};
    const double scale = grid[grid.size() / 2];
    const double bp0 = model.b_prime(0.0, scale);
    const double dp0 = model.d_prime(0.0, scale);
    if (!(bp0 > dp0 && dp0 > 0)) {
      chk.pass = false;
      chk.first_offending_x = 0.0;
      chk.detail = "b'(0) > d'(0) > 0 fails";
    }
    rep.checks.push_back(chk);
  }

  {
    AssumptionCheck chk{"rates_vanish_at_zero", true, kNaN, ""};
    if (std::abs(model.b(0.0)) > 1e-12 || std::abs(model.d(0.0)) > 1e-12) {
      chk.pass = false;
      chk.first_offending_x = 0.0;
      chk.detail = "b(0) or d(0) nonzero";
    }
    rep.checks.push_back(chk);
  }

  return rep;
}

bool AssumptionReport::all_pass() const {
  for (const auto& c : checks) {
    if (!c.pass) return false;
  }
  return true;
}

const AssumptionCheck* AssumptionReport::find(const std::string& name) const {
  for (const auto& c : checks) {
    if (c.name == name) return &c;
  }
  return nullptr;
}

}  // namespace bdspectra
