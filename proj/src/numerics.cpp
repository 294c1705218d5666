#include "bdspectra/numerics.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <thread>
#include <vector>

#include "bdspectra/errors.hpp"

namespace bdspectra {

namespace {

// 10-point Gauss-Legendre nodes/weights on [-1, 1].
constexpr std::array<double, 5> kGlNodes = {
    0.1488743389816312, 0.4333953941292472, 0.6794095682990244,
    0.8650633666889845, 0.9739065285171717};
constexpr std::array<double, 5> kGlWeights = {
    0.2955242247147529, 0.2692667193099963, 0.2190863625159820,
    0.1494513491505806, 0.0666713443086881};

double gl10(const std::function<double(double)>& f, double a, double b) {
  const double c = 0.5 * (a + b);
  const double h = 0.5 * (b - a);
  double sum = 0;
  for (int i = 0; i < 5; ++i) {
    const double dx = h * kGlNodes[i];
    sum += kGlWeights[i] * (f(c - dx) + f(c + dx));
  }
  return h * sum;
}

double integrate_rec(const std::function<double(double)>& f, double a, double b, double whole,
                     double tol, int depth) {
  const double c = 0.5 * (a + b);
  const double left = gl10(f, a, c);
  const double right = gl10(f, c, b);
  const double err = std::abs(left + right - whole);
  if (err < tol || depth > 48) {
    if (depth > 48 && err > 64 * tol) {
      throw IntegrationError("adaptive quadrature did not converge on [" +
                             std::to_string(a) + ", " + std::to_string(b) + "]");
    }
    return left + right;
  }
  return integrate_rec(f, a, c, left, 0.5 * tol, depth + 1) +
         integrate_rec(f, c, b, right, 0.5 * tol, depth + 1);
}

}  // namespace

double integrate_adaptive(const std::function<double(double)>& f, double a, double b,
                          double abs_tol) {
  if (a == b) return 0.0;
  return integrate_rec(f, a, b, gl10(f, a, b), abs_tol, 0);
}

double bisect_root(const std::function<double(double)>& f, double a, double b,
                   double x_rel_tol) {
  double fa = f(a);
  double fb = f(b);
  if (fa == 0) return a;
  if (fb == 0) return b;
  if ((fa > 0) == (fb > 0)) {
    throw ModelError("bisect_root: no sign change on bracket");
  }
  for (int it = 0; it < 200; ++it) {
    const double mid = 0.5 * (a + b);
    if (b - a <= x_rel_tol * std::max(std::abs(a), std::abs(b))) return mid;
    const double fm = f(mid);
    if (fm == 0) return mid;
    if ((fm > 0) == (fa > 0)) {
      a = mid;
      fa = fm;
    } else {
      b = mid;
    }
  }
  return 0.5 * (a + b);
}

std::string format_double(double x) {
  std::array<char, 32> buf;
  auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), x);
  return std::string(buf.data(), ptr);
}

namespace {

std::size_t thread_cap() {
  if (const char* env = std::getenv("BD_SPECTRA_THREADS")) {
    const long v = std::strtol(env, nullptr, 10);
    if (v >= 1) return static_cast<std::size_t>(v);
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw > 0 ? hw : 1;
}

}  // namespace

void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn) {
  const std::size_t workers = std::min(thread_cap(), n);
  if (workers <= 1) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (std::size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (std::size_t i = next.fetch_add(1); i < n; i = next.fetch_add(1)) fn(i);
    });
  }
  for (auto& t : pool) t.join();
}

}  // namespace bdspectra
