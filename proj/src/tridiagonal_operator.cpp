#include "bdspectra/tridiagonal_operator.hpp"

#include <cmath>
#include <ostream>

#include "bdspectra/errors.hpp"
#include "bdspectra/numerics.hpp"

namespace bdspectra {

Eigen::VectorXd TridiagonalOperator::apply(const Eigen::Ref<const Eigen::VectorXd>& v) const {
  const Eigen::Index n = size();
  Eigen::VectorXd w = diag.matrix().cwiseProduct(v);
  if (n > 1) {
    w.head(n - 1) += offdiag.matrix().cwiseProduct(v.tail(n - 1));
    w.tail(n - 1) += offdiag.matrix().cwiseProduct(v.head(n - 1));
  }
  return w;
}

TruncationSpec choose_truncation(const RateModel& model, std::int64_t K) {
  return choose_truncation(model, K, find_fixed_point(model));
}

TruncationSpec choose_truncation(const RateModel& model, std::int64_t K, double x_star) {
  if (K < 1) throw ModelError("choose_truncation: K must be >= 1");
  constexpr std::int64_t kCap = 100'000'000;

  const auto ratio = [&](std::int64_t n) {
    const double x = static_cast<double>(n) / static_cast<double>(K);
    return model.d(x) / model.b(x);
  };

  std::int64_t lo = std::max<std::int64_t>(
      2, static_cast<std::int64_t>(std::ceil(4.0 * static_cast<double>(K) * x_star)));
  if (ratio(lo) < 4.0) {
    // log(d/b) is increasing, so the first index with ratio >= 4 is found by
    // doubling then binary search.
    std::int64_t hi = lo;
    do {
      hi *= 2;
      if (hi > kCap) throw TruncationError("truncation cap 1e8 exceeded");
    } while (ratio(hi) < 4.0);
    std::int64_t a = lo, b = hi;
    while (a < b) {
      const std::int64_t mid = a + (b - a) / 2;
      if (ratio(mid) >= 4.0) b = mid;
      else a = mid + 1;
    }
    lo = a;
  }

  TruncationSpec spec;
  spec.N = lo;
  const auto [lam_N, mu_N] = rates_at(model, K, lo);
  (void)mu_N;
  const auto [lam_next, mu_next] = rates_at(model, K, lo + 1);
  (void)lam_next;
  spec.tail_ratio = std::sqrt(lam_N) / std::sqrt(mu_next);
  return spec;
}

TridiagonalOperator build_operator(const RateModel& model, std::int64_t K,
                                   const TruncationSpec& trunc) {
  if (trunc.N < 1) throw ModelError("build_operator: N must be >= 1");
  const Eigen::Index N = trunc.N;
  TridiagonalOperator op;
  op.K = K;
  op.diag.resize(N);
  op.offdiag.resize(std::max<Eigen::Index>(N - 1, 0));

  auto [lam, mu] = rates_at(model, K, 1);
  for (Eigen::Index i = 0; i < N; ++i) {
    const double sum = lam + mu;
    if (!std::isfinite(sum)) {
      throw ModelError("rate overflow at n=" + std::to_string(i + 1));
    }
    op.diag[i] = -sum;
    if (i + 1 < N) {
      const auto [lam_next, mu_next] = rates_at(model, K, i + 2);
      // sqrt(lam)*sqrt(mu) rather than sqrt(lam*mu): immune to overflow of
      // the product.
      op.offdiag[i] = std::sqrt(lam) * std::sqrt(mu_next);
      if (!(op.offdiag[i] > 0)) {
        throw ModelError("vanishing off-diagonal at n=" + std::to_string(i + 1));
      }
      lam = lam_next;
      mu = mu_next;
    }
  }
  return op;
}

PotentialProfile potential_profile(const TridiagonalOperator& op) {
  const Eigen::Index N = op.size();
  PotentialProfile prof;
  prof.V.resize(N);
  for (Eigen::Index i = 0; i < N; ++i) {
    double v = -op.diag[i];  // lambda_n + mu_n
    if (i < N - 1) v -= op.offdiag[i];
    if (i > 0) v -= op.offdiag[i - 1];
    prof.V[i] = v;
  }
  prof.xi = std::max(0.0, -prof.V.minCoeff());
  return prof;
}

double dirichlet_form(const TridiagonalOperator& op,
                      const Eigen::Ref<const Eigen::VectorXd>& phi) {
  const Eigen::Index N = op.size();
  const PotentialProfile prof = potential_profile(op);
  double form = 0;
  for (Eigen::Index i = 0; i + 1 < N; ++i) {
    const double dphi = phi[i + 1] - phi[i];
    form += op.offdiag[i] * dphi * dphi;
  }
  for (Eigen::Index i = 0; i < N; ++i) {
    form += prof.V[i] * phi[i] * phi[i];
  }
  return form;
}

void write_operator_csv(const TridiagonalOperator& op, std::ostream& out) {
  out << "n,diag,offdiag\n";
  for (Eigen::Index i = 0; i < op.size(); ++i) {
    out << (i + 1) << ',' << format_double(op.diag[i]) << ',';
    if (i + 1 < op.size()) out << format_double(op.offdiag[i]);
    out << '\n';
  }
}

}  // namespace bdspectra
