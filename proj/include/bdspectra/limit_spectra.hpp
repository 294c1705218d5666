#ifndef BDSPECTRA_LIMIT_SPECTRA_HPP
#define BDSPECTRA_LIMIT_SPECTRA_HPP

#include <Eigen/Core>
#include <functional>
#include <string>
#include <vector>

#include "bdspectra/model.hpp"

namespace bdspectra {

// Step sizes of the two limit lattices:
//   S1 = s1_step * {0, 1, 2, ...}   (oscillator part, around K x*)
//   S2 = s2_step * {1, 2, 3, ...}   (branching part, around 0)
struct LimitSpectrum {
  double s1_step = 0;  // d'(x*) - b'(x*)
  double s2_step = 0;  // b'(0) - d'(0)

  static LimitSpectrum from_constants(const ModelConstants& c) {
    return {c.s1_step, c.s2_step};
  }
};

enum class EtaTag { S1Only, S2Only, BothFirst, BothSecond };

std::string to_string(EtaTag tag);

// Nondecreasing merge (eta_n) of S1 and S2; points in both lattices appear
// exactly twice, tagged BothFirst/BothSecond.
struct MergedSequence {
  std::vector<double> etas;
  std::vector<EtaTag> tags;
};

// The recursion: eta_0 = 0; from a point of S1 (symmetric difference) S2 move
// to the next strictly larger point of S1 union S2; a point of the
// intersection is emitted twice before moving on. Lattice membership is
// decided with relative tolerance tol.
MergedSequence merge_eta(const LimitSpectrum& spec, int count, double tol = 1e-9);

void write_eta_csv(const MergedSequence& seq, std::ostream& out);

// n-th eigenfunction of the limiting oscillator operator, unit L2 norm:
//   psi_n(x) = norm_const * exp(-alpha x^2 / 2) * H_n(sqrt(alpha) x)
// with alpha = (d'(x*) - b'(x*)) / (2 b(x*)) and H_n the physicists' Hermite
// polynomials. The normalization is fixed numerically by quadrature.
class HermiteEigenfunction {
 public:
  // n <= 60 (recurrence stability at double precision).
  HermiteEigenfunction(int n, double alpha);

  double value(double x) const;
  int n() const { return n_; }
  double alpha() const { return alpha_; }
  double norm_const() const { return norm_const_; }

 private:
  int n_;
  double alpha_;
  double norm_const_;
};

inline double hermite_eval(const HermiteEigenfunction& ef, double x) { return ef.value(x); }

// Limiting oscillator operator applied pointwise, second derivative by
// central difference with step h in [1e-5, 1e-3]:
//   b* f'' - ((d'*-b'*)^2/(4 b*)) x^2 f + ((d'*-b'*)/2) f.
double apply_Hstar(const std::function<double(double)>& f, double x, const ModelConstants& c,
                   double h = 1e-4);

// Eigenvector of the limiting branching operator M0 for eigenvalue
// -m (b'(0)-d'(0)):  v_m(n) = sqrt(n) r^{n/2} P_m(n), r = d'(0)/b'(0),
// with P_m the monic orthogonal polynomial of degree m-1 under the measure
// q(n) = n r^n on positive integers.
class BranchingEigenvector {
 public:
  int m = 0;
  double r = 0;
  // Monomial coefficients of P_m, poly[i] = coefficient of n^i; monic of
  // degree m-1.
  Eigen::VectorXd poly;

  double polynomial_at(double n) const;
  double value(std::int64_t n) const;
  // v_m(1..N) as a dense vector (not normalized).
  Eigen::VectorXd values(Eigen::Index N) const;
};

// Builds P_m by the Stieltjes three-term recurrence with truncated-sum inner
// products under q. Requires m <= 12 and r <= 0.95.
BranchingEigenvector branching_eigenvector(int m, double r, Eigen::Index N);

// (M0 v)(n) = sqrt(b'd' n(n+1)) v(n+1) + sqrt(b'd' n(n-1)) v(n-1) 1_{n>1}
//             - n (b'+d') v(n), for finitely supported v.
Eigen::VectorXd apply_M0(const Eigen::Ref<const Eigen::VectorXd>& v, double bp0, double dp0);

}  // namespace bdspectra

#endif
