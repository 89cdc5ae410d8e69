#include "qsep/entropy.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "qsep/error.hpp"

namespace qsep {

namespace {

void check_q(double q) {
  if (!(q > 0.0)) throw Error("q", q, "Tsallis index q must be positive, got " + std::to_string(q));
}

void check_composite(const DensityMatrix& rho) {
  if (!rho.dims().composite())
    throw Error("dims", rho.side(), "operation needs a composite state");
}

RealVector spectrum(const DensityMatrix& rho, const Tolerances& tol) {
  return clip_spectrum(hermitian_eig(rho.matrix(), tol).values, tol);
}

double power_trace(const RealVector& spec, double q, const Tolerances& tol) {
  double s = 0.0;
  for (Eigen::Index i = 0; i < spec.size(); ++i)
    if (spec(i) > tol.support) s += std::pow(spec(i), q);
  return s;
}

}  // namespace

double spectral_entropy(const RealVector& spec, const Tolerances& tol) {
  const RealVector p = clip_spectrum(spec, tol);
  double s = 0.0;
  for (Eigen::Index i = 0; i < p.size(); ++i)
    if (p(i) > tol.support) s -= p(i) * std::log(p(i));
  return s;
}

double spectral_tsallis(const RealVector& spec, double q, const Tolerances& tol) {
  check_q(q);
  if (q == 1.0) return spectral_entropy(spec, tol);
  const RealVector p = clip_spectrum(spec, tol);
  return (power_trace(p, q, tol) - 1.0) / (1.0 - q);
}

double von_neumann(const DensityMatrix& rho, const Tolerances& tol) {
  return spectral_entropy(spectrum(rho, tol), tol);
}

double tsallis(const DensityMatrix& rho, double q, const Tolerances& tol) {
  check_q(q);
  return spectral_tsallis(spectrum(rho, tol), q, tol);
}

double entropy_difference(const DensityMatrix& rho_ab, Subsystem side, double q, const Tolerances& tol) {
  check_composite(rho_ab);
  return tsallis(rho_ab, q, tol) - tsallis(partial_trace(rho_ab, side), q, tol);
}

double conditional_tsallis(const DensityMatrix& rho_ab, Subsystem side, double q, const Tolerances& tol) {
  check_composite(rho_ab);
  check_q(q);
  const double s_side = tsallis(partial_trace(rho_ab, side), q, tol);
  const double s_ab = tsallis(rho_ab, q, tol);
  const double denom = 1.0 + (1.0 - q) * s_side;
  if (std::abs(denom) <= 1e-12)
    throw Error("denominator", denom,
                "1 + (1 - q) S_q vanishes for q = " + std::to_string(q) + ", S_q = " + std::to_string(s_side));
  return (s_ab - s_side) / denom;
}

TsallisInfinityResult tsallis_infinity_criterion(const DensityMatrix& rho_ab, const Tolerances& tol) {
  check_composite(rho_ab);
  const RealVector joint = spectrum(rho_ab, tol);
  auto satisfied = [&](Subsystem side) {
    const RealVector marginal = spectrum(partial_trace(rho_ab, side), tol);
    const Eigen::Index n = std::max(joint.size(), marginal.size());
    for (Eigen::Index i = 0; i < n; ++i) {
      const double lj = i < joint.size() ? joint(i) : 0.0;
      const double lm = i < marginal.size() ? marginal(i) : 0.0;
      if (std::abs(lj - lm) <= tol.degeneracy) continue;
      return lj < lm;
    }
    return true;
  };
  return {satisfied(Subsystem::A), satisfied(Subsystem::B)};
}

double mutual_entropy(const DensityMatrix& rho_ab, const Tolerances& tol) {
  check_composite(rho_ab);
  return von_neumann(partial_trace(rho_ab, Subsystem::A), tol) +
         von_neumann(partial_trace(rho_ab, Subsystem::B), tol) - von_neumann(rho_ab, tol);
}

double relative_entropy(const DensityMatrix& rho1, const DensityMatrix& rho2, const Tolerances& tol) {
  if (rho1.side() != rho2.side() || !(rho1.dims() == rho2.dims()))
    throw Error("dims", rho2.side(), "relative entropy needs matching dimensions");
  const EigenSystem eig2 = hermitian_eig(rho2.matrix(), tol);
  const RealVector lambda2 = clip_spectrum(eig2.values, tol);

  // Weight of rho1 on the kernel of rho2.
  double leak = 0.0;
  for (Eigen::Index k = 0; k < lambda2.size(); ++k) {
    if (lambda2(k) > tol.support) continue;
    const ComplexVector v = eig2.vectors.col(k);
    leak += (v.adjoint() * rho1.matrix() * v)(0, 0).real();
  }
  if (leak > tol.psd) return std::numeric_limits<double>::infinity();

  const ComplexMatrix log2 = psd_function(eig2, MatrixFunction::Log, tol);
  const double cross = (rho1.matrix() * log2).trace().real();
  return -von_neumann(rho1, tol) - cross;
}

}  // namespace qsep
