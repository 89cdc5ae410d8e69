#include "qsep/concurrence.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "qsep/error.hpp"

namespace qsep {

namespace {

constexpr double kLambdaClip = 1e-9;

void check_two_qubit(const DensityMatrix& rho) {
  if (!(rho.dims() == Dims{2, 2}))
    throw Error("dims", rho.side(), "concurrence needs a 2x2 composite state");
}

const ComplexMatrix& flip_operator() {
  static const ComplexMatrix yy = tensor_product(pauli(2), pauli(2));
  return yy;
}

}  // namespace

ComplexMatrix spin_flip(const DensityMatrix& rho) {
  check_two_qubit(rho);
  const ComplexMatrix& yy = flip_operator();
  return yy * rho.matrix().conjugate() * yy;
}

LambdaSpectrum lambda_spectrum(const DensityMatrix& rho, const Tolerances& tol) {
  check_two_qubit(rho);
  const EigenSystem eig = hermitian_eig(rho.matrix(), tol);
  const RealVector p = clip_spectrum(eig.values, tol);

  std::vector<Eigen::Index> support;
  for (Eigen::Index k = 0; k < p.size(); ++k)
    if (p(k) > tol.support) support.push_back(k);
  const auto r = static_cast<Eigen::Index>(support.size());

  // Columns sqrt(P_k) |k> span the support; M = W^dagger rho~ W carries the
  // nonzero part of sqrt(rho) rho~ sqrt(rho).
  ComplexMatrix w(4, r);
  for (Eigen::Index j = 0; j < r; ++j) w.col(j) = std::sqrt(p(support[j])) * eig.vectors.col(support[j]);
  const ComplexMatrix flipped = spin_flip(rho);
  ComplexMatrix m = w.adjoint() * flipped * w;
  m = (m + m.adjoint()) * 0.5;

  LambdaSpectrum out{{0.0, 0.0, 0.0, 0.0}};
  if (r > 0) {
    const RealVector mu = hermitian_eig(m, tol).values;
    for (Eigen::Index k = 0; k < r; ++k) {
      double v = mu(k);
      if (v < -kLambdaClip)
        throw Error("psd", v, "negative eigenvalue of sqrt(rho) rho~ sqrt(rho): " + std::to_string(v));
      out.lambdas[static_cast<std::size_t>(k)] = std::sqrt(std::max(v, 0.0));
    }
  }
  std::sort(out.lambdas.begin(), out.lambdas.end(), std::greater<>());
  return out;
}

double concurrence(const DensityMatrix& rho, const Tolerances& tol) {
  const auto l = lambda_spectrum(rho, tol).lambdas;
  return std::max(l[0] - l[1] - l[2] - l[3], 0.0);
}

double pure_concurrence(const PureStateAmplitudes& amps) {
  return 2.0 * std::abs(amps.a11 * amps.a00 - amps.a01 * amps.a10);
}

}  // namespace qsep
