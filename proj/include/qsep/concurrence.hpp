#pragma once

#include <array>

#include "qsep/linalg.hpp"
#include "qsep/states.hpp"

namespace qsep {

/// Square roots of the eigenvalues of rho * spin_flip(rho), descending.
struct LambdaSpectrum {
  std::array<double, 4> lambdas;
};

/// (tau2 (x) tau2) rho^* (tau2 (x) tau2), conjugation in the computational basis.
ComplexMatrix spin_flip(const DensityMatrix& rho);

/// Computed through the Hermitian matrix sqrt(rho) rho~ sqrt(rho), which is
/// similar to rho rho~. The product is formed on the support of rho only
/// (r x r for rank r), so rank-deficient states yield exact zeros for the
/// remaining 4 - r values. Eigenvalues in [-1e-9, 0) are clipped.
LambdaSpectrum lambda_spectrum(const DensityMatrix& rho, const Tolerances& tol = {});

/// Wootters concurrence max(l1 - l2 - l3 - l4, 0).
double concurrence(const DensityMatrix& rho, const Tolerances& tol = {});

/// 2 |a11 a00 - a01 a10|.
double pure_concurrence(const PureStateAmplitudes& amps);

}  // namespace qsep
