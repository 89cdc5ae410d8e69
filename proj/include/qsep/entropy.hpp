#pragma once

#include "qsep/linalg.hpp"

namespace qsep {

// All entropies are in nats.

/// -sum p ln p over a spectrum; entries <= tol.support contribute zero,
/// entries in [-tol.psd, 0) are clipped.
double spectral_entropy(const RealVector& spectrum, const Tolerances& tol = {});

/// (sum p^q - 1)/(1 - q); q == 1 falls back to spectral_entropy.
double spectral_tsallis(const RealVector& spectrum, double q, const Tolerances& tol = {});

double von_neumann(const DensityMatrix& rho, const Tolerances& tol = {});

/// Tsallis entropy S_q. Throws qsep::Error("q") for q <= 0.
double tsallis(const DensityMatrix& rho, double q, const Tolerances& tol = {});

/// S_q(A,B) - S_q(side).
double entropy_difference(const DensityMatrix& rho_ab, Subsystem side, double q, const Tolerances& tol = {});

/// (S_q(A,B) - S_q(side)) / (1 + (1 - q) S_q(side)), where `side` is the
/// subsystem whose entropy is subtracted. At q = 1 this is
/// S_1(A,B) - S_1(side).
double conditional_tsallis(const DensityMatrix& rho_ab, Subsystem side, double q, const Tolerances& tol = {});

/// Sign of lim_{q->inf} S_q(A,B|side) >= 0 for each side.
///
/// For q > 1 the conditional Tsallis entropy equals
/// (Tr rho^q / Tr rho_side^q - 1)/(1 - q), so it is nonnegative iff
/// Tr rho^q <= Tr rho_side^q. As q grows, both traces are dominated by the
/// largest eigenvalues, and the comparison reduces to comparing the two
/// descending spectra (zero padded) lexicographically: the first index where
/// they differ decides. When the largest eigenvalues differ this is simply
/// lambda_max(rho_AB) <= lambda_max(rho_side). Eigenvalues closer than
/// tol.degeneracy are treated as equal.
struct TsallisInfinityResult {
  bool satisfied_a;
  bool satisfied_b;
};
TsallisInfinityResult tsallis_infinity_criterion(const DensityMatrix& rho_ab, const Tolerances& tol = {});

/// S_1(A) + S_1(B) - S_1(A,B).
double mutual_entropy(const DensityMatrix& rho_ab, const Tolerances& tol = {});

/// Tr rho1 (ln rho1 - ln rho2). Returns +infinity when rho1 has weight
/// (more than tol.psd) outside the support of rho2.
double relative_entropy(const DensityMatrix& rho1, const DensityMatrix& rho2, const Tolerances& tol = {});

}  // namespace qsep
