#pragma once

namespace qsep {

/// Numerical thresholds shared by every module.
struct Tolerances {
  double hermiticity = 1e-10;     // max |M - M^dagger| entrywise
  double trace = 1e-10;           // |Tr rho - 1|
  double psd = 1e-10;             // eigenvalues >= -psd are accepted and clipped
  double reconstruction = 1e-9;   // eigensystem reconstruction checks
  double support = 1e-12;         // eigenvalues <= support count as zero
  double degeneracy = 1e-10;      // eigenvalues closer than this share an eigenspace
  double commutator = 1e-9;       // max entry of a commutator treated as zero
  double normalization = 1e-8;    // pure-state amplitude norm
  double jacobi_offdiag = 1e-13;  // Jacobi stopping threshold (off-diagonal Frobenius norm)
  int jacobi_max_sweeps = 100;

  /// Every comparison threshold multiplied by `factor`; the Jacobi stopping
  /// rule and sweep cap are left alone.
  Tolerances scaled(double factor) const {
    Tolerances t = *this;
    t.hermiticity *= factor;
    t.trace *= factor;
    t.psd *= factor;
    t.reconstruction *= factor;
    t.support *= factor;
    t.degeneracy *= factor;
    t.commutator *= factor;
    t.normalization *= factor;
    return t;
  }
};

}  // namespace qsep
