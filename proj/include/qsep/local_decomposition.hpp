#pragma once

#include <vector>

#include "qsep/linalg.hpp"

namespace qsep {

/// rho(A,B) = sum_j w_j rho_j(A) (x) sigma_j(B).
///
/// Weights sum to one but may be negative (local pseudo-mixtures).
struct LocalDecomposition {
  struct Term {
    double weight;
    DensityMatrix a;
    DensityMatrix b;
  };

  std::vector<Term> terms;

  double weight_sum() const;
  bool all_weights_nonnegative(double tol = 1e-12) const;
};

}  // namespace qsep
