#include "qsep/local_decomposition.hpp"

namespace qsep {

double LocalDecomposition::weight_sum() const {
  double s = 0.0;
  for (const auto& t : terms) s += t.weight;
  return s;
}

bool LocalDecomposition::all_weights_nonnegative(double tol) const {
  for (const auto& t : terms)
    if (t.weight < -tol) return false;
  return true;
}

}  // namespace qsep
