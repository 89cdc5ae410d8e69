#pragma once

#include <complex>
#include <string_view>

#include <Eigen/Dense>

#include "qsep/tolerances.hpp"

namespace qsep {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;

/// Which factor of a bipartite space an operation acts on.
enum class Subsystem { A, B };

std::string_view to_string(Subsystem s);

/// Local dimensions of a bipartite space. `b == 1` marks a single-subsystem
/// matrix (e.g. a marginal).
struct Dims {
  int a = 2;
  int b = 2;

  int total() const { return a * b; }
  bool composite() const { return a > 1 && b > 1; }
  friend bool operator==(const Dims&, const Dims&) = default;
};

/// Hermitian, PSD, unit-trace matrix over a bipartite space.
///
/// Instances are validated on construction; the matrix is stored after
/// explicit Hermitian symmetrization, so downstream code may assume
/// `matrix() == matrix().adjoint()` bit-for-bit.
///
/// Basis order for two qubits is |11>, |10>, |01>, |00> (A-index major,
/// local index 0 = |1>, 1 = |0>).
class DensityMatrix {
 public:
  DensityMatrix(ComplexMatrix m, Dims dims, const Tolerances& tol = {});

  /// Single-subsystem matrix of side `m.rows()`.
  static DensityMatrix single(ComplexMatrix m, const Tolerances& tol = {});

  const ComplexMatrix& matrix() const { return m_; }
  Dims dims() const { return dims_; }
  int side() const { return static_cast<int>(m_.rows()); }

  Complex operator()(int i, int j) const { return m_(i, j); }

 private:
  ComplexMatrix m_;
  Dims dims_;
};

/// Eigenvalues in descending order and unit eigenvectors as matching columns.
///
/// Each eigenvector has its first component with magnitude above 1e-12 made
/// real and positive.
struct EigenSystem {
  RealVector values;
  ComplexMatrix vectors;
};

/// Max entrywise |m - m^dagger|.
double hermiticity_defect(const ComplexMatrix& m);
double max_abs(const ComplexMatrix& m);
ComplexMatrix commutator(const ComplexMatrix& a, const ComplexMatrix& b);

/// Cyclic complex Jacobi diagonalization of a Hermitian matrix.
///
/// Throws qsep::Error ("square" / "hermiticity") on bad input and
/// ("convergence") if the off-diagonal norm does not drop below
/// `tol.jacobi_offdiag * max(1, ||m||_F)` within `tol.jacobi_max_sweeps`.
EigenSystem hermitian_eig(const ComplexMatrix& m, const Tolerances& tol = {});

/// Kronecker product with A-index major ordering:
/// entry ((i,k),(j,l)) = a(i,j) * b(k,l).
ComplexMatrix tensor_product(const ComplexMatrix& a, const ComplexMatrix& b);

ComplexMatrix partial_trace(const ComplexMatrix& m, Dims dims, Subsystem keep);
DensityMatrix partial_trace(const DensityMatrix& rho, Subsystem keep);

/// Transposes the indices of `side` only.
ComplexMatrix partial_transpose(const ComplexMatrix& m, Dims dims, Subsystem side);
ComplexMatrix partial_transpose(const DensityMatrix& rho, Subsystem side);

enum class MatrixFunction { Sqrt, Log };

/// V f(Lambda) V^dagger for a Hermitian PSD matrix.
///
/// Eigenvalues in [-tol.psd, 0) are clipped to zero; anything more negative
/// throws qsep::Error("psd"). Eigenvalues at or below `tol.support` are
/// mapped to zero for both functions, so Log is the logarithm restricted to
/// the support (0 log 0 = 0).
ComplexMatrix psd_function(const ComplexMatrix& m, MatrixFunction f, const Tolerances& tol = {});

/// Same as psd_function but reusing an eigensystem already computed for `m`.
ComplexMatrix psd_function(const EigenSystem& eig, MatrixFunction f, const Tolerances& tol = {});

/// Eigenvalues clipped to [0, inf) after checking none lie below -tol.psd.
RealVector clip_spectrum(const RealVector& values, const Tolerances& tol = {});

/// Pauli matrices in the local basis (|1>, |0>): tau3 = |1><1| - |0><0|.
const ComplexMatrix& pauli(int i);
const ComplexMatrix& identity2();

}  // namespace qsep
