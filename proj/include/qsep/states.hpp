#pragma once

#include <array>
#include <cstdint>
#include <string_view>
#include <utility>

#include "qsep/linalg.hpp"
#include "qsep/local_decomposition.hpp"

namespace qsep {

/// |Psi> = a11|11> + a10|10> + a01|01> + a00|00>.
struct PureStateAmplitudes {
  Complex a11, a10, a01, a00;

  /// Amplitudes in the fixed basis order |11>, |10>, |01>, |00>.
  ComplexVector vector() const;
  double norm_squared() const;
};

struct BlochVector {
  double s1 = 0.0, s2 = 0.0, s3 = 0.0;

  double norm() const;
};

/// C_ij of the Pauli expansion of a two-qubit state, rows indexed by the
/// A-side Pauli and columns by the B-side Pauli.
struct CorrelationTensor {
  Eigen::Matrix3d c;
};

/// Closed-form eigen-decomposition of (I + s.tau)/2.
struct MarginalEigenData {
  double p_plus;
  double p_minus;
  double phase;    // phi with e^{i phi} = (s1 + i s2)/|s_perp|; 0 when s_perp = 0
  double a_plus;
  double a_minus;
  ComplexMatrix vectors;  // columns |alpha_1>, |alpha_2> in the (|1>, |0>) basis
};

struct PurityCheck {
  double purity_a;     // Tr rho(A)^2 = (1 + |s(A)|^2)/2
  double concurrence_identity; // |(1 - |s(A)|^2) - 4|a11 a00 - a01 a10|^2|
};

enum class ExampleId { E1, E2, E3, E4, E5, E6 };

std::string_view to_string(ExampleId id);
inline constexpr std::array<ExampleId, 6> kAllExamples = {ExampleId::E1, ExampleId::E2, ExampleId::E3,
                                                          ExampleId::E4, ExampleId::E5, ExampleId::E6};

/// p |Phi+><Phi+| + (1 - p) I/4 with |Phi+> = (|00> + |11>)/sqrt(2).
DensityMatrix werner(double p);

/// Seven-term local expansion of the Werner state: identity with weight
/// 1 - 3p plus six spin-projector products with weight p/2 each
/// (aligned for tau1, tau3; opposed for tau2). At p = 0 only the identity
/// term is returned.
LocalDecomposition werner_local_decomposition(double p);

DensityMatrix example_state(ExampleId id);

/// Isospectral pair: (entangled rho_E, separable rho_S) with equal global
/// and local spectra.
std::pair<DensityMatrix, DensityMatrix> isospectral_pair();

/// |Psi><Psi|; throws qsep::Error("normalization") if the norm is off by
/// more than tol.normalization.
DensityMatrix pure_density(const PureStateAmplitudes& amps, const Tolerances& tol = {});

std::pair<BlochVector, BlochVector> bloch_vectors(const PureStateAmplitudes& amps);
CorrelationTensor correlation_tensor(const PureStateAmplitudes& amps);

/// (1/4){I(x)I + s(A).tau(x)I + I(x)s(B).tau + sum C_ij tau_i(x)tau_j}.
ComplexMatrix pauli_reconstruction(const BlochVector& sa, const BlochVector& sb, const CorrelationTensor& c);

MarginalEigenData marginal_eigendata(const BlochVector& s);
PurityCheck purity_check(const PureStateAmplitudes& amps);

/// Haar-random pure state: four i.i.d. standard complex Gaussians, normalized.
PureStateAmplitudes random_pure(std::uint64_t seed);

/// Mixture of `rank` Haar-random pure states on a space of shape `dims`
/// with Dirichlet(1,...,1) weights.
DensityMatrix random_density(std::uint64_t seed, Dims dims, int rank);

/// Two-qubit random_density; rank in 1..4.
DensityMatrix random_mixed(std::uint64_t seed, int rank);

/// Haar-random single-qubit unitary.
ComplexMatrix random_unitary2(std::uint64_t seed);

}  // namespace qsep
