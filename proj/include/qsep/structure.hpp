#pragma once

#include <string>
#include <vector>

#include "qsep/linalg.hpp"
#include "qsep/local_decomposition.hpp"

namespace qsep {

/// Product basis |alpha, beta> built from the eigenvectors of both marginals.
///
/// Within a degenerate marginal eigenspace the eigenvectors are replaced by
/// the Gram-Schmidt orthonormalized projections of the computational basis
/// vectors (in basis order), so maximally mixed marginals give the
/// computational basis. `degenerate_a` / `degenerate_b` record when that
/// happened.
struct AlphaBetaFrame {
  Dims dims;
  EigenSystem eig_a;  // p(alpha), |alpha>
  EigenSystem eig_b;  // q(beta), |beta>
  ComplexMatrix product_basis;  // column alpha * dims.b + beta is |alpha>|beta>
  bool degenerate_a = false;
  bool degenerate_b = false;

  int index(int alpha, int beta) const { return alpha * dims.b + beta; }
};

/// w[alpha][beta][gamma] = |<alpha,beta|Gamma>|^2 together with the
/// composite eigenvalues P(Gamma).
struct OverlapTensor {
  Dims dims;
  RealVector gamma_weights;  // P(Gamma), descending
  std::vector<double> w;

  int gamma_count() const { return static_cast<int>(gamma_weights.size()); }
  double operator()(int alpha, int beta, int gamma) const {
    return w[static_cast<std::size_t>((alpha * dims.b + beta) * gamma_count() + gamma)];
  }
  double& operator()(int alpha, int beta, int gamma) {
    return w[static_cast<std::size_t>((alpha * dims.b + beta) * gamma_count() + gamma)];
  }

  /// p(alpha) = sum_{Gamma,beta} w P(Gamma).
  RealVector marginal_a() const;
  /// q(beta) = sum_{Gamma,alpha} w P(Gamma).
  RealVector marginal_b() const;
};

/// P[alpha][beta] over the frame of the decohered state.
struct JointDistribution {
  Eigen::MatrixXd p;  // rows alpha, columns beta

  RealVector row_sums() const { return p.rowwise().sum(); }
  RealVector col_sums() const { return p.colwise().sum().transpose(); }
};

struct Decoherence {
  DensityMatrix rho_d;
  JointDistribution joint;
  AlphaBetaFrame frame;
};

struct ConditionalRatio {
  double max_ratio_a;
  double max_ratio_b;
  bool defined;
};

struct ClassificationReport {
  double concurrence = 0.0;
  double entropy_diff_a = 0.0;  // S_1(A,B) - S_1(A)
  double entropy_diff_b = 0.0;  // S_1(A,B) - S_1(B)
  double mutual = 0.0;
  double deficit = 0.0;
  double ppt_min_eig = 0.0;
  bool conditional_prob_defined = false;
  bool commutes_with_marginals = false;
  bool degenerate_frame = false;
  std::vector<std::string> verdicts;
};

AlphaBetaFrame alpha_beta_frame(const DensityMatrix& rho_ab, const Tolerances& tol = {});

OverlapTensor overlap_tensor(const DensityMatrix& rho_ab, const AlphaBetaFrame& frame, const Tolerances& tol = {});

/// rho_d = sum |alpha,beta> P_d(alpha,beta) <alpha,beta| with
/// P_d = <alpha,beta| rho |alpha,beta>.
Decoherence decohere(const DensityMatrix& rho_ab, const Tolerances& tol = {});

/// S_1(rho_d) - S_1(rho).
double quantum_deficit(const DensityMatrix& rho_ab, const Tolerances& tol = {});

/// D - S_1(A:B).
double deficit_mutual_gap(const DensityMatrix& rho_ab, const Tolerances& tol = {});

/// max P(Gamma)/p(alpha) (resp. q(beta)) over pairs joined by nonzero overlap.
ConditionalRatio conditional_ratio_check(const DensityMatrix& rho_ab, const AlphaBetaFrame& frame,
                                         const Tolerances& tol = {});

/// [rho, rho(A) (x) I] = 0 and [rho, I (x) sigma(B)] = 0 within tol.commutator.
bool commutes_with_marginals(const DensityMatrix& rho_ab, const Tolerances& tol = {});

/// All rho_j(A) commute pairwise, and all sigma_j(B) commute pairwise.
bool decomposition_commutes(const LocalDecomposition& dec, const Tolerances& tol = {});

/// sum w_j rho_j (x) sigma_j, validated as a density matrix.
DensityMatrix reconstruct(const LocalDecomposition& dec, const Tolerances& tol = {});

/// Smallest eigenvalue of the partial transpose on B.
double ppt_min_eigenvalue(const DensityMatrix& rho_ab, const Tolerances& tol = {});

ClassificationReport classify(const DensityMatrix& rho_ab, const Tolerances& tol = {});

}  // namespace qsep
