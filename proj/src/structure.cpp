#include "qsep/structure.hpp"

#include <algorithm>
#include <cmath>

#include "qsep/concurrence.hpp"
#include "qsep/entropy.hpp"
#include "qsep/error.hpp"

namespace qsep {

namespace {

constexpr double kSeparableConcurrence = 1e-8;
constexpr double kZero = 1e-10;

void check_composite(const DensityMatrix& rho) {
  if (!rho.dims().composite())
    throw Error("dims", rho.side(), "operation needs a composite state");
}

// Replaces each degenerate eigenspace basis with orthonormalized projections
// of the computational basis vectors. Returns true if any eigenspace had
// dimension > 1.
bool canonicalize_degenerate(EigenSystem& eig, const Tolerances& tol) {
  const Eigen::Index n = eig.values.size();
  bool degenerate = false;
  Eigen::Index start = 0;
  while (start < n) {
    Eigen::Index end = start + 1;
    while (end < n && std::abs(eig.values(end - 1) - eig.values(end)) <= tol.degeneracy) ++end;
    const Eigen::Index size = end - start;
    if (size > 1) {
      degenerate = true;
      const ComplexMatrix block = eig.vectors.middleCols(start, size);
      const ComplexMatrix proj = block * block.adjoint();
      ComplexMatrix chosen(n, size);
      Eigen::Index found = 0;
      for (Eigen::Index k = 0; k < n && found < size; ++k) {
        ComplexVector v = proj.col(k);
        for (Eigen::Index j = 0; j < found; ++j) v -= chosen.col(j) * chosen.col(j).dot(v);
        const double norm = v.norm();
        if (norm > 1e-6) chosen.col(found++) = v / norm;
      }
      if (found == size) {
        for (Eigen::Index j = 0; j < size; ++j) {
          ComplexVector v = chosen.col(j);
          for (Eigen::Index i = 0; i < n; ++i) {
            const double mag = std::abs(v(i));
            if (mag > 1e-12) {
              v *= std::conj(v(i)) / mag;
              break;
            }
          }
          eig.vectors.col(start + j) = v;
        }
      }
    }
    start = end;
  }
  return degenerate;
}

}  // namespace

RealVector OverlapTensor::marginal_a() const {
  RealVector p = RealVector::Zero(dims.a);
  for (int a = 0; a < dims.a; ++a)
    for (int b = 0; b < dims.b; ++b)
      for (int g = 0; g < gamma_count(); ++g) p(a) += (*this)(a, b, g) * gamma_weights(g);
  return p;
}

RealVector OverlapTensor::marginal_b() const {
  RealVector q = RealVector::Zero(dims.b);
  for (int a = 0; a < dims.a; ++a)
    for (int b = 0; b < dims.b; ++b)
      for (int g = 0; g < gamma_count(); ++g) q(b) += (*this)(a, b, g) * gamma_weights(g);
  return q;
}

AlphaBetaFrame alpha_beta_frame(const DensityMatrix& rho_ab, const Tolerances& tol) {
  check_composite(rho_ab);
  AlphaBetaFrame f;
  f.dims = rho_ab.dims();
  f.eig_a = hermitian_eig(partial_trace(rho_ab.matrix(), f.dims, Subsystem::A), tol);
  f.eig_b = hermitian_eig(partial_trace(rho_ab.matrix(), f.dims, Subsystem::B), tol);
  f.degenerate_a = canonicalize_degenerate(f.eig_a, tol);
  f.degenerate_b = canonicalize_degenerate(f.eig_b, tol);
  f.product_basis = tensor_product(f.eig_a.vectors, f.eig_b.vectors);
  return f;
}

OverlapTensor overlap_tensor(const DensityMatrix& rho_ab, const AlphaBetaFrame& frame, const Tolerances& tol) {
  if (!(rho_ab.dims() == frame.dims))
    throw Error("dims", rho_ab.side(), "frame was built for different dimensions");
  const EigenSystem composite = hermitian_eig(rho_ab.matrix(), tol);
  OverlapTensor t;
  t.dims = frame.dims;
  t.gamma_weights = clip_spectrum(composite.values, tol);
  const int n = rho_ab.side();
  t.w.assign(static_cast<std::size_t>(n * n), 0.0);
  // Row (alpha,beta), column Gamma of the overlap matrix.
  const ComplexMatrix overlaps = frame.product_basis.adjoint() * composite.vectors;
  for (int a = 0; a < frame.dims.a; ++a)
    for (int b = 0; b < frame.dims.b; ++b)
      for (int g = 0; g < n; ++g) t(a, b, g) = std::norm(overlaps(frame.index(a, b), g));
  return t;
}

Decoherence decohere(const DensityMatrix& rho_ab, const Tolerances& tol) {
  check_composite(rho_ab);
  AlphaBetaFrame frame = alpha_beta_frame(rho_ab, tol);
  const ComplexMatrix in_frame = frame.product_basis.adjoint() * rho_ab.matrix() * frame.product_basis;
  JointDistribution joint{Eigen::MatrixXd(frame.dims.a, frame.dims.b)};
  RealVector diag(rho_ab.side());
  for (int a = 0; a < frame.dims.a; ++a)
    for (int b = 0; b < frame.dims.b; ++b) {
      const int k = frame.index(a, b);
      joint.p(a, b) = in_frame(k, k).real();
      diag(k) = joint.p(a, b);
    }
  ComplexMatrix m = frame.product_basis * diag.cast<Complex>().asDiagonal() * frame.product_basis.adjoint();
  m = (m + m.adjoint()) * 0.5;
  return {DensityMatrix(std::move(m), rho_ab.dims(), tol), std::move(joint), std::move(frame)};
}

double quantum_deficit(const DensityMatrix& rho_ab, const Tolerances& tol) {
  const Decoherence d = decohere(rho_ab, tol);
  const RealVector pd = d.joint.p.reshaped();
  return spectral_entropy(pd, tol) - von_neumann(rho_ab, tol);
}

double deficit_mutual_gap(const DensityMatrix& rho_ab, const Tolerances& tol) {
  return quantum_deficit(rho_ab, tol) - mutual_entropy(rho_ab, tol);
}

ConditionalRatio conditional_ratio_check(const DensityMatrix& rho_ab, const AlphaBetaFrame& frame,
                                         const Tolerances& tol) {
  const OverlapTensor t = overlap_tensor(rho_ab, frame, tol);
  const RealVector p = clip_spectrum(frame.eig_a.values, tol);
  const RealVector q = clip_spectrum(frame.eig_b.values, tol);
  ConditionalRatio r{0.0, 0.0, false};
  for (int g = 0; g < t.gamma_count(); ++g) {
    const double pg = t.gamma_weights(g);
    for (int a = 0; a < frame.dims.a; ++a) {
      if (p(a) <= tol.support) continue;
      double weight = 0.0;
      for (int b = 0; b < frame.dims.b; ++b) weight += t(a, b, g);
      if (weight > 1e-12) r.max_ratio_a = std::max(r.max_ratio_a, pg / p(a));
    }
    for (int b = 0; b < frame.dims.b; ++b) {
      if (q(b) <= tol.support) continue;
      double weight = 0.0;
      for (int a = 0; a < frame.dims.a; ++a) weight += t(a, b, g);
      if (weight > 1e-12) r.max_ratio_b = std::max(r.max_ratio_b, pg / q(b));
    }
  }
  r.defined = r.max_ratio_a <= 1.0 + kZero && r.max_ratio_b <= 1.0 + kZero;
  return r;
}

bool commutes_with_marginals(const DensityMatrix& rho_ab, const Tolerances& tol) {
  check_composite(rho_ab);
  const Dims d = rho_ab.dims();
  const ComplexMatrix ra = partial_trace(rho_ab.matrix(), d, Subsystem::A);
  const ComplexMatrix sb = partial_trace(rho_ab.matrix(), d, Subsystem::B);
  const ComplexMatrix left = tensor_product(ra, ComplexMatrix::Identity(d.b, d.b));
  const ComplexMatrix right = tensor_product(ComplexMatrix::Identity(d.a, d.a), sb);
  return max_abs(commutator(rho_ab.matrix(), left)) <= tol.commutator &&
         max_abs(commutator(rho_ab.matrix(), right)) <= tol.commutator;
}

bool decomposition_commutes(const LocalDecomposition& dec, const Tolerances& tol) {
  const auto& terms = dec.terms;
  for (std::size_t j = 0; j < terms.size(); ++j)
    for (std::size_t k = j + 1; k < terms.size(); ++k) {
      if (max_abs(commutator(terms[j].a.matrix(), terms[k].a.matrix())) > tol.commutator) return false;
      if (max_abs(commutator(terms[j].b.matrix(), terms[k].b.matrix())) > tol.commutator) return false;
    }
  return true;
}

DensityMatrix reconstruct(const LocalDecomposition& dec, const Tolerances& tol) {
  if (dec.terms.empty()) throw Error("terms", 0.0, "decomposition has no terms");
  const double sum = dec.weight_sum();
  if (std::abs(sum - 1.0) > kZero)
    throw Error("weights", sum, "decomposition weights sum to " + std::to_string(sum));
  const Dims dims{dec.terms.front().a.side(), dec.terms.front().b.side()};
  ComplexMatrix m = ComplexMatrix::Zero(dims.total(), dims.total());
  for (const auto& t : dec.terms) {
    if (t.a.side() != dims.a || t.b.side() != dims.b)
      throw Error("dims", t.a.side(), "decomposition factors have inconsistent dimensions");
    m += t.weight * tensor_product(t.a.matrix(), t.b.matrix());
  }
  return DensityMatrix(std::move(m), dims, tol);
}

double ppt_min_eigenvalue(const DensityMatrix& rho_ab, const Tolerances& tol) {
  return hermitian_eig(partial_transpose(rho_ab, Subsystem::B), tol).values.minCoeff();
}

ClassificationReport classify(const DensityMatrix& rho_ab, const Tolerances& tol) {
  ClassificationReport r;
  r.concurrence = concurrence(rho_ab, tol);
  r.entropy_diff_a = entropy_difference(rho_ab, Subsystem::A, 1.0, tol);
  r.entropy_diff_b = entropy_difference(rho_ab, Subsystem::B, 1.0, tol);
  r.mutual = mutual_entropy(rho_ab, tol);
  r.deficit = quantum_deficit(rho_ab, tol);
  r.ppt_min_eig = ppt_min_eigenvalue(rho_ab, tol);
  const AlphaBetaFrame frame = alpha_beta_frame(rho_ab, tol);
  r.conditional_prob_defined = conditional_ratio_check(rho_ab, frame, tol).defined;
  r.commutes_with_marginals = commutes_with_marginals(rho_ab, tol);
  r.degenerate_frame = frame.degenerate_a || frame.degenerate_b;

  const bool separable = r.concurrence <= kSeparableConcurrence;
  const bool zero_diff = std::abs(r.entropy_diff_a) <= kZero && std::abs(r.entropy_diff_b) <= kZero;
  const RealVector spec = clip_spectrum(hermitian_eig(rho_ab.matrix(), tol).values, tol);
  const bool pure = spec(0) >= 1.0 - kZero;
  auto& v = r.verdicts;

  v.emplace_back(separable ? "separable" : "entangled");
  if (separable && r.mutual <= kZero) v.emplace_back("classically uncorrelated product state");
  if (separable && r.mutual > kZero) v.emplace_back("classically correlated separable state");
  if (!separable && zero_diff) v.emplace_back("entangled despite zero entropy difference");
  if (!separable && !pure && (r.entropy_diff_a > kZero || r.entropy_diff_b > kZero))
    v.emplace_back("Theorem A: entangled with positive entropy difference");
  if (!separable && !pure && (r.entropy_diff_a < -kZero || r.entropy_diff_b < -kZero))
    v.emplace_back("Theorem A: entangled with negative entropy difference");
  if (pure)
    v.emplace_back(separable ? "Theorem B hypothesis holds: pure product state, entropy differences zero"
                             : "Theorem B hypothesis holds: pure entangled state, entropy differences negative");
  if (r.commutes_with_marginals)
    v.emplace_back("Theorem C hypothesis holds: commutes with marginals");
  if (r.conditional_prob_defined)
    v.emplace_back("conditional probabilities defined: entropy-ratio test passes");
  if (r.degenerate_frame)
    v.emplace_back("degenerate marginal spectrum: frame defaults to the computational basis");
  return r;
}

}  // namespace qsep
