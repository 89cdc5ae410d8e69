#include "qsep/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>
#include <vector>

#include "qsep/error.hpp"

namespace qsep {

namespace {

std::string fmt_double(double x) {
  std::ostringstream os;
  os.precision(6);
  os << x;
  return os.str();
}

double offdiag_norm(const ComplexMatrix& a) {
  double s = 0.0;
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      if (i != j) s += std::norm(a(i, j));
  return std::sqrt(s);
}

// One two-sided rotation annihilating a(p,q). G acts on columns p,q:
//   G = diag(1, e^{-i phi}) * [[c, s], [-s, c]],   a(p,q) = r e^{i phi}.
void jacobi_rotate(ComplexMatrix& a, ComplexMatrix& v, Eigen::Index p, Eigen::Index q) {
  const Complex apq = a(p, q);
  const double r = std::abs(apq);
  if (r == 0.0) return;
  const Complex phase = apq / r;
  const double app = a(p, p).real();
  const double aqq = a(q, q).real();
  const double theta = (aqq - app) / (2.0 * r);
  const double t = (theta >= 0.0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
  const double c = 1.0 / std::sqrt(t * t + 1.0);
  const double s = t * c;

  const Complex gpp = c;
  const Complex gpq = s;
  const Complex gqp = -s * std::conj(phase);
  const Complex gqq = c * std::conj(phase);

  const Eigen::Index n = a.rows();
  for (Eigen::Index k = 0; k < n; ++k) {  // A <- A G
    const Complex akp = a(k, p);
    const Complex akq = a(k, q);
    a(k, p) = akp * gpp + akq * gqp;
    a(k, q) = akp * gpq + akq * gqq;
  }
  for (Eigen::Index k = 0; k < n; ++k) {  // A <- G^dagger A
    const Complex apk = a(p, k);
    const Complex aqk = a(q, k);
    a(p, k) = std::conj(gpp) * apk + std::conj(gqp) * aqk;
    a(q, k) = std::conj(gpq) * apk + std::conj(gqq) * aqk;
  }
  for (Eigen::Index k = 0; k < n; ++k) {  // V <- V G
    const Complex vkp = v(k, p);
    const Complex vkq = v(k, q);
    v(k, p) = vkp * gpp + vkq * gqp;
    v(k, q) = vkp * gpq + vkq * gqq;
  }
  a(p, q) = 0.0;
  a(q, p) = 0.0;
  a(p, p) = a(p, p).real();
  a(q, q) = a(q, q).real();
}

void fix_phase(ComplexMatrix& v) {
  for (Eigen::Index j = 0; j < v.cols(); ++j) {
    for (Eigen::Index i = 0; i < v.rows(); ++i) {
      const double mag = std::abs(v(i, j));
      if (mag > 1e-12) {
        v.col(j) *= std::conj(v(i, j)) / mag;
        v(i, j) = mag;
        break;
      }
    }
  }
}

}  // namespace

std::string_view to_string(Subsystem s) { return s == Subsystem::A ? "A" : "B"; }

DensityMatrix::DensityMatrix(ComplexMatrix m, Dims dims, const Tolerances& tol) : dims_(dims) {
  if (m.rows() != m.cols())
    throw Error("square", static_cast<double>(m.cols()),
                "density matrix must be square, got " + std::to_string(m.rows()) + "x" +
                    std::to_string(m.cols()));
  if (dims.a < 1 || dims.b < 1 || dims.total() != m.rows())
    throw Error("dims", static_cast<double>(m.rows()),
                "dims " + std::to_string(dims.a) + "x" + std::to_string(dims.b) +
                    " inconsistent with matrix side " + std::to_string(m.rows()));
  const double herm = hermiticity_defect(m);
  if (herm > tol.hermiticity)
    throw Error("hermiticity", herm, "max |M - M^dagger| = " + fmt_double(herm));
  m_ = (m + m.adjoint()) * 0.5;
  const double tr_err = std::abs(m_.trace() - Complex(1.0));
  if (tr_err > tol.trace)
    throw Error("trace", tr_err, "|Tr rho - 1| = " + fmt_double(tr_err));
  const EigenSystem eig = hermitian_eig(m_, tol);
  const double min_eig = eig.values.minCoeff();
  if (min_eig < -tol.psd)
    throw Error("psd", min_eig, "minimum eigenvalue " + fmt_double(min_eig));
}

DensityMatrix DensityMatrix::single(ComplexMatrix m, const Tolerances& tol) {
  const int n = static_cast<int>(m.rows());
  return DensityMatrix(std::move(m), Dims{n, 1}, tol);
}

double hermiticity_defect(const ComplexMatrix& m) {
  if (m.rows() != m.cols()) return std::numeric_limits<double>::infinity();
  return (m - m.adjoint()).cwiseAbs().maxCoeff();
}

double max_abs(const ComplexMatrix& m) { return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff(); }

ComplexMatrix commutator(const ComplexMatrix& a, const ComplexMatrix& b) { return a * b - b * a; }

EigenSystem hermitian_eig(const ComplexMatrix& m, const Tolerances& tol) {
  if (m.rows() != m.cols() || m.rows() == 0)
    throw Error("square", static_cast<double>(m.cols()),
                "eigensolver needs a square matrix, got " + std::to_string(m.rows()) + "x" +
                    std::to_string(m.cols()));
  const double herm = hermiticity_defect(m);
  if (herm > tol.hermiticity)
    throw Error("hermiticity", herm, "max |M - M^dagger| = " + fmt_double(herm));

  const Eigen::Index n = m.rows();
  ComplexMatrix a = (m + m.adjoint()) * 0.5;
  ComplexMatrix v = ComplexMatrix::Identity(n, n);
  const double stop = tol.jacobi_offdiag * std::max(1.0, a.norm());

  bool converged = offdiag_norm(a) <= stop;
  for (int sweep = 0; sweep < tol.jacobi_max_sweeps && !converged; ++sweep) {
    for (Eigen::Index p = 0; p + 1 < n; ++p)
      for (Eigen::Index q = p + 1; q < n; ++q) jacobi_rotate(a, v, p, q);
    converged = offdiag_norm(a) <= stop;
  }
  if (!converged) {
    const double off = offdiag_norm(a);
    throw Error("convergence", off, "Jacobi off-diagonal norm " + fmt_double(off) + " after " +
                                        std::to_string(tol.jacobi_max_sweeps) + " sweeps");
  }

  std::vector<Eigen::Index> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), Eigen::Index{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](Eigen::Index i, Eigen::Index j) { return a(i, i).real() > a(j, j).real(); });

  EigenSystem out;
  out.values.resize(n);
  out.vectors.resize(n, n);
  for (Eigen::Index k = 0; k < n; ++k) {
    out.values(k) = a(order[k], order[k]).real();
    out.vectors.col(k) = v.col(order[k]);
  }
  fix_phase(out.vectors);
  return out;
}

ComplexMatrix tensor_product(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

ComplexMatrix partial_trace(const ComplexMatrix& m, Dims dims, Subsystem keep) {
  if (m.rows() != m.cols() || dims.total() != m.rows())
    throw Error("dims", static_cast<double>(m.rows()),
                "dims " + std::to_string(dims.a) + "x" + std::to_string(dims.b) +
                    " inconsistent with matrix side " + std::to_string(m.rows()));
  const int da = dims.a;
  const int db = dims.b;
  if (keep == Subsystem::A) {
    ComplexMatrix out = ComplexMatrix::Zero(da, da);
    for (int i = 0; i < da; ++i)
      for (int j = 0; j < da; ++j)
        for (int k = 0; k < db; ++k) out(i, j) += m(i * db + k, j * db + k);
    return out;
  }
  ComplexMatrix out = ComplexMatrix::Zero(db, db);
  for (int k = 0; k < db; ++k)
    for (int l = 0; l < db; ++l)
      for (int i = 0; i < da; ++i) out(k, l) += m(i * db + k, i * db + l);
  return out;
}

DensityMatrix partial_trace(const DensityMatrix& rho, Subsystem keep) {
  if (!rho.dims().composite())
    throw Error("dims", static_cast<double>(rho.side()), "partial trace needs a composite state");
  return DensityMatrix::single(partial_trace(rho.matrix(), rho.dims(), keep));
}

ComplexMatrix partial_transpose(const ComplexMatrix& m, Dims dims, Subsystem side) {
  if (m.rows() != m.cols() || dims.total() != m.rows())
    throw Error("dims", static_cast<double>(m.rows()),
                "dims " + std::to_string(dims.a) + "x" + std::to_string(dims.b) +
                    " inconsistent with matrix side " + std::to_string(m.rows()));
  const int da = dims.a;
  const int db = dims.b;
  ComplexMatrix out(m.rows(), m.cols());
  for (int i = 0; i < da; ++i)
    for (int k = 0; k < db; ++k)
      for (int j = 0; j < da; ++j)
        for (int l = 0; l < db; ++l) {
          const Complex value = m(i * db + k, j * db + l);
          if (side == Subsystem::A)
            out(j * db + k, i * db + l) = value;
          else
            out(i * db + l, j * db + k) = value;
        }
  return out;
}

ComplexMatrix partial_transpose(const DensityMatrix& rho, Subsystem side) {
  if (!rho.dims().composite())
    throw Error("dims", static_cast<double>(rho.side()),
                "partial transpose needs a composite state");
  return partial_transpose(rho.matrix(), rho.dims(), side);
}

RealVector clip_spectrum(const RealVector& values, const Tolerances& tol) {
  RealVector out = values;
  for (Eigen::Index i = 0; i < out.size(); ++i) {
    if (out(i) < -tol.psd)
      throw Error("psd", out(i), "negative eigenvalue " + fmt_double(out(i)));
    if (out(i) < 0.0) out(i) = 0.0;
  }
  return out;
}

ComplexMatrix psd_function(const EigenSystem& eig, MatrixFunction f, const Tolerances& tol) {
  const RealVector lambda = clip_spectrum(eig.values, tol);
  RealVector mapped(lambda.size());
  for (Eigen::Index i = 0; i < lambda.size(); ++i) {
    if (lambda(i) <= tol.support)
      mapped(i) = 0.0;
    else
      mapped(i) = f == MatrixFunction::Sqrt ? std::sqrt(lambda(i)) : std::log(lambda(i));
  }
  ComplexMatrix out = eig.vectors * mapped.cast<Complex>().asDiagonal() * eig.vectors.adjoint();
  return (out + out.adjoint()) * 0.5;
}

ComplexMatrix psd_function(const ComplexMatrix& m, MatrixFunction f, const Tolerances& tol) {
  return psd_function(hermitian_eig(m, tol), f, tol);
}

const ComplexMatrix& pauli(int i) {
  static const ComplexMatrix tau1 = (ComplexMatrix(2, 2) << 0, 1, 1, 0).finished();
  static const ComplexMatrix tau2 =
      (ComplexMatrix(2, 2) << 0, Complex(0, -1), Complex(0, 1), 0).finished();
  static const ComplexMatrix tau3 = (ComplexMatrix(2, 2) << 1, 0, 0, -1).finished();
  switch (i) {
    case 1:
      return tau1;
    case 2:
      return tau2;
    case 3:
      return tau3;
    default:
      throw Error("pauli_index", i, "Pauli index must be 1, 2 or 3");
  }
}

const ComplexMatrix& identity2() {
  static const ComplexMatrix id = ComplexMatrix::Identity(2, 2);
  return id;
}

}  // namespace qsep
