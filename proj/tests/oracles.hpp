#pragma once

// Independent reference computations used only by the tests. Nothing here
// calls into the library's eigensolver or matrix functions.

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <complex>
#include <vector>

namespace oracle {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXd;

inline Matrix kron(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      for (Eigen::Index k = 0; k < b.rows(); ++k)
        for (Eigen::Index l = 0; l < b.cols(); ++l) out(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
  return out;
}

/// Reduced matrix on A (trace over B) by the index sum
/// rho_A(i, j) = sum_k rho(i dB + k, j dB + k).
inline Matrix trace_out_b(const Matrix& m, int da, int db) {
  Matrix out = Matrix::Zero(da, da);
  for (int i = 0; i < da; ++i)
    for (int j = 0; j < da; ++j)
      for (int k = 0; k < db; ++k) out(i, j) += m(i * db + k, j * db + k);
  return out;
}

inline Matrix trace_out_a(const Matrix& m, int da, int db) {
  Matrix out = Matrix::Zero(db, db);
  for (int i = 0; i < db; ++i)
    for (int j = 0; j < db; ++j)
      for (int k = 0; k < da; ++k) out(i, j) += m(k * db + i, k * db + j);
  return out;
}

/// Eigenvalues in descending order from Eigen's self-adjoint solver.
inline Vector eigenvalues(const Matrix& h) {
  Eigen::SelfAdjointEigenSolver<Matrix> es(h);
  Vector v = es.eigenvalues().reverse();
  return v;
}

inline double entropy_of(const Vector& p) {
  double s = 0.0;
  for (Eigen::Index i = 0; i < p.size(); ++i)
    if (p(i) > 1e-14) s -= p(i) * std::log(p(i));
  return s;
}

inline double von_neumann(const Matrix& rho) { return entropy_of(eigenvalues(rho)); }

inline double tsallis(const Matrix& rho, double q) {
  if (q == 1.0) return von_neumann(rho);
  const Vector p = eigenvalues(rho);
  double s = 0.0;
  for (Eigen::Index i = 0; i < p.size(); ++i)
    if (p(i) > 1e-14) s += std::pow(p(i), q);
  return (s - 1.0) / (1.0 - q);
}

/// sigma_y (x) sigma_y in the |1>,|0> local ordering.
inline Matrix yy() {
  Matrix y(2, 2);
  y << 0, Complex(0, -1), Complex(0, 1), 0;
  return kron(y, y);
}

inline Matrix spin_flip(const Matrix& rho) {
  const Matrix f = yy();
  return f * rho.conjugate() * f;
}

using LComplex = std::complex<long double>;
using LMatrix = Eigen::Matrix<LComplex, Eigen::Dynamic, Eigen::Dynamic>;

/// Coefficients c[0..n] of det(x I - M) = sum c_k x^(n-k), c[0] = 1,
/// by the Faddeev-LeVerrier recursion. Extended precision: the smallest
/// roots of rho * spin_flip(rho) sit near 1e-8 and lose most of their digits
/// to coefficient round-off in double.
inline std::vector<LComplex> characteristic_polynomial(const Matrix& m) {
  const auto n = m.rows();
  const LMatrix ml = m.cast<LComplex>();
  std::vector<LComplex> c(static_cast<std::size_t>(n) + 1);
  c[0] = 1.0L;
  LMatrix mk = LMatrix::Zero(n, n);
  const LMatrix id = LMatrix::Identity(n, n);
  for (Eigen::Index k = 1; k <= n; ++k) {
    mk = ml * (mk + c[static_cast<std::size_t>(k - 1)] * id);
    c[static_cast<std::size_t>(k)] = -mk.trace() / static_cast<long double>(k);
  }
  return c;
}

inline LComplex horner(const std::vector<LComplex>& c, LComplex x) {
  LComplex v = 0.0L;
  for (const LComplex& ck : c) v = v * x + ck;
  return v;
}

/// All roots of a monic polynomial by Durand-Kerner iteration followed by a
/// few Newton steps per root.
inline std::vector<LComplex> polynomial_roots(const std::vector<LComplex>& c) {
  const std::size_t n = c.size() - 1;
  std::vector<LComplex> z(n);
  const LComplex seed(0.4L, 0.9L);
  for (std::size_t k = 0; k < n; ++k) z[k] = std::pow(seed, static_cast<long double>(k));
  for (int iter = 0; iter < 2000; ++iter) {
    long double change = 0.0L;
    for (std::size_t i = 0; i < n; ++i) {
      LComplex denom = 1.0L;
      for (std::size_t j = 0; j < n; ++j)
        if (j != i) denom *= z[i] - z[j];
      const LComplex step = horner(c, z[i]) / denom;
      z[i] -= step;
      change = std::max(change, std::abs(step));
    }
    if (change < 1e-19L) break;
  }
  std::vector<LComplex> dc(n);
  for (std::size_t k = 0; k < n; ++k) dc[k] = c[k] * static_cast<long double>(n - k);
  for (auto& r : z)
    for (int iter = 0; iter < 5; ++iter) {
      const LComplex d = horner(dc, r);
      if (std::abs(d) < 1e-300L) break;
      r -= horner(c, r) / d;
    }
  return z;
}

/// Square roots of the eigenvalues of rho * spin_flip(rho), descending, by
/// characteristic-polynomial root finding.
inline std::vector<double> lambda_bruteforce(const Matrix& rho) {
  const auto roots = polynomial_roots(characteristic_polynomial(rho * spin_flip(rho)));
  std::vector<double> out;
  for (const auto& r : roots) out.push_back(static_cast<double>(std::sqrt(std::max(0.0L, r.real()))));
  std::sort(out.rbegin(), out.rend());
  return out;
}

/// Same lambdas from the eigenbasis form: K(G, G') = sqrt(P_G P_G')
/// <G| yy |G'*>, whose squared singular values are the eigenvalues of
/// rho * spin_flip(rho). Diagonalized with Eigen's general complex solver.
inline std::vector<double> lambda_eigenbasis_route(const Matrix& rho) {
  Eigen::SelfAdjointEigenSolver<Matrix> es(rho);
  const Matrix f = yy();
  const auto n = rho.rows();
  Matrix k(n, n);
  for (Eigen::Index g = 0; g < n; ++g)
    for (Eigen::Index h = 0; h < n; ++h) {
      const double w = std::sqrt(std::max(0.0, es.eigenvalues()(g)) * std::max(0.0, es.eigenvalues()(h)));
      k(g, h) = w * (es.eigenvectors().col(g).adjoint() * f * es.eigenvectors().col(h).conjugate())(0, 0);
    }
  Eigen::ComplexEigenSolver<Matrix> ces(k * k.adjoint());
  std::vector<double> out;
  for (Eigen::Index i = 0; i < n; ++i) out.push_back(std::sqrt(std::max(0.0, ces.eigenvalues()(i).real())));
  std::sort(out.rbegin(), out.rend());
  return out;
}

inline double concurrence_from(const std::vector<double>& l) {
  return std::max(0.0, l[0] - l[1] - l[2] - l[3]);
}

/// Closed form of the Werner q=1 conditional entropy S(AB) - S(A).
inline double werner_conditional_entropy(double p) {
  auto xlogx = [](double x) { return x > 0.0 ? x * std::log(x) : 0.0; };
  return -xlogx((1 + 3 * p) / 4) - 3 * xlogx((1 - p) / 4) - std::log(2.0);
}

/// Bisection for the sign change of f on [lo, hi].
template <class F>
double bisect(F f, double lo, double hi, int iterations = 200) {
  const bool lo_sign = f(lo) > 0;
  for (int i = 0; i < iterations; ++i) {
    const double mid = 0.5 * (lo + hi);
    if ((f(mid) > 0) == lo_sign)
      lo = mid;
    else
      hi = mid;
  }
  return 0.5 * (lo + hi);
}

}  // namespace oracle
