#include "qsep/states.hpp"

#include <cmath>
#include <numbers>
#include <random>
#include <string>

#include "qsep/error.hpp"

namespace qsep {

namespace {

// Basis indices for two qubits.
constexpr int k11 = 0;
constexpr int k10 = 1;
constexpr int k01 = 2;
constexpr int k00 = 3;

ComplexVector ket(std::initializer_list<std::pair<int, Complex>> entries) {
  ComplexVector v = ComplexVector::Zero(4);
  for (const auto& [index, amp] : entries) v(index) = amp;
  return v;
}

ComplexMatrix projector(const ComplexVector& v) { return v * v.adjoint(); }

ComplexMatrix basis_projector(int index) {
  ComplexMatrix m = ComplexMatrix::Zero(4, 4);
  m(index, index) = 1.0;
  return m;
}

void check_probability(double p, const char* what) {
  if (!(p >= 0.0 && p <= 1.0))
    throw Error("range", p, std::string(what) + " must lie in [0, 1], got " + std::to_string(p));
}

Complex complex_gaussian(std::mt19937_64& gen) {
  std::normal_distribution<double> normal(0.0, 1.0);
  const double re = normal(gen);
  const double im = normal(gen);
  return {re, im};
}

}  // namespace

ComplexVector PureStateAmplitudes::vector() const {
  ComplexVector v(4);
  v << a11, a10, a01, a00;
  return v;
}

double PureStateAmplitudes::norm_squared() const {
  return std::norm(a11) + std::norm(a10) + std::norm(a01) + std::norm(a00);
}

double BlochVector::norm() const { return std::sqrt(s1 * s1 + s2 * s2 + s3 * s3); }

std::string_view to_string(ExampleId id) {
  switch (id) {
    case ExampleId::E1:
      return "E1";
    case ExampleId::E2:
      return "E2";
    case ExampleId::E3:
      return "E3";
    case ExampleId::E4:
      return "E4";
    case ExampleId::E5:
      return "E5";
    case ExampleId::E6:
      return "E6";
  }
  return "?";
}

DensityMatrix werner(double p) {
  check_probability(p, "Werner parameter p");
  const double h = 1.0 / std::numbers::sqrt2;
  const ComplexVector bell = ket({{k00, h}, {k11, h}});
  ComplexMatrix m = p * projector(bell) + (1.0 - p) / 4.0 * ComplexMatrix::Identity(4, 4);
  return DensityMatrix(std::move(m), Dims{2, 2});
}

LocalDecomposition werner_local_decomposition(double p) {
  check_probability(p, "Werner parameter p");
  const ComplexMatrix half_id = identity2() * 0.5;
  LocalDecomposition dec;
  dec.terms.push_back({1.0 - 3.0 * p, DensityMatrix::single(half_id), DensityMatrix::single(half_id)});
  if (p == 0.0) return dec;
  for (int i = 1; i <= 3; ++i) {
    for (int eps : {+1, -1}) {
      const int eps_b = i == 2 ? -eps : eps;
      ComplexMatrix ra = (identity2() + eps * pauli(i)) * 0.5;
      ComplexMatrix sb = (identity2() + eps_b * pauli(i)) * 0.5;
      dec.terms.push_back({p / 2.0, DensityMatrix::single(std::move(ra)), DensityMatrix::single(std::move(sb))});
    }
  }
  return dec;
}

DensityMatrix example_state(ExampleId id) {
  ComplexMatrix m;
  switch (id) {
    case ExampleId::E1:
      m = (projector(ket({{k10, -2.0}, {k01, 1.0}})) + basis_projector(k00)) / 6.0;
      break;
    case ExampleId::E2:
      m = (projector(ket({{k10, 1.0}, {k01, 1.0}})) + 4.0 * basis_projector(k00)) / 6.0;
      break;
    case ExampleId::E3:
      m = (projector(ket({{k10, 1.0}, {k01, 1.0}})) + basis_projector(k00)) / 3.0;
      break;
    case ExampleId::E4:
      m = projector(ket({{k10, 1.0}, {k01, -1.0}})) / 2.0;
      break;
    case ExampleId::E5:
      m = (basis_projector(k00) + basis_projector(k01)) / 2.0;
      break;
    case ExampleId::E6:
      m = (basis_projector(k11) + basis_projector(k00)) / 2.0;
      break;
  }
  return DensityMatrix(std::move(m), Dims{2, 2});
}

std::pair<DensityMatrix, DensityMatrix> isospectral_pair() {
  ComplexMatrix e = basis_projector(k11) + basis_projector(k10) + basis_projector(k01);
  e(k10, k01) = 1.0;
  e(k01, k10) = 1.0;
  ComplexMatrix s = basis_projector(k11) + 2.0 * basis_projector(k00);
  return {DensityMatrix(e / 3.0, Dims{2, 2}), DensityMatrix(s / 3.0, Dims{2, 2})};
}

DensityMatrix pure_density(const PureStateAmplitudes& amps, const Tolerances& tol) {
  const double err = std::abs(amps.norm_squared() - 1.0);
  if (err > tol.normalization)
    throw Error("normalization", err, "|sum |a|^2 - 1| = " + std::to_string(err));
  return DensityMatrix(projector(amps.vector()), Dims{2, 2}, tol);
}

std::pair<BlochVector, BlochVector> bloch_vectors(const PureStateAmplitudes& amps) {
  const auto& [a11, a10, a01, a00] = amps;
  const Complex i(0.0, 1.0);
  using std::conj;
  using std::norm;
  BlochVector sa{
      (a11 * conj(a01) + conj(a11) * a01 + a10 * conj(a00) + conj(a10) * a00).real(),
      (i * (a11 * conj(a01) - conj(a11) * a01 + a10 * conj(a00) - conj(a10) * a00)).real(),
      norm(a11) - norm(a01) + norm(a10) - norm(a00),
  };
  BlochVector sb{
      (a11 * conj(a10) + conj(a11) * a10 + a01 * conj(a00) + conj(a01) * a00).real(),
      (i * (a11 * conj(a10) - conj(a11) * a10 + a01 * conj(a00) - conj(a01) * a00)).real(),
      norm(a11) - norm(a10) + norm(a01) - norm(a00),
  };
  return {sa, sb};
}

CorrelationTensor correlation_tensor(const PureStateAmplitudes& amps) {
  const auto& [a11, a10, a01, a00] = amps;
  const Complex i(0.0, 1.0);
  using std::conj;
  using std::norm;
  CorrelationTensor t;
  auto& c = t.c;
  c(0, 0) = (a11 * conj(a00) + a00 * conj(a11) + a10 * conj(a01) + a01 * conj(a10)).real();
  c(0, 1) = (i * (a11 * conj(a00) - a00 * conj(a11) + a01 * conj(a10) - a10 * conj(a01))).real();
  c(0, 2) = (a11 * conj(a01) + a01 * conj(a11) - a10 * conj(a00) - a00 * conj(a10)).real();
  c(1, 0) = (i * (a11 * conj(a00) - a00 * conj(a11) + a10 * conj(a01) - a01 * conj(a10))).real();
  c(1, 1) = (-a11 * conj(a00) - a00 * conj(a11) + a10 * conj(a01) + a01 * conj(a10)).real();
  c(1, 2) = (i * (a11 * conj(a01) - a01 * conj(a11) - a10 * conj(a00) + a00 * conj(a10))).real();
  c(2, 0) = (a11 * conj(a10) + a10 * conj(a11) - a01 * conj(a00) - a00 * conj(a01)).real();
  c(2, 1) = (i * (a11 * conj(a10) - a10 * conj(a11) - a01 * conj(a00) + a00 * conj(a01))).real();
  c(2, 2) = norm(a11) - norm(a10) - norm(a01) + norm(a00);
  return t;
}

ComplexMatrix pauli_reconstruction(const BlochVector& sa, const BlochVector& sb, const CorrelationTensor& c) {
  const std::array<double, 3> a{sa.s1, sa.s2, sa.s3};
  const std::array<double, 3> b{sb.s1, sb.s2, sb.s3};
  ComplexMatrix m = tensor_product(identity2(), identity2());
  for (int i = 1; i <= 3; ++i) {
    m += a[i - 1] * tensor_product(pauli(i), identity2());
    m += b[i - 1] * tensor_product(identity2(), pauli(i));
    for (int j = 1; j <= 3; ++j) m += c.c(i - 1, j - 1) * tensor_product(pauli(i), pauli(j));
  }
  return m / 4.0;
}

MarginalEigenData marginal_eigendata(const BlochVector& s) {
  const double len = s.norm();
  MarginalEigenData d;
  d.p_plus = (1.0 + len) / 2.0;
  d.p_minus = (1.0 - len) / 2.0;
  const double perp = std::hypot(s.s1, s.s2);
  d.phase = perp > 0.0 ? std::atan2(s.s2, s.s1) : 0.0;
  if (len > 0.0) {
    d.a_plus = std::sqrt(std::max(0.0, (len + s.s3) / (2.0 * len)));
    d.a_minus = std::sqrt(std::max(0.0, (len - s.s3) / (2.0 * len)));
  } else {
    d.a_plus = 1.0;
    d.a_minus = 0.0;
  }
  const Complex e = std::polar(1.0, d.phase);
  d.vectors.resize(2, 2);
  d.vectors(0, 0) = d.a_plus;
  d.vectors(1, 0) = e * d.a_minus;
  d.vectors(0, 1) = -std::conj(e) * d.a_minus;
  d.vectors(1, 1) = d.a_plus;
  return d;
}

PurityCheck purity_check(const PureStateAmplitudes& amps) {
  const auto [sa, sb] = bloch_vectors(amps);
  const double s2 = sa.s1 * sa.s1 + sa.s2 * sa.s2 + sa.s3 * sa.s3;
  const double det = std::norm(amps.a11 * amps.a00 - amps.a01 * amps.a10);
  return {(1.0 + s2) / 2.0, std::abs((1.0 - s2) - 4.0 * det)};
}

PureStateAmplitudes random_pure(std::uint64_t seed) {
  std::mt19937_64 gen(seed);
  std::array<Complex, 4> z;
  for (auto& x : z) x = complex_gaussian(gen);
  const double n = std::sqrt(std::norm(z[0]) + std::norm(z[1]) + std::norm(z[2]) + std::norm(z[3]));
  return {z[0] / n, z[1] / n, z[2] / n, z[3] / n};
}

DensityMatrix random_density(std::uint64_t seed, Dims dims, int rank) {
  const int dim = dims.total();
  if (rank < 1 || rank > dim)
    throw Error("rank", rank, "rank must lie in 1.." + std::to_string(dim) + ", got " + std::to_string(rank));
  std::mt19937_64 gen(seed);
  std::exponential_distribution<double> expo(1.0);
  std::vector<double> weights(static_cast<std::size_t>(rank));
  double total = 0.0;
  for (auto& w : weights) total += (w = expo(gen));
  ComplexMatrix m = ComplexMatrix::Zero(dim, dim);
  for (double w : weights) {
    ComplexVector v(dim);
    for (int k = 0; k < dim; ++k) v(k) = complex_gaussian(gen);
    v.normalize();
    m += (w / total) * projector(v);
  }
  return DensityMatrix(std::move(m), dims);
}

DensityMatrix random_mixed(std::uint64_t seed, int rank) {
  if (rank < 1 || rank > 4)
    throw Error("rank", rank, "rank must lie in 1..4, got " + std::to_string(rank));
  return random_density(seed, Dims{2, 2}, rank);
}

ComplexMatrix random_unitary2(std::uint64_t seed) {
  std::mt19937_64 gen(seed);
  Complex a = complex_gaussian(gen);
  Complex b = complex_gaussian(gen);
  const double n = std::sqrt(std::norm(a) + std::norm(b));
  a /= n;
  b /= n;
  std::uniform_real_distribution<double> angle(0.0, 2.0 * std::numbers::pi);
  const Complex phase = std::polar(1.0, angle(gen));
  ComplexMatrix u(2, 2);
  u << a, -std::conj(b), b, std::conj(a);
  return phase * u;
}

}  // namespace qsep
