#include <doctest.h>

#include <functional>
#include <random>

#include "../oracles.hpp"
#include "qsep/error.hpp"
#include "qsep/linalg.hpp"
#include "qsep/states.hpp"

using namespace qsep;

namespace {

std::string error_check(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.check();
  }
  return "";
}

ComplexMatrix random_complex(std::uint64_t seed, int rows, int cols) {
  std::mt19937_64 gen(seed);
  std::normal_distribution<double> n(0.0, 1.0);
  ComplexMatrix m(rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) {
      const double re = n(gen);
      m(i, j) = Complex(re, n(gen));
    }
  return m;
}

}  // namespace

TEST_SUITE("linalg") {
  TEST_CASE("density matrix validation") {
    CHECK_NOTHROW(DensityMatrix(ComplexMatrix::Identity(4, 4) / 4.0, Dims{2, 2}));

    ComplexMatrix nonherm = ComplexMatrix::Identity(4, 4) / 4.0;
    nonherm(0, 1) = 0.1;
    CHECK(error_check([&] { DensityMatrix(nonherm, Dims{2, 2}); }) == "hermiticity");

    CHECK(error_check([&] { DensityMatrix(ComplexMatrix::Identity(4, 4) / 3.0, Dims{2, 2}); }) == "trace");

    ComplexMatrix neg = ComplexMatrix::Zero(2, 2);
    neg(0, 0) = 1.5;
    neg(1, 1) = -0.5;
    CHECK(error_check([&] { DensityMatrix::single(neg); }) == "psd");

    CHECK(error_check([&] { DensityMatrix(ComplexMatrix::Identity(3, 3) / 3.0, Dims{2, 2}); }) == "dims");
    CHECK(error_check([&] { DensityMatrix(ComplexMatrix::Identity(4, 3), Dims{2, 2}); }) == "square");
  }

  TEST_CASE("hermitian_eig matches an independent solver") {
    for (std::uint64_t s = 0; s < 50; ++s) {
      const ComplexMatrix g = random_complex(s, 4, 4);
      const ComplexMatrix h = (g + g.adjoint()) * 0.5;
      const EigenSystem e = hermitian_eig(h);
      const oracle::Vector ref = oracle::eigenvalues(h);
      CHECK((e.values - ref).cwiseAbs().maxCoeff() <= 1e-10);
      CHECK(max_abs(e.vectors * e.values.cast<Complex>().asDiagonal() * e.vectors.adjoint() - h) <= 1e-9);
      CHECK(max_abs(e.vectors.adjoint() * e.vectors - ComplexMatrix::Identity(4, 4)) <= 1e-9);
      for (Eigen::Index i = 1; i < e.values.size(); ++i) CHECK(e.values(i - 1) >= e.values(i));
    }
  }

  TEST_CASE("hermitian_eig phase convention and degenerate input") {
    const EigenSystem e = hermitian_eig(ComplexMatrix::Identity(4, 4) * 0.25);
    for (int i = 0; i < 4; ++i) CHECK(e.values(i) == doctest::Approx(0.25).epsilon(1e-14));
    const ComplexMatrix h = random_complex(7, 3, 3);
    const EigenSystem f = hermitian_eig(h + h.adjoint());
    for (int k = 0; k < 3; ++k) {
      int first = 0;
      while (std::abs(f.vectors(first, k)) <= 1e-12) ++first;
      CHECK(std::abs(f.vectors(first, k).imag()) <= 1e-12);
      CHECK(f.vectors(first, k).real() > 0.0);
    }
  }

  TEST_CASE("tensor product and partial trace against index sums") {
    for (std::uint64_t s = 0; s < 20; ++s) {
      const ComplexMatrix a = random_complex(100 + s, 2, 2);
      const ComplexMatrix b = random_complex(200 + s, 3, 3);
      CHECK(max_abs(tensor_product(a, b) - oracle::kron(a, b)) <= 1e-14);
      const ComplexMatrix m = random_complex(300 + s, 6, 6);
      CHECK(max_abs(partial_trace(m, Dims{2, 3}, Subsystem::A) - oracle::trace_out_b(m, 2, 3)) <= 1e-13);
      CHECK(max_abs(partial_trace(m, Dims{2, 3}, Subsystem::B) - oracle::trace_out_a(m, 2, 3)) <= 1e-13);
    }
  }

  TEST_CASE("partial trace of a product recovers the factors") {
    const DensityMatrix a = random_density(11, Dims{2, 1}, 2);
    const DensityMatrix b = random_density(12, Dims{2, 1}, 1);
    const DensityMatrix ab(tensor_product(a.matrix(), b.matrix()), Dims{2, 2});
    CHECK(max_abs(partial_trace(ab, Subsystem::A).matrix() - a.matrix()) <= 1e-12);
    CHECK(max_abs(partial_trace(ab, Subsystem::B).matrix() - b.matrix()) <= 1e-12);
  }

  TEST_CASE("partial transpose") {
    const DensityMatrix rho = random_mixed(5, 3);
    const ComplexMatrix pt = partial_transpose(rho, Subsystem::B);
    CHECK(std::abs(pt.trace() - Complex(1.0)) <= 1e-12);
    CHECK(max_abs(partial_transpose(pt, Dims{2, 2}, Subsystem::B) - rho.matrix()) <= 1e-12);
    // Transposing both sides is the full transpose.
    const ComplexMatrix both = partial_transpose(pt, Dims{2, 2}, Subsystem::A);
    CHECK(max_abs(both - rho.matrix().transpose()) <= 1e-12);
    // Bell state partial transpose has eigenvalue -1/2.
    CHECK(oracle::eigenvalues(partial_transpose(werner(1.0), Subsystem::B)).minCoeff() ==
          doctest::Approx(-0.5).epsilon(1e-12));
  }

  TEST_CASE("psd_function sqrt and log") {
    for (std::uint64_t s = 0; s < 20; ++s) {
      const DensityMatrix rho = random_mixed(40 + s, 1 + static_cast<int>(s % 4));
      const ComplexMatrix r = psd_function(rho.matrix(), MatrixFunction::Sqrt);
      CHECK(max_abs(r * r - rho.matrix()) <= 1e-8);
    }
    // Full-rank log agrees with the principal log computed by Eigen.
    const DensityMatrix full = random_mixed(77, 4);
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(full.matrix());
    const ComplexMatrix ref = es.eigenvectors() *
                              es.eigenvalues().array().log().matrix().cast<Complex>().asDiagonal() *
                              es.eigenvectors().adjoint();
    CHECK(max_abs(psd_function(full.matrix(), MatrixFunction::Log) - ref) <= 1e-9);
    // Rank-deficient log is supported on the range only.
    const ComplexMatrix lg = psd_function(werner(1.0).matrix(), MatrixFunction::Log);
    CHECK(max_abs(lg) <= 1e-12);
  }

  TEST_CASE("pauli matrices in |1>,|0> order") {
    const ComplexMatrix& t3 = pauli(3);
    CHECK(t3(0, 0) == Complex(1.0));
    CHECK(t3(1, 1) == Complex(-1.0));
    CHECK(max_abs(pauli(1) * pauli(2) - Complex(0, 1) * pauli(3)) <= 1e-15);
    CHECK(error_check([] { pauli(4); }) == "pauli_index");
  }

  TEST_CASE("tolerance scaling") {
    const Tolerances t = Tolerances{}.scaled(10.0);
    CHECK(t.hermiticity == doctest::Approx(1e-9));
    CHECK(t.trace == doctest::Approx(1e-9));
  }
}
