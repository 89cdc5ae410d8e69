#include <doctest.h>

#include <cmath>

#include "../oracles.hpp"
#include "qsep/error.hpp"
#include "qsep/states.hpp"
#include "qsep/structure.hpp"

using namespace qsep;

namespace {

double spectrum_gap(const DensityMatrix& rho, std::vector<double> expected) {
  const oracle::Vector ev = oracle::eigenvalues(rho.matrix());
  double gap = 0.0;
  for (std::size_t i = 0; i < expected.size(); ++i)
    gap = std::max(gap, std::abs(ev(static_cast<Eigen::Index>(i)) - expected[i]));
  return gap;
}

}  // namespace

TEST_SUITE("states") {
  TEST_CASE("werner spectrum and marginals") {
    for (double p : {0.0, 0.1, 1.0 / 3, 0.5, 0.9, 1.0}) {
      const DensityMatrix w = werner(p);
      CHECK(spectrum_gap(w, {(1 + 3 * p) / 4, (1 - p) / 4, (1 - p) / 4, (1 - p) / 4}) <= 1e-12);
      const ComplexMatrix half = ComplexMatrix::Identity(2, 2) * 0.5;
      CHECK(max_abs(oracle::trace_out_b(w.matrix(), 2, 2) - half) <= 1e-12);
      CHECK(max_abs(oracle::trace_out_a(w.matrix(), 2, 2) - half) <= 1e-12);
    }
    // p = 1 is the Bell projector onto (|00> + |11>)/sqrt(2): entries at |11>,|00>.
    const ComplexMatrix bell = werner(1.0).matrix();
    CHECK(std::abs(bell(0, 0) - 0.5) <= 1e-15);
    CHECK(std::abs(bell(0, 3) - 0.5) <= 1e-15);
    CHECK(std::abs(bell(3, 3) - 0.5) <= 1e-15);
    CHECK_THROWS_AS(werner(-0.1), Error);
    CHECK_THROWS_AS(werner(1.1), Error);
  }

  TEST_CASE("werner local decomposition") {
    for (int k = 0; k <= 100; ++k) {
      const double p = k / 100.0;
      const LocalDecomposition dec = werner_local_decomposition(p);
      CHECK(std::abs(dec.weight_sum() - 1.0) <= 1e-12);
      CHECK(max_abs(reconstruct(dec).matrix() - werner(p).matrix()) <= 1e-12);
      CHECK(dec.all_weights_nonnegative() == (p <= 1.0 / 3 + 1e-12));
    }
    CHECK(werner_local_decomposition(0.0).terms.size() == 1);
    CHECK(werner_local_decomposition(0.5).terms.size() == 7);
  }

  TEST_CASE("example spectra") {
    CHECK(spectrum_gap(example_state(ExampleId::E1), {5.0 / 6, 1.0 / 6, 0, 0}) <= 1e-12);
    CHECK(spectrum_gap(example_state(ExampleId::E2), {4.0 / 6, 2.0 / 6, 0, 0}) <= 1e-12);
    CHECK(spectrum_gap(example_state(ExampleId::E3), {2.0 / 3, 1.0 / 3, 0, 0}) <= 1e-12);
    CHECK(spectrum_gap(example_state(ExampleId::E4), {1, 0, 0, 0}) <= 1e-12);
    CHECK(spectrum_gap(example_state(ExampleId::E5), {0.5, 0.5, 0, 0}) <= 1e-12);
    CHECK(spectrum_gap(example_state(ExampleId::E6), {0.5, 0.5, 0, 0}) <= 1e-12);
  }

  TEST_CASE("isospectral pair shares global and local spectra") {
    const auto [e, s] = isospectral_pair();
    CHECK((oracle::eigenvalues(e.matrix()) - oracle::eigenvalues(s.matrix())).cwiseAbs().maxCoeff() <= 1e-12);
    CHECK((oracle::eigenvalues(oracle::trace_out_b(e.matrix(), 2, 2)) -
           oracle::eigenvalues(oracle::trace_out_b(s.matrix(), 2, 2)))
              .cwiseAbs()
              .maxCoeff() <= 1e-12);
    CHECK((oracle::eigenvalues(oracle::trace_out_a(e.matrix(), 2, 2)) -
           oracle::eigenvalues(oracle::trace_out_a(s.matrix(), 2, 2)))
              .cwiseAbs()
              .maxCoeff() <= 1e-12);
  }

  TEST_CASE("pure_density normalization") {
    const double r = 1.0 / std::sqrt(2.0);
    const DensityMatrix singlet = pure_density({0.0, r, -r, 0.0});
    CHECK(std::abs(singlet.matrix().trace().real() - 1.0) <= 1e-14);
    try {
      pure_density({1.0, 1.0, 0.0, 0.0});
      FAIL("expected normalization error");
    } catch (const Error& e) {
      CHECK(e.check() == "normalization");
    }
  }

  TEST_CASE("bloch vectors and pauli reconstruction") {
    // |1>|0>: s(A) points along +tau3 (|1> is the +1 eigenvector), s(B) along -tau3.
    const auto [sa, sb] = bloch_vectors({0.0, 1.0, 0.0, 0.0});
    CHECK(sa.s3 == doctest::Approx(1.0));
    CHECK(sb.s3 == doctest::Approx(-1.0));
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
      const PureStateAmplitudes a = random_pure(seed);
      const auto [va, vb] = bloch_vectors(a);
      const ComplexMatrix rho = pure_density(a).matrix();
      // Expectation values against the density matrix directly.
      const ComplexMatrix id = ComplexMatrix::Identity(2, 2);
      CHECK(std::abs((rho * oracle::kron(pauli(1), id)).trace().real() - va.s1) <= 1e-12);
      CHECK(std::abs((rho * oracle::kron(pauli(2), id)).trace().real() - va.s2) <= 1e-12);
      CHECK(std::abs((rho * oracle::kron(id, pauli(3))).trace().real() - vb.s3) <= 1e-12);
      const CorrelationTensor c = correlation_tensor(a);
      for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
          CHECK(std::abs((rho * oracle::kron(pauli(i + 1), pauli(j + 1))).trace().real() - c.c(i, j)) <= 1e-12);
      CHECK(max_abs(pauli_reconstruction(va, vb, c) - rho) <= 1e-9);
      CHECK(std::abs(va.norm() - vb.norm()) <= 1e-10);
      CHECK(purity_check(a).concurrence_identity <= 1e-10);
    }
  }

  TEST_CASE("marginal eigendata") {
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
      const auto [sa, sb] = bloch_vectors(random_pure(seed));
      const MarginalEigenData d = marginal_eigendata(sa);
      CHECK(d.p_plus == doctest::Approx((1 + sa.norm()) / 2).epsilon(1e-12));
      CHECK(d.p_minus == doctest::Approx((1 - sa.norm()) / 2).epsilon(1e-12));
      const ComplexMatrix rho_a = 0.5 * (ComplexMatrix::Identity(2, 2) + sa.s1 * pauli(1) + sa.s2 * pauli(2) +
                                         sa.s3 * pauli(3));
      const ComplexVector v0 = d.vectors.col(0);
      const ComplexVector v1 = d.vectors.col(1);
      CHECK((rho_a * v0 - d.p_plus * v0).norm() <= 1e-10);
      CHECK((rho_a * v1 - d.p_minus * v1).norm() <= 1e-10);
    }
    const MarginalEigenData mixed = marginal_eigendata(BlochVector{});
    CHECK(mixed.p_plus == doctest::Approx(0.5));
    CHECK(mixed.phase == 0.0);
  }

  TEST_CASE("random states are valid and reproducible") {
    for (int rank = 1; rank <= 4; ++rank) {
      const DensityMatrix a = random_mixed(9, rank);
      const DensityMatrix b = random_mixed(9, rank);
      CHECK(max_abs(a.matrix() - b.matrix()) == 0.0);
      const oracle::Vector ev = oracle::eigenvalues(a.matrix());
      int nonzero = 0;
      for (int i = 0; i < 4; ++i) nonzero += ev(i) > 1e-10;
      CHECK(nonzero == rank);
    }
    CHECK_THROWS_AS(random_mixed(1, 0), Error);
    CHECK_THROWS_AS(random_mixed(1, 5), Error);
    const ComplexMatrix u = random_unitary2(3);
    CHECK(max_abs(u * u.adjoint() - ComplexMatrix::Identity(2, 2)) <= 1e-12);
  }
}
