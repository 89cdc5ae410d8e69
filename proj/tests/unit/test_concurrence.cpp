#include <doctest.h>

#include <cmath>

#include "../oracles.hpp"
#include "qsep/concurrence.hpp"
#include "qsep/states.hpp"
#include "qsep/structure.hpp"

using namespace qsep;

TEST_SUITE("concurrence") {
  TEST_CASE("registry values") {
    CHECK(concurrence(example_state(ExampleId::E1)) == doctest::Approx(2.0 / 3).epsilon(1e-10));
    CHECK(concurrence(example_state(ExampleId::E2)) == doctest::Approx(1.0 / 3).epsilon(1e-10));
    CHECK(concurrence(example_state(ExampleId::E3)) == doctest::Approx(2.0 / 3).epsilon(1e-10));
    CHECK(concurrence(example_state(ExampleId::E4)) == doctest::Approx(1.0).epsilon(1e-10));
    CHECK(concurrence(example_state(ExampleId::E5)) <= 1e-10);
    CHECK(concurrence(example_state(ExampleId::E6)) <= 1e-10);
    CHECK(concurrence(werner(2.0 / 3)) == doctest::Approx(0.5).epsilon(1e-10));
  }

  TEST_CASE("lambda spectrum examples") {
    const auto bell = lambda_spectrum(example_state(ExampleId::E4)).lambdas;
    CHECK(bell[0] == doctest::Approx(1.0));
    for (int i = 1; i < 4; ++i) CHECK(std::abs(bell[static_cast<std::size_t>(i)]) <= 1e-10);
    const DensityMatrix mixed(ComplexMatrix::Identity(4, 4) / 4.0, Dims{2, 2});
    for (double l : lambda_spectrum(mixed).lambdas) CHECK(l == doctest::Approx(0.25).epsilon(1e-12));
  }

  TEST_CASE("Werner closed form") {
    for (int k = 0; k <= 100; ++k) {
      const double p = k / 100.0;
      CHECK(std::abs(concurrence(werner(p)) - std::max((3 * p - 1) / 2, 0.0)) <= 1e-10);
    }
  }

  TEST_CASE("matches characteristic-polynomial oracle on full-rank states") {
    for (std::uint64_t s = 0; s < 200; ++s) {
      const DensityMatrix rho = random_mixed(1000 + s, 4);
      const auto lam = lambda_spectrum(rho).lambdas;
      const auto ref = oracle::lambda_bruteforce(rho.matrix());
      for (std::size_t i = 0; i < 4; ++i) CHECK(std::abs(lam[i] - ref[i]) <= 1e-7);
    }
  }

  TEST_CASE("matches the eigenbasis route on all ranks") {
    for (std::uint64_t s = 0; s < 200; ++s) {
      const DensityMatrix rho = random_mixed(2000 + s, 1 + static_cast<int>(s % 4));
      const auto lam = lambda_spectrum(rho).lambdas;
      const auto ref = oracle::lambda_eigenbasis_route(rho.matrix());
      for (std::size_t i = 0; i < 4; ++i) CHECK(std::abs(lam[i] - ref[i]) <= 1e-7);
      CHECK(std::abs(concurrence(rho) - oracle::concurrence_from(ref)) <= 1e-7);
    }
  }

  TEST_CASE("spin flip") {
    const DensityMatrix rho = random_mixed(5, 3);
    CHECK(max_abs(spin_flip(rho) - oracle::spin_flip(rho.matrix())) <= 1e-14);
  }

  TEST_CASE("invariances and PPT equivalence") {
    for (std::uint64_t s = 0; s < 200; ++s) {
      const DensityMatrix rho = random_mixed(3000 + s, 1 + static_cast<int>(s % 4));
      const double c = concurrence(rho);
      CHECK(c >= 0.0);
      CHECK(c <= 1.0 + 1e-10);
      CHECK(std::abs(concurrence(DensityMatrix(spin_flip(rho), Dims{2, 2})) - c) <= 1e-8);
      const ComplexMatrix u = oracle::kron(random_unitary2(2 * s), random_unitary2(2 * s + 1));
      CHECK(std::abs(concurrence(DensityMatrix(u * rho.matrix() * u.adjoint(), Dims{2, 2})) - c) <= 1e-8);
      const double m = oracle::eigenvalues(partial_transpose(rho, Subsystem::B)).minCoeff();
      CHECK((c > 1e-8) == (m < -1e-8));
    }
  }

  TEST_CASE("pure-state routes") {
    const double r = 1.0 / std::sqrt(2.0);
    CHECK(pure_concurrence({0.0, r, -r, 0.0}) == doctest::Approx(1.0));
    CHECK(pure_concurrence({1.0, 0.0, 0.0, 0.0}) == 0.0);
    for (std::uint64_t s = 0; s < 200; ++s) {
      const PureStateAmplitudes a = random_pure(s);
      const double c = pure_concurrence(a);
      CHECK(std::abs(c - concurrence(pure_density(a))) <= 1e-8);
      const double sa = bloch_vectors(a).first.norm();
      CHECK(std::abs(c - std::sqrt(std::max(0.0, 1 - sa * sa))) <= 1e-8);
    }
  }
}
