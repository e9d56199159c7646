#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "test_support.hpp"

using namespace qpriv;

TEST_CASE("density matrix validation") {
  // trace off by more than the tolerance
  ComplexMatrix m = 0.6 * ComplexMatrix::Identity(2, 2);
  CHECK_THROWS_AS(DensityMatrix(m, DimSignature({2})), ValidationError);

  // non-hermitian
  ComplexMatrix nh(2, 2);
  nh << 0.5, 0.3, 0.0, 0.5;
  CHECK_THROWS_AS(DensityMatrix(nh, DimSignature({2})), ValidationError);

  // negative eigenvalue beyond the clip
  ComplexMatrix neg(2, 2);
  neg << 1.2, 0, 0, -0.2;
  CHECK_THROWS_AS(DensityMatrix(neg, DimSignature({2})), ValidationError);

  // signature mismatch
  CHECK_THROWS_AS(DensityMatrix(0.5 * ComplexMatrix::Identity(2, 2), DimSignature({3})),
                  DimensionError);
}

TEST_CASE("purification of a pure state has a one-dimensional reference") {
  const PureState psi = random_pure(DimSignature({3}), 7);
  const PureState pur = purify(psi.density());
  CHECK(pur.signature().dim(0) == 1);
  CHECK(max_abs(pur.density().marginal({1}).matrix() - psi.density().matrix()) < 1e-9);
}

TEST_CASE("purification of the maximally mixed qubit is maximally entangled") {
  ComplexMatrix half = 0.5 * ComplexMatrix::Identity(2, 2);
  const PureState pur = purify(DensityMatrix(half, DimSignature({2})));
  CHECK(pur.signature() == DimSignature({2, 2}));
  // both marginals maximally mixed
  CHECK(max_abs(pur.density().marginal({0}).matrix() - half) < 1e-10);
  CHECK(max_abs(pur.density().marginal({1}).matrix() - half) < 1e-10);
}

TEST_CASE("purify round trip on a rank-3 qutrit state") {
  const DensityMatrix rho = random_density(DimSignature({3}), 3, 123);
  const PureState pur = purify(rho);
  CHECK(pur.signature().dim(0) == 3);
  CHECK(max_abs(pur.density().marginal({1}).matrix() - rho.matrix()) < 1e-9);
}

TEST_CASE("purify round trip holds across many sampled states") {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const int rank = 1 + static_cast<int>(seed % 4);
    const DensityMatrix rho = random_density(DimSignature({2, 2}), rank, seed);
    const PureState pur = purify(rho);
    CHECK(max_abs(pur.density().marginal({1, 2}).matrix() - rho.matrix()) < 1e-9);
  }
}

TEST_CASE("ensemble average fixtures") {
  const DensityMatrix rho = random_density(DimSignature({2}), 2, 5);
  const Ensemble single({{1.0, rho}});
  CHECK(max_abs(ensemble_average(single).matrix() - rho.matrix()) < 1e-12);

  ComplexMatrix p0 = ComplexMatrix::Zero(2, 2), p1 = ComplexMatrix::Zero(2, 2);
  p0(0, 0) = 1;
  p1(1, 1) = 1;
  const Ensemble both({{0.5, DensityMatrix(p0, DimSignature({2}))},
                       {0.5, DensityMatrix(p1, DimSignature({2}))}});
  CHECK(max_abs(ensemble_average(both).matrix() - 0.5 * ComplexMatrix::Identity(2, 2)) < 1e-12);
}

TEST_CASE("eigen-decomposition ensemble reproduces its state") {
  const DensityMatrix rho = random_density(DimSignature({2, 2}), 4, 31);
  const Ensemble e = eigen_decomposition(rho);
  CHECK(max_abs(ensemble_average(e).matrix() - rho.matrix()) < 1e-12);
  for (const auto& m : e.members()) {
    CHECK(m.state.purity() == doctest::Approx(1.0).epsilon(1e-9));
  }
}

TEST_CASE("ensemble validation") {
  const DensityMatrix rho = random_density(DimSignature({2}), 2, 5);
  CHECK_THROWS_AS(Ensemble({{0.7, rho}}), ValidationError);
  CHECK_THROWS_AS(Ensemble({{-0.1, rho}, {1.1, rho}}), ValidationError);
  const DensityMatrix other = random_density(DimSignature({3}), 3, 6);
  CHECK_THROWS_AS(Ensemble({{0.5, rho}, {0.5, other}}), DimensionError);
}

TEST_CASE("pure decomposition of a pure state is that state") {
  const PureState psi = random_pure(DimSignature({2}), 9);
  const Ensemble e = pure_decomposition(psi.density(), 1, 1234);
  REQUIRE(e.members().size() == 1);
  CHECK(max_abs(e.members()[0].state.matrix() - psi.density().matrix()) < 1e-10);
}

TEST_CASE("pure decomposition of the maximally mixed qubit into two states") {
  ComplexMatrix half = 0.5 * ComplexMatrix::Identity(2, 2);
  const DensityMatrix rho(half, DimSignature({2}));
  for (std::uint64_t seed : {1ULL, 77ULL, 424242ULL}) {
    const Ensemble e = pure_decomposition(rho, 2, seed);
    REQUIRE(e.members().size() == 2);
    CHECK(e.members()[0].probability == doctest::Approx(0.5).epsilon(1e-9));
    CHECK(e.members()[1].probability == doctest::Approx(0.5).epsilon(1e-9));
    // members are orthogonal pure states
    const Complex overlap =
        (e.members()[0].state.matrix() * e.members()[1].state.matrix()).trace();
    CHECK(std::abs(overlap) < 1e-10);
  }
}

TEST_CASE("pure decomposition round trip and member purity") {
  const DensityMatrix rho = random_density(DimSignature({2}), 2, 88);
  const Ensemble e = pure_decomposition(rho, 4, 99);
  CHECK(max_abs(ensemble_average(e).matrix() - rho.matrix()) < 1e-9);
  for (const auto& m : e.members()) {
    CHECK(m.state.purity() >= 1.0 - 1e-9);
  }
}

TEST_CASE("pure decomposition requires count >= rank") {
  const DensityMatrix rho = random_density(DimSignature({2, 2}), 3, 11);
  CHECK_THROWS_AS((void)pure_decomposition(rho, 2, 1), ValidationError);
}

TEST_CASE("random pure states are deterministic per seed") {
  const PureState a = random_pure(DimSignature({2, 3}), 1001);
  const PureState b = random_pure(DimSignature({2, 3}), 1001);
  CHECK(max_abs(ComplexMatrix(a.vector() - b.vector())) == 0.0);
  const PureState c = random_pure(DimSignature({2, 3}), 1002);
  CHECK(max_abs(ComplexMatrix(a.vector() - c.vector())) > 1e-3);
}

TEST_CASE("random density rank fixtures") {
  const DensityMatrix pure_like = random_density(DimSignature({4}), 1, 7);
  CHECK(pure_like.purity() == doctest::Approx(1.0).epsilon(1e-9));

  const DensityMatrix full = random_density(DimSignature({4}), 4, 7);
  CHECK(full.purity() < 1.0);
}

TEST_CASE("random density sample mean approaches the maximally mixed state") {
  const int n = 400;
  const DimSignature sig({2, 2});
  ComplexMatrix acc = ComplexMatrix::Zero(4, 4);
  for (int t = 0; t < n; ++t) {
    acc += random_density(sig, 4, SplitMix64::split(2024, t)).matrix();
  }
  acc /= static_cast<double>(n);
  const double dev = max_abs(acc - 0.25 * ComplexMatrix::Identity(4, 4));
  CHECK(dev < 5.0 / std::sqrt(static_cast<double>(n)));
}

TEST_CASE("random density outputs stay valid states across many seeds") {
  // constructor re-validates: hermitian, unit trace, PSD
  for (std::uint64_t seed = 0; seed < 10000; ++seed) {
    const DensityMatrix rho = random_density(DimSignature({2, 2}), 1 + seed % 4, seed);
    CHECK(rho.dim() == 4);
  }
}

TEST_CASE("named states") {
  const PureState bell = named_state("bell", DimSignature({2, 2}));
  CHECK(std::abs(bell.vector()(0) - Complex(1 / std::sqrt(2.0), 0)) < 1e-12);
  CHECK(std::abs(bell.vector()(3) - Complex(1 / std::sqrt(2.0), 0)) < 1e-12);

  const PureState ghz = named_state("ghz", DimSignature({2, 2, 2}));
  CHECK(std::abs(ghz.vector()(0) - Complex(1 / std::sqrt(2.0), 0)) < 1e-12);
  CHECK(std::abs(ghz.vector()(7) - Complex(1 / std::sqrt(2.0), 0)) < 1e-12);

  const PureState w = named_state("w", DimSignature({2, 2, 2}));
  const double amp = 1 / std::sqrt(3.0);
  CHECK(std::abs(w.vector()(1) - Complex(amp, 0)) < 1e-12);
  CHECK(std::abs(w.vector()(2) - Complex(amp, 0)) < 1e-12);
  CHECK(std::abs(w.vector()(4) - Complex(amp, 0)) < 1e-12);

  const PureState zero = named_state("product-zero", DimSignature({3, 2}));
  CHECK(std::abs(zero.vector()(0) - Complex(1, 0)) < 1e-12);

  CHECK_THROWS_AS((void)named_state("cat", DimSignature({2, 2})), ValidationError);
  CHECK_THROWS_AS((void)named_state("bell", DimSignature({2, 2, 2})), DimensionError);
  CHECK_THROWS_AS((void)named_state("w", DimSignature({2, 3})), DimensionError);
}

TEST_CASE("seed splitting separates streams") {
  CHECK(SplitMix64::split(42, 0) != SplitMix64::split(42, 1));
  CHECK(SplitMix64::split(42, 0) != SplitMix64::split(43, 0));
  CHECK(SplitMix64::split(42, 7) == SplitMix64::split(42, 7));
}

TEST_CASE("haar unitaries are unitary and seed-deterministic") {
  SplitMix64 a(5), b(5);
  const ComplexMatrix u = haar_unitary(6, a);
  CHECK(is_unitary(u, 1e-9));
  CHECK(max_abs(u - haar_unitary(6, b)) == 0.0);
}
