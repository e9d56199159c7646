#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "test_support.hpp"

using namespace qpriv;
using test::pauli_x;

namespace {

// brute-force tensor product straight from the index formula
ComplexMatrix kron_oracle(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j)
      for (int k = 0; k < b.rows(); ++k)
        for (int l = 0; l < b.cols(); ++l)
          out(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
  return out;
}

ComplexMatrix projector0() {
  ComplexMatrix p = ComplexMatrix::Zero(2, 2);
  p(0, 0) = 1;
  return p;
}

}  // namespace

TEST_CASE("kron identity and projector fixtures") {
  const ComplexMatrix i2 = ComplexMatrix::Identity(2, 2);
  CHECK(max_abs(kron(i2, i2) - ComplexMatrix::Identity(4, 4)) == 0.0);

  const ComplexMatrix p = projector0();
  ComplexMatrix expect = ComplexMatrix::Zero(4, 4);
  expect(0, 0) = 1;
  CHECK(max_abs(kron(p, p) - expect) == 0.0);
}

TEST_CASE("kron matches the element-wise index oracle") {
  const ComplexMatrix a = projector0();
  const ComplexMatrix b = pauli_x();
  CHECK(max_abs(kron(a, b) - kron_oracle(a, b)) == 0.0);

  SplitMix64 rng(11);
  ComplexMatrix r(3, 2), s(2, 4);
  for (int i = 0; i < r.size(); ++i) r.data()[i] = Complex(rng.gaussian(), rng.gaussian());
  for (int i = 0; i < s.size(); ++i) s.data()[i] = Complex(rng.gaussian(), rng.gaussian());
  CHECK(max_abs(kron(r, s) - kron_oracle(r, s)) == 0.0);
}

TEST_CASE("kron associativity") {
  // dyadic-valued fixtures associate exactly
  const ComplexMatrix p = projector0();
  const ComplexMatrix x = pauli_x();
  const ComplexMatrix i2 = ComplexMatrix::Identity(2, 2);
  CHECK(max_abs(kron(kron(p, x), i2) - kron(p, kron(x, i2))) == 0.0);

  ComplexMatrix a = test::random_hermitian(2, 3);
  ComplexMatrix b = test::random_hermitian(3, 4);
  ComplexMatrix c = test::random_hermitian(2, 5);
  CHECK(max_abs(kron(kron(a, b), c) - kron(a, kron(b, c))) < 1e-13);
}

TEST_CASE("kron dimension cap") {
  Tolerances tol;
  tol.max_dimension = 8;
  const ComplexMatrix i4 = ComplexMatrix::Identity(4, 4);
  CHECK_THROWS_AS((void)kron(i4, i4, tol), DimensionError);
}

TEST_CASE("partial trace factorizes product states") {
  SplitMix64 unused(0);
  const DensityMatrix rho = random_density(DimSignature({2}), 2, 21);
  const DensityMatrix sigma = random_density(DimSignature({3}), 3, 22);
  const ComplexMatrix joint = kron(rho.matrix(), sigma.matrix());

  auto [kept, sig] = partial_trace(joint, DimSignature({2, 3}), {0});
  CHECK(sig == DimSignature({2}));
  CHECK(max_abs(kept - rho.matrix()) < 1e-12);

  // partial_trace(kron(a,b), first) = a * Tr(b) for non-normalized b too
  const ComplexMatrix b2 = 2.5 * sigma.matrix();
  auto [kept2, sig2] = partial_trace(kron(rho.matrix(), b2), DimSignature({2, 3}), {0});
  CHECK(max_abs(kept2 - 2.5 * rho.matrix()) < 1e-12);
}

TEST_CASE("partial trace of a Bell projector is maximally mixed") {
  const DensityMatrix bell = named_state("bell", DimSignature({2, 2})).density();
  auto [half, sig] = partial_trace(bell.matrix(), bell.signature(), {0});
  CHECK(max_abs(half - 0.5 * ComplexMatrix::Identity(2, 2)) < 1e-12);
}

TEST_CASE("partial trace against the index-summation oracle on 2x3x2") {
  const DimSignature sig({2, 3, 2});
  const DensityMatrix rho = random_density(sig, 12, 33);
  auto [got, got_sig] = partial_trace(rho.matrix(), sig, {0, 2});
  CHECK(got_sig == DimSignature({2, 2}));

  // direct double loop over the traced middle index
  ComplexMatrix expect = ComplexMatrix::Zero(4, 4);
  for (int a0 = 0; a0 < 2; ++a0)
    for (int a2 = 0; a2 < 2; ++a2)
      for (int b0 = 0; b0 < 2; ++b0)
        for (int b2 = 0; b2 < 2; ++b2)
          for (int t = 0; t < 3; ++t)
            expect(a0 * 2 + a2, b0 * 2 + b2) +=
                rho.matrix()(a0 * 6 + t * 2 + a2, b0 * 6 + t * 2 + b2);
  CHECK(max_abs(got - expect) < 1e-14);
}

TEST_CASE("partial trace preserves trace and positivity") {
  for (std::uint64_t seed = 1; seed <= 30; ++seed) {
    const DimSignature sig({2, 2, 3});
    const DensityMatrix rho = random_density(sig, 6, seed);
    auto [red, rsig] = partial_trace(rho.matrix(), sig, {1, 2});
    CHECK(std::abs(red.trace().real() - 1.0) < 1e-12);
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(red, Eigen::EigenvaluesOnly);
    CHECK(es.eigenvalues().minCoeff() > -1e-9);
  }
}

TEST_CASE("complementary cuts of a pure state share their spectrum") {
  for (std::uint64_t seed = 5; seed < 25; ++seed) {
    const DimSignature sig({2, 3, 2});
    const PureState psi = random_pure(sig, seed);
    const ComplexMatrix full = psi.vector() * psi.vector().adjoint();
    auto [a, asig] = partial_trace(full, sig, {0});
    auto [bc, bcsig] = partial_trace(full, sig, {1, 2});
    const RealVector ea = hermitian_eigensystem(a).eigenvalues;
    const RealVector ebc = hermitian_eigensystem(bc).eigenvalues;
    for (int i = 0; i < ea.size(); ++i) {
      CHECK(std::abs(ea(i) - ebc(i)) < 1e-8);
    }
  }
}

TEST_CASE("partial trace error paths") {
  const DimSignature sig({2, 2});
  const ComplexMatrix m = ComplexMatrix::Identity(4, 4);
  CHECK_THROWS_AS((void)partial_trace(m, sig, {2}), DimensionError);
  CHECK_THROWS_AS((void)partial_trace(m, sig, {}), DimensionError);
  CHECK_THROWS_AS((void)partial_trace(m, DimSignature({2, 3}), {0}), DimensionError);
}

TEST_CASE("hermitian eigensystem on fixtures") {
  ComplexMatrix d = ComplexMatrix::Zero(3, 3);
  d(0, 0) = 3;
  d(1, 1) = 1;
  d(2, 2) = 2;
  const HermitianSpectrum spec = hermitian_eigensystem(d);
  CHECK(spec.eigenvalues(0) == doctest::Approx(3.0));
  CHECK(spec.eigenvalues(1) == doctest::Approx(2.0));
  CHECK(spec.eigenvalues(2) == doctest::Approx(1.0));

  const HermitianSpectrum xs = hermitian_eigensystem(pauli_x());
  CHECK(xs.eigenvalues(0) == doctest::Approx(1.0));
  CHECK(xs.eigenvalues(1) == doctest::Approx(-1.0));
}

TEST_CASE("hermitian eigensystem reconstruction on random 8x8") {
  const ComplexMatrix m = test::random_hermitian(8, 99);
  const HermitianSpectrum spec = hermitian_eigensystem(m);
  const ComplexMatrix rebuilt = spec.eigenvectors *
                                spec.eigenvalues.asDiagonal().toDenseMatrix().cast<Complex>() *
                                spec.eigenvectors.adjoint();
  CHECK(max_abs(m - rebuilt) < 1e-9);
  CHECK(is_unitary(spec.eigenvectors, 1e-9));
}

TEST_CASE("hermitian eigensystem rejects non-hermitian input") {
  ComplexMatrix m(2, 2);
  m << 0, 1, 0, 0;
  CHECK_THROWS_AS((void)hermitian_eigensystem(m), ValidationError);
}

TEST_CASE("apply_unitary identity and swap fixtures") {
  const DimSignature sig({2, 2});
  const DensityMatrix rho = random_density(DimSignature({2}), 2, 3);
  const DensityMatrix sigma = random_density(DimSignature({2}), 2, 4);
  const ComplexMatrix joint = kron(rho.matrix(), sigma.matrix());

  const ComplexMatrix i4 = ComplexMatrix::Identity(4, 4);
  CHECK(max_abs(apply_unitary(joint, i4, sig, {0, 1}) - joint) < 1e-14);

  ComplexMatrix swap = ComplexMatrix::Zero(4, 4);
  swap(0, 0) = swap(1, 2) = swap(2, 1) = swap(3, 3) = 1;
  const ComplexMatrix swapped = apply_unitary(joint, swap, sig, {0, 1});
  CHECK(max_abs(swapped - kron(sigma.matrix(), rho.matrix())) < 1e-13);
}

TEST_CASE("apply_unitary on the middle subsystem matches the kron embedding oracle") {
  const DimSignature sig({2, 2, 2});
  const DensityMatrix rho = random_density(sig, 8, 17);
  SplitMix64 rng(55);
  const ComplexMatrix u = haar_unitary(2, rng);

  const ComplexMatrix got = apply_unitary(rho.matrix(), u, sig, {1});
  const ComplexMatrix i2 = ComplexMatrix::Identity(2, 2);
  const ComplexMatrix big = kron(i2, kron(u, i2));
  const ComplexMatrix expect = big * rho.matrix() * big.adjoint();
  CHECK(max_abs(got - expect) < 1e-12);
}

TEST_CASE("apply_unitary preserves trace and spectrum") {
  const DimSignature sig({2, 3});
  const DensityMatrix rho = random_density(sig, 6, 71);
  SplitMix64 rng(72);
  const ComplexMatrix u = haar_unitary(6, rng);
  const ComplexMatrix out = apply_unitary(rho.matrix(), u, sig, {0, 1});
  CHECK(std::abs(out.trace().real() - 1.0) < 1e-10);
  const RealVector before = hermitian_eigensystem(rho.matrix()).eigenvalues;
  const RealVector after = hermitian_eigensystem(out).eigenvalues;
  CHECK(max_abs(ComplexMatrix((before - after).cast<Complex>())) < 1e-10);
}

TEST_CASE("apply_unitary rejects non-unitary operators") {
  const DimSignature sig({2});
  const ComplexMatrix rho = 0.5 * ComplexMatrix::Identity(2, 2);
  ComplexMatrix bad(2, 2);
  bad << 1, 0, 0, 2;
  CHECK_THROWS_AS((void)apply_unitary(rho, bad, sig, {0}), ValidationError);
}

TEST_CASE("apply_unitary commutes with partial trace over untouched subsystems") {
  const DimSignature sig({2, 2, 2});
  for (std::uint64_t seed = 40; seed < 50; ++seed) {
    const DensityMatrix rho = random_density(sig, 8, seed);
    SplitMix64 rng(seed + 100);
    const ComplexMatrix u = haar_unitary(2, rng);
    const ComplexMatrix evolved = apply_unitary(rho.matrix(), u, sig, {0});
    auto [traced_then, s1] = partial_trace(rho.matrix(), sig, {0, 1});
    auto [evolved_then, s2] = partial_trace(evolved, sig, {0, 1});
    const ComplexMatrix alt = apply_unitary(traced_then, u, s1, {0});
    CHECK(max_abs(evolved_then - alt) < 1e-10);
  }
}

TEST_CASE("permute_subsystems round trip and composition") {
  const DimSignature sig({2, 3, 2});
  const DensityMatrix rho = random_density(sig, 12, 61);
  auto [fwd, fsig] = permute_subsystems(rho.matrix(), sig, {2, 0, 1});
  CHECK(fsig == DimSignature({2, 2, 3}));
  // inverse permutation restores the original
  auto [back, bsig] = permute_subsystems(fwd, fsig, {1, 2, 0});
  CHECK(bsig == sig);
  CHECK(max_abs(back - rho.matrix()) == 0.0);

  // swapping a product state's factors
  const DensityMatrix a = random_density(DimSignature({2}), 2, 62);
  const DensityMatrix b = random_density(DimSignature({3}), 3, 63);
  auto [sw, ssig] = permute_subsystems(kron(a.matrix(), b.matrix()),
                                       DimSignature({2, 3}), {1, 0});
  CHECK(max_abs(sw - kron(b.matrix(), a.matrix())) == 0.0);
}

TEST_CASE("dim signature validation") {
  CHECK_THROWS_AS(DimSignature({2, 0}), DimensionError);
  CHECK_THROWS_AS(DimSignature(std::vector<int>{}), DimensionError);
  const DimSignature sig({2, 3, 4});
  CHECK(sig.total() == 24);
  CHECK(sig.strides() == std::vector<int>({12, 4, 1}));
  CHECK(sig.complement({1}) == std::vector<int>({0, 2}));
}
