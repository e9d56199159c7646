#include "qpriv/rng.hpp"

#include <cmath>
#include <numbers>

namespace qpriv {

namespace {

constexpr std::uint64_t kGolden = 0x9e3779b97f4a7c15ULL;

std::uint64_t mix(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

}  // namespace

std::uint64_t SplitMix64::next() {
  state_ += kGolden;
  return mix(state_);
}

double SplitMix64::uniform() {
  return static_cast<double>(next() >> 11) * 0x1.0p-53;
}

double SplitMix64::gaussian() {
  if (has_spare_) {
    has_spare_ = false;
    return spare_;
  }
  // Box-Muller; u1 shifted away from zero so the log is finite.
  const double u1 = (static_cast<double>(next() >> 11) + 1.0) * 0x1.0p-53;
  const double u2 = uniform();
  const double radius = std::sqrt(-2.0 * std::log(u1));
  const double angle = 2.0 * std::numbers::pi * u2;
  spare_ = radius * std::sin(angle);
  has_spare_ = true;
  return radius * std::cos(angle);
}

std::uint64_t SplitMix64::split(std::uint64_t master, std::uint64_t index) {
  return mix(master ^ (mix(index + kGolden) + kGolden));
}

ComplexVector gaussian_vector(int dim, SplitMix64& rng) {
  ComplexVector v(dim);
  for (int i = 0; i < dim; ++i) {
    const double re = rng.gaussian();
    const double im = rng.gaussian();
    v(i) = Complex(re, im);
  }
  return v;
}

ComplexMatrix haar_unitary(int dim, SplitMix64& rng, const Tolerances& tol) {
  if (dim < 1) {
    throw DimensionError("haar_unitary: dimension must be >= 1");
  }
  if (dim > tol.max_dimension) {
    throw DimensionError("haar_unitary: dimension exceeds the configured maximum");
  }
  ComplexMatrix g(dim, dim);
  for (int i = 0; i < dim; ++i) {
    for (int j = 0; j < dim; ++j) {
      const double re = rng.gaussian();
      const double im = rng.gaussian();
      g(i, j) = Complex(re, im);
    }
  }
  Eigen::HouseholderQR<ComplexMatrix> qr(g);
  ComplexMatrix q = qr.householderQ() * ComplexMatrix::Identity(dim, dim);
  const ComplexMatrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int j = 0; j < dim; ++j) {
    const Complex d = r(j, j);
    const double a = std::abs(d);
    q.col(j) *= (a > 0.0) ? d / a : Complex(1.0, 0.0);
  }
  return q;
}

}  // namespace qpriv
