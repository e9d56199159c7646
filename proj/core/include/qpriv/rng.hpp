#pragma once

#include <cstdint>

#include "qpriv/tensor.hpp"

namespace qpriv {

// SplitMix64: a counter-based 64-bit generator. Each output is a finalizing
// hash of an advancing Weyl counter, so independent streams come from
// splitting seeds, never from sharing generator state. Normal variates use
// Box-Muller on top of the raw stream so the byte sequence is identical on
// every platform.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next();
  double uniform();   // [0, 1)
  double gaussian();  // standard normal

  // Per-trial seed derivation: hash of (master seed, trial index).
  static std::uint64_t split(std::uint64_t master, std::uint64_t index);

 private:
  std::uint64_t state_;
  bool has_spare_ = false;
  double spare_ = 0.0;
};

// Vector of iid standard complex Gaussians (real and imaginary parts N(0,1)).
ComplexVector gaussian_vector(int dim, SplitMix64& rng);

// Haar-distributed unitary: Ginibre matrix, QR, phases of R folded into Q.
ComplexMatrix haar_unitary(int dim, SplitMix64& rng, const Tolerances& tol = {});

}  // namespace qpriv
