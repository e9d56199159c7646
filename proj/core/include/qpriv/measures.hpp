#pragma once

#include <utility>
#include <vector>

#include "qpriv/channels.hpp"
#include "qpriv/states.hpp"

namespace qpriv {

// All scalar quantities are in bits (base-2 logarithms throughout).
using Bits = double;

Bits binary_entropy(double p);

// von Neumann entropy. Eigenvalues in [-psd_clip, 0) are clipped to zero;
// anything more negative is a validation error, not dust.
Bits entropy(const DensityMatrix& rho, const Tolerances& tol = {});

// S(output) - S(reference + output) on a joint state.
Bits coherent_information(const DensityMatrix& joint,
                          const std::vector<int>& reference,
                          const std::vector<int>& output,
                          const Tolerances& tol = {});

// Entropy picked up by an initially pure environment: S of the complementary
// output.
Bits entropy_exchange(const KrausChannel& ch, const DensityMatrix& rho,
                      const Tolerances& tol = {});

// Entropy of the average minus the average entropy.
Bits holevo(const Ensemble& e, const Tolerances& tol = {});

// Rank-1 projective measurement on a qubit, parametrized by Bloch angles.
struct MeasurementBasis {
  double theta = 0.0;
  double phi = 0.0;
  std::vector<ComplexMatrix> projectors;
};

MeasurementBasis bloch_basis(double theta, double phi);

struct ClassicalCorrelationResult {
  Bits value = 0.0;
  MeasurementBasis basis;
};

struct ClassicalCorrelationOptions {
  int grid = 64;               // grid points per Bloch angle
  double refine_step = 1e-4;   // coordinate-descent termination (radians)
};

// Maximal entropy reduction of A from a projective measurement on B.
// The measured side must be a qubit; larger measured dimensions are an
// explicit unsupported-dimension error.
ClassicalCorrelationResult classical_correlation(
    const DensityMatrix& rho_ab, const Tolerances& tol = {},
    const ClassicalCorrelationOptions& opts = {});

// Entropy reduction of A under one specific measurement basis on B.
Bits classical_correlation_at(const DensityMatrix& rho_ab,
                              const MeasurementBasis& basis,
                              const Tolerances& tol = {});

Bits mutual_information(const DensityMatrix& rho_ab, const Tolerances& tol = {});

// Mutual information minus classical correlation (measurement on B).
Bits discord(const DensityMatrix& rho_ab, const Tolerances& tol = {},
             const ClassicalCorrelationOptions& opts = {});

// Two-qubit concurrence from the spin-flipped spectrum.
Bits concurrence(const DensityMatrix& rho, const Tolerances& tol = {});

// Entanglement of formation: closed form for two qubits; marginal entropy for
// pure bipartite states of any dimensions; otherwise unsupported.
Bits eof(const DensityMatrix& rho, const Tolerances& tol = {});

// max{S(A) - S(AB), S(B) - S(AB), 0} on a bipartite state.
Bits carlen_lieb_bound(const DensityMatrix& rho_ab, const Tolerances& tol = {});

// S(input) minus the coherent information through the channel, evaluated on
// the purification of the input. Zero exactly when the channel is invertible
// on the input.
Bits disturbance(const KrausChannel& ch, const DensityMatrix& rho,
                 const Tolerances& tol = {});

// S(target + given) - S(given).
Bits conditional_entropy(const DensityMatrix& joint,
                         const std::vector<int>& target,
                         const std::vector<int>& given,
                         const Tolerances& tol = {});

}  // namespace qpriv
