#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "qpriv/rng.hpp"
#include "qpriv/tensor.hpp"

namespace qpriv {

// Positive semidefinite unit-trace operator over a tensor-product space.
// Validated at construction: Hermitian, trace one, smallest eigenvalue above
// the PSD clip. Immutable afterwards.
class DensityMatrix {
 public:
  DensityMatrix(ComplexMatrix matrix, DimSignature signature,
                const Tolerances& tol = {});

  const ComplexMatrix& matrix() const { return matrix_; }
  const DimSignature& signature() const { return signature_; }
  int dim() const { return signature_.total(); }

  // Reduced state on the kept subsystems (original order).
  DensityMatrix marginal(const std::vector<int>& keep,
                         const Tolerances& tol = {}) const;

  double purity() const;  // Tr(rho^2)

 private:
  friend class PureState;
  struct Trusted {};
  // outer products of unit vectors are Hermitian PSD by construction; this
  // path skips the spectral re-validation
  DensityMatrix(ComplexMatrix matrix, DimSignature signature, Trusted);

  ComplexMatrix matrix_;
  DimSignature signature_;
};

// Unit vector over a tensor-product space.
class PureState {
 public:
  PureState(ComplexVector vector, DimSignature signature,
            const Tolerances& tol = {});

  const ComplexVector& vector() const { return vector_; }
  const DimSignature& signature() const { return signature_; }
  int dim() const { return signature_.total(); }

  DensityMatrix density(const Tolerances& tol = {}) const;

 private:
  ComplexVector vector_;
  DimSignature signature_;
};

// Weighted list of signal states with a shared signature; weights are
// probabilities summing to one.
class Ensemble {
 public:
  struct Member {
    double probability;
    DensityMatrix state;
  };

  Ensemble(std::vector<Member> members, const Tolerances& tol = {});

  const std::vector<Member>& members() const { return members_; }
  const DimSignature& signature() const { return members_.front().state.signature(); }

  DensityMatrix average(const Tolerances& tol = {}) const;

 private:
  std::vector<Member> members_;
};

DensityMatrix ensemble_average(const Ensemble& e, const Tolerances& tol = {});

// Two-part pure state (reference first) whose reduction over the reference
// reproduces rho. The reference dimension equals the rank of rho.
PureState purify(const DensityMatrix& rho, const Tolerances& tol = {});

// Spectral ensemble {(lambda_i, |v_i><v_i|)} over the non-null eigenvectors.
Ensemble eigen_decomposition(const DensityMatrix& rho, const Tolerances& tol = {});

// Ensemble of `count` pure states averaging to rho: the eigen-decomposition
// mixed through a Haar-random isometry. Deterministic per seed. Requires
// count >= rank(rho).
Ensemble pure_decomposition(const DensityMatrix& rho, int count,
                            std::uint64_t seed, const Tolerances& tol = {});

PureState random_pure(const DimSignature& sig, std::uint64_t seed,
                      const Tolerances& tol = {});

// Induced-measure mixed state: partial trace of a Haar pure state over an
// ancilla of dimension `rank`.
DensityMatrix random_density(const DimSignature& sig, int rank,
                             std::uint64_t seed, const Tolerances& tol = {});

// Textbook fixtures: "bell" (two qubits), "ghz" / "w" (n qubits),
// "product-zero" (any signature).
PureState named_state(const std::string& name, const DimSignature& sig,
                      const Tolerances& tol = {});

}  // namespace qpriv
