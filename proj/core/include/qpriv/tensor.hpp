#pragma once

#include <complex>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "qpriv/config.hpp"

namespace qpriv {

using Complex = std::complex<double>;

// Row-major storage so flat indexing matches the row-major literal format
// used by the scenario files.
using ComplexMatrix =
    Eigen::Matrix<Complex, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
using ComplexVector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;

// Ordered local dimensions of a tensor-product space. The subsystem order is
// fixed at construction and never permuted implicitly; reorderings go through
// permute_subsystems so that multi-party bookkeeping stays auditable.
class DimSignature {
 public:
  DimSignature() = default;
  DimSignature(std::initializer_list<int> dims)
      : DimSignature(std::vector<int>(dims)) {}
  explicit DimSignature(std::vector<int> dims);

  int total() const { return total_; }
  int count() const { return static_cast<int>(dims_.size()); }
  int dim(int subsystem) const;
  const std::vector<int>& dims() const { return dims_; }

  // Subsystems not in `subset`, ascending.
  std::vector<int> complement(const std::vector<int>& subset) const;

  // Mixed-radix strides, last subsystem fastest (row-major convention).
  std::vector<int> strides() const;

  bool operator==(const DimSignature& other) const {
    return dims_ == other.dims_;
  }
  bool operator!=(const DimSignature& other) const { return !(*this == other); }

  std::string to_string() const;

 private:
  std::vector<int> dims_;
  int total_ = 1;
};

// Full spectral decomposition of a Hermitian matrix, eigenvalues descending,
// eigenvectors as matching columns.
struct HermitianSpectrum {
  RealVector eigenvalues;
  ComplexMatrix eigenvectors;
};

// Tensor (Kronecker) product. Throws DimensionError if the result would
// exceed tol.max_dimension on either side.
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b,
                   const Tolerances& tol = {});
ComplexVector kron(const ComplexVector& a, const ComplexVector& b,
                   const Tolerances& tol = {});

// Traces out every subsystem not listed in `keep`; kept subsystems stay in
// their original order. Returns the reduced matrix and its signature.
std::pair<ComplexMatrix, DimSignature> partial_trace(
    const ComplexMatrix& m, const DimSignature& sig,
    const std::vector<int>& keep);

// Reorders subsystems: output slot k holds input subsystem order[k].
std::pair<ComplexMatrix, DimSignature> permute_subsystems(
    const ComplexMatrix& m, const DimSignature& sig,
    const std::vector<int>& order);
std::pair<ComplexVector, DimSignature> permute_subsystems(
    const ComplexVector& v, const DimSignature& sig,
    const std::vector<int>& order);

HermitianSpectrum hermitian_eigensystem(const ComplexMatrix& m,
                                        const Tolerances& tol = {});

// Embeds `u` (acting on the listed subsystems, in the listed factor order)
// into the full space, identity elsewhere.
ComplexMatrix embed_on_subsystems(const ComplexMatrix& u,
                                  const DimSignature& sig,
                                  const std::vector<int>& acting_on,
                                  const Tolerances& tol = {});

// Conjugation of `state` by the embedded unitary. Validates unitarity of `u`.
ComplexMatrix apply_unitary(const ComplexMatrix& state, const ComplexMatrix& u,
                            const DimSignature& sig,
                            const std::vector<int>& acting_on,
                            const Tolerances& tol = {});

ComplexMatrix dagger(const ComplexMatrix& m);
double max_abs(const ComplexMatrix& m);
bool is_hermitian(const ComplexMatrix& m, double tol);
bool is_unitary(const ComplexMatrix& m, double tol);

}  // namespace qpriv
