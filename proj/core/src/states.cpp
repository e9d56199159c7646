#include "qpriv/states.hpp"

#include <cmath>
#include <numbers>

namespace qpriv {

DensityMatrix::DensityMatrix(ComplexMatrix matrix, DimSignature signature,
                             const Tolerances& tol)
    : matrix_(std::move(matrix)), signature_(std::move(signature)) {
  if (matrix_.rows() != matrix_.cols() || matrix_.rows() != signature_.total()) {
    throw DimensionError("DensityMatrix: matrix side " +
                         std::to_string(matrix_.rows()) +
                         " does not match signature " + signature_.to_string());
  }
  if (matrix_.rows() > tol.max_dimension) {
    throw DimensionError("DensityMatrix: side " + std::to_string(matrix_.rows()) +
                         " exceeds the configured maximum " +
                         std::to_string(tol.max_dimension));
  }
  if (!matrix_.allFinite()) {
    throw ValidationError("DensityMatrix: non-finite entries");
  }
  const double herm = max_abs(matrix_ - dagger(matrix_));
  if (herm > tol.hermiticity) {
    throw ValidationError("DensityMatrix: not Hermitian, max deviation " +
                          std::to_string(herm));
  }
  const double tr_dev = std::abs(matrix_.trace() - Complex(1.0, 0.0));
  if (tr_dev > tol.unit_trace) {
    throw ValidationError("DensityMatrix: trace deviates from 1 by " +
                          std::to_string(tr_dev));
  }
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(
      ComplexMatrix(0.5 * (matrix_ + dagger(matrix_))), Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) {
    throw NumericError("DensityMatrix: eigenvalue check did not converge");
  }
  const double min_eig = solver.eigenvalues().minCoeff();
  if (min_eig < -tol.psd_clip) {
    throw ValidationError("DensityMatrix: negative eigenvalue " +
                          std::to_string(min_eig) + " below the PSD clip");
  }
}

DensityMatrix::DensityMatrix(ComplexMatrix matrix, DimSignature signature,
                             Trusted)
    : matrix_(std::move(matrix)), signature_(std::move(signature)) {}

DensityMatrix DensityMatrix::marginal(const std::vector<int>& keep,
                                      const Tolerances& tol) const {
  auto [reduced, sig] = partial_trace(matrix_, signature_, keep);
  return DensityMatrix(std::move(reduced), std::move(sig), tol);
}

double DensityMatrix::purity() const {
  return (matrix_ * matrix_).trace().real();
}

PureState::PureState(ComplexVector vector, DimSignature signature,
                     const Tolerances& tol)
    : vector_(std::move(vector)), signature_(std::move(signature)) {
  if (vector_.size() != signature_.total()) {
    throw DimensionError("PureState: vector size " +
                         std::to_string(vector_.size()) +
                         " does not match signature " + signature_.to_string());
  }
  if (vector_.size() > tol.max_dimension) {
    throw DimensionError("PureState: dimension " + std::to_string(vector_.size()) +
                         " exceeds the configured maximum " +
                         std::to_string(tol.max_dimension));
  }
  if (!vector_.allFinite()) {
    throw ValidationError("PureState: non-finite entries");
  }
  const double norm_dev = std::abs(vector_.norm() - 1.0);
  if (norm_dev > tol.unit_trace) {
    throw ValidationError("PureState: norm deviates from 1 by " +
                          std::to_string(norm_dev));
  }
}

DensityMatrix PureState::density(const Tolerances& tol) const {
  ComplexMatrix m = vector_ * vector_.adjoint();
  m /= m.trace().real();
  (void)tol;
  return DensityMatrix(std::move(m), signature_, DensityMatrix::Trusted{});
}

Ensemble::Ensemble(std::vector<Member> members, const Tolerances& tol)
    : members_(std::move(members)) {
  if (members_.empty()) {
    throw ValidationError("Ensemble: at least one member required");
  }
  const DimSignature& sig = members_.front().state.signature();
  double sum = 0.0;
  for (const Member& m : members_) {
    if (m.probability < 0.0) {
      throw ValidationError("Ensemble: negative probability " +
                            std::to_string(m.probability));
    }
    if (m.state.signature() != sig) {
      throw DimensionError("Ensemble: members carry mismatched signatures");
    }
    sum += m.probability;
  }
  if (std::abs(sum - 1.0) > tol.unit_trace) {
    throw ValidationError("Ensemble: probabilities sum to " +
                          std::to_string(sum));
  }
}

DensityMatrix Ensemble::average(const Tolerances& tol) const {
  const DimSignature& sig = signature();
  ComplexMatrix acc = ComplexMatrix::Zero(sig.total(), sig.total());
  for (const Member& m : members_) {
    acc += m.probability * m.state.matrix();
  }
  // renormalize the rounding dust so the average passes state validation
  acc /= acc.trace().real();
  return DensityMatrix(std::move(acc), sig, tol);
}

DensityMatrix ensemble_average(const Ensemble& e, const Tolerances& tol) {
  return e.average(tol);
}

namespace {

// eigenpairs above the rank cutoff, descending
std::pair<RealVector, ComplexMatrix> support_spectrum(const DensityMatrix& rho,
                                                      const Tolerances& tol) {
  const HermitianSpectrum spec = hermitian_eigensystem(rho.matrix(), tol);
  int rank = 0;
  for (int i = 0; i < spec.eigenvalues.size(); ++i) {
    if (spec.eigenvalues(i) > 1e-12) ++rank;
  }
  if (rank == 0) {
    throw NumericError("state has numerically empty support");
  }
  return {spec.eigenvalues.head(rank), spec.eigenvectors.leftCols(rank)};
}

}  // namespace

PureState purify(const DensityMatrix& rho, const Tolerances& tol) {
  auto [lambda, vectors] = support_spectrum(rho, tol);
  const int rank = static_cast<int>(lambda.size());
  const int d = rho.dim();

  // reference first: |psi> = sum_i sqrt(l_i) |i>_R |v_i>_Q
  ComplexVector psi = ComplexVector::Zero(static_cast<Eigen::Index>(rank) * d);
  for (int i = 0; i < rank; ++i) {
    psi.segment(static_cast<Eigen::Index>(i) * d, d) =
        std::sqrt(lambda(i)) * vectors.col(i);
  }
  psi /= psi.norm();

  std::vector<int> dims;
  dims.push_back(rank);
  for (int s : rho.signature().dims()) dims.push_back(s);
  return PureState(std::move(psi), DimSignature(dims), tol);
}

Ensemble eigen_decomposition(const DensityMatrix& rho, const Tolerances& tol) {
  auto [lambda, vectors] = support_spectrum(rho, tol);
  double sum = lambda.sum();
  std::vector<Ensemble::Member> members;
  for (int i = 0; i < lambda.size(); ++i) {
    ComplexVector v = vectors.col(i);
    v /= v.norm();
    members.push_back({lambda(i) / sum,
                       PureState(v, rho.signature(), tol).density(tol)});
  }
  return Ensemble(std::move(members), tol);
}

Ensemble pure_decomposition(const DensityMatrix& rho, int count,
                            std::uint64_t seed, const Tolerances& tol) {
  auto [lambda, vectors] = support_spectrum(rho, tol);
  const int rank = static_cast<int>(lambda.size());
  if (count < rank) {
    throw ValidationError("pure_decomposition: count " + std::to_string(count) +
                          " below the state rank " + std::to_string(rank));
  }

  SplitMix64 rng(seed);
  // isometry columns: first `rank` columns of a Haar unitary on `count` dims
  const ComplexMatrix w = haar_unitary(count, rng, tol).leftCols(rank);

  std::vector<Ensemble::Member> members;
  double total = 0.0;
  std::vector<std::pair<double, ComplexVector>> raw;
  for (int k = 0; k < count; ++k) {
    ComplexVector psi = ComplexVector::Zero(rho.dim());
    for (int i = 0; i < rank; ++i) {
      psi += w(k, i) * std::sqrt(lambda(i)) * vectors.col(i);
    }
    const double p = psi.squaredNorm();
    raw.emplace_back(p, std::move(psi));
    total += p;
  }
  for (auto& [p, psi] : raw) {
    if (p / total < 1e-15) continue;  // measure-zero member, drop it
    psi /= psi.norm();
    members.push_back({p / total, PureState(psi, rho.signature(), tol).density(tol)});
  }
  // restore exact normalization after any drop
  double kept = 0.0;
  for (const auto& m : members) kept += m.probability;
  for (auto& m : members) m.probability /= kept;
  return Ensemble(std::move(members), tol);
}

PureState random_pure(const DimSignature& sig, std::uint64_t seed,
                      const Tolerances& tol) {
  SplitMix64 rng(seed);
  ComplexVector v = gaussian_vector(sig.total(), rng);
  v /= v.norm();
  return PureState(std::move(v), sig, tol);
}

DensityMatrix random_density(const DimSignature& sig, int rank,
                             std::uint64_t seed, const Tolerances& tol) {
  if (rank < 1 || rank > sig.total()) {
    throw DimensionError("random_density: rank " + std::to_string(rank) +
                         " out of range for " + sig.to_string());
  }
  SplitMix64 rng(seed);
  const int d = sig.total();
  ComplexVector psi = gaussian_vector(d * rank, rng);
  psi /= psi.norm();
  // system first, ancilla of dimension `rank` last
  const DimSignature joint({d, rank});
  ComplexMatrix full = psi * psi.adjoint();
  auto [reduced, rsig] = partial_trace(full, joint, {0});
  reduced /= reduced.trace().real();
  return DensityMatrix(std::move(reduced), sig, tol);
}

PureState named_state(const std::string& name, const DimSignature& sig,
                      const Tolerances& tol) {
  const int n = sig.count();
  const auto all_qubits = [&] {
    for (int d : sig.dims()) {
      if (d != 2) return false;
    }
    return true;
  };
  ComplexVector v = ComplexVector::Zero(sig.total());
  if (name == "bell") {
    if (n != 2 || !all_qubits()) {
      throw DimensionError("named_state: bell requires a 2x2 signature, got " +
                           sig.to_string());
    }
    v(0) = v(3) = 1.0 / std::numbers::sqrt2;
  } else if (name == "ghz") {
    if (n < 2 || !all_qubits()) {
      throw DimensionError("named_state: ghz requires >= 2 qubits, got " +
                           sig.to_string());
    }
    v(0) = v(sig.total() - 1) = 1.0 / std::numbers::sqrt2;
  } else if (name == "w") {
    if (n < 2 || !all_qubits()) {
      throw DimensionError("named_state: w requires >= 2 qubits, got " +
                           sig.to_string());
    }
    const double amp = 1.0 / std::sqrt(static_cast<double>(n));
    for (int k = 0; k < n; ++k) {
      v(1 << (n - 1 - k)) = amp;
    }
  } else if (name == "product-zero") {
    v(0) = 1.0;
  } else {
    throw ValidationError("named_state: unknown name '" + name + "'");
  }
  return PureState(std::move(v), sig, tol);
}

}  // namespace qpriv
