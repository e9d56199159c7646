#include "qpriv/measures.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace qpriv {

namespace {

double xlog2x(double x) { return x > 0.0 ? x * std::log2(x) : 0.0; }

void check_disjoint(const std::vector<int>& a, const std::vector<int>& b,
                    const char* what) {
  for (int s : a) {
    for (int t : b) {
      if (s == t) {
        throw DimensionError(std::string(what) + ": subsystem sets overlap at index " +
                             std::to_string(s));
      }
    }
  }
}

Bits entropy_of_marginal(const DensityMatrix& joint, const std::vector<int>& keep,
                         const Tolerances& tol) {
  return entropy(joint.marginal(keep, tol), tol);
}

}  // namespace

Bits binary_entropy(double p) {
  if (p < 0.0) p = 0.0;
  if (p > 1.0) p = 1.0;
  return -xlog2x(p) - xlog2x(1.0 - p);
}

Bits entropy(const DensityMatrix& rho, const Tolerances& tol) {
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(rho.matrix(),
                                                      Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) {
    throw NumericError("entropy: eigensolver did not converge");
  }
  double s = 0.0;
  for (Eigen::Index i = 0; i < solver.eigenvalues().size(); ++i) {
    double lambda = solver.eigenvalues()(i);
    if (lambda < 0.0) {
      if (lambda < -tol.psd_clip) {
        throw ValidationError("entropy: eigenvalue " + std::to_string(lambda) +
                              " below the PSD clip");
      }
      lambda = 0.0;
    }
    if (lambda > 1.0) {
      if (lambda > 1.0 + tol.psd_clip) {
        throw ValidationError("entropy: eigenvalue " + std::to_string(lambda) +
                              " above 1");
      }
      lambda = 1.0;
    }
    s -= xlog2x(lambda);
  }
  return s;
}

Bits coherent_information(const DensityMatrix& joint,
                          const std::vector<int>& reference,
                          const std::vector<int>& output,
                          const Tolerances& tol) {
  check_disjoint(reference, output, "coherent_information");
  std::vector<int> both(reference);
  both.insert(both.end(), output.begin(), output.end());
  return entropy_of_marginal(joint, output, tol) -
         entropy_of_marginal(joint, both, tol);
}

Bits entropy_exchange(const KrausChannel& ch, const DensityMatrix& rho,
                      const Tolerances& tol) {
  return entropy(complementary(ch, rho, tol), tol);
}

Bits holevo(const Ensemble& e, const Tolerances& tol) {
  Bits avg = entropy(e.average(tol), tol);
  for (const Ensemble::Member& m : e.members()) {
    avg -= m.probability * entropy(m.state, tol);
  }
  return avg;
}

MeasurementBasis bloch_basis(double theta, double phi) {
  const double c = std::cos(0.5 * theta);
  const double s = std::sin(0.5 * theta);
  const Complex phase(std::cos(phi), std::sin(phi));
  ComplexVector b0(2), b1(2);
  b0 << Complex(c, 0.0), phase * s;
  b1 << Complex(s, 0.0), -phase * c;
  MeasurementBasis basis;
  basis.theta = theta;
  basis.phi = phi;
  basis.projectors.push_back(b0 * b0.adjoint());
  basis.projectors.push_back(b1 * b1.adjoint());
  return basis;
}

namespace {

// entropy of a small PSD Hermitian matrix straight from its eigenvalues
Bits entropy_of_hermitian(const ComplexMatrix& m, const Tolerances& tol) {
  double s = 0.0;
  if (m.rows() == 2) {
    const double tr = m(0, 0).real() + m(1, 1).real();
    const double det = m(0, 0).real() * m(1, 1).real() - std::norm(m(0, 1));
    const double gap = std::sqrt(std::max(0.0, 0.25 * tr * tr - det));
    for (double lambda : {0.5 * tr + gap, 0.5 * tr - gap}) {
      s -= xlog2x(std::clamp(lambda, 0.0, 1.0));
    }
    return s;
  }
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(m, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) {
    throw NumericError("entropy: eigensolver did not converge");
  }
  for (Eigen::Index i = 0; i < solver.eigenvalues().size(); ++i) {
    if (solver.eigenvalues()(i) < -tol.psd_clip) {
      throw ValidationError("entropy: eigenvalue below the PSD clip");
    }
    s -= xlog2x(std::clamp(solver.eigenvalues()(i), 0.0, 1.0));
  }
  return s;
}

// average entropy of A after the measurement selects each outcome on B:
// the selected-and-reduced block is a direct contraction
// rho_{A|i}[a,a'] = sum_{c,c'} rho[(a,c),(a',c')] proj[c',c]
double average_conditional_entropy(const DensityMatrix& rho_ab,
                                   const MeasurementBasis& basis,
                                   const Tolerances& tol) {
  const int da = rho_ab.signature().dim(0);
  const int db = rho_ab.signature().dim(1);
  const ComplexMatrix& rho = rho_ab.matrix();
  double conditional = 0.0;
  ComplexMatrix reduced(da, da);
  for (const ComplexMatrix& proj : basis.projectors) {
    for (int a = 0; a < da; ++a) {
      for (int ap = 0; ap < da; ++ap) {
        Complex acc(0.0, 0.0);
        for (int c = 0; c < db; ++c) {
          for (int cp = 0; cp < db; ++cp) {
            acc += rho(a * db + c, ap * db + cp) * proj(cp, c);
          }
        }
        reduced(a, ap) = acc;
      }
    }
    const double p = reduced.trace().real();
    if (p < 1e-14) continue;
    conditional += p * entropy_of_hermitian(ComplexMatrix(reduced / p), tol);
  }
  return conditional;
}

}  // namespace

Bits classical_correlation_at(const DensityMatrix& rho_ab,
                              const MeasurementBasis& basis,
                              const Tolerances& tol) {
  const DimSignature& sig = rho_ab.signature();
  if (sig.count() != 2 || sig.dim(1) != 2) {
    throw DimensionError(
        "classical_correlation_at: measured side must be a qubit of a "
        "bipartite state, got " + sig.to_string());
  }
  return entropy_of_marginal(rho_ab, {0}, tol) -
         average_conditional_entropy(rho_ab, basis, tol);
}

ClassicalCorrelationResult classical_correlation(
    const DensityMatrix& rho_ab, const Tolerances& tol,
    const ClassicalCorrelationOptions& opts) {
  const DimSignature& sig = rho_ab.signature();
  if (sig.count() != 2) {
    throw DimensionError("classical_correlation: bipartite signature required, got " +
                         sig.to_string());
  }
  if (sig.dim(1) != 2) {
    throw DimensionError(
        "classical_correlation: measured subsystem of dimension " +
        std::to_string(sig.dim(1)) + " is unsupported (qubit only)");
  }

  const Bits s_a = entropy_of_marginal(rho_ab, {0}, tol);
  const auto conditional = [&](double theta, double phi) {
    return average_conditional_entropy(rho_ab, bloch_basis(theta, phi), tol);
  };

  const double pi = std::numbers::pi;
  double best_theta = 0.0, best_phi = 0.0;
  double lowest = 1e300;
  // strict improvements scanned in lexicographic order: ties resolve to the
  // smallest (theta, phi)
  for (int i = 0; i < opts.grid; ++i) {
    const double theta = pi * static_cast<double>(i) / (opts.grid - 1);
    for (int j = 0; j < opts.grid; ++j) {
      const double phi = 2.0 * pi * static_cast<double>(j) / opts.grid;
      const double value = conditional(theta, phi);
      if (value < lowest) {
        lowest = value;
        best_theta = theta;
        best_phi = phi;
      }
    }
  }

  double step = pi / (opts.grid - 1);
  while (step >= opts.refine_step) {
    bool moved = false;
    const double candidates[4][2] = {{best_theta - step, best_phi},
                                     {best_theta + step, best_phi},
                                     {best_theta, best_phi - step},
                                     {best_theta, best_phi + step}};
    for (const auto& cand : candidates) {
      double theta = std::clamp(cand[0], 0.0, pi);
      double phi = cand[1];
      const double two_pi = 2.0 * pi;
      phi -= two_pi * std::floor(phi / two_pi);
      const double value = conditional(theta, phi);
      if (value < lowest) {
        lowest = value;
        best_theta = theta;
        best_phi = phi;
        moved = true;
      }
    }
    if (!moved) step *= 0.5;
  }

  ClassicalCorrelationResult result;
  result.value = s_a - lowest;
  result.basis = bloch_basis(best_theta, best_phi);
  return result;
}

Bits mutual_information(const DensityMatrix& rho_ab, const Tolerances& tol) {
  if (rho_ab.signature().count() != 2) {
    throw DimensionError("mutual_information: bipartite signature required");
  }
  return entropy_of_marginal(rho_ab, {0}, tol) +
         entropy_of_marginal(rho_ab, {1}, tol) - entropy(rho_ab, tol);
}

Bits discord(const DensityMatrix& rho_ab, const Tolerances& tol,
             const ClassicalCorrelationOptions& opts) {
  return mutual_information(rho_ab, tol) -
         classical_correlation(rho_ab, tol, opts).value;
}

Bits concurrence(const DensityMatrix& rho, const Tolerances& tol) {
  const DimSignature& sig = rho.signature();
  if (sig.count() != 2 || sig.dim(0) != 2 || sig.dim(1) != 2) {
    throw DimensionError("concurrence: unsupported signature " + sig.to_string() +
                         " (two qubits only)");
  }
  ComplexMatrix yy = ComplexMatrix::Zero(4, 4);
  yy(0, 3) = -1;
  yy(1, 2) = 1;
  yy(2, 1) = 1;
  yy(3, 0) = -1;

  // The spin-flip roots sqrt(eig(rho * yy rho^* yy)) are the singular values
  // of sqrt(rho) yy sqrt(rho)^T; the SVD keeps the small roots at absolute
  // precision instead of square-rooting eigensolver noise.
  const HermitianSpectrum spec = hermitian_eigensystem(rho.matrix(), tol);
  RealVector clipped = spec.eigenvalues.cwiseMax(0.0).cwiseSqrt();
  const ComplexMatrix root = spec.eigenvectors * clipped.asDiagonal() *
                             spec.eigenvectors.adjoint();
  const ComplexMatrix m = root * yy * root.transpose();
  Eigen::JacobiSVD<ComplexMatrix> svd(m);
  const RealVector roots = svd.singularValues();
  return std::max(0.0, roots(0) - roots(1) - roots(2) - roots(3));
}

Bits eof(const DensityMatrix& rho, const Tolerances& tol) {
  const DimSignature& sig = rho.signature();
  if (sig.count() != 2) {
    throw DimensionError("eof: bipartite signature required, got " + sig.to_string());
  }
  if (sig.dim(0) == 2 && sig.dim(1) == 2) {
    const double c = concurrence(rho, tol);
    return binary_entropy(0.5 * (1.0 + std::sqrt(std::max(0.0, 1.0 - c * c))));
  }
  if (std::abs(rho.purity() - 1.0) <= 100.0 * tol.psd_clip) {
    return entropy_of_marginal(rho, {0}, tol);
  }
  throw DimensionError("eof: mixed state on " + sig.to_string() +
                       " is unsupported (two qubits or pure bipartite only)");
}

Bits carlen_lieb_bound(const DensityMatrix& rho_ab, const Tolerances& tol) {
  if (rho_ab.signature().count() != 2) {
    throw DimensionError("carlen_lieb_bound: bipartite signature required");
  }
  const Bits s_ab = entropy(rho_ab, tol);
  const Bits s_a = entropy_of_marginal(rho_ab, {0}, tol);
  const Bits s_b = entropy_of_marginal(rho_ab, {1}, tol);
  return std::max({s_a - s_ab, s_b - s_ab, 0.0});
}

Bits disturbance(const KrausChannel& ch, const DensityMatrix& rho,
                 const Tolerances& tol) {
  if (rho.dim() != ch.input_dim()) {
    throw DimensionError("disturbance: state dimension does not match channel input");
  }
  // the channel consumes the whole input space, so purify the flattened state
  const DensityMatrix flat(rho.matrix(), DimSignature({rho.dim()}), tol);
  const PureState psi = purify(flat, tol);
  const DensityMatrix evolved = apply_on(ch, psi.density(tol), 1, tol);
  const Bits ic = coherent_information(evolved, {0}, {1}, tol);
  return entropy(rho, tol) - ic;
}

Bits conditional_entropy(const DensityMatrix& joint,
                         const std::vector<int>& target,
                         const std::vector<int>& given,
                         const Tolerances& tol) {
  check_disjoint(target, given, "conditional_entropy");
  std::vector<int> both(target);
  both.insert(both.end(), given.begin(), given.end());
  const Bits joint_entropy = entropy_of_marginal(joint, both, tol);
  if (given.empty()) return joint_entropy;
  return joint_entropy - entropy_of_marginal(joint, given, tol);
}

}  // namespace qpriv
