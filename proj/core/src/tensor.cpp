#include "qpriv/tensor.hpp"

#include <algorithm>
#include <sstream>

namespace qpriv {

namespace {

void check_subsystems(const DimSignature& sig, const std::vector<int>& subs,
                      const char* what) {
  if (subs.empty()) {
    throw DimensionError(std::string(what) + ": empty subsystem set");
  }
  std::vector<int> seen(subs);
  std::sort(seen.begin(), seen.end());
  for (std::size_t i = 0; i < seen.size(); ++i) {
    if (seen[i] < 0 || seen[i] >= sig.count()) {
      throw DimensionError(std::string(what) + ": subsystem index " +
                           std::to_string(seen[i]) + " out of range for " +
                           sig.to_string());
    }
    if (i > 0 && seen[i] == seen[i - 1]) {
      throw DimensionError(std::string(what) + ": duplicate subsystem index " +
                           std::to_string(seen[i]));
    }
  }
}

// Flat index offsets of every multi-index running over the listed subsystems.
std::vector<int> flat_offsets(const DimSignature& sig,
                              const std::vector<int>& subs) {
  const std::vector<int> strides = sig.strides();
  int count = 1;
  for (int s : subs) count *= sig.dim(s);
  std::vector<int> offsets(static_cast<std::size_t>(count), 0);
  int repeat = count;
  for (int s : subs) {
    const int d = sig.dim(s);
    repeat /= d;
    const int stride = strides[static_cast<std::size_t>(s)];
    int idx = 0;
    while (idx < count) {
      for (int digit = 0; digit < d; ++digit) {
        for (int r = 0; r < repeat; ++r) offsets[static_cast<std::size_t>(idx++)] += digit * stride;
      }
    }
  }
  return offsets;
}

}  // namespace

DimSignature::DimSignature(std::vector<int> dims) : dims_(std::move(dims)) {
  if (dims_.empty()) {
    throw DimensionError("DimSignature: at least one subsystem required");
  }
  long long prod = 1;
  for (int d : dims_) {
    if (d < 1) {
      throw DimensionError("DimSignature: every dimension must be >= 1, got " +
                           std::to_string(d));
    }
    prod *= d;
    if (prod > (1LL << 30)) {
      throw DimensionError("DimSignature: total dimension overflow");
    }
  }
  total_ = static_cast<int>(prod);
}

int DimSignature::dim(int subsystem) const {
  if (subsystem < 0 || subsystem >= count()) {
    throw DimensionError("DimSignature: subsystem index " +
                         std::to_string(subsystem) + " out of range");
  }
  return dims_[static_cast<std::size_t>(subsystem)];
}

std::vector<int> DimSignature::complement(const std::vector<int>& subset) const {
  std::vector<bool> mark(dims_.size(), false);
  for (int s : subset) {
    if (s < 0 || s >= count()) {
      throw DimensionError("DimSignature: subsystem index " +
                           std::to_string(s) + " out of range");
    }
    mark[static_cast<std::size_t>(s)] = true;
  }
  std::vector<int> rest;
  for (int s = 0; s < count(); ++s) {
    if (!mark[static_cast<std::size_t>(s)]) rest.push_back(s);
  }
  return rest;
}

std::vector<int> DimSignature::strides() const {
  std::vector<int> out(dims_.size());
  int acc = 1;
  for (int s = count() - 1; s >= 0; --s) {
    out[static_cast<std::size_t>(s)] = acc;
    acc *= dims_[static_cast<std::size_t>(s)];
  }
  return out;
}

std::string DimSignature::to_string() const {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < dims_.size(); ++i) {
    if (i > 0) os << ",";
    os << dims_[i];
  }
  os << "]";
  return os.str();
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b,
                   const Tolerances& tol) {
  const long long rows = static_cast<long long>(a.rows()) * b.rows();
  const long long cols = static_cast<long long>(a.cols()) * b.cols();
  if (rows > tol.max_dimension || cols > tol.max_dimension) {
    throw DimensionError("kron: result side " + std::to_string(std::max(rows, cols)) +
                         " exceeds the configured maximum " +
                         std::to_string(tol.max_dimension));
  }
  ComplexMatrix out(rows, cols);
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

ComplexVector kron(const ComplexVector& a, const ComplexVector& b,
                   const Tolerances& tol) {
  const long long n = static_cast<long long>(a.size()) * b.size();
  if (n > tol.max_dimension) {
    throw DimensionError("kron: result side " + std::to_string(n) +
                         " exceeds the configured maximum " +
                         std::to_string(tol.max_dimension));
  }
  ComplexVector out(n);
  for (Eigen::Index i = 0; i < a.size(); ++i) {
    out.segment(i * b.size(), b.size()) = a(i) * b;
  }
  return out;
}

std::pair<ComplexMatrix, DimSignature> partial_trace(
    const ComplexMatrix& m, const DimSignature& sig,
    const std::vector<int>& keep) {
  if (m.rows() != m.cols() || m.rows() != sig.total()) {
    throw DimensionError("partial_trace: matrix side " +
                         std::to_string(m.rows()) + " does not match " +
                         sig.to_string());
  }
  check_subsystems(sig, keep, "partial_trace");
  std::vector<int> kept(keep);
  std::sort(kept.begin(), kept.end());
  const std::vector<int> traced = sig.complement(kept);

  std::vector<int> kept_dims;
  kept_dims.reserve(kept.size());
  for (int s : kept) kept_dims.push_back(sig.dim(s));
  const DimSignature out_sig(kept_dims);

  const std::vector<int> base = flat_offsets(sig, kept);
  ComplexMatrix out = ComplexMatrix::Zero(out_sig.total(), out_sig.total());
  if (traced.empty()) {
    out = m;
    return {out, out_sig};
  }
  const std::vector<int> off = flat_offsets(sig, traced);
  for (std::size_t a = 0; a < base.size(); ++a) {
    for (std::size_t b = 0; b < base.size(); ++b) {
      Complex acc(0.0, 0.0);
      for (int o : off) acc += m(base[a] + o, base[b] + o);
      out(static_cast<Eigen::Index>(a), static_cast<Eigen::Index>(b)) = acc;
    }
  }
  return {out, out_sig};
}

namespace {

// new flat index for every old flat index under the subsystem reordering
std::vector<int> permutation_map(const DimSignature& sig,
                                 const std::vector<int>& order) {
  if (static_cast<int>(order.size()) != sig.count()) {
    throw DimensionError("permute_subsystems: order length " +
                         std::to_string(order.size()) + " does not match " +
                         sig.to_string());
  }
  check_subsystems(sig, order, "permute_subsystems");

  std::vector<int> new_dims;
  new_dims.reserve(order.size());
  for (int s : order) new_dims.push_back(sig.dim(s));
  const DimSignature new_sig(new_dims);
  const std::vector<int> new_strides = new_sig.strides();
  const std::vector<int> old_strides = sig.strides();

  // position of old subsystem s in the new order
  std::vector<int> slot_of(order.size());
  for (std::size_t k = 0; k < order.size(); ++k) {
    slot_of[static_cast<std::size_t>(order[k])] = static_cast<int>(k);
  }

  std::vector<int> map(static_cast<std::size_t>(sig.total()));
  for (int old_flat = 0; old_flat < sig.total(); ++old_flat) {
    int rem = old_flat;
    int new_flat = 0;
    for (int s = 0; s < sig.count(); ++s) {
      const int digit = rem / old_strides[static_cast<std::size_t>(s)];
      rem %= old_strides[static_cast<std::size_t>(s)];
      new_flat += digit * new_strides[static_cast<std::size_t>(slot_of[static_cast<std::size_t>(s)])];
    }
    map[static_cast<std::size_t>(old_flat)] = new_flat;
  }
  return map;
}

}  // namespace

std::pair<ComplexMatrix, DimSignature> permute_subsystems(
    const ComplexMatrix& m, const DimSignature& sig,
    const std::vector<int>& order) {
  if (m.rows() != m.cols() || m.rows() != sig.total()) {
    throw DimensionError("permute_subsystems: matrix side does not match " +
                         sig.to_string());
  }
  const std::vector<int> map = permutation_map(sig, order);
  std::vector<int> new_dims;
  for (int s : order) new_dims.push_back(sig.dim(s));
  ComplexMatrix out(sig.total(), sig.total());
  for (int i = 0; i < sig.total(); ++i) {
    for (int j = 0; j < sig.total(); ++j) {
      out(map[static_cast<std::size_t>(i)], map[static_cast<std::size_t>(j)]) = m(i, j);
    }
  }
  return {out, DimSignature(new_dims)};
}

std::pair<ComplexVector, DimSignature> permute_subsystems(
    const ComplexVector& v, const DimSignature& sig,
    const std::vector<int>& order) {
  if (v.size() != sig.total()) {
    throw DimensionError("permute_subsystems: vector size does not match " +
                         sig.to_string());
  }
  const std::vector<int> map = permutation_map(sig, order);
  std::vector<int> new_dims;
  for (int s : order) new_dims.push_back(sig.dim(s));
  ComplexVector out(sig.total());
  for (int i = 0; i < sig.total(); ++i) {
    out(map[static_cast<std::size_t>(i)]) = v(i);
  }
  return {out, DimSignature(new_dims)};
}

HermitianSpectrum hermitian_eigensystem(const ComplexMatrix& m,
                                        const Tolerances& tol) {
  if (m.rows() != m.cols()) {
    throw DimensionError("hermitian_eigensystem: matrix must be square");
  }
  const double dev = max_abs(m - dagger(m));
  if (dev > tol.hermiticity) {
    throw ValidationError("hermitian_eigensystem: max |m - m^dag| = " +
                          std::to_string(dev) + " exceeds tolerance");
  }
  const ComplexMatrix sym = 0.5 * (m + dagger(m));
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(sym);
  if (solver.info() != Eigen::Success) {
    throw NumericError("hermitian_eigensystem: eigensolver did not converge, residual " +
                       std::to_string(max_abs(sym)));
  }
  HermitianSpectrum out;
  out.eigenvalues = solver.eigenvalues().reverse();
  out.eigenvectors = solver.eigenvectors().rowwise().reverse();
  return out;
}

ComplexMatrix embed_on_subsystems(const ComplexMatrix& u,
                                  const DimSignature& sig,
                                  const std::vector<int>& acting_on,
                                  const Tolerances& tol) {
  check_subsystems(sig, acting_on, "embed_on_subsystems");
  int acted_dim = 1;
  for (int s : acting_on) acted_dim *= sig.dim(s);
  if (u.rows() != acted_dim || u.cols() != acted_dim) {
    throw DimensionError("embed_on_subsystems: operator side " +
                         std::to_string(u.rows()) +
                         " does not match acted dimension " +
                         std::to_string(acted_dim));
  }
  const std::vector<int> rest = sig.complement(acting_on);
  std::vector<int> order(acting_on);
  order.insert(order.end(), rest.begin(), rest.end());

  const int rest_dim = sig.total() / acted_dim;
  ComplexMatrix big =
      kron(u, ComplexMatrix::Identity(rest_dim, rest_dim), tol);

  // big lives on [acting..., rest...]; map it back to the original order
  std::vector<int> perm_dims;
  for (int s : order) perm_dims.push_back(sig.dim(s));
  std::vector<int> inverse(order.size());
  for (std::size_t k = 0; k < order.size(); ++k) {
    inverse[static_cast<std::size_t>(order[k])] = static_cast<int>(k);
  }
  return permute_subsystems(big, DimSignature(perm_dims), inverse).first;
}

ComplexMatrix apply_unitary(const ComplexMatrix& state, const ComplexMatrix& u,
                            const DimSignature& sig,
                            const std::vector<int>& acting_on,
                            const Tolerances& tol) {
  if (state.rows() != state.cols() || state.rows() != sig.total()) {
    throw DimensionError("apply_unitary: state side does not match " +
                         sig.to_string());
  }
  if (!is_unitary(u, tol.unitarity)) {
    throw ValidationError("apply_unitary: operator is not unitary within tolerance");
  }
  const ComplexMatrix full = embed_on_subsystems(u, sig, acting_on, tol);
  return full * state * dagger(full);
}

ComplexMatrix dagger(const ComplexMatrix& m) { return m.adjoint(); }

double max_abs(const ComplexMatrix& m) {
  if (m.size() == 0) return 0.0;
  return m.cwiseAbs().maxCoeff();
}

bool is_hermitian(const ComplexMatrix& m, double tol) {
  if (m.rows() != m.cols()) return false;
  return max_abs(m - dagger(m)) <= tol;
}

bool is_unitary(const ComplexMatrix& m, double tol) {
  if (m.rows() != m.cols()) return false;
  const ComplexMatrix gram = dagger(m) * m;
  return max_abs(gram - ComplexMatrix::Identity(m.rows(), m.cols())) <= tol;
}

}  // namespace qpriv
