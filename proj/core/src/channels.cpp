#include "qpriv/channels.hpp"

#include <cmath>
#include <mutex>
#include <optional>

namespace qpriv {

struct KrausChannel::DilationCell {
  std::once_flag flag;
  std::optional<StinespringDilation> value;
};

KrausChannel::KrausChannel(std::vector<ComplexMatrix> kraus,
                           const Tolerances& tol)
    : kraus_(std::move(kraus)), cell_(std::make_shared<DilationCell>()) {
  if (kraus_.empty()) {
    throw ValidationError("KrausChannel: at least one Kraus operator required");
  }
  output_dim_ = static_cast<int>(kraus_.front().rows());
  input_dim_ = static_cast<int>(kraus_.front().cols());
  for (const ComplexMatrix& k : kraus_) {
    if (k.rows() != output_dim_ || k.cols() != input_dim_) {
      throw DimensionError("KrausChannel: inconsistent Kraus operator shapes");
    }
    if (!k.allFinite()) {
      throw ValidationError("KrausChannel: non-finite Kraus entries");
    }
  }
  ComplexMatrix gram = ComplexMatrix::Zero(input_dim_, input_dim_);
  for (const ComplexMatrix& k : kraus_) gram += dagger(k) * k;
  const double dev =
      max_abs(gram - ComplexMatrix::Identity(input_dim_, input_dim_));
  if (dev > tol.unitarity) {
    throw ValidationError("KrausChannel: completeness violated by " +
                          std::to_string(dev));
  }
}

const StinespringDilation& KrausChannel::dilation(const Tolerances& tol) const {
  std::call_once(cell_->flag, [&] {
    const int m = env_dim();
    // pad the environment until the joint output splits over the input
    int env_out = m;
    while ((static_cast<long long>(output_dim_) * env_out) % input_dim_ != 0) {
      ++env_out;
    }
    const int joint = output_dim_ * env_out;
    if (joint > tol.max_dimension) {
      throw DimensionError("dilation: joint dimension exceeds the configured maximum");
    }
    const int env_in = joint / input_dim_;

    // isometry V |psi> = sum_k K_k |psi> (x) |k>_E, joint row index (q', k)
    ComplexMatrix v = ComplexMatrix::Zero(joint, input_dim_);
    for (int k = 0; k < m; ++k) {
      for (int q = 0; q < output_dim_; ++q) {
        for (int j = 0; j < input_dim_; ++j) {
          v(q * env_out + k, j) = kraus_[static_cast<std::size_t>(k)](q, j);
        }
      }
    }

    // complete the isometry columns to a unitary basis
    Eigen::HouseholderQR<ComplexMatrix> qr(v);
    const ComplexMatrix q_full =
        qr.householderQ() * ComplexMatrix::Identity(joint, joint);
    ComplexMatrix u = ComplexMatrix::Zero(joint, joint);
    int spare = input_dim_;
    for (int j = 0; j < input_dim_; ++j) {
      u.col(static_cast<Eigen::Index>(j) * env_in) = v.col(j);
    }
    for (int j = 0; j < input_dim_; ++j) {
      for (int e = 1; e < env_in; ++e) {
        u.col(static_cast<Eigen::Index>(j) * env_in + e) = q_full.col(spare++);
      }
    }
    if (!is_unitary(u, tol.unitarity)) {
      throw NumericError("dilation: unitary completion failed (rank deficiency)");
    }

    StinespringDilation d;
    d.unitary = std::move(u);
    d.sys_in = input_dim_;
    d.env_in = env_in;
    d.sys_out = output_dim_;
    d.env_out = env_out;
    d.env_initial = 0;
    cell_->value = std::move(d);
  });
  return *cell_->value;
}

DensityMatrix apply(const KrausChannel& ch, const DensityMatrix& rho,
                    const Tolerances& tol) {
  if (rho.dim() != ch.input_dim()) {
    throw DimensionError("apply: state dimension " + std::to_string(rho.dim()) +
                         " does not match channel input " +
                         std::to_string(ch.input_dim()));
  }
  ComplexMatrix out = ComplexMatrix::Zero(ch.output_dim(), ch.output_dim());
  for (const ComplexMatrix& k : ch.kraus()) {
    out += k * rho.matrix() * dagger(k);
  }
  out /= out.trace().real();
  return DensityMatrix(std::move(out), DimSignature({ch.output_dim()}), tol);
}

DensityMatrix apply_on(const KrausChannel& ch, const DensityMatrix& rho,
                       int subsystem, const Tolerances& tol) {
  const DimSignature& sig = rho.signature();
  if (subsystem < 0 || subsystem >= sig.count()) {
    throw DimensionError("apply_on: subsystem index out of range");
  }
  if (sig.dim(subsystem) != ch.input_dim()) {
    throw DimensionError("apply_on: subsystem dimension " +
                         std::to_string(sig.dim(subsystem)) +
                         " does not match channel input " +
                         std::to_string(ch.input_dim()));
  }
  int pre = 1, post = 1;
  for (int s = 0; s < subsystem; ++s) pre *= sig.dim(s);
  for (int s = subsystem + 1; s < sig.count(); ++s) post *= sig.dim(s);

  std::vector<int> out_dims = sig.dims();
  out_dims[static_cast<std::size_t>(subsystem)] = ch.output_dim();
  const DimSignature out_sig(out_dims);

  const ComplexMatrix eye_pre = ComplexMatrix::Identity(pre, pre);
  const ComplexMatrix eye_post = ComplexMatrix::Identity(post, post);
  ComplexMatrix out = ComplexMatrix::Zero(out_sig.total(), out_sig.total());
  for (const ComplexMatrix& k : ch.kraus()) {
    const ComplexMatrix embedded = kron(eye_pre, kron(k, eye_post, tol), tol);
    out += embedded * rho.matrix() * dagger(embedded);
  }
  out /= out.trace().real();
  return DensityMatrix(std::move(out), out_sig, tol);
}

DensityMatrix complementary(const KrausChannel& ch, const DensityMatrix& rho,
                            const Tolerances& tol) {
  if (rho.dim() != ch.input_dim()) {
    throw DimensionError("complementary: state dimension does not match channel input");
  }
  const int m = ch.env_dim();
  ComplexMatrix env(m, m);
  std::vector<ComplexMatrix> k_rho;
  k_rho.reserve(static_cast<std::size_t>(m));
  for (const ComplexMatrix& k : ch.kraus()) k_rho.push_back(k * rho.matrix());
  for (int a = 0; a < m; ++a) {
    for (int b = 0; b < m; ++b) {
      env(a, b) = (k_rho[static_cast<std::size_t>(a)]
                       .cwiseProduct(ch.kraus()[static_cast<std::size_t>(b)].conjugate()))
                      .sum();
    }
  }
  env /= env.trace().real();
  return DensityMatrix(std::move(env), DimSignature({m}), tol);
}

KrausChannel compose(const KrausChannel& second, const KrausChannel& first,
                     const Tolerances& tol) {
  if (second.input_dim() != first.output_dim()) {
    throw DimensionError("compose: inner dimensions do not match");
  }
  std::vector<ComplexMatrix> ops;
  ops.reserve(static_cast<std::size_t>(first.env_dim()) * second.env_dim());
  for (const ComplexMatrix& a : first.kraus()) {
    for (const ComplexMatrix& b : second.kraus()) {
      ops.push_back(b * a);
    }
  }
  return KrausChannel(std::move(ops), tol);
}

KrausChannel identity_channel(int dim, const Tolerances& tol) {
  if (dim < 1) throw DimensionError("identity_channel: dimension must be >= 1");
  std::vector<ComplexMatrix> ops{ComplexMatrix::Identity(dim, dim)};
  return KrausChannel(std::move(ops), tol);
}

KrausChannel named_channel(const std::string& name, double param,
                           const Tolerances& tol) {
  if (name == "identity") {
    return identity_channel(2, tol);
  }
  if (!(param >= 0.0 && param <= 1.0)) {
    throw ValidationError("named_channel: parameter " + std::to_string(param) +
                          " outside [0,1]");
  }
  ComplexMatrix x(2, 2), y(2, 2), z(2, 2);
  x << 0, 1, 1, 0;
  y << Complex(0, 0), Complex(0, -1), Complex(0, 1), Complex(0, 0);
  z << 1, 0, 0, -1;
  const ComplexMatrix eye = ComplexMatrix::Identity(2, 2);

  std::vector<ComplexMatrix> ops;
  if (name == "depolarizing") {
    ops.push_back(std::sqrt(1.0 - 0.75 * param) * eye);
    ops.push_back(std::sqrt(0.25 * param) * x);
    ops.push_back(std::sqrt(0.25 * param) * y);
    ops.push_back(std::sqrt(0.25 * param) * z);
  } else if (name == "amplitude-damping") {
    ComplexMatrix k0(2, 2), k1(2, 2);
    k0 << 1, 0, 0, std::sqrt(1.0 - param);
    k1 << 0, std::sqrt(param), 0, 0;
    ops = {k0, k1};
  } else if (name == "phase-damping") {
    ComplexMatrix k0(2, 2), k1(2, 2);
    k0 << 1, 0, 0, std::sqrt(1.0 - param);
    k1 << 0, 0, 0, std::sqrt(param);
    ops = {k0, k1};
  } else if (name == "bit-flip") {
    ops.push_back(std::sqrt(1.0 - param) * eye);
    ops.push_back(std::sqrt(param) * x);
  } else if (name == "erasure") {
    // output gains a flag level: dim 2 -> dim 3
    ComplexMatrix keep = ComplexMatrix::Zero(3, 2);
    keep(0, 0) = keep(1, 1) = std::sqrt(1.0 - param);
    ComplexMatrix f0 = ComplexMatrix::Zero(3, 2);
    f0(2, 0) = std::sqrt(param);
    ComplexMatrix f1 = ComplexMatrix::Zero(3, 2);
    f1(2, 1) = std::sqrt(param);
    ops = {keep, f0, f1};
  } else {
    throw ValidationError("named_channel: unknown name '" + name + "'");
  }
  return KrausChannel(std::move(ops), tol);
}

KrausChannel random_channel(int input_dim, int env_dim, std::uint64_t seed,
                            const Tolerances& tol) {
  if (input_dim < 1 || env_dim < 1) {
    throw DimensionError("random_channel: dimensions must be >= 1");
  }
  SplitMix64 rng(seed);
  const ComplexMatrix u = haar_unitary(input_dim * env_dim, rng, tol);
  std::vector<ComplexMatrix> ops;
  ops.reserve(static_cast<std::size_t>(env_dim));
  for (int k = 0; k < env_dim; ++k) {
    ComplexMatrix op(input_dim, input_dim);
    for (int i = 0; i < input_dim; ++i) {
      for (int j = 0; j < input_dim; ++j) {
        op(i, j) = u(i * env_dim + k, j * env_dim);
      }
    }
    ops.push_back(std::move(op));
  }
  return KrausChannel(std::move(ops), tol);
}

}  // namespace qpriv
