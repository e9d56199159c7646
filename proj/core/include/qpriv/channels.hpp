#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "qpriv/states.hpp"

namespace qpriv {

// Unitary realization of a channel on system (x) environment, environment
// starting in a basis state. The joint input factors as sys_in (x) env_in and
// the joint output as sys_out (x) env_out; the two products are equal.
struct StinespringDilation {
  ComplexMatrix unitary;
  int sys_in = 0;
  int env_in = 0;
  int sys_out = 0;
  int env_out = 0;
  int env_initial = 0;
};

// CPTP map given by Kraus operators (all input-dim x output-dim consistent,
// completeness within tolerance). The environment dimension equals the number
// of Kraus operators. Immutable; the Stinespring dilation is computed on
// first use and cached, safe under concurrent first access.
class KrausChannel {
 public:
  explicit KrausChannel(std::vector<ComplexMatrix> kraus,
                        const Tolerances& tol = {});

  const std::vector<ComplexMatrix>& kraus() const { return kraus_; }
  int input_dim() const { return input_dim_; }
  int output_dim() const { return output_dim_; }
  int env_dim() const { return static_cast<int>(kraus_.size()); }

  const StinespringDilation& dilation(const Tolerances& tol = {}) const;

 private:
  struct DilationCell;

  std::vector<ComplexMatrix> kraus_;
  int input_dim_ = 0;
  int output_dim_ = 0;
  std::shared_ptr<DilationCell> cell_;
};

// Kraus action on a state occupying the channel's full input space.
DensityMatrix apply(const KrausChannel& ch, const DensityMatrix& rho,
                    const Tolerances& tol = {});

// Kraus action embedded on one subsystem of a larger state. The acted
// subsystem's dimension changes to the channel's output dimension.
DensityMatrix apply_on(const KrausChannel& ch, const DensityMatrix& rho,
                       int subsystem, const Tolerances& tol = {});

// Environment output: entries <k| rho_E |l> = Tr(K_k rho K_l^dag).
DensityMatrix complementary(const KrausChannel& ch, const DensityMatrix& rho,
                            const Tolerances& tol = {});

// second of first: Kraus set {A_j B_i}.
KrausChannel compose(const KrausChannel& second, const KrausChannel& first,
                     const Tolerances& tol = {});

KrausChannel identity_channel(int dim, const Tolerances& tol = {});

// Qubit fixtures: identity, depolarizing(p), amplitude-damping(gamma),
// phase-damping(lambda), bit-flip(p), erasure(p). Parameters in [0,1].
KrausChannel named_channel(const std::string& name, double param,
                           const Tolerances& tol = {});

// Haar-random unitary on system (x) environment sliced into env_dim Kraus
// operators; input and output dimensions coincide. Deterministic per seed.
KrausChannel random_channel(int input_dim, int env_dim, std::uint64_t seed,
                            const Tolerances& tol = {});

}  // namespace qpriv
