#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qpriv/measures.hpp"

namespace qpriv {

// One receiver: a label, the noisy channel on that receiver's share, and an
// optional signal ensemble (defaults to the eigen-decomposition of the share's
// marginal when absent).
struct Leg {
  std::string name;
  KrausChannel channel;
  std::optional<Ensemble> signals;
};

// Sender's reference system first, one subsystem per receiver after it, one
// channel per receiver leg.
class Scenario {
 public:
  Scenario(PureState initial, std::vector<Leg> legs, const Tolerances& tol = {});

  const PureState& initial() const { return initial_; }
  const std::vector<Leg>& legs() const { return legs_; }
  int leg_count() const { return static_cast<int>(legs_.size()); }

 private:
  PureState initial_;
  std::vector<Leg> legs_;
};

// The scenario after every leg passed through its channel's unitary dilation.
// Subsystem layout: R, Q1', E1', Q2', E2', ... with each environment inserted
// directly after its receiver's share. Globally pure by construction; the
// constructor re-checks purity to catch bookkeeping mistakes.
class EvolvedScenario {
 public:
  struct LegView {
    std::string name;
    KrausChannel channel;
    Ensemble signals;              // validated against the input marginal
    DensityMatrix input_marginal;  // before the channel
    int output_index;              // subsystem index of Q_i'
    int env_index;                 // subsystem index of E_i'
  };

  EvolvedScenario(PureState joint, std::vector<std::string> names,
                  std::vector<LegView> legs, const Tolerances& tol = {});

  const PureState& joint_pure() const { return joint_; }
  const DensityMatrix& joint() const { return joint_density_; }
  const std::vector<std::string>& names() const { return names_; }
  const std::vector<LegView>& legs() const { return legs_; }
  int leg_count() const { return static_cast<int>(legs_.size()); }

  DensityMatrix marginal(const std::vector<int>& keep,
                         const Tolerances& tol = {}) const;

 private:
  PureState joint_;
  DensityMatrix joint_density_;
  std::vector<std::string> names_;
  std::vector<LegView> legs_;
};

EvolvedScenario evolve(const Scenario& s, const Tolerances& tol = {});

// Same evolution with the legs applied in the given order; the final layout
// is identical because each environment is inserted next to its receiver.
EvolvedScenario evolve(const Scenario& s, const std::vector<int>& leg_order,
                       const Tolerances& tol = {});

// Per-leg privacy figures. Receiver and eavesdropper information are Holevo
// proxies for the operational optima; chi_eve uses the eavesdropper's full
// holdings in the scenario (her environment plus everything outside the
// sender and this receiver), which coincides with the leg's complementary
// output for a single receiver.
struct LegPrivacy {
  std::string leg;
  Bits chi_receiver = 0;      // H_receiver proxy
  Bits chi_eve = 0;           // scenario-wide eavesdropper Holevo proxy
  Bits chi_eve_channel = 0;   // this leg's complementary channel alone
  Bits p_min = 0;             // chi_receiver - chi_eve
  Bits coherent_info = 0;     // reference: sender's R alone
  Bits coherent_info_extended = 0;  // reference: R plus the other outputs
  Bits privacy_lower_bound = 0;     // optimal guaranteed privacy >= this
  std::string note;
};

LegPrivacy leg_privacy(const EvolvedScenario& e, int leg,
                       const Tolerances& tol = {});
LegPrivacy leg_privacy(const EvolvedScenario& e, int leg,
                       const Ensemble& signals, const Tolerances& tol = {});

// One inequality evaluation; pass means slack = right - left >= -tolerance.
struct InequalityReport {
  std::string check;
  Bits left = 0;
  Bits right = 0;
  double tolerance = 1e-8;
  std::uint64_t seed = 0;
  std::string detail;

  Bits slack() const { return right - left; }
  bool passes() const { return slack() >= -tolerance; }
  std::string verdict() const { return passes() ? "pass" : "fail"; }
};

// Single-receiver trade-offs evaluated on the leg's two-party reduction
// (input marginal + channel + signals): quantum transmission vs Eve's gain,
// privacy vs Eve's gain, disturbance vs minimal privacy, and the
// entanglement-of-formation bound when the joint reference-output state is
// two qubits.
std::vector<InequalityReport> tradeoff_checks(const EvolvedScenario& e, int leg,
                                              const Tolerances& tol = {});

// Two receivers: minimal privacies are mutually exclusive (their sum is never
// positive), plus the coherent-information form of the same statement.
std::vector<InequalityReport> exclusivity_checks(const EvolvedScenario& e,
                                                 const Tolerances& tol = {});

// Any number of receivers: the minimal privacies sum to at most zero, with
// the conditional-entropy sum as the companion statement.
std::vector<InequalityReport> multiparty_checks(const EvolvedScenario& e,
                                                const Tolerances& tol = {});

// Two receivers: the summed minimal privacies are bounded by the joint-output
// coherent information (the computable lower bound on the optimal guaranteed
// privacy to both receivers together).
std::vector<InequalityReport> monogamy_checks(const EvolvedScenario& e,
                                              const Tolerances& tol = {});

// Entanglement across sender/receiver-1 bounds the privacy toward receiver-2:
// the trade-off itself plus its proof chain (Koashi-Winter, the
// coherent-information/discord link, and the discord bound by S(A)).
// Requires the sender+first-receiver marginal to be two qubits and the second
// receiver's output to be a qubit.
std::vector<InequalityReport> eof_tradeoff_checks(const EvolvedScenario& e,
                                                  int eof_leg = 0,
                                                  int privacy_leg = 1,
                                                  double tolerance = 1e-6,
                                                  const Tolerances& tol = {});

// All-qubit senders/receivers: squared minimal privacies (clamped at zero)
// summed over legs stay below the squared entanglement across the A|rest cut.
std::vector<InequalityReport> squared_monogamy_checks(const EvolvedScenario& e,
                                                      const Tolerances& tol = {});

}  // namespace qpriv
