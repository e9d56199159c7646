#include "qpriv/privacy.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace qpriv {

namespace {

constexpr const char* kProxyNote = "receiver/eve information are holevo proxies";

// y = (I_pre (x) U (x) I_post) x on a state vector
ComplexVector apply_block(const ComplexVector& v, int pre,
                          const ComplexMatrix& u, int post) {
  const int m = static_cast<int>(u.rows());
  ComplexVector out(v.size());
  ComplexVector x(m);
  for (int a = 0; a < pre; ++a) {
    for (int b = 0; b < post; ++b) {
      for (int s = 0; s < m; ++s) {
        x(s) = v(static_cast<Eigen::Index>(a) * m * post + static_cast<Eigen::Index>(s) * post + b);
      }
      const ComplexVector y = u * x;
      for (int s = 0; s < m; ++s) {
        out(static_cast<Eigen::Index>(a) * m * post + static_cast<Eigen::Index>(s) * post + b) = y(s);
      }
    }
  }
  return out;
}

Ensemble map_through(const Ensemble& signals, const KrausChannel& ch,
                     bool complementary_side, const Tolerances& tol) {
  std::vector<Ensemble::Member> members;
  members.reserve(signals.members().size());
  for (const Ensemble::Member& m : signals.members()) {
    members.push_back({m.probability, complementary_side
                                          ? complementary(ch, m.state, tol)
                                          : apply(ch, m.state, tol)});
  }
  return Ensemble(std::move(members), tol);
}

// coherent information through a channel, reference = purification of rho
Bits coherent_information_two_party(const KrausChannel& ch,
                                    const DensityMatrix& rho,
                                    const Tolerances& tol) {
  const DensityMatrix flat(rho.matrix(), DimSignature({rho.dim()}), tol);
  const PureState psi = purify(flat, tol);
  const DensityMatrix evolved = apply_on(ch, psi.density(tol), 1, tol);
  return coherent_information(evolved, {0}, {1}, tol);
}

}  // namespace

Scenario::Scenario(PureState initial, std::vector<Leg> legs,
                   const Tolerances& tol)
    : initial_(std::move(initial)), legs_(std::move(legs)) {
  const DimSignature& sig = initial_.signature();
  if (static_cast<int>(legs_.size()) != sig.count() - 1) {
    throw DimensionError("Scenario: " + std::to_string(legs_.size()) +
                         " legs for " + std::to_string(sig.count()) +
                         " subsystems (need one per receiver)");
  }
  for (std::size_t i = 0; i < legs_.size(); ++i) {
    const int share_dim = sig.dim(static_cast<int>(i) + 1);
    if (legs_[i].channel.input_dim() != share_dim) {
      throw DimensionError("Scenario: leg '" + legs_[i].name +
                           "' channel input " +
                           std::to_string(legs_[i].channel.input_dim()) +
                           " does not match share dimension " +
                           std::to_string(share_dim));
    }
  }
  (void)tol;
}

EvolvedScenario::EvolvedScenario(PureState joint,
                                 std::vector<std::string> names,
                                 std::vector<LegView> legs,
                                 const Tolerances& tol)
    : joint_(std::move(joint)),
      joint_density_(joint_.density(tol)),
      names_(std::move(names)),
      legs_(std::move(legs)) {
  if (static_cast<int>(names_.size()) != joint_.signature().count()) {
    throw DimensionError("EvolvedScenario: name list does not match signature");
  }
  // purity: Tr(rho^2) lower-bounds the largest eigenvalue
  if (joint_density_.purity() < 1.0 - tol.inequality_slack) {
    throw ValidationError("EvolvedScenario: joint state is not globally pure");
  }
}

DensityMatrix EvolvedScenario::marginal(const std::vector<int>& keep,
                                        const Tolerances& tol) const {
  return joint_density_.marginal(keep, tol);
}

EvolvedScenario evolve(const Scenario& s, const Tolerances& tol) {
  std::vector<int> order(static_cast<std::size_t>(s.leg_count()));
  std::iota(order.begin(), order.end(), 0);
  return evolve(s, order, tol);
}

EvolvedScenario evolve(const Scenario& s, const std::vector<int>& leg_order,
                       const Tolerances& tol) {
  const int n_legs = s.leg_count();
  {
    std::vector<int> sorted(leg_order);
    std::sort(sorted.begin(), sorted.end());
    std::vector<int> expect(static_cast<std::size_t>(n_legs));
    std::iota(expect.begin(), expect.end(), 0);
    if (sorted != expect) {
      throw DimensionError("evolve: leg order must be a permutation of all legs");
    }
  }

  ComplexVector v = s.initial().vector();
  std::vector<int> dims = s.initial().signature().dims();
  std::vector<std::string> names;
  names.push_back("R");
  for (const Leg& leg : s.legs()) names.push_back(leg.name);

  // marginals of the initial state, one per receiver share
  std::vector<DensityMatrix> marginals;
  const DensityMatrix initial_density = s.initial().density(tol);
  for (int i = 0; i < n_legs; ++i) {
    marginals.push_back(initial_density.marginal({i + 1}, tol));
  }

  std::vector<int> q_pos(static_cast<std::size_t>(n_legs));
  for (int i = 0; i < n_legs; ++i) q_pos[static_cast<std::size_t>(i)] = i + 1;
  std::vector<int> e_pos(static_cast<std::size_t>(n_legs), -1);

  for (int leg : leg_order) {
    const KrausChannel& ch = s.legs()[static_cast<std::size_t>(leg)].channel;
    const StinespringDilation& dil = ch.dilation(tol);
    const int p = q_pos[static_cast<std::size_t>(leg)];

    const long long grown = static_cast<long long>(v.size()) * dil.env_in;
    if (grown > tol.max_dimension) {
      throw DimensionError("evolve: joint dimension " + std::to_string(grown) +
                           " exceeds the configured maximum");
    }

    // environment appended last, then moved next to the receiver's share
    ComplexVector env = ComplexVector::Zero(dil.env_in);
    env(dil.env_initial) = 1.0;
    v = kron(v, env, tol);
    dims.push_back(dil.env_in);
    const int last = static_cast<int>(dims.size()) - 1;
    std::vector<int> order;
    for (int k = 0; k <= p; ++k) order.push_back(k);
    order.push_back(last);
    for (int k = p + 1; k < last; ++k) order.push_back(k);
    auto [moved, moved_sig] = permute_subsystems(v, DimSignature(dims), order);
    v = std::move(moved);
    dims = moved_sig.dims();

    int pre = 1, post = 1;
    for (int k = 0; k < p; ++k) pre *= dims[static_cast<std::size_t>(k)];
    for (int k = p + 2; k < static_cast<int>(dims.size()); ++k) {
      post *= dims[static_cast<std::size_t>(k)];
    }
    v = apply_block(v, pre, dil.unitary, post);
    dims[static_cast<std::size_t>(p)] = dil.sys_out;
    dims[static_cast<std::size_t>(p + 1)] = dil.env_out;

    names[static_cast<std::size_t>(p)] += "'";
    names.insert(names.begin() + p + 1,
                 "E_" + s.legs()[static_cast<std::size_t>(leg)].name);

    // every tracked position at or after the insertion point shifts by one
    e_pos[static_cast<std::size_t>(leg)] = p + 1;
    for (int i = 0; i < n_legs; ++i) {
      if (i == leg) continue;
      if (q_pos[static_cast<std::size_t>(i)] > p) ++q_pos[static_cast<std::size_t>(i)];
      if (e_pos[static_cast<std::size_t>(i)] > p) ++e_pos[static_cast<std::size_t>(i)];
    }
  }

  v /= v.norm();
  PureState joint(std::move(v), DimSignature(dims), tol);

  std::vector<EvolvedScenario::LegView> views;
  for (int i = 0; i < n_legs; ++i) {
    const Leg& leg = s.legs()[static_cast<std::size_t>(i)];
    Ensemble signals = leg.signals ? *leg.signals
                                   : eigen_decomposition(
                                         marginals[static_cast<std::size_t>(i)], tol);
    if (signals.signature().total() != marginals[static_cast<std::size_t>(i)].dim()) {
      throw DimensionError("evolve: leg '" + leg.name +
                           "' signal ensemble dimension does not match the share");
    }
    const double mismatch = max_abs(signals.average(tol).matrix() -
                                    marginals[static_cast<std::size_t>(i)].matrix());
    if (mismatch > tol.inequality_slack) {
      throw ValidationError("evolve: leg '" + leg.name +
                            "' signal ensemble deviates from the share marginal by " +
                            std::to_string(mismatch));
    }
    views.push_back({leg.name, leg.channel, std::move(signals),
                     marginals[static_cast<std::size_t>(i)],
                     q_pos[static_cast<std::size_t>(i)],
                     e_pos[static_cast<std::size_t>(i)]});
  }
  return EvolvedScenario(std::move(joint), std::move(names), std::move(views), tol);
}

LegPrivacy leg_privacy(const EvolvedScenario& e, int leg, const Tolerances& tol) {
  if (leg < 0 || leg >= e.leg_count()) {
    throw DimensionError("leg_privacy: leg index out of range");
  }
  return leg_privacy(e, leg, e.legs()[static_cast<std::size_t>(leg)].signals, tol);
}

LegPrivacy leg_privacy(const EvolvedScenario& e, int leg,
                       const Ensemble& signals, const Tolerances& tol) {
  if (leg < 0 || leg >= e.leg_count()) {
    throw DimensionError("leg_privacy: leg index out of range");
  }
  const EvolvedScenario::LegView& view = e.legs()[static_cast<std::size_t>(leg)];
  if (signals.signature().total() != view.input_marginal.dim()) {
    throw DimensionError("leg_privacy: ensemble dimension does not match the share");
  }
  const double mismatch = max_abs(signals.average(tol).matrix() -
                                  view.input_marginal.matrix());
  if (mismatch > tol.inequality_slack) {
    throw ValidationError("leg_privacy: ensemble deviates from the share marginal by " +
                          std::to_string(mismatch));
  }

  const Ensemble received = map_through(signals, view.channel, false, tol);
  const Bits chi_receiver = holevo(received, tol);

  // Eve's conditional states come from this leg's complementary channel; her
  // average holdings are everything outside the sender and this receiver.
  Bits eve_conditional = 0.0;
  for (const Ensemble::Member& m : signals.members()) {
    eve_conditional +=
        m.probability * entropy(complementary(view.channel, m.state, tol), tol);
  }
  const Bits chi_eve_channel =
      entropy(complementary(view.channel, signals.average(tol), tol), tol) -
      eve_conditional;

  std::vector<int> eve_holdings =
      e.joint().signature().complement({0, view.output_index});
  const Bits chi_eve =
      entropy(e.marginal(eve_holdings, tol), tol) - eve_conditional;

  LegPrivacy out;
  out.leg = view.name;
  out.chi_receiver = chi_receiver;
  out.chi_eve = chi_eve;
  out.chi_eve_channel = chi_eve_channel;
  out.p_min = chi_receiver - chi_eve;
  out.coherent_info = coherent_information(e.joint(), {0}, {view.output_index}, tol);
  std::vector<int> extended{0};
  for (int i = 0; i < e.leg_count(); ++i) {
    if (i != leg) extended.push_back(e.legs()[static_cast<std::size_t>(i)].output_index);
  }
  out.coherent_info_extended = (extended.size() > 1)
      ? coherent_information(e.joint(), extended, {view.output_index}, tol)
      : out.coherent_info;
  out.privacy_lower_bound = out.coherent_info;
  out.note = kProxyNote;
  return out;
}

std::vector<InequalityReport> tradeoff_checks(const EvolvedScenario& e, int leg,
                                              const Tolerances& tol) {
  if (leg < 0 || leg >= e.leg_count()) {
    throw DimensionError("tradeoff_checks: leg index out of range");
  }
  const EvolvedScenario::LegView& view = e.legs()[static_cast<std::size_t>(leg)];
  const DensityMatrix& input = view.input_marginal;
  const KrausChannel& ch = view.channel;
  const Ensemble& signals = view.signals;
  const double slack_tol = tol.inequality_slack;

  const Bits chi_q = holevo(map_through(signals, ch, false, tol), tol);
  const Bits chi_e = holevo(map_through(signals, ch, true, tol), tol);
  const Bits ic = coherent_information_two_party(ch, input, tol);
  const Bits s_in = entropy(input, tol);
  const Bits dist = s_in - ic;
  const Bits p_min = chi_q - chi_e;
  const Bits log_d = std::log2(static_cast<double>(ch.input_dim()));
  const std::string where = "leg=" + view.name;

  std::vector<InequalityReport> reports;
  reports.push_back({"coherent-eve-tradeoff", ic + chi_e, log_d, slack_tol, 0,
                     where + " eve-information=holevo-proxy"});
  reports.push_back({"privacy-eve-tradeoff", (chi_q - chi_e) + chi_e, log_d,
                     slack_tol, 0, where + " privacy/eve=holevo-proxies"});
  reports.push_back({"disturbance-privacy-tradeoff", dist + p_min, s_in,
                     slack_tol, 0, where + " p_min=holevo-proxy"});

  // entanglement bound, only when the joint reference-output state is 2x2
  const DensityMatrix flat(input.matrix(), DimSignature({input.dim()}), tol);
  const PureState psi = purify(flat, tol);
  const DensityMatrix joint_out = apply_on(ch, psi.density(tol), 1, tol);
  const DimSignature& joint_sig = joint_out.signature();
  if (joint_sig.dim(0) == 2 && joint_sig.dim(1) == 2) {
    reports.push_back({"privacy-eof-bound", p_min, eof(joint_out, tol),
                       slack_tol, 0, where});
  }
  return reports;
}

std::vector<InequalityReport> exclusivity_checks(const EvolvedScenario& e,
                                                 const Tolerances& tol) {
  if (e.leg_count() != 2) {
    throw DimensionError("exclusivity_checks: exactly two receiver legs required");
  }
  const LegPrivacy a = leg_privacy(e, 0, tol);
  const LegPrivacy b = leg_privacy(e, 1, tol);
  const double slack_tol = tol.inequality_slack;
  std::vector<InequalityReport> reports;
  reports.push_back({"privacy-exclusivity", a.p_min + b.p_min, 0.0, slack_tol,
                     0, std::string(kProxyNote)});
  reports.push_back({"coherent-info-exclusivity",
                     a.coherent_info + b.coherent_info, 0.0, slack_tol, 0,
                     "reference=R"});
  return reports;
}

std::vector<InequalityReport> multiparty_checks(const EvolvedScenario& e,
                                                const Tolerances& tol) {
  if (e.leg_count() < 2) {
    throw DimensionError("multiparty_checks: at least two receiver legs required");
  }
  const double slack_tol = tol.inequality_slack;
  Bits p_sum = 0.0;
  Bits cond_sum = 0.0;
  for (int i = 0; i < e.leg_count(); ++i) {
    p_sum += leg_privacy(e, i, tol).p_min;
    cond_sum += conditional_entropy(
        e.joint(), {0}, {e.legs()[static_cast<std::size_t>(i)].output_index}, tol);
  }
  std::vector<InequalityReport> reports;
  reports.push_back({"multiparty-privacy-sum", p_sum, 0.0, slack_tol, 0,
                     std::to_string(e.leg_count()) + " legs, " + kProxyNote});
  reports.push_back({"conditional-entropy-sum", 0.0, cond_sum, slack_tol, 0,
                     std::to_string(e.leg_count()) + " legs"});
  return reports;
}

std::vector<InequalityReport> monogamy_checks(const EvolvedScenario& e,
                                              const Tolerances& tol) {
  if (e.leg_count() != 2) {
    throw DimensionError("monogamy_checks: exactly two receiver legs required");
  }
  const LegPrivacy a = leg_privacy(e, 0, tol);
  const LegPrivacy b = leg_privacy(e, 1, tol);
  const Bits ic_joint = coherent_information(
      e.joint(), {0},
      {e.legs()[0].output_index, e.legs()[1].output_index}, tol);
  const double slack_tol = tol.inequality_slack;
  std::vector<InequalityReport> reports;
  reports.push_back({"privacy-monogamy", a.p_min + b.p_min, ic_joint, slack_tol,
                     0, "right=joint-output coherent information (lower bound "
                        "on the optimal guaranteed privacy)"});
  reports.push_back({"coherent-info-monogamy",
                     a.coherent_info + b.coherent_info, ic_joint, slack_tol, 0,
                     "reference=R"});
  return reports;
}

std::vector<InequalityReport> eof_tradeoff_checks(const EvolvedScenario& e,
                                                  int eof_leg, int privacy_leg,
                                                  double tolerance,
                                                  const Tolerances& tol) {
  if (e.leg_count() < 2 || eof_leg == privacy_leg || eof_leg < 0 ||
      privacy_leg < 0 || eof_leg >= e.leg_count() ||
      privacy_leg >= e.leg_count()) {
    throw DimensionError("eof_tradeoff_checks: two distinct legs required");
  }
  const EvolvedScenario::LegView& bview = e.legs()[static_cast<std::size_t>(eof_leg)];
  const EvolvedScenario::LegView& cview =
      e.legs()[static_cast<std::size_t>(privacy_leg)];

  const DensityMatrix rho_ab = e.marginal({0, bview.output_index}, tol);
  if (rho_ab.signature().dim(0) != 2 || rho_ab.signature().dim(1) != 2) {
    throw DimensionError("eof_tradeoff_checks: sender+receiver marginal " +
                         rho_ab.signature().to_string() +
                         " is unsupported (two qubits required)");
  }
  const DensityMatrix rho_ac = e.marginal({0, cview.output_index}, tol);

  const Bits e_f = eof(rho_ab, tol);
  const LegPrivacy c_priv = leg_privacy(e, privacy_leg, tol);
  const Bits s_a = entropy(e.marginal({0}, tol), tol);
  const Bits j_ac = classical_correlation(rho_ac, tol).value;
  const Bits d_ac = mutual_information(rho_ac, tol) - j_ac;
  const std::string legs_note =
      "eof-leg=" + bview.name + " privacy-leg=" + cview.name;

  std::vector<InequalityReport> reports;
  reports.push_back({"eof-privacy-tradeoff", e_f + c_priv.p_min, s_a, tolerance,
                     0, legs_note + " " + kProxyNote});
  reports.push_back({"koashi-winter", e_f + j_ac, s_a, tolerance, 0, legs_note});
  reports.push_back({"eof-coherent-discord", e_f + c_priv.coherent_info, d_ac,
                     tolerance, 0, legs_note});
  reports.push_back({"discord-entropy-bound", d_ac, s_a, tolerance, 0, legs_note});
  return reports;
}

std::vector<InequalityReport> squared_monogamy_checks(const EvolvedScenario& e,
                                                      const Tolerances& tol) {
  for (int i = 0; i < e.leg_count(); ++i) {
    if (e.legs()[static_cast<std::size_t>(i)].input_marginal.dim() != 2) {
      throw DimensionError("squared_monogamy_checks: non-qubit receiver share");
    }
  }
  const DimSignature& joint_sig = e.joint().signature();
  if (joint_sig.dim(0) != 2) {
    throw DimensionError("squared_monogamy_checks: non-qubit sender reference");
  }
  Bits left = 0.0;
  for (int i = 0; i < e.leg_count(); ++i) {
    const Bits p = std::max(0.0, leg_privacy(e, i, tol).p_min);
    left += p * p;
  }
  const Bits s_a = entropy(e.marginal({0}, tol), tol);
  std::vector<InequalityReport> reports;
  reports.push_back({"squared-privacy-monogamy", left, s_a * s_a,
                     tol.inequality_slack, 0,
                     "p_min clamped at 0 before squaring; right=squared "
                     "entanglement of the pure sender|rest cut"});
  return reports;
}

}  // namespace qpriv
