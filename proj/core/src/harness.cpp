#include "qpriv/harness.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "qpriv/rng.hpp"

namespace qpriv {

namespace {

constexpr const char* kVersion = "0.1.0";

std::uint64_t fnv1a(const std::string& text) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : text) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

std::string hex16(std::uint64_t v) {
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(v));
  return buf;
}

std::string canonical_config(const RunConfig& cfg) {
  std::ostringstream os;
  os << "command=" << static_cast<int>(cfg.command)
     << "|scenario=" << cfg.scenario_path << "|dims=";
  for (std::size_t i = 0; i < cfg.dims.size(); ++i) {
    if (i) os << ",";
    os << cfg.dims[i];
  }
  os << "|env=" << cfg.env_dim << "|trials=" << cfg.trials
     << "|seed=" << cfg.seed << "|tol=" << format_number(cfg.tolerance)
     << "|eoftol=" << format_number(cfg.eof_tolerance) << "|checks=";
  for (std::size_t i = 0; i < cfg.checks.size(); ++i) {
    if (i) os << ",";
    os << cfg.checks[i];
  }
  os << "|channel=" << cfg.sweep_channel << "|range=" << cfg.sweep_range;
  return os.str();
}

std::uint64_t family_seed(const RunConfig& cfg, const char* family) {
  return SplitMix64::split(cfg.seed, fnv1a(family));
}

struct SweepSpec {
  double start = 0, stop = 0, step = 0;
};

SweepSpec parse_range(const std::string& text) {
  SweepSpec spec;
  char extra = 0;
  const int got = std::sscanf(text.c_str(), "%lf:%lf:%lf%c", &spec.start,
                              &spec.stop, &spec.step, &extra);
  if (got != 3) {
    throw ValidationError("range '" + text + "' is not start:stop:step");
  }
  if (spec.step <= 0.0) {
    throw ValidationError("range step must be positive");
  }
  if (spec.stop < spec.start) {
    throw ValidationError("empty range: stop below start");
  }
  return spec;
}

bool dims_all_qubit(const std::vector<int>& dims) {
  return std::all_of(dims.begin(), dims.end(), [](int d) { return d == 2; });
}

// family requirements against the configured dims
bool family_fits(const std::string& family, const std::vector<int>& dims) {
  if (family == "entropy" || family == "exclusivity" || family == "monogamy") {
    return dims.size() >= 3;
  }
  if (family == "eof-tradeoff") {
    return dims.size() >= 3 && dims[0] == 2 && dims[1] == 2 && dims[2] == 2;
  }
  // multiparty and squared derive their own shape; pair families are
  // dims-independent
  return true;
}

int draw_env_dim(std::uint64_t seed, int env_cap) {
  if (env_cap <= 1) return 1;
  return 1 + static_cast<int>(SplitMix64(seed).next() % static_cast<std::uint64_t>(env_cap));
}

std::string trial_note(int trial, const std::string& extra) {
  std::string note = "trial=" + std::to_string(trial);
  if (!extra.empty()) note += " " + extra;
  return note;
}

void append(std::vector<InequalityReport>& sink,
            std::vector<InequalityReport> reports, std::uint64_t seed,
            const std::string& note) {
  for (InequalityReport& r : reports) {
    r.seed = seed;
    if (!note.empty()) r.detail = r.detail.empty() ? note : note + " " + r.detail;
    sink.push_back(std::move(r));
  }
}

Scenario random_scenario(const std::vector<int>& dims, int env_cap,
                         std::uint64_t seed, const Tolerances& tol) {
  const PureState initial = random_pure(DimSignature(dims),
                                        SplitMix64::split(seed, 0), tol);
  std::vector<Leg> legs;
  for (std::size_t i = 1; i < dims.size(); ++i) {
    const std::uint64_t leg_seed = SplitMix64::split(seed, i);
    legs.push_back({"B" + std::to_string(i),
                    random_channel(dims[i], draw_env_dim(leg_seed, env_cap),
                                   leg_seed, tol),
                    std::nullopt});
  }
  return Scenario(initial, std::move(legs), tol);
}

void run_entropy(const RunConfig& cfg, const Tolerances& tol, ReportFile& out) {
  const std::uint64_t base = family_seed(cfg, "entropy");
  const std::vector<int> dims(cfg.dims.begin(), cfg.dims.begin() + 3);
  const DimSignature sig(dims);
  for (int t = 0; t < cfg.trials; ++t) {
    const std::uint64_t seed = SplitMix64::split(base, t);
    const DensityMatrix rho =
        (t % 2 == 0) ? random_density(sig, sig.total(), seed, tol)
                     : random_pure(sig, seed, tol).density(tol);
    const Bits s_abc = entropy(rho, tol);
    const Bits s_a = entropy(rho.marginal({0}, tol), tol);
    const Bits s_b = entropy(rho.marginal({1}, tol), tol);
    const Bits s_ab = entropy(rho.marginal({0, 1}, tol), tol);
    const Bits s_bc = entropy(rho.marginal({1, 2}, tol), tol);
    const Bits s_ac = entropy(rho.marginal({0, 2}, tol), tol);
    const std::string note = trial_note(t, "dims=" + sig.to_string());
    out.checks.push_back({"strong-subadditivity", s_abc + s_b, s_ab + s_bc,
                          tol.inequality_slack, seed, note});
    out.checks.push_back({"weak-monotonicity", s_a + s_b, s_ac + s_bc,
                          tol.inequality_slack, seed, note});
  }
}

void run_holevo_identity(const RunConfig& cfg, const Tolerances& tol,
                         ReportFile& out) {
  const std::uint64_t base = family_seed(cfg, "holevo-identity");
  for (int t = 0; t < cfg.trials; ++t) {
    const std::uint64_t seed = SplitMix64::split(base, t);
    const int rank = 1 + (t % 2);
    const DensityMatrix rho = random_density(DimSignature({2}), rank,
                                             SplitMix64::split(seed, 1), tol);
    const Ensemble signals = pure_decomposition(rho, rank + (t % 3 == 0 ? 1 : 0),
                                                SplitMix64::split(seed, 2), tol);
    const std::uint64_t ch_seed = SplitMix64::split(seed, 3);
    const KrausChannel ch =
        random_channel(2, draw_env_dim(ch_seed, cfg.env_dim), ch_seed, tol);

    Bits chi_q = 0, chi_e = 0;
    {
      std::vector<Ensemble::Member> recv, eve;
      for (const Ensemble::Member& m : signals.members()) {
        recv.push_back({m.probability, apply(ch, m.state, tol)});
        eve.push_back({m.probability, complementary(ch, m.state, tol)});
      }
      chi_q = holevo(Ensemble(std::move(recv), tol), tol);
      chi_e = holevo(Ensemble(std::move(eve), tol), tol);
    }
    // independent route: coherent information through the purification
    const PureState psi = purify(rho, tol);
    const DensityMatrix joint = apply_on(ch, psi.density(tol), 1, tol);
    const Bits ic = coherent_information(joint, {0}, {1}, tol);

    out.checks.push_back({"holevo-coherent-identity",
                          std::abs((chi_q - chi_e) - ic), 0.0,
                          tol.inequality_slack, seed,
                          trial_note(t, "pure signals, env=" +
                                            std::to_string(ch.env_dim()))});
  }
}

void run_exclusivity(const RunConfig& cfg, const Tolerances& tol,
                     ReportFile& out) {
  const std::uint64_t base = family_seed(cfg, "exclusivity");
  const std::vector<int> dims(cfg.dims.begin(), cfg.dims.begin() + 3);
  for (int t = 0; t < cfg.trials; ++t) {
    const std::uint64_t seed = SplitMix64::split(base, t);
    const EvolvedScenario e = evolve(random_scenario(dims, cfg.env_dim, seed, tol), tol);
    append(out.checks, exclusivity_checks(e, tol), seed, trial_note(t, ""));
  }
}

void run_monogamy(const RunConfig& cfg, const Tolerances& tol, ReportFile& out) {
  const std::uint64_t base = family_seed(cfg, "monogamy");
  const std::vector<int> dims(cfg.dims.begin(), cfg.dims.begin() + 3);
  for (int t = 0; t < cfg.trials; ++t) {
    const std::uint64_t seed = SplitMix64::split(base, t);
    const EvolvedScenario e = evolve(random_scenario(dims, cfg.env_dim, seed, tol), tol);
    append(out.checks, monogamy_checks(e, tol), seed, trial_note(t, ""));
  }
}

void run_multiparty(const RunConfig& cfg, const Tolerances& tol,
                    ReportFile& out) {
  const std::uint64_t base = family_seed(cfg, "multiparty");
  std::vector<int> dims = cfg.dims;
  while (dims.size() < 4) dims.push_back(2);
  for (int t = 0; t < cfg.trials; ++t) {
    const std::uint64_t seed = SplitMix64::split(base, t);
    const EvolvedScenario e = evolve(random_scenario(dims, cfg.env_dim, seed, tol), tol);
    append(out.checks, multiparty_checks(e, tol), seed, trial_note(t, ""));
  }
}

void run_eof_tradeoff(const RunConfig& cfg, const Tolerances& tol,
                      ReportFile& out) {
  const std::uint64_t base = family_seed(cfg, "eof-tradeoff");
  const std::vector<int> dims{2, 2, 2};
  for (int t = 0; t < cfg.trials; ++t) {
    const std::uint64_t seed = SplitMix64::split(base, t);
    const EvolvedScenario e = evolve(random_scenario(dims, cfg.env_dim, seed, tol), tol);
    append(out.checks, eof_tradeoff_checks(e, 0, 1, cfg.eof_tolerance, tol),
           seed, trial_note(t, ""));
  }
}

void run_squared(const RunConfig& cfg, const Tolerances& tol, ReportFile& out) {
  const std::uint64_t base = family_seed(cfg, "squared");
  std::vector<int> dims = cfg.dims;
  if (!dims_all_qubit(dims) || dims.size() < 3) dims = {2, 2, 2, 2};
  for (int t = 0; t < cfg.trials; ++t) {
    const std::uint64_t seed = SplitMix64::split(base, t);
    const EvolvedScenario e = evolve(random_scenario(dims, cfg.env_dim, seed, tol), tol);
    append(out.checks, squared_monogamy_checks(e, tol), seed, trial_note(t, ""));
  }
}

void run_tradeoffs(const RunConfig& cfg, const Tolerances& tol,
                   ReportFile& out) {
  const std::uint64_t base = family_seed(cfg, "tradeoffs");
  const std::vector<int> dims{2, 2};
  for (int t = 0; t < cfg.trials; ++t) {
    const std::uint64_t seed = SplitMix64::split(base, t);
    const EvolvedScenario e = evolve(random_scenario(dims, cfg.env_dim, seed, tol), tol);
    append(out.checks, tradeoff_checks(e, 0, tol), seed, trial_note(t, ""));
  }
}

void run_disturbance(const RunConfig& cfg, const Tolerances& tol,
                     ReportFile& out) {
  const std::uint64_t base = family_seed(cfg, "disturbance");
  for (int t = 0; t < cfg.trials; ++t) {
    const std::uint64_t seed = SplitMix64::split(base, t);
    const int d = (t % 2 == 0) ? 2 : 3;
    const int rank = 1 + static_cast<int>(SplitMix64(seed).next() %
                                          static_cast<std::uint64_t>(d));
    const DensityMatrix rho = random_density(DimSignature({d}), rank,
                                             SplitMix64::split(seed, 1), tol);
    const std::uint64_t s1 = SplitMix64::split(seed, 2);
    const std::uint64_t s2 = SplitMix64::split(seed, 3);
    const KrausChannel first =
        random_channel(d, draw_env_dim(s1, cfg.env_dim), s1, tol);
    const KrausChannel second =
        random_channel(d, draw_env_dim(s2, cfg.env_dim), s2, tol);
    const Bits d1 = disturbance(first, rho, tol);
    const Bits d2 = disturbance(compose(second, first, tol), rho, tol);
    const std::string note = trial_note(t, "d=" + std::to_string(d));
    out.checks.push_back({"disturbance-nonnegative", 0.0, d1,
                          tol.inequality_slack, seed, note});
    out.checks.push_back({"disturbance-upper", d1,
                          2.0 * std::log2(static_cast<double>(d)),
                          tol.inequality_slack, seed, note});
    out.checks.push_back({"disturbance-monotonicity", d1, d2,
                          tol.inequality_slack, seed, note});
  }
}

ReportFile run_verify(const RunConfig& cfg) {
  const Tolerances tol = cfg.tolerances();
  ReportFile out;
  std::vector<std::string> families = cfg.checks;
  if (families.empty()) {
    for (const std::string& f : known_check_families()) {
      if (family_fits(f, cfg.dims)) families.push_back(f);
    }
  }
  for (const std::string& f : families) {
    if (f == "entropy") run_entropy(cfg, tol, out);
    else if (f == "holevo-identity") run_holevo_identity(cfg, tol, out);
    else if (f == "exclusivity") run_exclusivity(cfg, tol, out);
    else if (f == "multiparty") run_multiparty(cfg, tol, out);
    else if (f == "monogamy") run_monogamy(cfg, tol, out);
    else if (f == "eof-tradeoff") run_eof_tradeoff(cfg, tol, out);
    else if (f == "squared") run_squared(cfg, tol, out);
    else if (f == "tradeoffs") run_tradeoffs(cfg, tol, out);
    else if (f == "disturbance") run_disturbance(cfg, tol, out);
  }
  return out;
}

ReportFile run_compute(const RunConfig& cfg) {
  const Tolerances tol = cfg.tolerances();
  ReportFile out;
  const Scenario scenario = load_scenario(cfg.scenario_path, tol);
  const EvolvedScenario e = evolve(scenario, tol);

  for (int i = 0; i < e.leg_count(); ++i) {
    out.privacy.push_back(leg_privacy(e, i, tol));
    append(out.checks, tradeoff_checks(e, i, tol), cfg.seed, "");
  }
  if (e.leg_count() == 2) {
    append(out.checks, exclusivity_checks(e, tol), cfg.seed, "");
    append(out.checks, monogamy_checks(e, tol), cfg.seed, "");
    try {
      append(out.checks, eof_tradeoff_checks(e, 0, 1, cfg.eof_tolerance, tol),
             cfg.seed, "");
    } catch (const DimensionError&) {
      // unsupported marginal dimensions; the trade-off family is optional here
    }
  }
  if (e.leg_count() >= 2) {
    append(out.checks, multiparty_checks(e, tol), cfg.seed, "");
    try {
      append(out.checks, squared_monogamy_checks(e, tol), cfg.seed, "");
    } catch (const DimensionError&) {
    }
  }
  return out;
}

ReportFile run_sweep(const RunConfig& cfg) {
  const Tolerances tol = cfg.tolerances();
  const SweepSpec spec = parse_range(cfg.sweep_range);
  ReportFile out;

  const PureState bell = named_state("bell", DimSignature({2, 2}), tol);
  for (double p = spec.start; p <= spec.stop + 1e-12; p += spec.step) {
    const double param = std::min(p, 1.0);
    const KrausChannel ch = named_channel(cfg.sweep_channel, param, tol);
    const Scenario scenario(bell, {{"B", ch, std::nullopt}}, tol);
    const EvolvedScenario e = evolve(scenario, tol);
    const LegPrivacy lp = leg_privacy(e, 0, tol);

    SweepRow row;
    row.param = param;
    row.coherent_info = lp.coherent_info;
    row.chi_receiver = lp.chi_receiver;
    row.chi_eve = lp.chi_eve;
    row.p_min = lp.p_min;
    row.disturbance = disturbance(ch, e.legs()[0].input_marginal, tol);
    out.sweep.push_back(row);

    append(out.checks, tradeoff_checks(e, 0, tol), cfg.seed,
           "param=" + format_number(param));
  }
  return out;
}

std::string json_escape(const std::string& s) {
  std::string out;
  out.reserve(s.size());
  for (char c : s) {
    if (c == '"' || c == '\\') {
      out.push_back('\\');
      out.push_back(c);
    } else if (static_cast<unsigned char>(c) < 0x20) {
      out += ' ';
    } else {
      out.push_back(c);
    }
  }
  return out;
}

std::string render_records(const ReportFile& r) {
  std::ostringstream os;
  os << "{\"kind\":\"meta\",\"version\":\"" << r.version << "\",\"command\":\""
     << r.command << "\",\"seed\":" << r.seed << ",\"config\":\""
     << r.config_hash << "\"}\n";
  for (const LegPrivacy& p : r.privacy) {
    os << "{\"kind\":\"privacy\",\"leg\":\"" << json_escape(p.leg) << "\""
       << ",\"chi_receiver\":" << format_number(p.chi_receiver)
       << ",\"chi_eve\":" << format_number(p.chi_eve)
       << ",\"chi_eve_channel\":" << format_number(p.chi_eve_channel)
       << ",\"p_min\":" << format_number(p.p_min)
       << ",\"coherent_info\":" << format_number(p.coherent_info)
       << ",\"coherent_info_extended\":" << format_number(p.coherent_info_extended)
       << ",\"privacy_lower_bound\":" << format_number(p.privacy_lower_bound)
       << ",\"note\":\"" << json_escape(p.note) << "\"}\n";
  }
  for (const SweepRow& row : r.sweep) {
    os << "{\"kind\":\"sweep\",\"param\":" << format_number(row.param)
       << ",\"coherent_info\":" << format_number(row.coherent_info)
       << ",\"chi_receiver\":" << format_number(row.chi_receiver)
       << ",\"chi_eve\":" << format_number(row.chi_eve)
       << ",\"p_min\":" << format_number(row.p_min)
       << ",\"disturbance\":" << format_number(row.disturbance) << "}\n";
  }
  for (const InequalityReport& c : r.checks) {
    os << "{\"kind\":\"check\",\"check\":\"" << json_escape(c.check) << "\""
       << ",\"left\":" << format_number(c.left)
       << ",\"right\":" << format_number(c.right)
       << ",\"slack\":" << format_number(c.slack())
       << ",\"tolerance\":" << format_number(c.tolerance)
       << ",\"verdict\":\"" << c.verdict() << "\",\"seed\":" << c.seed
       << ",\"detail\":\"" << json_escape(c.detail) << "\"}\n";
  }
  const auto slacks = r.min_slack_by_check();
  os << "{\"kind\":\"summary\",\"checks_run\":" << r.checks.size()
     << ",\"failures\":" << r.failures() << ",\"min_slack\":{";
  bool first = true;
  for (const auto& [name, slack] : slacks) {
    if (!first) os << ",";
    first = false;
    os << "\"" << json_escape(name) << "\":" << format_number(slack);
  }
  os << "}}\n";
  return os.str();
}

std::string render_table(const ReportFile& r) {
  std::ostringstream os;
  if (!r.sweep.empty()) {
    os << "param,coherent_info,chi_receiver,chi_eve,p_min,disturbance\n";
    for (const SweepRow& row : r.sweep) {
      os << format_number(row.param) << "," << format_number(row.coherent_info)
         << "," << format_number(row.chi_receiver) << ","
         << format_number(row.chi_eve) << "," << format_number(row.p_min)
         << "," << format_number(row.disturbance) << "\n";
    }
    return os.str();
  }
  os << "check,left,right,slack,tolerance,verdict,seed,detail\n";
  for (const InequalityReport& c : r.checks) {
    std::string detail = c.detail;
    std::replace(detail.begin(), detail.end(), ',', ';');
    os << c.check << "," << format_number(c.left) << ","
       << format_number(c.right) << "," << format_number(c.slack()) << ","
       << format_number(c.tolerance) << "," << c.verdict() << "," << c.seed
       << "," << detail << "\n";
  }
  return os.str();
}

std::string render_text(const ReportFile& r) {
  std::ostringstream os;
  os << "qpriv " << r.command << " (v" << r.version << ")  seed=" << r.seed
     << "  config=" << r.config_hash << "\n";
  if (!r.privacy.empty()) {
    os << "\nper-leg privacy (receiver/eve figures are holevo proxies):\n";
    for (const LegPrivacy& p : r.privacy) {
      os << "  leg " << p.leg << ": chi_receiver=" << format_number(p.chi_receiver)
         << " chi_eve=" << format_number(p.chi_eve)
         << " p_min=" << format_number(p.p_min)
         << " coherent_info=" << format_number(p.coherent_info)
         << " privacy_lower_bound=" << format_number(p.privacy_lower_bound)
         << "\n";
    }
  }
  if (!r.sweep.empty()) {
    os << "\n  param      coherent_info   chi_receiver    chi_eve         "
          "p_min           disturbance\n";
    for (const SweepRow& row : r.sweep) {
      char line[160];
      std::snprintf(line, sizeof(line),
                    "  %-10.4g %-15.9g %-15.9g %-15.9g %-15.9g %-15.9g\n",
                    row.param, row.coherent_info, row.chi_receiver, row.chi_eve,
                    row.p_min, row.disturbance);
      os << line;
    }
  }
  if (!r.checks.empty()) {
    os << "\nchecks:\n";
    std::map<std::string, std::pair<int, int>> counts;  // name -> {run, fail}
    for (const InequalityReport& c : r.checks) {
      auto& entry = counts[c.check];
      ++entry.first;
      if (!c.passes()) ++entry.second;
    }
    const auto slacks = r.min_slack_by_check();
    for (const auto& [name, entry] : counts) {
      os << "  " << name << ": " << entry.first << " run, " << entry.second
         << " failed, min slack " << format_number(slacks.at(name)) << "\n";
    }
    for (const InequalityReport& c : r.checks) {
      if (!c.passes()) {
        os << "  FAIL " << c.check << " left=" << format_number(c.left)
           << " right=" << format_number(c.right)
           << " slack=" << format_number(c.slack()) << " seed=" << c.seed
           << " " << c.detail << "\n";
      }
    }
  }
  os << "\nVERDICT: " << (r.failures() == 0 ? "PASS" : "FAIL") << " ("
     << r.checks.size() << " checks, " << r.failures() << " failures)\n";
  return os.str();
}

}  // namespace

Tolerances RunConfig::tolerances() const {
  Tolerances tol;
  tol.inequality_slack = tolerance;
  return tol;
}

int ReportFile::failures() const {
  int n = 0;
  for (const InequalityReport& c : checks) {
    if (!c.passes()) ++n;
  }
  return n;
}

std::map<std::string, double> ReportFile::min_slack_by_check() const {
  std::map<std::string, double> out;
  for (const InequalityReport& c : checks) {
    const auto it = out.find(c.check);
    if (it == out.end() || c.slack() < it->second) out[c.check] = c.slack();
  }
  return out;
}

const std::vector<std::string>& known_check_families() {
  static const std::vector<std::string> families = {
      "entropy",   "holevo-identity", "exclusivity",
      "multiparty", "monogamy",        "eof-tradeoff",
      "squared",   "tradeoffs",       "disturbance"};
  return families;
}

void validate(const RunConfig& cfg) {
  if (cfg.trials < 1) {
    throw ValidationError("trials must be >= 1");
  }
  if (!(cfg.tolerance > 0.0) || !(cfg.eof_tolerance > 0.0)) {
    throw ValidationError("tolerance must be positive");
  }
  if (cfg.env_dim < 1) {
    throw ValidationError("env-dim must be >= 1");
  }
  if (cfg.dims.empty()) {
    throw ValidationError("dims must name at least one subsystem");
  }
  for (int d : cfg.dims) {
    if (d < 1) throw ValidationError("dims entries must be >= 1");
  }
  if (cfg.command == Command::compute && cfg.scenario_path.empty()) {
    throw ValidationError("compute requires --scenario");
  }
  if (cfg.command == Command::verify) {
    for (const std::string& f : cfg.checks) {
      const auto& known = known_check_families();
      if (std::find(known.begin(), known.end(), f) == known.end()) {
        throw ValidationError("unknown check family '" + f + "'");
      }
      if (!family_fits(f, cfg.dims)) {
        throw ValidationError("check family '" + f +
                              "' is incompatible with the configured dims");
      }
    }
  }
  if (cfg.command == Command::sweep) {
    parse_range(cfg.sweep_range);
    static const std::vector<std::string> parametric = {
        "depolarizing", "amplitude-damping", "phase-damping", "bit-flip",
        "erasure"};
    if (std::find(parametric.begin(), parametric.end(), cfg.sweep_channel) ==
        parametric.end()) {
      throw ValidationError("sweep channel '" + cfg.sweep_channel +
                            "' has no scalar parameter");
    }
  }
}

ReportFile run(const RunConfig& cfg) {
  validate(cfg);
  ReportFile out;
  switch (cfg.command) {
    case Command::compute:
      out = run_compute(cfg);
      out.command = "compute";
      break;
    case Command::verify:
      out = run_verify(cfg);
      out.command = "verify";
      break;
    case Command::sweep:
      out = run_sweep(cfg);
      out.command = "sweep";
      break;
  }
  out.version = kVersion;
  out.seed = cfg.seed;
  out.config_hash = hex16(fnv1a(canonical_config(cfg)));
  return out;
}

std::string render(const ReportFile& report, ReportFormat format) {
  switch (format) {
    case ReportFormat::records:
      return render_records(report);
    case ReportFormat::table:
      return render_table(report);
    case ReportFormat::text:
      break;
  }
  return render_text(report);
}

int exit_status(const ReportFile& report) {
  return report.failures() == 0 ? 0 : 1;
}

}  // namespace qpriv
