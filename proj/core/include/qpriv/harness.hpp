#pragma once

#include <map>
#include <string>
#include <vector>

#include "qpriv/io.hpp"
#include "qpriv/privacy.hpp"

namespace qpriv {

enum class Command { compute, verify, sweep };
enum class ReportFormat { text, records, table };

// Everything a run depends on. The master seed is recorded verbatim in every
// output; per-trial seeds derive from it by counter splitting.
struct RunConfig {
  Command command = Command::verify;
  std::string scenario_path;
  std::vector<int> dims{2, 2, 2};
  int env_dim = 2;
  int trials = 100;
  std::uint64_t seed = 1;
  double tolerance = 1e-8;
  double eof_tolerance = 1e-6;  // absorbs the measurement-optimizer grid
  std::string out_path;
  ReportFormat format = ReportFormat::text;
  std::vector<std::string> checks;  // empty = every applicable family
  std::string sweep_channel = "depolarizing";
  std::string sweep_range = "0:1:0.05";

  Tolerances tolerances() const;
};

struct SweepRow {
  double param = 0;
  Bits coherent_info = 0;
  Bits chi_receiver = 0;
  Bits chi_eve = 0;
  Bits p_min = 0;
  Bits disturbance = 0;
};

struct ReportFile {
  std::string version;
  std::string command;
  std::uint64_t seed = 0;
  std::string config_hash;
  std::vector<LegPrivacy> privacy;
  std::vector<InequalityReport> checks;
  std::vector<SweepRow> sweep;

  int failures() const;
  std::map<std::string, double> min_slack_by_check() const;
};

// Check families accepted by `verify --checks`.
const std::vector<std::string>& known_check_families();

// Throws ValidationError on an unusable configuration (bad trial count,
// tolerance, range, unknown check family, dims unfit for a requested family).
void validate(const RunConfig& cfg);

ReportFile run(const RunConfig& cfg);

std::string render(const ReportFile& report, ReportFormat format);

// 0 when every check passed, 1 otherwise.
int exit_status(const ReportFile& report);

}  // namespace qpriv
