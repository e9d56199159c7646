// qpriv: batch front door for privacy computations over noisy channels.
//
//   qpriv compute --scenario FILE [--out FILE] [--format text|records|table]
//   qpriv verify  [--trials N] [--seed S] [--dims a,b,c] [--env-dim k]
//                 [--checks LIST] [--tolerance t] [--out FILE] [--format F]
//   qpriv sweep   --channel KIND --range START:STOP:STEP [--out FILE] ...
//
// Exit status: 0 all checks pass, 1 at least one inequality failed,
// 2 usage or configuration error.

#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "qpriv/harness.hpp"

namespace {

void add_common(CLI::App* cmd, qpriv::RunConfig& cfg, std::string& format) {
  cmd->add_option("--seed", cfg.seed, "Master seed, recorded in every output");
  cmd->add_option("--tolerance", cfg.tolerance, "Inequality slack tolerance");
  cmd->add_option("--out", cfg.out_path, "Write the rendered report here");
  cmd->add_option("--format", format, "Report format")
      ->check(CLI::IsMember({"text", "records", "table"}));
}

qpriv::ReportFormat parse_format(const std::string& name) {
  if (name == "records") return qpriv::ReportFormat::records;
  if (name == "table") return qpriv::ReportFormat::table;
  return qpriv::ReportFormat::text;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"quantum privacy computations and inequality verification"};
  app.require_subcommand(1);

  qpriv::RunConfig cfg;
  std::string format = "text";

  CLI::App* compute = app.add_subcommand(
      "compute", "Evaluate one scenario file: per-leg privacy plus every "
                 "applicable inequality check");
  compute->add_option("--scenario", cfg.scenario_path, "Scenario file (JSON)")
      ->required();
  add_common(compute, cfg, format);

  CLI::App* verify = app.add_subcommand(
      "verify", "Monte Carlo verification of the privacy inequalities on "
                "random scenarios");
  verify->add_option("--trials", cfg.trials, "Trials per check family");
  verify->add_option("--dims", cfg.dims, "Subsystem dimensions, e.g. 2,2,2")
      ->delimiter(',');
  verify->add_option("--env-dim", cfg.env_dim,
                     "Largest random-channel environment dimension");
  verify->add_option("--checks", cfg.checks, "Subset of check families")
      ->delimiter(',');
  add_common(verify, cfg, format);

  CLI::App* sweep = app.add_subcommand(
      "sweep", "Sweep a named channel parameter on a Bell leg");
  sweep->add_option("--channel", cfg.sweep_channel,
                    "Channel kind (depolarizing, amplitude-damping, "
                    "phase-damping, bit-flip, erasure)");
  sweep->add_option("--range", cfg.sweep_range, "START:STOP:STEP");
  add_common(sweep, cfg, format);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  if (compute->parsed()) cfg.command = qpriv::Command::compute;
  if (verify->parsed()) cfg.command = qpriv::Command::verify;
  if (sweep->parsed()) cfg.command = qpriv::Command::sweep;
  cfg.format = parse_format(format);

  try {
    const qpriv::ReportFile report = qpriv::run(cfg);
    const std::string rendered = qpriv::render(report, cfg.format);
    if (!cfg.out_path.empty()) {
      std::ofstream out(cfg.out_path);
      if (!out) {
        std::cerr << "error: cannot write '" << cfg.out_path << "'\n";
        return 2;
      }
      out << rendered;
      std::cout << "report written to " << cfg.out_path << " ("
                << report.checks.size() << " checks, " << report.failures()
                << " failures)\n";
    } else {
      std::cout << rendered;
    }
    return qpriv::exit_status(report);
  } catch (const qpriv::ValidationError& err) {
    std::cerr << "error: " << err.what() << "\n";
    return 2;
  } catch (const qpriv::DimensionError& err) {
    std::cerr << "error: " << err.what() << "\n";
    return 2;
  } catch (const std::exception& err) {
    std::cerr << "error: " << err.what() << "\n";
    return 2;
  }
}
