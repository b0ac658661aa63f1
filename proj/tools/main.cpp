// Command-line front end: verify the cycle-space properties, export
// trajectories, or drive a single checker with explicit parameters.

#include <clocale>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "gaugeflow/checkers.hpp"
#include "gaugeflow/cli.hpp"
#include "gaugeflow/config.hpp"

namespace {

struct CommonOpts {
  std::string config_path;
  std::string format = "text";
  std::string out_path;
  std::optional<std::uint64_t> seed;
};

void add_common(CLI::App* cmd, CommonOpts& c) {
  cmd->add_option("--config", c.config_path, "configuration file path");
  cmd->add_option("--format", c.format, "output format")
      ->check(CLI::IsMember({"text", "json"}));
  cmd->add_option("--out", c.out_path, "write output to this path");
  cmd->add_option("--seed", c.seed, "override the configured sampler seed");
}

gaugeflow::RunConfig load(const CommonOpts& c) {
  gaugeflow::RunConfig cfg;
  if (!c.config_path.empty()) cfg = gaugeflow::load_config(c.config_path);
  if (c.seed) cfg.seed = *c.seed;
  return cfg;
}

// Runs fn with output directed at --out or stdout; unwritable paths exit 2.
template <typename Fn>
int with_output(const CommonOpts& c, Fn&& fn) {
  if (c.out_path.empty()) return fn(std::cout);
  std::ofstream file(c.out_path);
  if (!file) {
    std::cerr << "cannot open output path '" << c.out_path << "'\n";
    return 2;
  }
  return fn(file);
}

}  // namespace

int main(int argc, char** argv) {
  std::setlocale(LC_ALL, "C");
  CLI::App app{"switching-cycle gauge space: property verification and export"};
  app.require_subcommand(1);

  CommonOpts verify_opts;
  CLI::App* verify = app.add_subcommand("verify", "run all property checkers");
  add_common(verify, verify_opts);

  CommonOpts orbit_opts;
  std::string orbit_family = "X";
  double orbit_phase = 0.0, orbit_t0 = 0.0, orbit_t1 = 1.0, orbit_dt = 0.1;
  CLI::App* orbit = app.add_subcommand("orbit", "sample a solution trajectory as CSV");
  orbit->add_option("--family", orbit_family, "solution family (X or X0)");
  orbit->add_option("--phase", orbit_phase, "solution phase");
  orbit->add_option("--t0", orbit_t0, "start time")->required();
  orbit->add_option("--t1", orbit_t1, "end time")->required();
  orbit->add_option("--dt", orbit_dt, "time step")->required();
  add_common(orbit, orbit_opts);

  CommonOpts probe_opts;
  gaugeflow::cli::ProbeParams probe;
  std::string gauge_list;
  CLI::App* probe_cmd = app.add_subcommand("probe", "run one checker directly");
  probe_cmd->add_option("kind", probe.kind, "transitivity|density|sensitivity|equicontinuity")
      ->required()
      ->check(CLI::IsMember({"transitivity", "density", "sensitivity", "equicontinuity"}));
  probe_cmd->add_option("--c1-family", probe.c1_family);
  probe_cmd->add_option("--c1-phase", probe.c1_phase);
  probe_cmd->add_option("--c1-time", probe.c1_time);
  probe_cmd->add_option("--c1-radius", probe.c1_radius);
  probe_cmd->add_option("--c2-family", probe.c2_family);
  probe_cmd->add_option("--c2-phase", probe.c2_phase);
  probe_cmd->add_option("--c2-time", probe.c2_time);
  probe_cmd->add_option("--c2-radius", probe.c2_radius);
  probe_cmd->add_option("--x0-phase", probe.x0_phase);
  probe_cmd->add_option("--gauges", gauge_list, "constraints as 't:eps,t:eps,...'");
  probe_cmd->add_option("--resolution", probe.resolution);
  probe_cmd->add_option("--center-family", probe.center_family);
  probe_cmd->add_option("--center-phase", probe.center_phase);
  probe_cmd->add_option("--nbhd-time", probe.nbhd_time);
  probe_cmd->add_option("--nbhd-radius", probe.nbhd_radius);
  probe_cmd->add_option("--eps0", probe.eps0);
  add_common(probe_cmd, probe_opts);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);  // prints the message or the help text
    return rc == 0 ? 0 : 2;     // bad arguments exit 2, --help exits 0
  }

  try {
    if (*verify) {
      const gaugeflow::RunConfig cfg = load(verify_opts);
      return with_output(verify_opts, [&](std::ostream& out) {
        return gaugeflow::cli::verify(cfg, verify_opts.format == "json", out);
      });
    }
    if (*orbit) {
      const gaugeflow::RunConfig cfg = load(orbit_opts);
      return with_output(orbit_opts, [&](std::ostream& out) {
        return gaugeflow::cli::orbit(cfg, orbit_family, orbit_phase, orbit_t0,
                                     orbit_t1, orbit_dt, out, std::cerr);
      });
    }
    const gaugeflow::RunConfig cfg = load(probe_opts);
    if (!gauge_list.empty()) probe.gauges = gaugeflow::cli::parse_gauge_list(gauge_list);
    if (probe.kind == "density" && probe.gauges.empty())
      probe.gauges = {{0.0, 0.01}};
    return with_output(probe_opts, [&](std::ostream& out) {
      return gaugeflow::cli::probe(cfg, probe, probe_opts.format == "json", out);
    });
  } catch (const gaugeflow::ConfigParse& e) {
    std::cerr << "config parse error: " << e.what() << "\n";
  } catch (const gaugeflow::ConfigValue& e) {
    std::cerr << "config value error: " << e.what() << "\n";
  } catch (const gaugeflow::GeometryInvalid& e) {
    std::cerr << "geometry error: " << e.what() << "\n";
  } catch (const gaugeflow::PeriodMismatch& e) {
    std::cerr << "geometry error: " << e.what()
              << " (set [flags] allow_asymmetric = true to admit it)\n";
  } catch (const gaugeflow::BadWitnessPoint& e) {
    std::cerr << "parameter error: " << e.what() << "\n";
  } catch (const gaugeflow::NotApplicable& e) {
    std::cerr << "parameter error: " << e.what() << "\n";
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
  }
  return 2;
}
