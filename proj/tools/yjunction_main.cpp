// yjunction: Y-junction and double-junction ring scattering from the command line.
//
//   yjunction junction --config run.json --k 1.5
//   yjunction ring     --config run.json --k 3.14159
//   yjunction sweep    --config run.json --k-min 0.1 --k-max 10 --n 500 --out spectrum.csv
//   yjunction find     --config run.json --k-min 0.1 --k-max 10 --kind reflection
//   yjunction check    --config run.json

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "yjunction/commands.hpp"
#include "yjunction/errors.hpp"

namespace {

struct Options {
  std::string config;
  std::string out;
  std::optional<double> k, k_min, k_max, tol, xi;
  std::optional<int> n, scan_n;
  std::optional<std::string> kind, junction, orientation;
};

void add_common(CLI::App* sub, Options& o) {
  sub->add_option("--config", o.config, "JSON configuration file")->required();
  sub->add_option("--out", o.out, "write output to this path instead of stdout");
  sub->add_option("--k", o.k, "wavenumber");
  sub->add_option("--k-min", o.k_min, "lower end of the wavenumber range");
  sub->add_option("--k-max", o.k_max, "upper end of the wavenumber range");
  sub->add_option("--n", o.n, "number of sweep points");
  sub->add_option("--tol", o.tol, "resonance acceptance threshold on the probability");
  sub->add_option("--kind", o.kind, "transmission | reflection");
  sub->add_option("--junction", o.junction, "junction name (junction command)");
  sub->add_option("--xi", o.xi, "node position (junction command)");
  sub->add_option("--orientation", o.orientation, "in | out (junction command)");
  sub->add_option("--scan-n", o.scan_n, "scan points for resonance bracketing");
}

// Command-line flags override the task block of the file.
void apply_overrides(const Options& o, yjunction::Config& cfg) {
  using namespace yjunction;
  Task& t = cfg.task;
  if (o.k) t.k = o.k;
  if (o.k_min) t.k_min = o.k_min;
  if (o.k_max) t.k_max = o.k_max;
  if (o.n) t.n = o.n;
  if (o.tol) t.tol = o.tol;
  if (o.kind) t.kind = parse_kind(*o.kind, "--kind");
  if (o.junction) {
    cfg.junction(*o.junction);
    t.junction = o.junction;
  }
  if (o.xi) t.xi = o.xi;
  if (o.orientation) t.orientation = parse_orientation(*o.orientation, "--orientation");
  if (o.scan_n) t.scan_n = o.scan_n;
}

}  // namespace

int main(int argc, char** argv) {
  using namespace yjunction;

  CLI::App app{"Scattering in Y-junctions and double Y-junction rings"};
  app.require_subcommand(1);
  Options opts;
  using Command = int (*)(const Config&, std::ostream&, std::ostream&);
  const std::pair<const char*, Command> commands[] = {
      {"junction", cmd_junction}, {"ring", cmd_ring},   {"sweep", cmd_sweep},
      {"find", cmd_find},         {"check", cmd_check},
  };
  const char* descriptions[] = {
      "S-matrix and probability table of one junction",
      "ring amplitudes A..F at one wavenumber",
      "CSV spectrum over a wavenumber grid",
      "locate perfect transmission / reflection",
      "run the invariant suite; exit 1 on any violation",
  };
  std::vector<CLI::App*> subs;
  for (std::size_t i = 0; i < std::size(commands); ++i) {
    subs.push_back(app.add_subcommand(commands[i].first, descriptions[i]));
    add_common(subs.back(), opts);
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitConfigError;
  }

  try {
    Config cfg = load_config(opts.config);
    apply_overrides(opts, cfg);
    for (std::size_t i = 0; i < subs.size(); ++i) {
      if (!subs[i]->parsed()) continue;
      if (opts.out.empty()) return commands[i].second(cfg, std::cout, std::cerr);
      std::ofstream file(opts.out, std::ios::binary);
      if (!file) {
        std::cerr << "error: cannot open '" << opts.out << "' for writing\n";
        return kExitConfigError;
      }
      return commands[i].second(cfg, file, std::cerr);
    }
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return kExitConfigError;
  } catch (const DegenerateRingError& e) {
    std::cerr << "degenerate ring: " << e.what() << '\n';
    return kExitDegenerate;
  } catch (const ConvergenceError& e) {
    std::cerr << "no convergence: " << e.what() << '\n';
    return kExitNoConvergence;
  } catch (const std::invalid_argument& e) {
    std::cerr << "invalid argument: " << e.what() << '\n';
    return kExitConfigError;
  }
  return kExitConfigError;
}
