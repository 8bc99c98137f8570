#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "hankel_fh/cli/commands.hpp"

namespace {

using namespace hankel_fh;
using namespace hankel_fh::cli;

struct Flags {
  std::string config_path;
  std::string n;
  std::string precision;
  std::string format;
  std::string seed;
  std::string mc_samples;
  std::string out;
};

ExperimentConfig resolve(const Flags& f) {
  ExperimentConfig c = f.config_path.empty() ? ExperimentConfig{} : load_config(f.config_path);
  auto flag = [&](const std::string& value, const std::string& key, const std::string& name) {
    if (value.empty()) return;
    try {
      c = with_override(c, key, value);
    } catch (const ConfigError& e) {
      throw ConfigError(name + ": " + e.what());
    }
  };
  flag(f.n, "n", "--n");
  flag(f.precision, "precision", "--precision");
  flag(f.format, "format", "--format");
  flag(f.seed, "seed", "--seed");
  flag(f.mc_samples, "mc_samples", "--mc-samples");
  return c;
}

int run(const std::string& command, const Flags& f) {
  try {
    const ExperimentConfig c = resolve(f);
    const Report r = run_command(command, c);
    const std::string text = render(r, c.format);
    if (f.out.empty()) {
      std::cout << text;
    } else {
      std::ofstream out(f.out, std::ios::binary);
      if (!out) throw ConfigError(f.out + ": cannot open for writing");
      out << text;
    }
    if (r.exit_code == kExitNumerical) {
      std::cerr << "hankel_fh: " << r.summary.value("unconverged", 0)
                << " result(s) did not converge under the precision recheck\n";
    }
    return r.exit_code;
  } catch (const Error& e) {
    std::cerr << "hankel_fh: " << e.what() << "\n";
    return exit_code_for(e);
  } catch (const std::exception& e) {
    std::cerr << "hankel_fh: " << e.what() << "\n";
    return kExitNumerical;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hankel determinants with Fisher-Hartwig singularities: asymptotics and oracles"};
  app.require_subcommand(1);
  Flags flags;
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--config", flags.config_path, "key = value configuration file")
        ->check(CLI::ExistingFile);
    sub->add_option("--n", flags.n, "comma separated list of n");
    sub->add_option("--precision", flags.precision, "oracle precision in bits");
    sub->add_option("--format", flags.format, "json or csv");
    sub->add_option("--seed", flags.seed, "Monte Carlo seed (u64)");
    sub->add_option("--mc-samples", flags.mc_samples, "Monte Carlo samples (thinning; 0 = off)");
    sub->add_option("--out", flags.out, "output path (default stdout)");
  };
  const std::vector<std::pair<std::string, std::string>> commands = {
      {"eqmeasure", "equilibrium density, ell and the one-cut regularity certificate"},
      {"predict", "large-n prediction C1 n^2 + C2 n + C3 log n + C4 per n"},
      {"oracle", "extended-precision log-determinants per n"},
      {"compare", "prediction vs oracle with residual decay fit"},
      {"thinning", "thinned gap probabilities (optionally with Monte Carlo)"},
  };
  std::string chosen;
  for (const auto& [name, help] : commands) {
    auto* sub = app.add_subcommand(name, help);
    add_common(sub);
    sub->callback([&chosen, name = name] { chosen = name; });
  }
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kExitInvalid;
  }
  return run(chosen, flags);
}
