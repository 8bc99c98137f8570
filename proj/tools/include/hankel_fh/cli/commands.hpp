#pragma once

// The five subcommands. Each returns a report {config, rows, summary}; the
// caller renders it and maps errors to exit codes.

#include <complex>
#include <optional>
#include <string>
#include <vector>

#include "hankel_fh/cli/config.hpp"

namespace hankel_fh::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInvalid = 2;
inline constexpr int kExitNumerical = 3;

struct Report {
  nlohmann::json config;
  nlohmann::json rows = nlohmann::json::array();
  nlohmann::json summary = nlohmann::json::object();
  /// kExitNumerical when some row did not converge
  int exit_code = kExitOk;
};

Report cmd_eqmeasure(const ExperimentConfig& c);
Report cmd_predict(const ExperimentConfig& c);
Report cmd_oracle(const ExperimentConfig& c);
Report cmd_compare(const ExperimentConfig& c);
Report cmd_thinning(const ExperimentConfig& c);

/// Dispatch by name; ConfigError for an unknown command.
Report run_command(const std::string& name, const ExperimentConfig& c);

nlohmann::json to_json(const Report& r);
/// JSON (pretty, 2 spaces) or CSV of the rows with flattened column names.
std::string render(const Report& r, Format f);

nlohmann::json complex_json(std::complex<double> z);

struct DecayFit {
  double exponent = 0.0;  ///< p in residual ~ c n^{-p}
  double constant = 0.0;  ///< c
};

/// Least squares on log residual vs log n; nullopt unless at least three
/// points with positive residuals.
std::optional<DecayFit> fit_decay(const std::vector<int>& n, const std::vector<double>& residual);

/// 2 for invalid input and hypothesis violations, 3 for numerical failures.
int exit_code_for(const Error& e);

}  // namespace hankel_fh::cli
