#pragma once

// Experiment configuration: a flat key = value text format (see docs/config.md)
// and its JSON image.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "hankel_fh/asymptotics.hpp"
#include "hankel_fh/equilibrium.hpp"
#include "hankel_fh/errors.hpp"
#include "hankel_fh/oracle.hpp"

namespace hankel_fh::cli {

/// Malformed or inconsistent configuration; mapped to exit code 2.
class ConfigError : public DomainError {
 public:
  using DomainError::DomainError;
};

enum class Basis { kChebyshev, kMonomial };
enum class Format { kJson, kCsv };

struct ExperimentConfig {
  std::vector<double> potential{0.0, 0.0, 2.0};
  std::optional<equilibrium::Interval> support;
  std::vector<double> w;
  Basis w_basis = Basis::kChebyshev;
  std::vector<asymptotics::Singularity> singularities;
  double separation = asymptotics::kDefaultSeparation;
  std::vector<int> n_list;
  std::optional<long> precision;
  Format format = Format::kJson;
  std::uint64_t seed = 0;
  long mc_samples = 0;
  oracle::Method method = oracle::Method::kMomentDeterminant;
  std::vector<double> thinning_boundaries;
  std::map<int, double> thinning_s;

  bool operator==(const ExperimentConfig&) const;
};

/// Parse the key = value format. `source` names the input in messages, which
/// read "<source>:<line>: <key>: <problem>".
ExperimentConfig parse_config(const std::string& text, const std::string& source = "config");
ExperimentConfig load_config(const std::string& path);

/// Set one key as if it were given in the file (flags use this); `key` also
/// names the origin in messages.
ExperimentConfig with_override(ExperimentConfig c, const std::string& key, const std::string& value);

nlohmann::json to_json(const ExperimentConfig& c);
/// Inverse of to_json; ConfigError on a malformed document.
ExperimentConfig config_from_json(const nlohmann::json& j);

std::string to_string(Format f);
std::string to_string(Basis b);

/// The problem on [-1,1] described by a config, with the rescaling data if an
/// original support was given.
struct Problem {
  equilibrium::Potential v;
  asymptotics::FieldW w;
  asymptotics::SingularityConfig cfg;
  std::optional<equilibrium::RescaledProblem> rescaled;

  /// (n^2 + n A) log((b-a)/2), zero without rescaling.
  std::complex<double> log_det_correction(int n) const;
};

/// Throws DomainError / HypothesisViolation from the domain types.
Problem build_problem(const ExperimentConfig& c);

asymptotics::ThinningSpec thinning_spec(const ExperimentConfig& c);

/// flag > config file > HANKEL_FH_PRECISION > default_precision_bits(n)
long precision_for(const ExperimentConfig& c, int n);

}  // namespace hankel_fh::cli
