#include "hankel_fh/cli/commands.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <functional>
#include <numbers>
#include <sstream>
#include <thread>

namespace hankel_fh::cli {

namespace {

using nlohmann::json;
using Complex = std::complex<double>;

constexpr double kPi = std::numbers::pi;

double wrap_phase(double p) {
  double r = std::remainder(p, 2.0 * kPi);
  if (r <= -kPi) r += 2.0 * kPi;
  return r;
}

// Runs f(i) for i < count on a small pool; results land in index order and the
// first failing index (in order, not completion time) rethrows.
template <class T>
std::vector<T> parallel_map(std::size_t count, const std::function<T(std::size_t)>& f) {
  std::vector<T> out(count);
  std::vector<std::exception_ptr> errors(count);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < count; i = next++) {
      try {
        out[i] = f(i);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  const unsigned hw = std::max(1u, std::thread::hardware_concurrency());
  const std::size_t workers = std::min<std::size_t>(hw, count);
  std::vector<std::thread> pool;
  for (std::size_t i = 1; i < workers; ++i) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return out;
}

json certificate_json(const equilibrium::RegularityCertificate& r) {
  return {{"certified", r.certified},
          {"psi_min_on_support", r.psi_min_on_support},
          {"psi_min_location", r.psi_min_location},
          {"psi_at_minus_one", r.psi_at_minus_one},
          {"psi_at_plus_one", r.psi_at_plus_one},
          {"exterior_margin", r.exterior_margin},
          {"exterior_margin_location", r.exterior_margin_location},
          {"tail_margin", r.tail_margin},
          {"x_max", r.x_max},
          {"tail_max", r.tail_max},
          {"grid_size", r.grid_size},
          {"exterior_grid_size", r.exterior_grid_size},
          {"mass", r.mass},
          {"variational_residual", r.variational_residual}};
}

json rescaling_json(const Problem& p) {
  if (!p.rescaled) return nullptr;
  const auto& r = *p.rescaled;
  return {{"support", {r.original.a, r.original.b}},
          {"center", r.original.center()},
          {"half_length", r.original.half_length()},
          {"potential_on_unit_interval", r.v.coeffs()},
          {"singularities_on_unit_interval", r.t},
          {"log_det_correction", "(n^2 + n*A) * log((b - a)/2)"},
          {"log_half_length", std::log(r.original.half_length())}};
}

Report base_report(const ExperimentConfig& c, const std::string& command) {
  Report r;
  r.config = to_json(c);
  r.summary["command"] = command;
  return r;
}

struct Predicted {
  Complex value;
  double error_scale = 0.0;
};

struct OracleRow {
  oracle::HankelResult result;
  Complex correction;
};

Predicted predicted_row(const asymptotics::ExpansionCoefficients& coeffs, const Problem& p, int n) {
  const auto pr = asymptotics::predict_log_hankel(coeffs, n);
  return {pr.value + p.log_det_correction(n), pr.error_scale};
}

json predicted_json(const asymptotics::ExpansionCoefficients& coeffs, const Predicted& pr, int n) {
  const double nn = n;
  return {{"n", n},
          {"log_abs", pr.value.real()},
          {"phase", wrap_phase(pr.value.imag())},
          {"phase_unwrapped", pr.value.imag()},
          {"value", complex_json(pr.value)},
          {"error_scale", pr.error_scale},
          {"terms",
           {{"C1", complex_json(coeffs.C1)},
            {"C2", complex_json(coeffs.C2)},
            {"C3", complex_json(coeffs.C3)},
            {"C4", complex_json(coeffs.C4)}}},
          {"contributions",
           {{"C1 n^2", complex_json(coeffs.C1 * nn * nn)},
            {"C2 n", complex_json(coeffs.C2 * nn)},
            {"C3 log n", complex_json(coeffs.C3 * std::log(nn))},
            {"C4", complex_json(coeffs.C4)}}}};
}

json coefficients_json(const asymptotics::ExpansionCoefficients& coeffs) {
  json breakdown = json::array();
  for (const auto& t : coeffs.term_breakdown) {
    breakdown.push_back({{"coefficient", t.coefficient}, {"label", t.label}, {"value", complex_json(t.value)}});
  }
  return {{"C1", complex_json(coeffs.C1)},
          {"C2", complex_json(coeffs.C2)},
          {"C3", complex_json(coeffs.C3)},
          {"C4", complex_json(coeffs.C4)},
          {"beta_max", coeffs.beta_max},
          {"term_breakdown", breakdown}};
}

std::vector<OracleRow> oracle_rows(const ExperimentConfig& c, const Problem& p) {
  return parallel_map<OracleRow>(c.n_list.size(), [&](std::size_t i) {
    const int n = c.n_list[i];
    oracle::WeightSpec ws{p.v, p.w, p.cfg, n};
    const auto bits = precision_for(c, n);
    return OracleRow{oracle::oracle_log_det(ws, bits, c.method), p.log_det_correction(n)};
  });
}

json oracle_json(const OracleRow& o) {
  const auto& r = o.result;
  json j{{"n", r.n},
         {"precision_bits", r.precision_bits},
         {"method", oracle::to_string(r.method)},
         {"converged", r.converged},
         {"is_zero", r.is_zero},
         {"precision_delta", r.precision_delta}};
  if (r.is_zero) {
    j["log_abs"] = nullptr;
    j["phase"] = nullptr;
    j["phase_unwrapped"] = nullptr;
  } else {
    j["log_abs"] = r.log_abs + o.correction.real();
    j["phase"] = wrap_phase(r.phase + o.correction.imag());
    j["phase_unwrapped"] = r.phase_unwrapped + o.correction.imag();
  }
  if (o.correction != Complex(0.0)) j["rescale_correction"] = complex_json(o.correction);
  return j;
}

}  // namespace

json complex_json(Complex z) { return {{"re", z.real()}, {"im", z.imag()}}; }

int exit_code_for(const Error& e) {
  switch (e.kind()) {
    case ErrorKind::kDomain:
    case ErrorKind::kRegularity:
    case ErrorKind::kHypothesis:
      return kExitInvalid;
    case ErrorKind::kResolution:
    case ErrorKind::kInconsistency:
    case ErrorKind::kConvergence:
      return kExitNumerical;
  }
  return kExitNumerical;
}

std::optional<DecayFit> fit_decay(const std::vector<int>& n, const std::vector<double>& residual) {
  std::vector<double> lx, ly;
  for (std::size_t i = 0; i < n.size() && i < residual.size(); ++i) {
    if (residual[i] > 0.0 && std::isfinite(residual[i]) && n[i] > 0) {
      lx.push_back(std::log(static_cast<double>(n[i])));
      ly.push_back(std::log(residual[i]));
    }
  }
  if (lx.size() < 3) return std::nullopt;
  const double k = static_cast<double>(lx.size());
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < lx.size(); ++i) {
    sx += lx[i];
    sy += ly[i];
    sxx += lx[i] * lx[i];
    sxy += lx[i] * ly[i];
  }
  const double den = k * sxx - sx * sx;
  if (!(std::abs(den) > 0.0)) return std::nullopt;
  const double slope = (k * sxy - sx * sy) / den;
  const double intercept = (sy - slope * sx) / k;
  return DecayFit{-slope, std::exp(intercept)};
}

Report cmd_eqmeasure(const ExperimentConfig& c) {
  Report r = base_report(c, "eqmeasure");
  const Problem p = build_problem(c);
  const auto m = equilibrium::equilibrium_measure(p.v);
  for (std::size_t k = 0; k < m.psi.size(); ++k) {
    r.rows.push_back({{"k", k}, {"psi_k", m.psi.coeffs()[k]}});
  }
  r.summary["psi_chebyshev_t"] = m.psi.coeffs();
  r.summary["ell"] = m.ell;
  r.summary["certificate"] = certificate_json(m.regularity);
  r.summary["rescaling"] = rescaling_json(p);
  return r;
}

Report cmd_predict(const ExperimentConfig& c) {
  Report r = base_report(c, "predict");
  const Problem p = build_problem(c);
  const auto m = equilibrium::equilibrium_measure(p.v);
  const auto coeffs = asymptotics::compute_coefficients(p.v, m, p.w, p.cfg);
  for (int n : c.n_list) {
    if (n < 1) throw DomainError("predict: n must be at least 1");
    r.rows.push_back(predicted_json(coeffs, predicted_row(coeffs, p, n), n));
  }
  r.summary["coefficients"] = coefficients_json(coeffs);
  r.summary["rescaling"] = rescaling_json(p);
  return r;
}

Report cmd_oracle(const ExperimentConfig& c) {
  Report r = base_report(c, "oracle");
  const Problem p = build_problem(c);
  const auto rows = oracle_rows(c, p);
  int unconverged = 0, zeros = 0;
  for (const auto& o : rows) {
    r.rows.push_back(oracle_json(o));
    unconverged += o.result.converged ? 0 : 1;
    zeros += o.result.is_zero ? 1 : 0;
  }
  r.summary["unconverged"] = unconverged;
  r.summary["zero_determinants"] = zeros;
  r.summary["rescaling"] = rescaling_json(p);
  if (unconverged > 0) r.exit_code = kExitNumerical;
  return r;
}

Report cmd_compare(const ExperimentConfig& c) {
  Report r = base_report(c, "compare");
  const Problem p = build_problem(c);
  const auto m = equilibrium::equilibrium_measure(p.v);
  const auto coeffs = asymptotics::compute_coefficients(p.v, m, p.w, p.cfg);
  const auto rows = oracle_rows(c, p);

  std::vector<int> fit_n;
  std::vector<double> fit_r;
  int unconverged = 0;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const int n = c.n_list[i];
    const Predicted pr = predicted_row(coeffs, p, n);
    const auto& o = rows[i];
    unconverged += o.result.converged ? 0 : 1;
    json row{{"n", n},
             {"predicted", {{"log_abs", pr.value.real()}, {"phase", wrap_phase(pr.value.imag())}}},
             {"oracle", oracle_json(o)},
             {"error_scale", pr.error_scale}};
    if (o.result.is_zero) {
      row["residual"] = nullptr;
      row["winding"] = nullptr;
    } else {
      const double o_abs = o.result.log_abs + o.correction.real();
      const double o_phase = o.result.phase + o.correction.imag();
      const double d_abs = pr.value.real() - o_abs;
      const double d_phase = wrap_phase(pr.value.imag() - o_phase);
      const double norm = std::hypot(d_abs, d_phase);
      row["residual"] = {{"log_abs", std::abs(d_abs)}, {"phase", std::abs(d_phase)}, {"norm", norm}};
      row["winding"] = std::lround((pr.value.imag() - o_phase - d_phase) / (2.0 * kPi));
      fit_n.push_back(n);
      fit_r.push_back(norm);
    }
    r.rows.push_back(row);
  }
  const auto fit = fit_decay(fit_n, fit_r);
  r.summary["decay_exponent"] = fit ? json(fit->exponent) : json(nullptr);
  r.summary["fit_constant"] = fit ? json(fit->constant) : json(nullptr);
  r.summary["fit_points"] = fit_n.size();
  r.summary["beta_max"] = coeffs.beta_max;
  r.summary["theoretical_lower_bound"] = 1.0 - 4.0 * coeffs.beta_max;
  r.summary["unconverged"] = unconverged;
  r.summary["coefficients"] = coefficients_json(coeffs);
  if (unconverged > 0) r.exit_code = kExitNumerical;
  return r;
}

Report cmd_thinning(const ExperimentConfig& c) {
  Report r = base_report(c, "thinning");
  const Problem p = build_problem(c);
  asymptotics::ThinningSpec spec = thinning_spec(c);
  if (p.rescaled) {
    for (double& t : spec.boundaries) t = p.rescaled->to_unit(t);
  }
  const auto m = equilibrium::equilibrium_measure(p.v);
  const auto tb = asymptotics::thinning_to_betas(spec);
  const bool sample = c.mc_samples > 0;
  if (sample && !(p.v.is_gaussian() && !p.rescaled)) {
    throw DomainError("thinning: Monte Carlo sampling is implemented for V = 2x^2 on [-1,1] only");
  }

  struct Row {
    asymptotics::GapProbability gap;
    std::optional<oracle::McEstimate> mc;
  };
  const auto rows = parallel_map<Row>(c.n_list.size(), [&](std::size_t i) {
    const int n = c.n_list[i];
    Row row{asymptotics::gap_probability_log(p.v, m, spec, n), std::nullopt};
    if (sample) row.mc = oracle::mc_gap_probability(spec, n, c.mc_samples, c.seed, 1);
    return row;
  });
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const auto& row = rows[i];
    json j{{"n", c.n_list[i]},
           {"log_gap_probability", row.gap.log_value},
           {"gap_probability", std::exp(row.gap.log_value)},
           {"error_scale", row.gap.error_scale}};
    if (row.mc) {
      j["mc"] = {{"estimate", row.mc->estimate},
                 {"standard_error", row.mc->standard_error},
                 {"samples", row.mc->samples}};
    }
    r.rows.push_back(j);
  }
  json betas = json::array();
  for (const auto& b : tb.betas) betas.push_back(complex_json(b));
  r.summary["betas"] = betas;
  r.summary["log_prefactor_per_eigenvalue"] = tb.log_prefactor;
  r.summary["prefactor_per_eigenvalue"] = std::exp(tb.log_prefactor);
  r.summary["boundaries_on_unit_interval"] = spec.boundaries;
  r.summary["rescaling"] = rescaling_json(p);
  return r;
}

Report run_command(const std::string& name, const ExperimentConfig& c) {
  if (name == "eqmeasure") return cmd_eqmeasure(c);
  if (name == "predict") return cmd_predict(c);
  if (name == "oracle") return cmd_oracle(c);
  if (name == "compare") return cmd_compare(c);
  if (name == "thinning") return cmd_thinning(c);
  throw ConfigError("unknown command '" + name + "'");
}

json to_json(const Report& r) {
  json j;
  j["config"] = r.config;
  j["rows"] = r.rows;
  j["summary"] = r.summary;
  return j;
}

namespace {

void flatten(const json& v, const std::string& prefix, std::vector<std::pair<std::string, std::string>>& out) {
  if (v.is_object()) {
    for (const auto& [k, x] : v.items()) flatten(x, prefix.empty() ? k : prefix + "." + k, out);
    return;
  }
  std::string s;
  if (v.is_null()) {
    s = "";
  } else if (v.is_string()) {
    s = v.get<std::string>();
    if (s.find_first_of(",\"\n") != std::string::npos) {
      std::string q = "\"";
      for (char ch : s) q += ch == '"' ? std::string("\"\"") : std::string(1, ch);
      s = q + "\"";
    }
  } else if (v.is_array()) {
    s = "\"" + v.dump() + "\"";
  } else {
    s = v.dump();
  }
  out.emplace_back(prefix, s);
}

}  // namespace

std::string render(const Report& r, Format f) {
  if (f == Format::kJson) return to_json(r).dump(2) + "\n";
  std::vector<std::string> columns;
  std::vector<std::vector<std::pair<std::string, std::string>>> cells;
  for (const auto& row : r.rows) {
    std::vector<std::pair<std::string, std::string>> flat;
    flatten(row, "", flat);
    for (const auto& [k, v] : flat) {
      if (std::find(columns.begin(), columns.end(), k) == columns.end()) columns.push_back(k);
    }
    cells.push_back(std::move(flat));
  }
  std::ostringstream out;
  for (std::size_t i = 0; i < columns.size(); ++i) out << (i ? "," : "") << columns[i];
  out << "\n";
  for (const auto& flat : cells) {
    for (std::size_t i = 0; i < columns.size(); ++i) {
      if (i) out << ",";
      for (const auto& [k, v] : flat) {
        if (k == columns[i]) {
          out << v;
          break;
        }
      }
    }
    out << "\n";
  }
  return out.str();
}

}  // namespace hankel_fh::cli
