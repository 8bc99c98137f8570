#include "hankel_fh/cli/config.hpp"

#include <cerrno>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <set>
#include <sstream>

namespace hankel_fh::cli {

namespace {

using nlohmann::json;

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::string cur;
  for (char ch : s) {
    if (ch == ',' || ch == ' ' || ch == '\t') {
      if (!cur.empty()) out.push_back(cur);
      cur.clear();
    } else {
      cur += ch;
    }
  }
  if (!cur.empty()) out.push_back(cur);
  return out;
}

struct Located {
  std::string where;  // "<source>:<line>: <key>"

  [[noreturn]] void fail(const std::string& msg) const { throw ConfigError(where + ": " + msg); }

  double real(const std::string& tok) const {
    errno = 0;
    char* end = nullptr;
    const double v = std::strtod(tok.c_str(), &end);
    if (tok.empty() || end != tok.c_str() + tok.size() || errno == ERANGE || !std::isfinite(v)) {
      fail("'" + tok + "' is not a finite number");
    }
    return v;
  }

  long integer(const std::string& tok) const {
    errno = 0;
    char* end = nullptr;
    const long v = std::strtol(tok.c_str(), &end, 10);
    if (tok.empty() || end != tok.c_str() + tok.size() || errno == ERANGE) {
      fail("'" + tok + "' is not an integer");
    }
    return v;
  }

  std::vector<double> reals(const std::string& value) const {
    std::vector<double> out;
    for (const auto& t : split_list(value)) out.push_back(real(t));
    return out;
  }
};

Basis parse_basis(const Located& at, const std::string& v) {
  if (v == "chebyshev") return Basis::kChebyshev;
  if (v == "monomial") return Basis::kMonomial;
  at.fail("expected chebyshev or monomial, got '" + v + "'");
}

Format parse_format(const Located& at, const std::string& v) {
  if (v == "json") return Format::kJson;
  if (v == "csv") return Format::kCsv;
  at.fail("expected json or csv, got '" + v + "'");
}

oracle::Method parse_method(const Located& at, const std::string& v) {
  if (v == "moment_determinant") return oracle::Method::kMomentDeterminant;
  if (v == "op_recurrence") return oracle::Method::kOpRecurrence;
  at.fail("expected moment_determinant or op_recurrence, got '" + v + "'");
}

void check_precision(const Located& at, long bits) {
  if (bits < 128 || bits > 1 << 20) at.fail("precision must lie in 128..1048576 bits");
}

void check_n(const Located& at, long n) {
  if (n < 1 || n > 100000) at.fail("n must be a positive integer, got " + std::to_string(n));
}

// Domain-level checks shared by the text and JSON readers; `line_of` maps a
// field to its location for messages.
void validate(const ExperimentConfig& c, const std::map<std::string, std::string>& line_of) {
  auto at = [&](const std::string& field) {
    const auto it = line_of.find(field);
    return Located{it == line_of.end() ? field : it->second};
  };
  try {
    equilibrium::Potential(c.potential);
  } catch (const Error& e) {
    at("potential").fail(e.what());
  }
  if (c.support && !(c.support->a < c.support->b)) at("support").fail("support must satisfy a < b");
  try {
    build_problem(c);
  } catch (const ConfigError&) {
    throw;
  } catch (const Error& e) {
    at(c.singularities.empty() ? "w" : "singularity").fail(e.what());
  }
  if (!c.thinning_boundaries.empty() || !c.thinning_s.empty()) {
    try {
      thinning_spec(c).validate();
    } catch (const Error& e) {
      at("thinning.s").fail(e.what());
    }
  }
}

void apply_key(ExperimentConfig& c, const std::string& key, const std::string& value,
               const Located& at) {
  if (key == "potential") {
    c.potential = at.reals(value);
  } else if (key == "support") {
    const auto v = at.reals(value);
    if (v.size() != 2) at.fail("expected two numbers a, b");
    c.support = equilibrium::Interval{v[0], v[1]};
  } else if (key == "w") {
    c.w = at.reals(value);
  } else if (key == "w_basis") {
    c.w_basis = parse_basis(at, value);
  } else if (key == "singularity") {
    const auto v = at.reals(value);
    if (v.size() != 5) at.fail("expected five numbers t, alpha_re, alpha_im, beta_re, beta_im");
    c.singularities.push_back({v[0], {v[1], v[2]}, {v[3], v[4]}});
  } else if (key == "separation") {
    c.separation = at.real(value);
    if (!(c.separation > 0.0)) at.fail("separation must be positive");
  } else if (key == "n") {
    c.n_list.clear();
    for (const auto& t : split_list(value)) {
      const long n = at.integer(t);
      check_n(at, n);
      c.n_list.push_back(static_cast<int>(n));
    }
  } else if (key == "precision") {
    const long bits = at.integer(value);
    check_precision(at, bits);
    c.precision = bits;
  } else if (key == "format") {
    c.format = parse_format(at, value);
  } else if (key == "seed") {
    errno = 0;
    char* end = nullptr;
    const unsigned long long s = std::strtoull(value.c_str(), &end, 10);
    if (end != value.c_str() + value.size() || errno == ERANGE || value[0] == '-') {
      at.fail("'" + value + "' is not an unsigned 64-bit integer");
    }
    c.seed = s;
  } else if (key == "mc_samples") {
    c.mc_samples = at.integer(value);
    if (c.mc_samples < 0) at.fail("mc_samples must be non-negative");
  } else if (key == "method") {
    c.method = parse_method(at, value);
  } else if (key == "thinning.boundaries") {
    c.thinning_boundaries = at.reals(value);
  } else if (key == "thinning.s") {
    for (const auto& item : split_list(value)) {
      const auto colon = item.find(':');
      if (colon == std::string::npos) at.fail("expected sector:probability, got '" + item + "'");
      const long k = at.integer(item.substr(0, colon));
      const double s = at.real(item.substr(colon + 1));
      if (!c.thinning_s.emplace(static_cast<int>(k), s).second) {
        at.fail("sector " + std::to_string(k) + " given twice");
      }
    }
  } else {
    at.fail("unknown key");
  }
}

}  // namespace

bool ExperimentConfig::operator==(const ExperimentConfig& o) const {
  auto same_support = [](const auto& a, const auto& b) {
    if (a.has_value() != b.has_value()) return false;
    return !a || (a->a == b->a && a->b == b->b);
  };
  if (singularities.size() != o.singularities.size()) return false;
  for (std::size_t j = 0; j < singularities.size(); ++j) {
    const auto& x = singularities[j];
    const auto& y = o.singularities[j];
    if (x.t != y.t || x.alpha != y.alpha || x.beta != y.beta) return false;
  }
  return potential == o.potential && same_support(support, o.support) && w == o.w &&
         w_basis == o.w_basis && separation == o.separation && n_list == o.n_list &&
         precision == o.precision && format == o.format && seed == o.seed &&
         mc_samples == o.mc_samples && method == o.method &&
         thinning_boundaries == o.thinning_boundaries && thinning_s == o.thinning_s;
}

std::string to_string(Format f) { return f == Format::kJson ? "json" : "csv"; }
std::string to_string(Basis b) { return b == Basis::kChebyshev ? "chebyshev" : "monomial"; }

ExperimentConfig parse_config(const std::string& text, const std::string& source) {
  ExperimentConfig c;
  std::map<std::string, std::string> line_of;
  std::set<std::string> seen;
  std::istringstream in(text);
  std::string raw;
  int line = 0;
  while (std::getline(in, raw)) {
    ++line;
    const auto hash = raw.find('#');
    const std::string body = trim(hash == std::string::npos ? raw : raw.substr(0, hash));
    if (body.empty()) continue;
    const auto eq = body.find('=');
    const std::string where = source + ":" + std::to_string(line);
    if (eq == std::string::npos) throw ConfigError(where + ": expected 'key = value'");
    const std::string key = trim(body.substr(0, eq));
    const std::string value = trim(body.substr(eq + 1));
    const Located at{where + ": " + key};
    if (key.empty()) throw ConfigError(where + ": empty key");
    if (key != "singularity" && !seen.insert(key).second) at.fail("duplicate key");
    if (value.empty()) at.fail("missing value");
    if (!line_of.count(key)) line_of[key] = at.where;

    apply_key(c, key, value, at);
  }
  validate(c, line_of);
  return c;
}

ExperimentConfig with_override(ExperimentConfig c, const std::string& key, const std::string& value) {
  const Located at{key};
  if (value.empty()) at.fail("missing value");
  if (key == "singularity") c.singularities.clear();
  if (key == "thinning.s") c.thinning_s.clear();
  apply_key(c, key, value, at);
  validate(c, {});
  return c;
}

ExperimentConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError(path + ": cannot open file");
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_config(buf.str(), path);
}

json to_json(const ExperimentConfig& c) {
  json j;
  j["potential"] = c.potential;
  if (c.support) {
    j["support"] = {c.support->a, c.support->b};
  } else {
    j["support"] = nullptr;
  }
  j["w"] = c.w;
  j["w_basis"] = to_string(c.w_basis);
  json sing = json::array();
  for (const auto& s : c.singularities) {
    sing.push_back({{"t", s.t},
                    {"alpha", {{"re", s.alpha.real()}, {"im", s.alpha.imag()}}},
                    {"beta", {{"re", s.beta.real()}, {"im", s.beta.imag()}}}});
  }
  j["singularities"] = sing;
  j["separation"] = c.separation;
  j["n"] = c.n_list;
  j["precision"] = c.precision ? json(*c.precision) : json(nullptr);
  j["format"] = to_string(c.format);
  j["seed"] = c.seed;
  j["mc_samples"] = c.mc_samples;
  j["method"] = oracle::to_string(c.method);
  json thin;
  thin["boundaries"] = c.thinning_boundaries;
  json s = json::object();
  for (const auto& [k, v] : c.thinning_s) s[std::to_string(k)] = v;
  thin["s"] = s;
  j["thinning"] = thin;
  return j;
}

ExperimentConfig config_from_json(const json& j) {
  ExperimentConfig c;
  try {
    c.potential = j.at("potential").get<std::vector<double>>();
    if (!j.at("support").is_null()) {
      const auto v = j.at("support").get<std::vector<double>>();
      if (v.size() != 2) throw ConfigError("config.support: expected [a, b]");
      c.support = equilibrium::Interval{v[0], v[1]};
    }
    c.w = j.at("w").get<std::vector<double>>();
    c.w_basis = parse_basis(Located{"config.w_basis"}, j.at("w_basis").get<std::string>());
    for (const auto& s : j.at("singularities")) {
      c.singularities.push_back(
          {s.at("t").get<double>(),
           {s.at("alpha").at("re").get<double>(), s.at("alpha").at("im").get<double>()},
           {s.at("beta").at("re").get<double>(), s.at("beta").at("im").get<double>()}});
    }
    c.separation = j.at("separation").get<double>();
    c.n_list = j.at("n").get<std::vector<int>>();
    if (!j.at("precision").is_null()) c.precision = j.at("precision").get<long>();
    c.format = parse_format(Located{"config.format"}, j.at("format").get<std::string>());
    c.seed = j.at("seed").get<std::uint64_t>();
    c.mc_samples = j.at("mc_samples").get<long>();
    c.method = parse_method(Located{"config.method"}, j.at("method").get<std::string>());
    c.thinning_boundaries = j.at("thinning").at("boundaries").get<std::vector<double>>();
    for (const auto& [k, v] : j.at("thinning").at("s").items()) {
      c.thinning_s[std::stoi(k)] = v.get<double>();
    }
  } catch (const json::exception& e) {
    throw ConfigError(std::string("config: ") + e.what());
  }
  validate(c, {});
  return c;
}

std::complex<double> Problem::log_det_correction(int n) const {
  if (!rescaled) return 0.0;
  return rescaled->log_det_correction(n, cfg.total_alpha());
}

Problem build_problem(const ExperimentConfig& c) {
  using equilibrium::Potential;
  std::vector<double> t;
  for (const auto& s : c.singularities) t.push_back(s.t);

  asymptotics::FieldW w;
  if (!c.w.empty()) {
    if (c.w_basis == Basis::kChebyshev) {
      w = asymptotics::FieldW(c.w);
    } else if (c.support) {
      // monomial in the original variable: compose with the affine map first
      w = specfun::chebyshev_from_monomial(
          equilibrium::compose_affine(c.w, c.support->center(), c.support->half_length()));
    } else {
      w = specfun::chebyshev_from_monomial(c.w);
    }
  }

  std::optional<equilibrium::RescaledProblem> rescaled;
  Potential v(c.potential);
  if (c.support) {
    rescaled = equilibrium::rescale(v, *c.support, w, t);
    v = rescaled->v;
    t = rescaled->t;
  }
  std::vector<asymptotics::Singularity> items = c.singularities;
  for (std::size_t j = 0; j < items.size(); ++j) items[j].t = t[j];
  return {v, w, asymptotics::SingularityConfig(std::move(items), c.separation), rescaled};
}

asymptotics::ThinningSpec thinning_spec(const ExperimentConfig& c) {
  return {c.thinning_boundaries, c.thinning_s};
}

long precision_for(const ExperimentConfig& c, int n) {
  if (c.precision) return *c.precision;
  if (const char* env = std::getenv("HANKEL_FH_PRECISION"); env && *env) {
    const Located at{"HANKEL_FH_PRECISION"};
    const long bits = at.integer(env);
    check_precision(at, bits);
    return bits;
  }
  return oracle::default_precision_bits(n);
}

}  // namespace hankel_fh::cli
