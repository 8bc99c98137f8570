#include "hankel_fh/asymptotics.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "hankel_fh/specfun.hpp"

namespace hankel_fh::asymptotics {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kLog2 = std::numbers::ln2;
const Complex kI(0.0, 1.0);

std::string describe(double x) {
  std::ostringstream s;
  s.precision(6);
  s << x;
  return s.str();
}

std::string describe(Complex z) {
  std::ostringstream s;
  s.precision(6);
  s << z.real() << (z.imag() < 0 ? " - " : " + ") << std::abs(z.imag()) << "i";
  return s.str();
}

Complex log_g(Complex z) { return specfun::log_barnes_g(z); }

// sum_k c_k T_k(z) for complex z
Complex clenshaw(const ChebSeries& f, Complex z) {
  Complex b1 = 0.0, b2 = 0.0;
  const auto& c = f.coeffs();
  if (c.empty()) return 0.0;
  for (std::size_t k = c.size(); k-- > 1;) {
    const Complex b0 = c[k] + 2.0 * z * b1 - b2;
    b2 = b1;
    b1 = b0;
  }
  return c[0] + z * b1 - b2;
}

double sqrt_one_minus(double t) { return std::sqrt((1.0 - t) * (1.0 + t)); }

// log(1 - t_j t_k - sqrt((1-t_j^2)(1-t_k^2)))
double log_pair_numerator(double tj, double tk) {
  // 1 - tj tk - sj sk = 1 - cos(a_j - a_k) = 2 sin^2((a_j - a_k)/2), a = arccos t
  const double h = 0.5 * (std::acos(tj) - std::acos(tk));
  return std::log(2.0) + 2.0 * std::log(std::abs(std::sin(h)));
}

void add(std::vector<Term>& out, const char* coefficient, std::string label, Complex value) {
  out.push_back({coefficient, std::move(label), value});
}

Complex sum_of(const std::vector<Term>& terms, const std::string& coefficient) {
  Complex s = 0.0;
  for (const auto& t : terms) {
    if (t.coefficient == coefficient) s += t.value;
  }
  return s;
}

}  // namespace

// ---------------------------------------------------------------- config

SingularityConfig::SingularityConfig(std::vector<Singularity> items, double separation)
    : items_(std::move(items)), separation_(separation) {
  if (!(separation_ > 0.0)) throw DomainError("singularities: separation must be positive");
  for (std::size_t j = 0; j < items_.size(); ++j) {
    const Singularity& s = items_[j];
    const std::string where = "singularity " + std::to_string(j + 1) + ": ";
    if (!(std::abs(s.t) < 1.0)) {
      throw DomainError(where + "t = " + describe(s.t) + " must lie in (-1, 1)");
    }
    if (j > 0 && !(s.t > items_[j - 1].t)) {
      throw DomainError(where + "positions must be strictly increasing");
    }
    if (!std::isfinite(s.alpha.real()) || !std::isfinite(s.alpha.imag()) ||
        !std::isfinite(s.beta.real()) || !std::isfinite(s.beta.imag())) {
      throw DomainError(where + "alpha and beta must be finite");
    }
    if (!(s.alpha.real() > -1.0)) {
      throw HypothesisViolation(where + "Re alpha = " + describe(s.alpha.real()) +
                                " violates Re alpha > -1");
    }
    if (!(std::abs(s.beta.real()) < 0.25)) {
      throw HypothesisViolation(where + "Re beta = " + describe(s.beta.real()) +
                                " violates Re beta in (-1/4, 1/4)");
    }
  }
  if (!items_.empty() && min_distance() < separation_) {
    throw HypothesisViolation("singularities: minimal distance " + describe(min_distance()) +
                              " between singularities and to +-1 is below the separation " +
                              describe(separation_));
  }
}

Complex SingularityConfig::total_alpha() const {
  Complex a = 0.0;
  for (const auto& s : items_) a += s.alpha;
  return a;
}

Complex SingularityConfig::total_beta() const {
  Complex b = 0.0;
  for (const auto& s : items_) b += s.beta;
  return b;
}

Complex SingularityConfig::partial_alpha(std::size_t j) const {
  Complex a = 0.0;
  for (std::size_t l = 0; l < items_.size(); ++l) {
    if (l < j) a += items_[l].alpha;
    if (l > j) a -= items_[l].alpha;
  }
  return a;
}

double SingularityConfig::beta_max() const {
  double b = 0.0;
  for (const auto& s : items_) b = std::max(b, std::abs(s.beta.real()));
  return b;
}

double SingularityConfig::min_distance() const {
  double d = 2.0;
  for (std::size_t j = 0; j < items_.size(); ++j) {
    d = std::min({d, 1.0 - items_[j].t, items_[j].t + 1.0});
    if (j > 0) d = std::min(d, items_[j].t - items_[j - 1].t);
  }
  return d;
}

bool SingularityConfig::all_betas_zero() const {
  return std::all_of(items_.begin(), items_.end(),
                     [](const Singularity& s) { return s.beta == Complex(0.0); });
}

SingularityConfig SingularityConfig::with_betas(const std::vector<Complex>& betas) const {
  if (betas.size() != items_.size()) {
    throw DomainError("singularities: expected " + std::to_string(items_.size()) + " betas, got " +
                      std::to_string(betas.size()));
  }
  std::vector<Singularity> out = items_;
  for (std::size_t j = 0; j < out.size(); ++j) out[j].beta = betas[j];
  return SingularityConfig(std::move(out), separation_);
}

SingularityConfig SingularityConfig::with_zero_betas() const {
  return with_betas(std::vector<Complex>(items_.size(), 0.0));
}

SingularityConfig SingularityConfig::with_zero_alphas() const {
  std::vector<Singularity> out = items_;
  for (auto& s : out) s.alpha = 0.0;
  return SingularityConfig(std::move(out), separation_);
}

// ---------------------------------------------------------------- sets

Complex CoefficientSet::value(int n) const {
  const double nn = static_cast<double>(n);
  return n2 * (nn * nn) + n1 * nn + log_n * std::log(nn) + constant;
}

CoefficientSet& CoefficientSet::operator+=(const CoefficientSet& o) {
  n2 += o.n2;
  n1 += o.n1;
  log_n += o.log_n;
  constant += o.constant;
  return *this;
}

Complex ExpansionCoefficients::term(const std::string& coefficient,
                                    const std::string& label) const {
  Complex s = 0.0;
  for (const auto& t : term_breakdown) {
    if (t.coefficient == coefficient && t.label == label) s += t.value;
  }
  return s;
}

double error_scale(int n, double beta_max) {
  const double nn = static_cast<double>(n);
  return std::log(nn) / std::pow(nn, 1.0 - 4.0 * beta_max);
}

// ---------------------------------------------------------------- measure

double cumulative_measure(const ChebSeries& psi, double t) {
  if (!(std::abs(t) <= 1.0)) throw DomainError("cumulative_measure: t must lie in [-1, 1]");
  // x = cos theta: int_0^Theta psi(cos theta) sin^2 theta d theta, and
  // sin^2 theta cos k theta = cos(k theta)/2 - (cos((k+2) theta) + cos((k-2) theta))/4
  const double th = std::acos(t);
  auto c = [th](long j) {
    j = std::abs(j);
    return j == 0 ? th : std::sin(static_cast<double>(j) * th) / static_cast<double>(j);
  };
  double s = 0.0;
  for (std::size_t k = 0; k < psi.size(); ++k) {
    const long kk = static_cast<long>(k);
    s += psi.coeffs()[k] * (0.5 * c(kk) - 0.25 * (c(kk + 2) + c(kk - 2)));
  }
  return s;
}

double cumulative_measure(const EquilibriumMeasure& m, double t) {
  return cumulative_measure(m.psi, t);
}

// ---------------------------------------------------------------- constants

namespace {

void c1_terms(const Potential& v, const EquilibriumMeasure& m, std::vector<Term>& out) {
  add(out, "C1", "-log 2 - 3/4", -kLog2 - 0.75);
  const ChebSeries d = v.deviation_from_gaussian();
  const ChebSeries weight = m.psi + ChebSeries(std::vector<double>{2.0 / kPi});
  const double integral = specfun::cheb_weighted_integrals(specfun::multiply(d, weight)).second;
  add(out, "C1", "-(1/2) int sqrt(1-x^2) (V-2x^2)(2/pi+psi)", -0.5 * integral);
}

void c2_terms(const Potential& v, const EquilibriumMeasure& m, const FieldW& w,
              const SingularityConfig& cfg, std::vector<Term>& out) {
  const Complex a = cfg.total_alpha();
  add(out, "C2", "log 2pi", std::log(2.0 * kPi));
  add(out, "C2", "-A log 2", -a * kLog2);
  const double dev = specfun::cheb_weighted_integrals(v.deviation_from_gaussian()).first;
  add(out, "C2", "-(A/2pi) int (V-2x^2)/sqrt(1-x^2)", -a / (2.0 * kPi) * dev);
  add(out, "C2", "int psi sqrt(1-x^2) W",
      specfun::cheb_weighted_integrals(specfun::multiply(m.psi, w)).second);
  Complex root = 0.0, jump = 0.0;
  for (const auto& s : cfg.items()) {
    root += 0.5 * s.alpha * (v(s.t) - 1.0);
    jump += kPi * kI * s.beta * (1.0 - 2.0 * cumulative_measure(m.psi, s.t));
  }
  add(out, "C2", "alpha_j/2 (V(t_j)-1)", root);
  add(out, "C2", "pi i beta_j (1 - 2 int_t^1 psi sqrt(1-x^2))", jump);
}

void c3_terms(const SingularityConfig& cfg, std::vector<Term>& out) {
  add(out, "C3", "-1/12", -1.0 / 12.0);
  Complex s = 0.0;
  for (const auto& x : cfg.items()) s += x.alpha * x.alpha / 4.0 - x.beta * x.beta;
  add(out, "C3", "alpha_j^2/4 - beta_j^2", s);
}

void c4_terms(const EquilibriumMeasure& m, const FieldW& w, const SingularityConfig& cfg,
              std::vector<Term>& out) {
  const Complex a = cfg.total_alpha();
  add(out, "C4", "zeta'(-1)", specfun::zeta_prime_minus_one());
  add(out, "C4", "(A/2pi) int W/sqrt(1-x^2)", a * 0.5 * w.coeff(0));
  add(out, "C4", "double PV", double_pv_term(w));
  add(out, "C4", "-(1/24) log(pi^2 psi(1) psi(-1)/4)",
      -std::log(kPi * kPi * m.psi(1.0) * m.psi(-1.0) / 4.0) / 24.0);

  const auto& s = cfg.items();
  Complex pairwise = 0.0;
  for (std::size_t j = 0; j < s.size(); ++j) {
    for (std::size_t k = j + 1; k < s.size(); ++k) {
      const Complex aa = s[j].alpha * s[k].alpha / 2.0;
      const Complex bb = 2.0 * s[j].beta * s[k].beta;
      pairwise += bb * log_pair_numerator(s[j].t, s[k].t) - aa * kLog2 -
                  (aa + bb) * std::log(std::abs(s[j].t - s[k].t));
    }
  }
  add(out, "C4", "pairwise", pairwise);

  Complex arcsin_term = 0.0, partial = 0.0, barnes = 0.0, density = 0.0, field = 0.0, pv = 0.0,
          edge = 0.0;
  for (std::size_t j = 0; j < s.size(); ++j) {
    const Complex al = s[j].alpha, be = s[j].beta;
    const double t = s[j].t;
    const Complex quad = al * al / 4.0 - be * be;
    arcsin_term += kI * a * be * std::asin(t);
    partial += -kI * kPi / 2.0 * be * cfg.partial_alpha(j);
    barnes += log_g(1.0 + al / 2.0 + be) + log_g(1.0 + al / 2.0 - be) - log_g(1.0 + al);
    density += quad * std::log(kPi * m.psi(t) / 2.0);
    field += -al / 2.0 * w(t);
    if (w.size() > 1) {
      // PV int W / (sqrt(1-x^2)(t-x)) = -hilbert_T(W, t)
      pv += kI * be / kPi * sqrt_one_minus(t) * (-specfun::hilbert_T(w, t));
    }
    edge += (al * al / 4.0 - 3.0 * be * be) * std::log(2.0 * sqrt_one_minus(t));
  }
  add(out, "C4", "i A beta_j arcsin t_j", arcsin_term);
  add(out, "C4", "-(i pi/2) beta_j A_j", partial);
  add(out, "C4", "log G(1+a/2+b) G(1+a/2-b) / G(1+a)", barnes);
  add(out, "C4", "(alpha^2/4-beta^2) log(pi psi(t)/2)", density);
  add(out, "C4", "-(alpha/2) W(t)", field);
  add(out, "C4", "(i beta/pi) sqrt(1-t^2) PV int W/(sqrt(1-x^2)(t-x))", pv);
  add(out, "C4", "(alpha^2/4-3 beta^2) log(2 sqrt(1-t^2))", edge);
}

}  // namespace

double double_pv_term(const FieldW& w) {
  // PV int W' sqrt(1-x^2)/(x-y) = -pi sum k w_k T_k(y); then
  // int W T_k / sqrt(1-y^2) = (pi/2) w_k for k >= 1.
  double s = 0.0;
  for (std::size_t k = 1; k < w.size(); ++k) {
    s += static_cast<double>(k) * w.coeffs()[k] * w.coeffs()[k];
  }
  return s / 8.0;
}

Complex compute_C1(const Potential& v, const EquilibriumMeasure& m) {
  std::vector<Term> t;
  c1_terms(v, m, t);
  return sum_of(t, "C1");
}

Complex compute_C2(const Potential& v, const EquilibriumMeasure& m, const FieldW& w,
                   const SingularityConfig& cfg) {
  std::vector<Term> t;
  c2_terms(v, m, w, cfg, t);
  return sum_of(t, "C2");
}

Complex compute_C3(const SingularityConfig& cfg) {
  std::vector<Term> t;
  c3_terms(cfg, t);
  return sum_of(t, "C3");
}

Complex compute_C4(const Potential&, const EquilibriumMeasure& m, const FieldW& w,
                   const SingularityConfig& cfg) {
  std::vector<Term> t;
  c4_terms(m, w, cfg, t);
  return sum_of(t, "C4");
}

ExpansionCoefficients compute_coefficients(const Potential& v, const EquilibriumMeasure& m,
                                           const FieldW& w, const SingularityConfig& cfg) {
  ExpansionCoefficients c;
  c1_terms(v, m, c.term_breakdown);
  c2_terms(v, m, w, cfg, c.term_breakdown);
  c3_terms(cfg, c.term_breakdown);
  c4_terms(m, w, cfg, c.term_breakdown);
  c.C1 = sum_of(c.term_breakdown, "C1");
  c.C2 = sum_of(c.term_breakdown, "C2");
  c.C3 = sum_of(c.term_breakdown, "C3");
  c.C4 = sum_of(c.term_breakdown, "C4");
  c.beta_max = cfg.beta_max();
  return c;
}

Prediction predict_log_hankel(const ExpansionCoefficients& c, int n) {
  if (n < 1) throw DomainError("predict_log_hankel: n must be at least 1");
  return {c.as_set().value(n), error_scale(n, c.beta_max)};
}

Prediction predict_log_hankel(const Potential& v, const EquilibriumMeasure& m, const FieldW& w,
                              const SingularityConfig& cfg, int n) {
  return predict_log_hankel(compute_coefficients(v, m, w, cfg), n);
}

// ---------------------------------------------------------------- GUE

double gue_exact_log(int n) {
  if (n < 1) throw DomainError("gue_exact_log: n must be at least 1");
  using LD = long double;
  const LD nn = n;
  // sum_{j<n} log j! = sum_{k<n} (n-k) log k
  LD s = 0.0L;
  for (int k = 2; k < n; ++k) s += static_cast<LD>(n - k) * std::log(static_cast<LD>(k));
  const LD r = 0.5L * nn * std::log(2.0L * std::numbers::pi_v<long double>) -
               nn * nn * std::numbers::ln2_v<long double> - 0.5L * nn * nn * std::log(nn) + s;
  return static_cast<double>(r);
}

CoefficientSet gue_asymptotic_terms() {
  return {-kLog2 - 0.75, std::log(2.0 * kPi), -1.0 / 12.0, specfun::zeta_prime_minus_one()};
}

// ---------------------------------------------------------------- Propositions

CoefficientSet krasovsky_terms(const SingularityConfig& cfg) {
  if (!cfg.all_betas_zero()) {
    throw DomainError("krasovsky_log_ratio: all beta must vanish");
  }
  CoefficientSet c;
  const auto& s = cfg.items();
  c.n1 = -cfg.total_alpha() * kLog2;
  for (std::size_t j = 0; j < s.size(); ++j) {
    for (std::size_t k = j + 1; k < s.size(); ++k) {
      c.constant += -s[j].alpha * s[k].alpha / 2.0 * std::log(2.0 * std::abs(s[j].t - s[k].t));
    }
    const Complex al = s[j].alpha;
    c.constant += 2.0 * log_g(1.0 + al / 2.0) - log_g(1.0 + al) +
                  al * al / 4.0 * std::log(2.0 * sqrt_one_minus(s[j].t));
    c.log_n += al * al / 4.0;
    c.n1 += al / 2.0 * (2.0 * s[j].t * s[j].t - 1.0);
  }
  return c;
}

Complex krasovsky_log_ratio(const SingularityConfig& cfg, int n) {
  return krasovsky_terms(cfg).value(n);
}

CoefficientSet ratio_beta_terms(const SingularityConfig& cfg) {
  CoefficientSet c;
  const auto& s = cfg.items();
  const Complex a = cfg.total_alpha();
  for (std::size_t j = 0; j < s.size(); ++j) {
    const double t = s[j].t, r = sqrt_one_minus(t);
    const Complex al = s[j].alpha, be = s[j].beta;
    c.n1 += 2.0 * kI * (std::asin(t) + t * r) * be;
    c.constant += kI * a * be * std::asin(t) - kI * kPi / 2.0 * be * cfg.partial_alpha(j);
    c.log_n += -be * be;
    c.constant += -be * be * std::log(8.0 * r * r * r);
    for (std::size_t k = j + 1; k < s.size(); ++k) {
      const double log_t_jk =
          log_pair_numerator(t, s[k].t) - std::log(std::abs(t - s[k].t));
      c.constant += 2.0 * be * s[k].beta * log_t_jk;
    }
    c.constant += log_g(1.0 + al / 2.0 + be) + log_g(1.0 + al / 2.0 - be) -
                  2.0 * log_g(1.0 + al / 2.0);
  }
  return c;
}

Complex ratio_beta(const SingularityConfig& cfg, int n) { return ratio_beta_terms(cfg).value(n); }

CoefficientSet ratio_potential_terms(const Potential& v, const EquilibriumMeasure& m,
                                     const SingularityConfig& cfg) {
  CoefficientSet c;
  const ChebSeries d = v.deviation_from_gaussian();
  const ChebSeries weight = m.psi + ChebSeries(std::vector<double>{2.0 / kPi});
  c.n2 = -0.5 * specfun::cheb_weighted_integrals(specfun::multiply(d, weight)).second;
  const Complex a = cfg.total_alpha();
  c.n1 = -a / (2.0 * kPi) * specfun::cheb_weighted_integrals(d).first;
  const ChebSeries gaussian_psi(std::vector<double>{2.0 / kPi});
  for (const auto& s : cfg.items()) {
    c.n1 += s.alpha / 2.0 * (v(s.t) - 2.0 * s.t * s.t);
    const double excess = cumulative_measure(m.psi, s.t) - cumulative_measure(gaussian_psi, s.t);
    c.n1 += -2.0 * kPi * kI * s.beta * excess;
    c.constant += -(s.beta * s.beta - s.alpha * s.alpha / 4.0) * std::log(kPi / 2.0 * m.psi(s.t));
  }
  c.constant += -std::log(kPi * kPi / 4.0 * m.psi(1.0) * m.psi(-1.0)) / 24.0;
  return c;
}

Complex ratio_potential(const Potential& v, const EquilibriumMeasure& m,
                        const SingularityConfig& cfg, int n) {
  return ratio_potential_terms(v, m, cfg).value(n);
}

CoefficientSet ratio_field_terms(const Potential&, const EquilibriumMeasure& m, const FieldW& w,
                                 const SingularityConfig& cfg) {
  CoefficientSet c;
  c.n1 = specfun::cheb_weighted_integrals(specfun::multiply(m.psi, w)).second;
  c.constant = double_pv_term(w) + cfg.total_alpha() * 0.5 * w.coeff(0);
  for (const auto& s : cfg.items()) {
    c.constant += -s.alpha / 2.0 * w(s.t);
    if (w.size() > 1) {
      c.constant += kI * s.beta / kPi * sqrt_one_minus(s.t) * (-specfun::hilbert_T(w, s.t));
    }
  }
  return c;
}

Complex ratio_field(const Potential& v, const EquilibriumMeasure& m, const FieldW& w,
                    const SingularityConfig& cfg, int n) {
  return ratio_field_terms(v, m, w, cfg).value(n);
}

// ---------------------------------------------------------------- thinning

void ThinningSpec::validate() const {
  const int sectors = static_cast<int>(boundaries.size()) + 1;
  for (std::size_t j = 0; j < boundaries.size(); ++j) {
    if (!(std::abs(boundaries[j]) < 1.0)) {
      throw DomainError("thinning: boundary " + describe(boundaries[j]) + " must lie in (-1, 1)");
    }
    if (j > 0 && !(boundaries[j] > boundaries[j - 1])) {
      throw DomainError("thinning: boundaries must be strictly increasing");
    }
  }
  for (const auto& [k, v] : s) {
    if (k < 1 || k > sectors) {
      throw DomainError("thinning: sector index " + std::to_string(k) + " outside 1.." +
                        std::to_string(sectors));
    }
    if (!(v > 0.0 && v <= 1.0)) {
      throw DomainError("thinning: s_" + std::to_string(k) + " = " + describe(v) +
                        " must lie in (0, 1]");
    }
  }
}

double ThinningSpec::s_tilde(int k) const {
  const auto it = s.find(k);
  return it == s.end() ? 1.0 : it->second;
}

ThinningBetas thinning_to_betas(const ThinningSpec& spec) {
  spec.validate();
  const int m = static_cast<int>(spec.boundaries.size());
  ThinningBetas out;
  for (int j = 1; j <= m; ++j) {
    const double l = std::log(spec.s_tilde(j) / spec.s_tilde(j + 1));
    out.betas.push_back(l / (2.0 * kPi * kI));
  }
  out.log_prefactor = 0.5 * (std::log(spec.s_tilde(1)) + std::log(spec.s_tilde(m + 1)));
  return out;
}

SingularityConfig thinning_config(const ThinningSpec& spec, double separation) {
  const ThinningBetas tb = thinning_to_betas(spec);
  std::vector<Singularity> items;
  for (std::size_t j = 0; j < spec.boundaries.size(); ++j) {
    items.push_back({spec.boundaries[j], 0.0, tb.betas[j]});
  }
  return SingularityConfig(std::move(items), separation);
}

GapProbability gap_probability_log(const Potential& v, const EquilibriumMeasure& m,
                                   const ThinningSpec& spec, int n) {
  const ThinningBetas tb = thinning_to_betas(spec);
  const SingularityConfig cfg = thinning_config(spec);
  const FieldW none;
  const Prediction with = predict_log_hankel(v, m, none, cfg, n);
  const Prediction without = predict_log_hankel(v, m, none, cfg.with_zero_betas(), n);
  return {(with.value - without.value).real() + static_cast<double>(n) * tb.log_prefactor,
          with.error_scale};
}

Prediction correlation_log(const Potential& v, const EquilibriumMeasure& m, const FieldW& w,
                           const SingularityConfig& cfg, const std::vector<Complex>& base_betas,
                           int n) {
  if (base_betas.size() != cfg.size()) {
    throw DomainError("correlation_log: expected " + std::to_string(cfg.size()) +
                      " base betas, got " + std::to_string(base_betas.size()));
  }
  std::vector<Complex> combined(cfg.size());
  for (std::size_t j = 0; j < cfg.size(); ++j) {
    combined[j] = cfg[j].beta + base_betas[j];
    if (!(std::abs(combined[j].real()) < 0.25)) {
      throw DomainError("correlation_log: combined beta_" + std::to_string(j + 1) + " = " +
                        describe(combined[j]) + " leaves Re beta in (-1/4, 1/4)");
    }
  }
  const SingularityConfig num = cfg.with_betas(combined);
  const SingularityConfig den = cfg.with_zero_alphas().with_betas(base_betas);
  const Prediction a = predict_log_hankel(v, m, w, num, n);
  const Prediction b = predict_log_hankel(v, m, FieldW(), den, n);
  const Complex shift = -kI * kPi * static_cast<double>(n) * cfg.total_beta();
  return {a.value - b.value + shift, std::max(a.error_scale, b.error_scale)};
}

// ---------------------------------------------------------------- Szego

Complex fh_weight(const SingularityConfig& cfg, double x) {
  Complex log_w = 0.0;
  for (const auto& s : cfg.items()) {
    log_w += s.alpha * std::log(std::abs(x - s.t));
    log_w += (x < s.t ? 1.0 : -1.0) * kI * kPi * s.beta;
  }
  return std::exp(log_w);
}

SzegoValues szego_functions(Complex z, const FieldW& w, const SingularityConfig& cfg) {
  if (z.imag() == 0.0 && std::abs(z.real()) <= 1.0) {
    throw DomainError("szego_functions: z lies on the cut [-1, 1]");
  }
  SzegoValues out;
  const double dist = z.real() < -1.0   ? std::abs(z + 1.0)
                      : z.real() > 1.0 ? std::abs(z - 1.0)
                                       : std::abs(z.imag());
  out.near_cut = dist < kCutProximity;

  const Complex root = std::sqrt(z - 1.0) * std::sqrt(z + 1.0);  // ~ z at infinity
  const Complex phi = z + root;

  // D_W: Gauss-Chebyshev on the defining integral. The rule converges like
  // |phi|^{-2N}; close to the cut W(z)/(z-x) is subtracted first (its integral
  // is pi W(z)/sqrt(z^2-1)) so that the remainder is a polynomial in x.
  if (!w.empty()) {
    const bool subtract = std::abs(phi) < 1.5;
    const std::size_t nodes = std::max<std::size_t>(64, w.size() + 2);
    const Complex wz = subtract ? clenshaw(w, z) : Complex(0.0);
    Complex sum = 0.0;
    for (std::size_t k = 1; k <= nodes; ++k) {
      const double x = std::cos((2.0 * static_cast<double>(k) - 1.0) * kPi /
                                (2.0 * static_cast<double>(nodes)));
      sum += (w(x) - wz) / (z - x);
    }
    const Complex integral = kPi / static_cast<double>(nodes) * sum + kPi * wz / root;
    out.D_W = std::exp(root / (2.0 * kPi) * integral);
  }

  // With t = cos theta: z - t = (phi/2)(1 - e^{i theta}/phi)(1 - e^{-i theta}/phi)
  Complex log_alpha = 0.0, log_beta = kI * kPi * cfg.total_beta() / 2.0;
  for (const auto& s : cfg.items()) {
    const double th = std::acos(s.t);
    const Complex lp = std::log(1.0 - std::exp(kI * th) / phi);
    const Complex lm = std::log(1.0 - std::exp(-kI * th) / phi);
    log_alpha += s.alpha / 2.0 * (-kLog2 + lp + lm);
    log_beta += s.beta * (-kI * th + lp - lm);
  }
  out.D_alpha = std::exp(log_alpha);
  out.D_beta = std::exp(log_beta);

  Complex log_inf = 0.5 * w.coeff(0) - cfg.total_alpha() / 2.0 * kLog2;
  for (const auto& s : cfg.items()) log_inf += kI * s.beta * std::asin(s.t);
  out.D_infinity = std::exp(log_inf);
  return out;
}

}  // namespace hankel_fh::asymptotics
