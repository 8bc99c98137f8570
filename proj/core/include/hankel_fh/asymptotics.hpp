#pragma once

// Large-n expansion log D_n = C1 n^2 + C2 n + C3 log n + C4 for Hankel
// determinants with Fisher-Hartwig singularities, its building blocks, and
// the thinning / conditioning formulas built on it.

#include <complex>
#include <map>
#include <string>
#include <vector>

#include "hankel_fh/chebyshev.hpp"
#include "hankel_fh/equilibrium.hpp"
#include "hankel_fh/errors.hpp"

namespace hankel_fh::asymptotics {

using Complex = std::complex<double>;
using equilibrium::EquilibriumMeasure;
using equilibrium::Potential;
using specfun::ChebSeries;

/// Smooth field W on [-1,1] in the T basis (real coefficients).
using FieldW = ChebSeries;

/// Root-type |x-t|^alpha times jump-type exp(+-i pi beta) at t.
struct Singularity {
  double t = 0.0;
  Complex alpha = 0.0;
  Complex beta = 0.0;
};

inline constexpr double kDefaultSeparation = 1e-3;

/// Ordered singularities satisfying Re alpha > -1, |Re beta| < 1/4 and
/// min{|t_j - t_k|, 1 - |t_j|} >= separation.
class SingularityConfig {
 public:
  SingularityConfig() = default;

  /// Throws DomainError for t outside (-1,1) or not strictly increasing,
  /// HypothesisViolation for the alpha/beta ranges and the separation.
  explicit SingularityConfig(std::vector<Singularity> items,
                             double separation = kDefaultSeparation);

  const std::vector<Singularity>& items() const noexcept { return items_; }
  std::size_t size() const noexcept { return items_.size(); }
  bool empty() const noexcept { return items_.empty(); }
  const Singularity& operator[](std::size_t j) const { return items_[j]; }
  double separation() const noexcept { return separation_; }

  /// A = sum alpha_j
  Complex total_alpha() const;
  /// B = sum beta_j
  Complex total_beta() const;
  /// A_j = sum_{l<j} alpha_l - sum_{l>j} alpha_l (0-based j)
  Complex partial_alpha(std::size_t j) const;
  /// max_j |Re beta_j|
  double beta_max() const;
  /// min over pairs and endpoints of the distances
  double min_distance() const;
  bool all_betas_zero() const;

  /// Same positions and separation with the given betas (validated).
  SingularityConfig with_betas(const std::vector<Complex>& betas) const;
  SingularityConfig with_zero_betas() const;
  SingularityConfig with_zero_alphas() const;

 private:
  std::vector<Singularity> items_;
  double separation_ = kDefaultSeparation;
};

/// Coefficients of n^2, n, log n and 1.
struct CoefficientSet {
  Complex n2 = 0.0;
  Complex n1 = 0.0;
  Complex log_n = 0.0;
  Complex constant = 0.0;

  Complex value(int n) const;

  CoefficientSet& operator+=(const CoefficientSet& o);
  friend CoefficientSet operator+(CoefficientSet a, const CoefficientSet& b) { return a += b; }
};

struct Term {
  std::string coefficient;  ///< "C1" .. "C4"
  std::string label;
  Complex value;
};

struct ExpansionCoefficients {
  Complex C1 = 0.0;
  Complex C2 = 0.0;
  Complex C3 = 0.0;
  Complex C4 = 0.0;
  double beta_max = 0.0;
  std::vector<Term> term_breakdown;

  CoefficientSet as_set() const { return {C1, C2, C3, C4}; }
  /// Sum of the breakdown entries of one coefficient whose label matches.
  Complex term(const std::string& coefficient, const std::string& label) const;
};

struct Prediction {
  Complex value;
  double error_scale = 0.0;
};

/// log n / n^{1 - 4 beta_max}
double error_scale(int n, double beta_max);

/// int_t^1 psi(x) sqrt(1-x^2) dx in closed form; DomainError outside [-1,1].
double cumulative_measure(const ChebSeries& psi, double t);
double cumulative_measure(const EquilibriumMeasure& m, double t);

Complex compute_C1(const Potential& v, const EquilibriumMeasure& m);
Complex compute_C2(const Potential& v, const EquilibriumMeasure& m, const FieldW& w,
                   const SingularityConfig& cfg);
Complex compute_C3(const SingularityConfig& cfg);
Complex compute_C4(const Potential& v, const EquilibriumMeasure& m, const FieldW& w,
                   const SingularityConfig& cfg);

/// All four with the labelled breakdown.
ExpansionCoefficients compute_coefficients(const Potential& v, const EquilibriumMeasure& m,
                                           const FieldW& w, const SingularityConfig& cfg);

/// -(1/4 pi^2) int W(y)/sqrt(1-y^2) PV int W'(x) sqrt(1-x^2)/(x-y) dx dy = (1/8) sum k w_k^2
double double_pv_term(const FieldW& w);

Prediction predict_log_hankel(const ExpansionCoefficients& c, int n);
Prediction predict_log_hankel(const Potential& v, const EquilibriumMeasure& m, const FieldW& w,
                              const SingularityConfig& cfg, int n);

/// log of (2 pi)^{n/2} 2^{-n^2} n^{-n^2/2} prod_{j<n} j!  (V = 2x^2, no singularities).
double gue_exact_log(int n);
/// (-log 2 - 3/4, log 2 pi, -1/12, zeta'(-1))
CoefficientSet gue_asymptotic_terms();

/// log E_GUE prod |p_n(t_k)|^{alpha_k} without the error factor; DomainError if
/// some beta is nonzero.
CoefficientSet krasovsky_terms(const SingularityConfig& cfg);
Complex krasovsky_log_ratio(const SingularityConfig& cfg, int n);

/// log D_n(alpha, beta, 2x^2, 0) / D_n(alpha, 0, 2x^2, 0)
CoefficientSet ratio_beta_terms(const SingularityConfig& cfg);
Complex ratio_beta(const SingularityConfig& cfg, int n);

/// log D_n(alpha, beta, V, 0) / D_n(alpha, beta, 2x^2, 0)
CoefficientSet ratio_potential_terms(const Potential& v, const EquilibriumMeasure& m,
                                     const SingularityConfig& cfg);
Complex ratio_potential(const Potential& v, const EquilibriumMeasure& m,
                        const SingularityConfig& cfg, int n);

/// log D_n(alpha, beta, V, W) / D_n(alpha, beta, V, 0)
CoefficientSet ratio_field_terms(const Potential& v, const EquilibriumMeasure& m,
                                 const FieldW& w, const SingularityConfig& cfg);
Complex ratio_field(const Potential& v, const EquilibriumMeasure& m, const FieldW& w,
                    const SingularityConfig& cfg, int n);

/// Piecewise constant thinning: on sector k = 1..m+1 (between boundaries
/// t_{k-1} < t_k, t_0 = -inf, t_{m+1} = +inf) each eigenvalue is removed with
/// probability s[k] for k in K = keys of s.
struct ThinningSpec {
  std::vector<double> boundaries;
  std::map<int, double> s;

  /// DomainError unless boundaries are strictly increasing in (-1,1), keys are
  /// in 1..m+1 and values in (0,1].
  void validate() const;
  /// s~_k: s[k] for k in K, else 1.
  double s_tilde(int k) const;
};

struct ThinningBetas {
  std::vector<Complex> betas;
  /// Per-eigenvalue log factor (log s~_1 + log s~_{m+1}) / 2.
  double log_prefactor = 0.0;
};

/// beta~_j = log(s~_j / s~_{j+1}) / (2 pi i)
ThinningBetas thinning_to_betas(const ThinningSpec& spec);

/// SingularityConfig with alpha = 0 and the thinning betas.
SingularityConfig thinning_config(const ThinningSpec& spec,
                                  double separation = kDefaultSeparation);

struct GapProbability {
  double log_value = 0.0;
  double error_scale = 0.0;
};

/// log P(no thinned eigenvalue in the sectors of K)
///   = predict(beta~) - predict(0) + n * log_prefactor.
GapProbability gap_probability_log(const Potential& v, const EquilibriumMeasure& m,
                                   const ThinningSpec& spec, int n);

/// log E_cond[prod e^{W(x_j)} prod |p(t_k)|^{alpha_k} e^{2 i beta_k arg p(t_k)}]
///   = log D_n(alpha, beta + base, V, W) - log D_n(0, base, V, 0) - i pi n sum beta_k.
/// DomainError if beta + base leaves |Re| < 1/4.
Prediction correlation_log(const Potential& v, const EquilibriumMeasure& m, const FieldW& w,
                           const SingularityConfig& cfg, const std::vector<Complex>& base_betas,
                           int n);

struct SzegoValues {
  Complex D_W = 1.0;
  Complex D_alpha = 1.0;
  Complex D_beta = 1.0;
  Complex D_infinity = 1.0;
  /// z lies within 1e-8 of [-1,1]
  bool near_cut = false;

  Complex product() const { return D_W * D_alpha * D_beta; }
};

inline constexpr double kCutProximity = 1e-8;

/// D_W, D_alpha, D_beta at z off [-1,1], and D_infinity. DomainError on the cut.
SzegoValues szego_functions(Complex z, const FieldW& w, const SingularityConfig& cfg);

/// omega(x) = prod |x - t_j|^{alpha_j} * (e^{i pi beta_j} if x < t_j else e^{-i pi beta_j})
Complex fh_weight(const SingularityConfig& cfg, double x);

}  // namespace hankel_fh::asymptotics
