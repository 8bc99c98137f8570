#pragma once

// Equilibrium measures of polynomial potentials whose support is [-1,1].

#include <complex>
#include <optional>
#include <vector>

#include "hankel_fh/chebyshev.hpp"
#include "hankel_fh/errors.hpp"

namespace hankel_fh::equilibrium {

using specfun::ChebSeries;

/// Endpoints of the original support before rescaling to [-1,1].
struct Interval {
  double a = -1.0;
  double b = 1.0;

  double center() const { return 0.5 * (a + b); }
  double half_length() const { return 0.5 * (b - a); }
};

/// Real polynomial V(x) = sum_k a_k x^k of even degree >= 2 with a positive
/// leading coefficient. Trailing zero coefficients are dropped.
class Potential {
 public:
  explicit Potential(std::vector<double> monomial, std::optional<Interval> origin = std::nullopt);

  /// V(x) = 2x^2, the Gaussian (GUE) potential.
  static Potential gaussian();

  const std::vector<double>& coeffs() const noexcept { return coeffs_; }
  std::size_t degree() const noexcept { return coeffs_.size() - 1; }
  const std::optional<Interval>& origin() const noexcept { return origin_; }

  double operator()(double x) const;
  double derivative(double x) const;

  /// V restricted to [-1,1] in the T basis (exact).
  ChebSeries chebyshev() const;

  /// V - 2x^2 in the T basis.
  ChebSeries deviation_from_gaussian() const;

  bool is_gaussian() const;

 private:
  std::vector<double> coeffs_;
  std::optional<Interval> origin_;
};

struct RegularityCertificate {
  double psi_min_on_support = 0.0;
  double psi_min_location = 0.0;
  double psi_at_minus_one = 0.0;
  double psi_at_plus_one = 0.0;
  /// max over the exterior grid of 2 int log|x-s| dmu(s) - V(x) + ell; must be < 0
  double exterior_margin = 0.0;
  double exterior_margin_location = 0.0;
  /// min over |x| in [x_max, tail_max] of V(x) - ell - 2 log(|x|+1); must be > 0
  double tail_margin = 0.0;
  double x_max = 5.0;
  double tail_max = 1e6;
  int grid_size = 201;
  int exterior_grid_size = 400;
  double mass = 0.0;
  double variational_residual = 0.0;
  bool certified = false;
};

struct EquilibriumMeasure {
  ChebSeries psi;
  double ell = 0.0;
  RegularityCertificate regularity;
};

inline constexpr double kMassTolerance = 1e-8;
inline constexpr double kEllSpreadTolerance = 1e-6;

/// The linear map V -> psi = (1/2pi) sum_{k>=1} c_k U_{k-1}, c_k the T
/// coefficients of V'. No checks: this is the PV formula taken at face value.
ChebSeries density_factor(const ChebSeries& v);

/// int psi(x) sqrt(1-x^2) dx
double mass(const ChebSeries& psi);

/// psi for V. Throws RegularityViolation (condition 4) when the equilibrium
/// support of V is not [-1,1]: either the mass differs from 1 by more than
/// 1e-8 or V' has a nonzero T_0 coefficient.
ChebSeries compute_density(const Potential& v);

/// ell = V(x0) - 2 int log|x0-s| psi(s) sqrt(1-s^2) ds at x0 = 0, cross-checked
/// at x0 = +-0.5. InconsistencyError if the three values spread by > 1e-6.
double compute_ell(const Potential& v, const ChebSeries& psi);

/// max over a uniform interior grid of |V(x) - ell - 2 int log|x-s| dmu(s)|.
double variational_residual(const Potential& v, const ChebSeries& psi, double ell,
                            int points = 21);

/// Grid certificate for conditions 3 and 4. Throws RegularityViolation naming
/// the condition and location on failure.
RegularityCertificate check_one_cut_regular(const Potential& v, const EquilibriumMeasure& m);

/// compute_density + compute_ell + check_one_cut_regular.
EquilibriumMeasure equilibrium_measure(const Potential& v);

/// Monomial coefficients of p(center + scale * x).
std::vector<double> compose_affine(const std::vector<double>& monomial, double center,
                                   double scale);

struct RescaledProblem {
  Potential v;
  ChebSeries w;
  std::vector<double> t;
  Interval original;

  /// (n^2 + n A) log((b-a)/2); add to the rescaled log-determinant to recover
  /// the original one.
  std::complex<double> log_det_correction(int n, std::complex<double> total_alpha) const;

  /// Map a point of [a,b] to [-1,1] and back.
  double to_unit(double x_original) const;
  double to_original(double x_unit) const;
};

/// Transport a problem on [a,b] to [-1,1]. `w_on_interval` is a Chebyshev
/// series in the variable of [a,b] mapped to [-1,1], so its coefficients carry
/// over unchanged. DomainError if a >= b or some t is not in (a,b).
RescaledProblem rescale(const Potential& v_tilde, Interval support,
                        const ChebSeries& w_on_interval = ChebSeries(),
                        const std::vector<double>& t_tilde = {});

}  // namespace hankel_fh::equilibrium
