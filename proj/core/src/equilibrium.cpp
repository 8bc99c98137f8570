#include "hankel_fh/equilibrium.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

#include "hankel_fh/specfun.hpp"

namespace hankel_fh::equilibrium {

namespace {

constexpr double kPi = std::numbers::pi;

std::string describe(double x) {
  std::ostringstream s;
  s.precision(6);
  s << x;
  return s.str();
}

double horner(const std::vector<double>& a, double x) {
  double p = 0.0;
  for (std::size_t k = a.size(); k-- > 0;) p = p * x + a[k];
  return p;
}

}  // namespace

Potential::Potential(std::vector<double> monomial, std::optional<Interval> origin)
    : coeffs_(std::move(monomial)), origin_(origin) {
  while (!coeffs_.empty() && coeffs_.back() == 0.0) coeffs_.pop_back();
  for (double c : coeffs_) {
    if (!std::isfinite(c)) throw DomainError("potential: coefficients must be finite");
  }
  if (coeffs_.size() < 3) {
    throw DomainError("potential: degree must be at least 2");
  }
  if ((coeffs_.size() - 1) % 2 != 0) {
    throw DomainError("potential: degree must be even (growth condition)");
  }
  if (coeffs_.back() <= 0.0) {
    throw DomainError("potential: leading coefficient must be positive (growth condition)");
  }
}

Potential Potential::gaussian() { return Potential({0.0, 0.0, 2.0}); }

double Potential::operator()(double x) const { return horner(coeffs_, x); }

double Potential::derivative(double x) const {
  double p = 0.0;
  for (std::size_t k = coeffs_.size(); k-- > 1;) p = p * x + static_cast<double>(k) * coeffs_[k];
  return p;
}

ChebSeries Potential::chebyshev() const { return specfun::chebyshev_from_monomial(coeffs_); }

ChebSeries Potential::deviation_from_gaussian() const {
  std::vector<double> d = coeffs_;
  d[2] -= 2.0;
  return specfun::chebyshev_from_monomial(d);
}

bool Potential::is_gaussian() const {
  return coeffs_.size() == 3 && coeffs_[0] == 0.0 && coeffs_[1] == 0.0 && coeffs_[2] == 2.0;
}

ChebSeries density_factor(const ChebSeries& v) {
  const specfun::USeries dv = specfun::derivative(v);
  const ChebSeries dv_t = specfun::to_chebyshev(dv);
  // psi = (1/2pi) sum_{k>=1} c_k U_{k-1}
  std::vector<double> u(std::max<std::size_t>(dv_t.size(), 2) - 1, 0.0);
  for (std::size_t k = 1; k < dv_t.size(); ++k) u[k - 1] = dv_t.coeffs()[k] / (2.0 * kPi);
  return specfun::to_chebyshev(specfun::USeries(std::move(u)));
}

double mass(const ChebSeries& psi) { return specfun::cheb_weighted_integrals(psi).second; }

ChebSeries compute_density(const Potential& v) {
  const ChebSeries vc = v.chebyshev();
  const ChebSeries dv = specfun::to_chebyshev(specfun::derivative(vc));
  const double balance = dv.coeff(0);
  ChebSeries psi = density_factor(vc);
  const double m = mass(psi);
  if (std::abs(balance) > kMassTolerance) {
    throw RegularityViolation(
        4, "condition 4 violated: equilibrium support is not [-1,1] (int V'(x)/sqrt(1-x^2) dx = " +
               describe(kPi * balance) + ", must vanish); rescale the potential first");
  }
  if (std::abs(m - 1.0) > kMassTolerance) {
    throw RegularityViolation(
        4, "condition 4 violated: equilibrium support is not [-1,1] (mass of psi sqrt(1-x^2) is " +
               describe(m) + ", must be 1); rescale the potential first");
  }
  return psi;
}

double compute_ell(const Potential& v, const ChebSeries& psi) {
  auto at = [&](double x0) { return v(x0) - specfun::log_kernel_integral(psi, x0); };
  const double e0 = at(0.0);
  const double em = at(-0.5);
  const double ep = at(0.5);
  const double spread = std::max({e0, em, ep}) - std::min({e0, em, ep});
  if (spread > kEllSpreadTolerance) {
    throw InconsistencyError("compute_ell: Euler-Lagrange constant is not constant on the support "
                             "(spread " + describe(spread) + "); psi is not the equilibrium density of V");
  }
  return e0;
}

double variational_residual(const Potential& v, const ChebSeries& psi, double ell, int points) {
  double worst = 0.0;
  for (int i = 0; i < points; ++i) {
    const double x = -1.0 + 2.0 * (i + 0.5) / points;
    worst = std::max(worst, std::abs(v(x) - ell - specfun::log_kernel_integral(psi, x)));
  }
  return worst;
}

RegularityCertificate check_one_cut_regular(const Potential& v, const EquilibriumMeasure& m) {
  RegularityCertificate cert;
  cert.mass = mass(m.psi);
  cert.variational_residual = variational_residual(v, m.psi, m.ell);

  // condition 4: psi > 0 on [-1,1], endpoints included explicitly
  cert.psi_min_on_support = m.psi(-1.0);
  cert.psi_min_location = -1.0;
  for (int i = 0; i < cert.grid_size; ++i) {
    const double x = -1.0 + 2.0 * i / (cert.grid_size - 1);
    const double p = m.psi(x);
    if (p < cert.psi_min_on_support) {
      cert.psi_min_on_support = p;
      cert.psi_min_location = x;
    }
  }
  cert.psi_at_minus_one = m.psi(-1.0);
  cert.psi_at_plus_one = m.psi(1.0);
  if (!(cert.psi_min_on_support > 0.0)) {
    throw RegularityViolation(4, "condition 4 violated: psi(" + describe(cert.psi_min_location) +
                                     ") = " + describe(cert.psi_min_on_support) +
                                     " is not positive");
  }

  // condition 3: strict exterior inequality on 1 < |x| <= x_max
  cert.exterior_margin = -std::numeric_limits<double>::infinity();
  const int per_side = cert.exterior_grid_size / 2;
  for (int side : {-1, 1}) {
    for (int i = 1; i <= per_side; ++i) {
      const double x = side * (1.0 + (cert.x_max - 1.0) * i / per_side);
      const double g = specfun::log_potential(m.psi, x) - v(x) + m.ell;
      if (g > cert.exterior_margin) {
        cert.exterior_margin = g;
        cert.exterior_margin_location = x;
      }
    }
  }
  if (!(cert.exterior_margin < 0.0)) {
    throw RegularityViolation(3, "condition 3 violated: exterior variational inequality is not strict "
                                 "at x = " + describe(cert.exterior_margin_location) +
                                 " (margin " + describe(cert.exterior_margin) + ")");
  }
  // beyond x_max: 2 int log|x-s| dmu <= 2 log(|x|+1)
  cert.tail_margin = std::numeric_limits<double>::infinity();
  const int tail_points = 80;
  for (int side : {-1, 1}) {
    for (int i = 0; i <= tail_points; ++i) {
      const double r = cert.x_max * std::pow(cert.tail_max / cert.x_max, static_cast<double>(i) / tail_points);
      const double x = side * r;
      cert.tail_margin = std::min(cert.tail_margin, v(x) - m.ell - 2.0 * std::log(r + 1.0));
    }
  }
  if (!(cert.tail_margin > 0.0)) {
    throw RegularityViolation(3, "condition 3 not certified: tail bound fails beyond |x| = " +
                                     describe(cert.x_max));
  }
  cert.certified = true;
  return cert;
}

EquilibriumMeasure equilibrium_measure(const Potential& v) {
  EquilibriumMeasure m;
  m.psi = compute_density(v);
  m.ell = compute_ell(v, m.psi);
  m.regularity = check_one_cut_regular(v, m);
  return m;
}

std::vector<double> compose_affine(const std::vector<double>& monomial, double center,
                                   double scale) {
  // Horner with polynomial arithmetic: p <- p * (center + scale x) + a_k
  std::vector<double> p;
  for (std::size_t k = monomial.size(); k-- > 0;) {
    std::vector<double> next(p.size() + 1, 0.0);
    for (std::size_t j = 0; j < p.size(); ++j) {
      next[j] += center * p[j];
      next[j + 1] += scale * p[j];
    }
    next[0] += monomial[k];
    p = std::move(next);
  }
  return p;
}

std::complex<double> RescaledProblem::log_det_correction(int n, std::complex<double> total_alpha) const {
  const double nn = static_cast<double>(n);
  return (nn * nn + nn * total_alpha) * std::log(original.half_length());
}

double RescaledProblem::to_unit(double x_original) const {
  return (x_original - original.center()) / original.half_length();
}

double RescaledProblem::to_original(double x_unit) const {
  return original.center() + x_unit * original.half_length();
}

RescaledProblem rescale(const Potential& v_tilde, Interval support, const ChebSeries& w_on_interval,
                        const std::vector<double>& t_tilde) {
  if (!(support.a < support.b) || !std::isfinite(support.a) || !std::isfinite(support.b)) {
    throw DomainError("rescale: support must satisfy a < b");
  }
  std::vector<double> composed =
      compose_affine(v_tilde.coeffs(), support.center(), support.half_length());
  RescaledProblem out{Potential(std::move(composed), support), w_on_interval, {}, support};
  out.t.reserve(t_tilde.size());
  for (double t : t_tilde) {
    if (!(t > support.a && t < support.b)) {
      throw DomainError("rescale: singularity location " + describe(t) + " is outside (" +
                        describe(support.a) + ", " + describe(support.b) + ")");
    }
    out.t.push_back(out.to_unit(t));
  }
  return out;
}

}  // namespace hankel_fh::equilibrium
