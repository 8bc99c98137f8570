#include "hankel_fh/specfun.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <sstream>

#include "hankel_fh/mp.hpp"

namespace hankel_fh::specfun {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kLogTwoPi = 1.8378770664093454835606594728112;

// B_2, B_4, ..., B_28
constexpr std::array<double, 14> kBernoulliEven = {
    1.0 / 6.0,          -1.0 / 30.0,        1.0 / 42.0,        -1.0 / 30.0,
    5.0 / 66.0,         -691.0 / 2730.0,    7.0 / 6.0,         -3617.0 / 510.0,
    43867.0 / 798.0,    -174611.0 / 330.0,  854513.0 / 138.0,  -236364091.0 / 2730.0,
    8553103.0 / 6.0,    -23749461029.0 / 870.0};

bool is_nonpositive_integer(Complex z) {
  return z.imag() == 0.0 && z.real() <= 0.0 && z.real() == std::floor(z.real());
}

Complex stirling_log_gamma(Complex w) {
  Complex series = 0.0;
  const Complex inv = 1.0 / w;
  const Complex inv2 = inv * inv;
  Complex pw = inv;
  for (std::size_t k = 1; k <= 9; ++k) {
    const double kk = static_cast<double>(k);
    series += kBernoulliEven[k - 1] / (2.0 * kk * (2.0 * kk - 1.0)) * pw;
    pw *= inv2;
  }
  return (w - 0.5) * std::log(w) - w + 0.5 * kLogTwoPi + series;
}

// log G(w + 1) for Re w >= 12.
Complex asymptotic_log_barnes_g(Complex w) {
  const Complex lw = std::log(w);
  const Complex w2 = w * w;
  Complex series = 0.0;
  const Complex inv2 = 1.0 / w2;
  Complex pw = inv2;
  for (std::size_t k = 1; k <= 12; ++k) {
    const double kk = static_cast<double>(k);
    series += kBernoulliEven[k] / (4.0 * kk * (kk + 1.0)) * pw;
    pw *= inv2;
  }
  return 0.5 * w2 * lw - 0.75 * w2 + 0.5 * w * kLogTwoPi - lw / 12.0 +
         zeta_prime_minus_one() + series;
}

// zeta'(-1) = 1/12 - (gamma + log 2 pi)/12 + zeta'(2) / (2 pi^2), with
// zeta'(2) = -sum_k log k / k^2 summed by Euler-Maclaurin.
double compute_zeta_prime_minus_one() {
  constexpr mp::Precision kBits = 160;
  constexpr long kCut = 30;
  static const std::array<std::pair<const char*, const char*>, 14> kBernoulliExact = {{
      {"1", "6"},
      {"-1", "30"},
      {"1", "42"},
      {"-1", "30"},
      {"5", "66"},
      {"-691", "2730"},
      {"7", "6"},
      {"-3617", "510"},
      {"43867", "798"},
      {"-174611", "330"},
      {"854513", "138"},
      {"-236364091", "2730"},
      {"8553103", "6"},
      {"-23749461029", "870"},
  }};

  mp::Real sum(kBits);
  for (long k = 2; k < kCut; ++k) {
    mp::Real kr(k, kBits);
    sum += mp::log(kr) / (kr * kr);
  }
  const mp::Real n(kCut, kBits);
  const mp::Real log_n = mp::log(n);
  // tail integral and half endpoint value
  sum += (log_n + 1.0) / n;
  sum += 0.5 * log_n / (n * n);

  // f^{(m)}(x) = x^{-2-m} (a_m log x + b_m)
  mp::Real a(1L, kBits), b(0L, kBits);
  mp::Real factorial(1L, kBits);
  mp::Real x_pow = n * n;  // x^{2+m}
  for (int m = 0; m < 28; ++m) {
    const double p = -2.0 - m;
    mp::Real a_next = a * p;
    mp::Real b_next = b * p + a;
    a = std::move(a_next);
    b = std::move(b_next);
    x_pow *= n;
    factorial *= static_cast<double>(m + 1);
    const int order = m + 1;
    if (order % 2 == 1) {
      const int j = (order + 1) / 2;  // B_{2j}, (2j)!
      const auto& [num, den] = kBernoulliExact[static_cast<std::size_t>(j - 1)];
      mp::Real bern = mp::Real(std::string(num), kBits) / mp::Real(std::string(den), kBits);
      mp::Real fact_2j = factorial * static_cast<double>(order + 1);
      mp::Real deriv = (a * log_n + b) / x_pow;
      sum -= bern / fact_2j * deriv;
    }
    if (order >= 27) break;
  }

  const mp::Real zeta_prime_2 = -sum;
  const mp::Real pi = mp::pi(kBits);
  const mp::Real two_pi = pi * 2.0;
  mp::Real result = mp::Real(1L, kBits) / 12.0 -
                    (mp::euler_gamma(kBits) + mp::log(two_pi)) / 12.0 +
                    zeta_prime_2 / (pi * pi * 2.0);
  return result.to_double();
}

}  // namespace

Complex log_gamma(Complex z) {
  if (is_nonpositive_integer(z)) {
    std::ostringstream msg;
    msg << "log_gamma: pole of Gamma at z = " << z.real();
    throw DomainError(msg.str());
  }
  if (z == Complex(1.0) || z == Complex(2.0)) return 0.0;
  Complex shift_sum = 0.0;
  Complex w = z;
  while (w.real() < 15.0) {
    shift_sum += std::log(w);
    w += 1.0;
  }
  return stirling_log_gamma(w) - shift_sum;
}

Complex log_barnes_g(Complex z) {
  if (is_nonpositive_integer(z)) {
    std::ostringstream msg;
    msg << "log_barnes_g: G has a zero at z = " << z.real();
    throw DomainError(msg.str());
  }
  if (z == Complex(1.0) || z == Complex(2.0) || z == Complex(3.0)) return 0.0;
  Complex shift_sum = 0.0;
  Complex v = z;
  while (v.real() - 1.0 < 12.0) {
    shift_sum += log_gamma(v);
    v += 1.0;
  }
  return asymptotic_log_barnes_g(v - 1.0) - shift_sum;
}

double zeta_prime_minus_one() {
  static const double value = compute_zeta_prime_minus_one();
  return value;
}

ChebSeries chebyshev_from_monomial(const std::vector<double>& monomial) {
  if (monomial.empty()) return ChebSeries(std::vector<double>{0.0});
  // Horner in the T basis: p <- x p + a_k, with x T_j = (T_{j+1} + T_{|j-1|}) / 2.
  std::vector<double> p{monomial.back()};
  for (std::size_t k = monomial.size() - 1; k-- > 0;) {
    std::vector<double> next(p.size() + 1, 0.0);
    for (std::size_t j = 0; j < p.size(); ++j) {
      if (j == 0) {
        next[1] += p[0];
      } else {
        next[j + 1] += 0.5 * p[j];
        next[j - 1] += 0.5 * p[j];
      }
    }
    next[0] += monomial[k];
    p = std::move(next);
  }
  return ChebSeries(std::move(p));
}

ChebSeries cheb_fit(const std::function<double(double)>& f, std::size_t degree,
                    double tol) {
  if (degree < 2) throw DomainError("cheb_fit: degree must be at least 2");
  for (std::size_t n = degree;; n *= 2) {
    std::vector<double> values(n + 1);
    for (std::size_t j = 0; j <= n; ++j) {
      values[j] = f(std::cos(kPi * static_cast<double>(j) / static_cast<double>(n)));
    }
    std::vector<double> c(n + 1, 0.0);
    for (std::size_t k = 0; k <= n; ++k) {
      double s = 0.0;
      for (std::size_t j = 0; j <= n; ++j) {
        const double w = (j == 0 || j == n) ? 0.5 : 1.0;
        // cos(pi j k / n) via exact integer reduction keeps symmetry
        const std::size_t jk = (j * k) % (2 * n);
        s += w * values[j] * std::cos(kPi * static_cast<double>(jk) / static_cast<double>(n));
      }
      c[k] = 2.0 * s / static_cast<double>(n);
    }
    c[0] *= 0.5;
    c[n] *= 0.5;
    ChebSeries series(std::move(c));
    if (series.resolved(tol)) return series;
    if (n * 2 > kMaxFitDegree) {
      std::ostringstream msg;
      msg << "cheb_fit: series not resolved at tolerance " << tol << " with degree " << n;
      throw ResolutionError(msg.str());
    }
  }
}

double log_potential(const ChebSeries& psi, double x) {
  // (1 - s^2) psi(s) = sum_j d_j T_j(s), and
  //   int log|x - s| T_j(s) / sqrt(1 - s^2) ds = -pi log 2       (j = 0, |x| <= 1)
  //                                              -pi T_j(x) / j  (j >= 1, |x| <= 1)
  // with the analytic continuation through w = |x| + sqrt(x^2 - 1) outside.
  const ChebSeries d = times_one_minus_x2(psi);
  double integral = 0.0;
  if (std::abs(x) <= 1.0) {
    integral = -kPi * std::log(2.0) * d.coeff(0);
    double t0 = 1.0, t1 = x;
    for (std::size_t j = 1; j < d.size(); ++j) {
      integral -= kPi / static_cast<double>(j) * d.coeffs()[j] * t1;
      const double t2 = 2.0 * x * t1 - t0;
      t0 = t1;
      t1 = t2;
    }
  } else {
    const double ax = std::abs(x);
    const double w = ax + std::sqrt((ax - 1.0) * (ax + 1.0));
    const double r = (x > 0 ? 1.0 : -1.0) / w;
    integral = kPi * std::log(0.5 * w) * d.coeff(0);
    double rj = r;
    for (std::size_t j = 1; j < d.size(); ++j) {
      integral -= kPi / static_cast<double>(j) * d.coeffs()[j] * rj;
      rj *= r;
    }
  }
  return 2.0 * integral;
}

double log_kernel_integral(const ChebSeries& psi, double x) {
  if (std::abs(x) > 1.0) {
    throw DomainError("log_kernel_integral: x must lie in [-1, 1]");
  }
  return log_potential(psi, x);
}

}  // namespace hankel_fh::specfun
