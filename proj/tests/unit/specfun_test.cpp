#include <gtest/gtest.h>

#include <cmath>
#include <complex>
#include <numbers>
#include <thread>
#include <vector>

#include "hankel_fh/specfun.hpp"
#include "oracles.hpp"

namespace {

using hankel_fh::specfun::ChebSeries;
using hankel_fh::specfun::Complex;
using hankel_fh::specfun::USeries;
namespace sf = hankel_fh::specfun;
namespace ht = hankel_fh::testing;
constexpr double kPi = std::numbers::pi;

// Reduce an imaginary part difference modulo 2 pi.
double wrapped(double d) { return std::remainder(d, 2.0 * kPi); }

void expect_close_mod_2pi_i(Complex a, Complex b, double tol) {
  EXPECT_NEAR(a.real(), b.real(), tol);
  EXPECT_NEAR(wrapped(a.imag() - b.imag()), 0.0, tol);
}

TEST(LogGamma, TrivialValues) {
  EXPECT_EQ(sf::log_gamma(1.0), Complex(0.0));
  EXPECT_NEAR(sf::log_gamma(0.5).real(), 0.5 * std::log(kPi), 1e-14);
  EXPECT_NEAR(sf::log_gamma(0.5).imag(), 0.0, 1e-15);
}

TEST(LogGamma, ComplexValueAgainstFrozenReference) {
  const Complex want(-0.2271122407932273221864078039855450988922,
                     1.171292934664603033975812392082696365513);
  const Complex got = sf::log_gamma({2.5, 1.5});
  EXPECT_LT(std::abs(got - want), 1e-13 * std::abs(want));
  EXPECT_LT(std::abs(got - ht::lanczos_log_gamma({2.5, 1.5})), 1e-13);
}

TEST(LogGamma, LeftHalfPlaneBranch) {
  // principal slit-plane branch, continuous from the positive axis
  const Complex want(-0.4320888926132019205150333963667770251012,
                     -9.09334542128974150730952146377721837679);
  const Complex got = sf::log_gamma({-2.5, 0.3});
  EXPECT_NEAR(got.real(), want.real(), 1e-12);
  EXPECT_NEAR(got.imag(), want.imag(), 1e-12);
}

TEST(LogGamma, MatchesRealLgammaOnGrid) {
  for (double x = 0.05; x < 50.0; x *= 1.37) {
    EXPECT_NEAR(sf::log_gamma(x).real(), std::lgamma(x), 1e-13 * std::max(1.0, std::abs(std::lgamma(x))));
  }
}

TEST(LogGamma, PolesThrow) {
  EXPECT_THROW(sf::log_gamma(0.0), hankel_fh::DomainError);
  EXPECT_THROW(sf::log_gamma(-3.0), hankel_fh::DomainError);
}

TEST(LogGamma, ReflectionFormula) {
  // log Gamma(z) + log Gamma(1-z) = log pi - log sin(pi z)  (mod 2 pi i)
  int count = 0;
  for (double re : {-1.7, -0.3, 0.2, 0.5, 0.9, 1.6, 2.3}) {
    for (double im : {-1.1, 0.4, 1.3}) {
      if (count++ == 20) break;
      const Complex z(re, im);
      const Complex lhs = sf::log_gamma(z) + sf::log_gamma(1.0 - z);
      const Complex rhs = std::log(kPi) - std::log(std::sin(kPi * z));
      expect_close_mod_2pi_i(lhs, rhs, 1e-12);
    }
  }
  EXPECT_EQ(count, 21);
}

TEST(LogGamma, RelativeAccuracyAgainstLanczosUpTo50) {
  for (double r : {0.7, 3.0, 11.0, 27.0, 49.0}) {
    for (double th : {-1.2, -0.4, 0.0, 0.6, 1.3}) {
      const Complex z = std::polar(r, th);
      if (z.real() < 0.5) continue;
      const Complex want = ht::lanczos_log_gamma(z);
      EXPECT_LT(std::abs(sf::log_gamma(z) - want), 2e-13 * std::max(1.0, std::abs(want)));
    }
  }
}

TEST(BarnesG, TrivialValues) {
  EXPECT_EQ(sf::log_barnes_g(1.0), Complex(0.0));
  EXPECT_EQ(sf::log_barnes_g(3.0), Complex(0.0));
  EXPECT_NEAR(std::abs(sf::log_barnes_g(4.0) - std::log(2.0)), 0.0, 1e-13);
  EXPECT_NEAR(std::abs(sf::log_barnes_g(5.0) - std::log(12.0)), 0.0, 1e-13);
}

TEST(BarnesG, IntegralFormulaOracle) {
  const Complex z(1.5, 0.25);
  const Complex got = sf::log_barnes_g(z);
  EXPECT_LT(std::abs(got - ht::barnes_g_integral_oracle(z)), 1e-12);
  const Complex frozen(0.08214920912564192906018241592277745235254,
                       -0.01946252038494030142306034865953583044757);
  EXPECT_LT(std::abs(got - frozen), 1e-13);
}

TEST(BarnesG, IntegralFormulaOracleGrid) {
  for (double re : {0.6, 1.0, 1.9, 2.7}) {
    for (double im : {-0.8, 0.0, 0.35, 1.2}) {
      const Complex z(re, im);
      EXPECT_LT(std::abs(sf::log_barnes_g(z) - ht::barnes_g_integral_oracle(z)), 1e-11)
          << "z = " << z;
    }
  }
}

TEST(BarnesG, FrozenFarValue) {
  const Complex want(-0.4301515384024900405212712416777914417682,
                     -0.3623122553389135018522550906736932307944);
  EXPECT_LT(std::abs(sf::log_barnes_g({3.2, -1.1}) - want), 1e-12);
}

TEST(BarnesG, RecurrenceOnComplexGrid) {
  int count = 0;
  for (int i = 0; i < 50; ++i) {
    const double r = 0.3 + 4.6 * ((i * 37) % 50) / 50.0;
    const double th = -3.0 + 6.0 * i / 49.0;
    const Complex z = std::polar(r, th);
    const Complex lhs = sf::log_barnes_g(z + 1.0);
    const Complex rhs = sf::log_gamma(z) + sf::log_barnes_g(z);
    expect_close_mod_2pi_i(lhs, rhs, 1e-12 * std::max(1.0, std::abs(lhs)));
    ++count;
  }
  EXPECT_EQ(count, 50);
}

TEST(BarnesG, ZerosThrow) {
  EXPECT_THROW(sf::log_barnes_g(0.0), hankel_fh::DomainError);
  EXPECT_THROW(sf::log_barnes_g(-2.0), hankel_fh::DomainError);
}

TEST(ZetaPrime, AgainstGlaisherOracle) {
  const double z = sf::zeta_prime_minus_one();
  EXPECT_LT(z, 0.0);
  EXPECT_NEAR(z, ht::zeta_prime_minus_one_glaisher(), 1e-13);
  EXPECT_NEAR(z, -0.165421143700450929213919660242780642764, 1e-15);
}

TEST(ZetaPrime, ConcurrentFirstUse) {
  std::vector<double> seen(8);
  std::vector<std::thread> threads;
  for (std::size_t i = 0; i < seen.size(); ++i) {
    threads.emplace_back([&seen, i] { seen[i] = sf::zeta_prime_minus_one(); });
  }
  for (auto& t : threads) t.join();
  for (double v : seen) EXPECT_EQ(v, seen[0]);
}

TEST(ChebFit, PolynomialIdentities) {
  const ChebSeries t2 = sf::cheb_fit([](double x) { return 2 * x * x - 1; }, 8);
  for (std::size_t k = 0; k < t2.size(); ++k) EXPECT_NEAR(t2.coeffs()[k], k == 2 ? 1.0 : 0.0, 1e-15);
  const ChebSeries t1 = sf::cheb_fit([](double x) { return x; }, 4);
  ASSERT_EQ(t1.size(), 5u);
  for (std::size_t k = 0; k < t1.size(); ++k) EXPECT_NEAR(t1.coeffs()[k], k == 1 ? 1.0 : 0.0, 1e-15);
}

TEST(ChebFit, ExpLeadingCoefficientIsBesselI0) {
  const ChebSeries e = sf::cheb_fit([](double x) { return std::exp(x); }, 20);
  EXPECT_NEAR(e.coeff(0), 1.266065877752008335598244625214717537608, 1e-14);
  // I_0(1) = sum 1/(k!)^2 / 4^k
  double i0 = 0, term = 1;
  for (int k = 0; k < 30; ++k) {
    i0 += term;
    term /= 4.0 * (k + 1) * (k + 1);
  }
  EXPECT_NEAR(e.coeff(0), i0, 1e-14);
  EXPECT_TRUE(e.resolved());
}

TEST(ChebFit, UnresolvedThrows) {
  EXPECT_THROW(sf::cheb_fit([](double x) { return std::abs(x); }, 8),
               hankel_fh::ResolutionError);
  EXPECT_THROW(sf::cheb_fit([](double x) { return x; }, 1), hankel_fh::DomainError);
}

TEST(ChebFit, AutoDoublingResolvesSmoothFunction) {
  const ChebSeries f = sf::cheb_fit([](double x) { return 1.0 / (1.0 + 4 * x * x); }, 4);
  EXPECT_TRUE(f.resolved());
  EXPECT_NEAR(f(0.3), 1.0 / (1.0 + 0.36), 1e-13);
}

TEST(Monomial, ConversionMatchesEvaluation) {
  const std::vector<double> a{0.3, -1.2, 0.7, 2.5, -0.4, 0.11};
  const ChebSeries c = sf::chebyshev_from_monomial(a);
  for (double x = -1; x <= 1; x += 0.125) {
    double p = 0;
    for (std::size_t k = a.size(); k-- > 0;) p = p * x + a[k];
    EXPECT_NEAR(c(x), p, 1e-14);
  }
}

TEST(WeightedIntegrals, BasisValues) {
  auto [a0, b0] = sf::cheb_weighted_integrals(ChebSeries::basis(0));
  EXPECT_NEAR(a0, kPi, 1e-15);
  EXPECT_NEAR(b0, kPi / 2, 1e-15);
  auto [a1, b1] = sf::cheb_weighted_integrals(ChebSeries::basis(1));
  EXPECT_EQ(a1, 0.0);
  EXPECT_EQ(b1, 0.0);
  auto [a2, b2] = sf::cheb_weighted_integrals(ChebSeries::basis(2));
  EXPECT_EQ(a2, 0.0);
  const double want = ht::integrate_sqrt([](double x) { return 2 * x * x - 1; });
  EXPECT_NEAR(b2, want, 1e-13);
  EXPECT_NEAR(b2, -kPi / 4, 1e-15);
}

TEST(WeightedIntegrals, EvenPolynomialsMatchQuadrature) {
  const std::vector<std::vector<double>> polys{{1.0, 0, 3.0}, {0.2, 0, -1.5, 0, 0.7}, {-2, 0, 0, 0, 0, 0, 1.1}};
  for (const auto& a : polys) {
    const ChebSeries c = sf::chebyshev_from_monomial(a);
    auto p = [&](double x) {
      double v = 0;
      for (std::size_t k = a.size(); k-- > 0;) v = v * x + a[k];
      return v;
    };
    auto [first, second] = sf::cheb_weighted_integrals(c);
    EXPECT_NEAR(first, ht::integrate_inv_sqrt(p), 1e-12);
    EXPECT_NEAR(second, ht::integrate_sqrt(p), 1e-12);
  }
}

TEST(Hilbert, SpecExamples) {
  EXPECT_EQ(sf::hilbert_T(ChebSeries::basis(0), 0.4), 0.0);
  EXPECT_NEAR(sf::hilbert_T(ChebSeries::basis(1), 0.3), kPi, 1e-14);
  EXPECT_NEAR(sf::hilbert_T(ChebSeries::basis(3), 0.5), 0.0, 1e-14);
  EXPECT_NEAR(sf::hilbert_U(USeries::basis(0), 0.0), 0.0, 1e-15);
  EXPECT_NEAR(sf::hilbert_U(USeries::basis(1), 0.5), kPi / 2, 1e-14);
  EXPECT_NEAR(sf::hilbert_U(USeries::basis(2), 0.2), -kPi * sf::chebyshev_t(3, 0.2), 1e-14);
}

TEST(Hilbert, DomainErrors) {
  EXPECT_THROW(sf::hilbert_T(ChebSeries::basis(1), 1.0), hankel_fh::DomainError);
  EXPECT_THROW(sf::hilbert_U(USeries::basis(1), -1.2), hankel_fh::DomainError);
}

TEST(Hilbert, BasisIdentitiesAgainstPvQuadrature) {
  for (std::size_t k = 0; k <= 12; ++k) {
    for (double y : {-0.9, -0.5, 0.1, 0.5, 0.9}) {
      auto tk = [k](double x) { return sf::chebyshev_t(k, x); };
      const double want_t = ht::pv_integral(tk, false, y);
      EXPECT_NEAR(sf::hilbert_T(ChebSeries::basis(k), y), want_t, 1e-12) << "T k=" << k << " y=" << y;
      auto uk = [k](double x) { return sf::chebyshev_u(k, x); };
      const double want_u = ht::pv_integral(uk, true, y);
      EXPECT_NEAR(sf::hilbert_U(USeries::basis(k), y), want_u, 1e-12) << "U k=" << k << " y=" << y;
    }
  }
}

TEST(Hilbert, ComplexCoefficients) {
  const sf::ComplexChebSeries f(std::vector<std::complex<double>>{{0, 0}, {1, 2}, {0, -1}});
  const std::complex<double> got = sf::hilbert_T(f, 0.25);
  EXPECT_NEAR(std::abs(got - kPi * (Complex(1, 2) + Complex(0, -1) * 0.5)), 0.0, 1e-14);
}

TEST(LogKernel, SemicircleReproducesVariationalEquality) {
  const ChebSeries gue(std::vector<double>{2.0 / kPi});
  const double ell = 1 + 2 * std::log(2.0);
  EXPECT_NEAR(sf::log_kernel_integral(gue, 0.0), -1 - 2 * std::log(2.0), 1e-14);
  EXPECT_NEAR(sf::log_kernel_integral(gue, 1.0), 1 - 2 * std::log(2.0), 1e-14);
  for (int i = 0; i <= 20; ++i) {
    const double x = -1.0 + i / 10.0;
    EXPECT_NEAR(sf::log_kernel_integral(gue, x), 2 * x * x - ell, 1e-9);
  }
  EXPECT_THROW(sf::log_kernel_integral(gue, 1.01), hankel_fh::DomainError);
}

TEST(LogKernel, AgainstDirectQuadrature) {
  const ChebSeries psi(std::vector<double>{0.4, 0.1, 0.05, -0.02});
  for (double x : {-0.95, -0.3, 0.0, 0.45, 1.0, 1.5, -3.0}) {
    auto f = [&](double s) { return 2.0 * std::log(std::abs(x - s)) * psi(s) * ht::sqrt_weight(s); };
    double want;
    if (std::abs(x) < 1.0) {
      want = ht::integrate(f, -1.0, x) + ht::integrate(f, x, 1.0);
    } else {
      want = ht::integrate(f, -1.0, 1.0);
    }
    EXPECT_NEAR(sf::log_potential(psi, x), want, 1e-11) << "x = " << x;
  }
}

TEST(LogKernel, EvenDensityGivesEvenPotential) {
  const ChebSeries psi(std::vector<double>{0.5, 0.0, 0.1, 0.0, 0.03});
  for (double x : {0.1, 0.6, 0.99, 2.0}) {
    EXPECT_NEAR(sf::log_potential(psi, x), sf::log_potential(psi, -x), 1e-14);
  }
}

}  // namespace
