#pragma once

// Truncated Chebyshev expansions on [-1,1] and the closed-form integral
// identities they diagonalize.

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <functional>
#include <numbers>
#include <utility>
#include <vector>

#include "hankel_fh/errors.hpp"

namespace hankel_fh::specfun {

inline constexpr double kDefaultResolutionTol = 1e-13;
inline constexpr std::size_t kMaxFitDegree = 512;

namespace detail {

template <class T>
double magnitude(const T& v) {
  return std::abs(v);
}

}  // namespace detail

/// f(x) = sum_k c_k T_k(x) on [-1,1].
template <class T>
class BasicChebSeries {
 public:
  using value_type = T;

  BasicChebSeries() = default;
  explicit BasicChebSeries(std::vector<T> coeffs) : coeffs_(std::move(coeffs)) {}

  /// scale * T_k
  static BasicChebSeries basis(std::size_t k, T scale = T(1)) {
    std::vector<T> c(k + 1, T(0));
    c[k] = scale;
    return BasicChebSeries(std::move(c));
  }

  const std::vector<T>& coeffs() const noexcept { return coeffs_; }
  std::vector<T>& coeffs() noexcept { return coeffs_; }
  std::size_t size() const noexcept { return coeffs_.size(); }
  bool empty() const noexcept { return coeffs_.empty(); }

  T coeff(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : T(0); }

  /// Clenshaw summation.
  T operator()(double x) const {
    T b1(0), b2(0);
    for (std::size_t k = coeffs_.size(); k-- > 1;) {
      T b0 = coeffs_[k] + 2.0 * x * b1 - b2;
      b2 = b1;
      b1 = b0;
    }
    if (coeffs_.empty()) return T(0);
    return coeffs_[0] + x * b1 - b2;
  }

  double max_abs_coeff() const {
    double m = 0.0;
    for (const auto& c : coeffs_) m = std::max(m, detail::magnitude(c));
    return m;
  }

  /// max(|c_{N-1}|, |c_N|) <= tol * max_k |c_k|
  bool resolved(double tol = kDefaultResolutionTol) const {
    if (coeffs_.size() < 2) return true;
    const std::size_t n = coeffs_.size() - 1;
    const double tail =
        std::max(detail::magnitude(coeffs_[n]), detail::magnitude(coeffs_[n - 1]));
    return tail <= tol * max_abs_coeff();
  }

  BasicChebSeries& operator+=(const BasicChebSeries& o) {
    if (o.size() > size()) coeffs_.resize(o.size(), T(0));
    for (std::size_t k = 0; k < o.size(); ++k) coeffs_[k] += o.coeffs_[k];
    return *this;
  }
  BasicChebSeries& operator-=(const BasicChebSeries& o) {
    if (o.size() > size()) coeffs_.resize(o.size(), T(0));
    for (std::size_t k = 0; k < o.size(); ++k) coeffs_[k] -= o.coeffs_[k];
    return *this;
  }
  BasicChebSeries& operator*=(T s) {
    for (auto& c : coeffs_) c *= s;
    return *this;
  }

  friend BasicChebSeries operator+(BasicChebSeries a, const BasicChebSeries& b) { return a += b; }
  friend BasicChebSeries operator-(BasicChebSeries a, const BasicChebSeries& b) { return a -= b; }
  friend BasicChebSeries operator*(BasicChebSeries a, T s) { return a *= s; }
  friend BasicChebSeries operator*(T s, BasicChebSeries a) { return a *= s; }

 private:
  std::vector<T> coeffs_;
};

/// g(x) = sum_k c_k U_k(x) on [-1,1]; appears as the derivative of a T-series.
template <class T>
class BasicUSeries {
 public:
  BasicUSeries() = default;
  explicit BasicUSeries(std::vector<T> coeffs) : coeffs_(std::move(coeffs)) {}

  static BasicUSeries basis(std::size_t k, T scale = T(1)) {
    std::vector<T> c(k + 1, T(0));
    c[k] = scale;
    return BasicUSeries(std::move(c));
  }

  const std::vector<T>& coeffs() const noexcept { return coeffs_; }
  std::size_t size() const noexcept { return coeffs_.size(); }

  T operator()(double x) const {
    // Clenshaw for U: same recurrence, different final step.
    T b1(0), b2(0);
    for (std::size_t k = coeffs_.size(); k-- > 0;) {
      T b0 = coeffs_[k] + 2.0 * x * b1 - b2;
      b2 = b1;
      b1 = b0;
    }
    return b1;
  }

 private:
  std::vector<T> coeffs_;
};

using ChebSeries = BasicChebSeries<double>;
using ComplexChebSeries = BasicChebSeries<std::complex<double>>;
using USeries = BasicUSeries<double>;

inline double chebyshev_t(std::size_t k, double x) {
  if (k == 0) return 1.0;
  double t0 = 1.0, t1 = x;
  for (std::size_t j = 2; j <= k; ++j) {
    const double t2 = 2.0 * x * t1 - t0;
    t0 = t1;
    t1 = t2;
  }
  return t1;
}

/// U_k(x); U_{-1} = 0 is handled by callers.
inline double chebyshev_u(std::size_t k, double x) {
  double u0 = 1.0, u1 = 2.0 * x;
  if (k == 0) return u0;
  for (std::size_t j = 2; j <= k; ++j) {
    const double u2 = 2.0 * x * u1 - u0;
    u0 = u1;
    u1 = u2;
  }
  return u1;
}

/// T_k' = k U_{k-1}
template <class T>
BasicUSeries<T> derivative(const BasicChebSeries<T>& f) {
  if (f.size() < 2) return BasicUSeries<T>(std::vector<T>{T(0)});
  std::vector<T> g(f.size() - 1);
  for (std::size_t k = 1; k < f.size(); ++k) g[k - 1] = static_cast<double>(k) * f.coeffs()[k];
  return BasicUSeries<T>(std::move(g));
}

/// Re-expand a U-series in the T basis: U_n = 2 sum_{j = n, n-2, ... > 0} T_j (+ T_0 if n even).
template <class T>
BasicChebSeries<T> to_chebyshev(const BasicUSeries<T>& g) {
  std::vector<T> c(std::max<std::size_t>(g.size(), 1), T(0));
  for (std::size_t n = 0; n < g.size(); ++n) {
    const T gn = g.coeffs()[n];
    for (std::size_t j = n;; j -= 2) {
      c[j] += (j == 0 ? 1.0 : 2.0) * gn;
      if (j < 2) break;
    }
  }
  return BasicChebSeries<T>(std::move(c));
}

/// Exact product using T_j T_k = (T_{j+k} + T_{|j-k|}) / 2.
template <class T>
BasicChebSeries<T> multiply(const BasicChebSeries<T>& a, const BasicChebSeries<T>& b) {
  if (a.empty() || b.empty()) return BasicChebSeries<T>();
  std::vector<T> c(a.size() + b.size() - 1, T(0));
  for (std::size_t j = 0; j < a.size(); ++j) {
    for (std::size_t k = 0; k < b.size(); ++k) {
      const T p = 0.5 * a.coeffs()[j] * b.coeffs()[k];
      c[j + k] += p;
      c[j > k ? j - k : k - j] += p;
    }
  }
  return BasicChebSeries<T>(std::move(c));
}

/// (1 - x^2) f(x) in the T basis.
template <class T>
BasicChebSeries<T> times_one_minus_x2(const BasicChebSeries<T>& f) {
  return multiply(f, BasicChebSeries<T>(std::vector<T>{T(0.5), T(0), T(-0.5)}));
}

/// Exact conversion of sum_k a_k x^k to the T basis.
ChebSeries chebyshev_from_monomial(const std::vector<double>& monomial);

/// Interpolant at N+1 Chebyshev-Gauss-Lobatto points. The degree is doubled
/// (up to kMaxFitDegree) until the series is resolved at `tol`.
ChebSeries cheb_fit(const std::function<double(double)>& f, std::size_t degree,
                    double tol = kDefaultResolutionTol);

/// (int f / sqrt(1-x^2), int f sqrt(1-x^2)) over [-1,1] in closed form.
template <class T>
std::pair<T, T> cheb_weighted_integrals(const BasicChebSeries<T>& f) {
  constexpr double pi = std::numbers::pi;
  return {pi * f.coeff(0), 0.5 * pi * f.coeff(0) - 0.25 * pi * f.coeff(2)};
}

namespace detail {

inline void require_open_interval(double y, const char* op) {
  if (!(std::abs(y) < 1.0)) {
    throw DomainError(std::string(op) + ": evaluation point must satisfy |y| < 1");
  }
}

}  // namespace detail

/// PV int_{-1}^{1} f(x) / (sqrt(1-x^2) (x - y)) dx = pi sum_{k>=1} c_k U_{k-1}(y).
template <class T>
T hilbert_T(const BasicChebSeries<T>& f, double y) {
  detail::require_open_interval(y, "hilbert_T");
  if (f.size() < 2) return T(0);
  std::vector<T> shifted(f.coeffs().begin() + 1, f.coeffs().end());
  return std::numbers::pi * BasicUSeries<T>(std::move(shifted))(y);
}

/// PV int_{-1}^{1} g(x) sqrt(1-x^2) / (x - y) dx = -pi sum_k g_k T_{k+1}(y).
template <class T>
T hilbert_U(const BasicUSeries<T>& g, double y) {
  detail::require_open_interval(y, "hilbert_U");
  std::vector<T> shifted(g.size() + 1, T(0));
  for (std::size_t k = 0; k < g.size(); ++k) shifted[k + 1] = g.coeffs()[k];
  return -std::numbers::pi * BasicChebSeries<T>(std::move(shifted))(y);
}

/// 2 int_{-1}^{1} log|x - s| psi(s) sqrt(1-s^2) ds for |x| <= 1.
double log_kernel_integral(const ChebSeries& psi, double x);

/// Same integral for any real x (the exterior branch uses |x| > 1).
double log_potential(const ChebSeries& psi, double x);

}  // namespace hankel_fh::specfun
