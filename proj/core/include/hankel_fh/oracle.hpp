#pragma once

// Reference values for Hankel determinants at finite n: extended-precision
// moments and factorizations, an orthogonal-polynomial recurrence for
// positive weights, and Monte Carlo sampling of thinned GUE spectra.

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

#include "hankel_fh/asymptotics.hpp"
#include "hankel_fh/mp.hpp"

namespace hankel_fh::oracle {

using asymptotics::FieldW;
using asymptotics::SingularityConfig;
using asymptotics::ThinningSpec;
using equilibrium::Potential;

/// w(x) = e^{-n V(x)} e^{W(x)} prod |x - t_j|^{alpha_j} omega_{beta_j}(x) on the
/// real line. W is extended off [-1,1] as the polynomial its series defines.
struct WeightSpec {
  Potential v = Potential::gaussian();
  FieldW w;
  SingularityConfig cfg;
  int n = 1;

  /// DomainError if n < 1 or e^{W - nV} is not integrable.
  void validate() const;
  bool is_positive() const;
};

enum class Method { kMomentDeterminant, kOpRecurrence };
std::string to_string(Method m);

struct HankelResult {
  double log_abs = 0.0;
  /// in (-pi, pi]
  double phase = 0.0;
  /// sum of the pivot arguments before reduction mod 2 pi
  double phase_unwrapped = 0.0;
  int n = 0;
  mp::Precision precision_bits = 0;
  Method method = Method::kMomentDeterminant;
  bool converged = true;
  bool is_zero = false;
  /// |log_abs(bits) - log_abs(bits/2)|, when the recomputation was done
  double precision_delta = 0.0;
  mp::Real log_abs_mp;
};

/// max(256, 48 n)
mp::Precision default_precision_bits(int n);

/// Quadrature of the weight: nodes x_i and complex masses lambda_i with
/// int f w ~ sum lambda_i f(x_i) for polynomials f of degree <= 2 count - 2.
struct Discretization {
  std::vector<mp::Real> x;
  std::vector<mp::Complex> lambda;
  /// sum lambda_i x_i^k, k < 2 count - 1
  std::vector<mp::Complex> moments;
  int level = 0;
};

/// Panel-wise double-exponential quadrature split at every t_j; refined until
/// the first 2 count - 1 moments are stable. ConvergenceError if refinement stalls.
Discretization discretize(const WeightSpec& ws, int count, mp::Precision bits);

/// w_0 .. w_{2 count - 2}
std::vector<mp::Complex> compute_moments(const WeightSpec& ws, int count, mp::Precision bits);

/// log det (w_{i+j})_{i,j<k} by LU with partial pivoting at `bits`. A singular
/// matrix gives is_zero = true and log_abs = -inf.
HankelResult hankel_log_det(const std::vector<mp::Complex>& moments, int k, mp::Precision bits);

/// log D_n = sum_{j<n} log h_j from the Stieltjes procedure on the discretized
/// weight. DomainError unless the weight is positive.
HankelResult op_recurrence_log_det(const WeightSpec& ws, mp::Precision bits);

/// D_n for the weight of `ws` (n x n, n = ws.n), recomputed at max(128, bits/2)
/// to set `converged` (agreement 1e-8 in log_abs and phase).
HankelResult oracle_log_det(const WeightSpec& ws, mp::Precision bits,
                            Method method = Method::kMomentDeterminant);

struct LogDetRatio {
  /// log|num/den| + i (phase difference in (-pi, pi])
  std::complex<double> value;
  /// unreduced phase difference of the pivot products
  double phase_unwrapped = 0.0;
  bool converged = true;
};

/// log D(num) - log D(den). DomainError if the weights have different n or
/// the denominator vanishes.
LogDetRatio log_det_ratio(const WeightSpec& num, const WeightSpec& den, mp::Precision bits);

struct McEstimate {
  double estimate = 0.0;
  double standard_error = 0.0;
  long samples = 0;
};

inline constexpr long kMcBatchSize = 1000;

/// P(no thinned eigenvalue in the sectors of K) for the GUE weight e^{-2n tr M^2}.
/// Batch b draws from mt19937_64 seeded by (seed, b); batches run on
/// `threads` workers (0: hardware concurrency) and the result does not
/// depend on the thread count. DomainError unless 1 <= n <= 50 and samples >= 1e4.
McEstimate mc_gap_probability(const ThinningSpec& spec, int n, long samples, std::uint64_t seed,
                              unsigned threads = 0);

}  // namespace hankel_fh::oracle
