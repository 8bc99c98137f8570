#pragma once

#include <complex>

#include "hankel_fh/chebyshev.hpp"

namespace hankel_fh::specfun {

using Complex = std::complex<double>;

/// Principal branch of log Gamma(z): analytic continuation of the real
/// log-gamma function to the plane slit along (-inf, 0].
///
/// Argument is shifted to Re z >= 15 and the Stirling series is summed there.
/// Throws DomainError at the poles z = 0, -1, -2, ...
Complex log_gamma(Complex z);

/// log G(z) for Barnes' G-function, G(z+1) = Gamma(z) G(z), G(1) = 1.
///
/// The branch is continuous along rays from the real axis (the same
/// convention as log_gamma). Uses the large-|z| asymptotic series after
/// upward recurrence; throws DomainError at the zeros z = 0, -1, -2, ...
Complex log_barnes_g(Complex z);

/// zeta'(-1), computed once to ~30 significant digits and cached.
double zeta_prime_minus_one();

}  // namespace hankel_fh::specfun
