#ifndef GKDPP_SPECFUN_HPP
#define GKDPP_SPECFUN_HPP

#include <complex>

#include "gkdpp/errors.hpp"

// Stable gamma-family evaluation over real and complex arguments. Everything
// downstream routes products and quotients of gamma values through the
// log-domain entry points here, so nothing overflows for |x| <= 1e6.
namespace gkdpp::specfun {

using Complex = std::complex<double>;

// Arguments closer than this to a nonpositive integer are treated as poles.
inline constexpr double kPoleGuard = 1e-14;

// log|Gamma(t)| together with the sign of Gamma(t), valid for real t away
// from nonpositive integers.
struct SignedLogGamma {
  double log_abs;
  int sign;  // +1 or -1
};

/// Principal-branch log Gamma. Lanczos approximation (g = 7, 9 coefficients)
/// for Re w >= 1/2, reflection otherwise. Throws PoleArgument within the
/// guard radius of a nonpositive integer.
Complex log_gamma(Complex w);

/// psi(w) = Gamma'(w)/Gamma(w); recurrence into |w| >= 12 plus the Bernoulli
/// asymptotic series, reflection for Re w < 1/2.
Complex digamma(Complex w);

/// Sign of Gamma(t) for real t: +1 on the positive axis, alternating between
/// consecutive nonpositive integers.
int gamma_sign(double t);

SignedLogGamma log_abs_gamma(double t);

/// Gamma(x+alpha)/Gamma(x+beta) computed in the log domain. Real alpha, beta
/// take the sign-tracked real path; complex parameters go through complex
/// log_gamma differences (2*pi*i ambiguities cancel under exp).
Complex gamma_ratio(double x, Complex alpha, Complex beta);
double gamma_ratio_real(double x, double alpha, double beta);

}  // namespace gkdpp::specfun

#endif  // GKDPP_SPECFUN_HPP
