#ifndef GKDPP_TESTS_ORACLES_HPP
#define GKDPP_TESTS_ORACLES_HPP

// Independent reference implementations used only to freeze expected values
// in tests. Everything here works in extended (long double) precision and
// never calls into the library under test.

#include <cmath>
#include <vector>

namespace oracle {

// digamma by recurrence into u >= 48 plus the Bernoulli asymptotic series.
inline long double digamma_ld(long double u) {
  long double acc = 0.0L;
  while (u < 48.0L) {
    acc -= 1.0L / u;
    u += 1.0L;
  }
  const long double v = 1.0L / (u * u);
  // B_{2n}/(2n) coefficients
  const long double series =
      v * (1.0L / 12.0L -
      v * (1.0L / 120.0L -
      v * (1.0L / 252.0L -
      v * (1.0L / 240.0L -
      v * (1.0L / 132.0L -
      v * (691.0L / 32760.0L -
      v * (1.0L / 12.0L)))))));
  return acc + std::log(u) - 0.5L / u - series;
}

// log Gamma via Stirling with recurrence into u >= 32 (u > 0).
inline long double log_gamma_ld(long double u) {
  long double shift = 0.0L;
  while (u < 32.0L) {
    shift -= std::log(u);
    u += 1.0L;
  }
  const long double v = 1.0L / (u * u);
  const long double series =
      (1.0L / 12.0L -
       v * (1.0L / 360.0L -
       v * (1.0L / 1260.0L -
       v * (1.0L / 1680.0L - v * (1.0L / 1188.0L))))) / u;
  const long double half_log_2pi = 0.918938533204672741780329736406L;
  return shift + (u - 0.5L) * std::log(u) - u + half_log_2pi + series;
}

// Gamma(t) for any real t off the poles, through reflection for t < 0.
inline long double gamma_ld(long double t) {
  if (t > 0.0L) return std::exp(log_gamma_ld(t));
  const long double pi = 3.14159265358979323846264338328L;
  // Gamma(t) Gamma(1-t) = pi / sin(pi t)
  return pi / (std::sin(pi * t) * std::exp(log_gamma_ld(1.0L - t)));
}

// ordinary least squares slope of y against x
inline long double fit_slope(const std::vector<long double>& x,
                             const std::vector<long double>& y) {
  long double sx = 0, sy = 0, sxx = 0, sxy = 0;
  const auto n = static_cast<long double>(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    sx += x[i];
    sy += y[i];
    sxx += x[i] * x[i];
    sxy += x[i] * y[i];
  }
  return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

// regularized upper incomplete gamma Q(s, x), series/continued fraction split
inline double gamma_q(double s, double x) {
  if (x < 0.0 || s <= 0.0) return 0.0;
  const double lg = std::lgamma(s);
  if (x < s + 1.0) {
    // P(s,x) by series, Q = 1 - P
    double term = 1.0 / s;
    double sum = term;
    for (int n = 1; n < 500; ++n) {
      term *= x / (s + n);
      sum += term;
      if (std::abs(term) < std::abs(sum) * 1e-15) break;
    }
    const double p = sum * std::exp(-x + s * std::log(x) - lg);
    return 1.0 - p;
  }
  // Lentz continued fraction for Q
  const double tiny = 1e-300;
  double b = x + 1.0 - s;
  double c = 1.0 / tiny;
  double d = 1.0 / b;
  double h = d;
  for (int i = 1; i < 500; ++i) {
    const double an = -i * (i - s);
    b += 2.0;
    d = an * d + b;
    if (std::abs(d) < tiny) d = tiny;
    c = b + an / c;
    if (std::abs(c) < tiny) c = tiny;
    d = 1.0 / d;
    const double del = d * c;
    h *= del;
    if (std::abs(del - 1.0) < 1e-15) break;
  }
  return std::exp(-x + s * std::log(x) - lg) * h;
}

// chi-square upper tail p-value with k degrees of freedom
inline double chi_square_pvalue(double statistic, int dof) {
  return gamma_q(0.5 * dof, 0.5 * statistic);
}

}  // namespace oracle

#endif  // GKDPP_TESTS_ORACLES_HPP
