#include "gkdpp/gamma_kernel.hpp"

#include <cmath>
#include <numbers>

#include "gkdpp/specfun.hpp"

namespace gkdpp {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kImaginaryGuard = 1e-10;
constexpr double kNearDegenerate = 1e-8;

using specfun::digamma;
using specfun::gamma_sign;
using specfun::log_abs_gamma;
using specfun::log_gamma;

double real_digamma(double u) { return digamma(Complex(u, 0.0)).real(); }

// psi'(u) by Richardson-extrapolated symmetric differences of psi,
// eps = 1e-6; accuracy ~1e-8, used only on the equal-parameter diagonal.
double trigamma_fd(double u) {
  const double eps = 1e-6;
  const auto diff = [&](double h) {
    return (real_digamma(u + h) - real_digamma(u - h)) / (2.0 * h);
  };
  const double d1 = diff(eps);
  const double d2 = diff(eps / 2.0);
  return (4.0 * d2 - d1) / 3.0;
}

// t / sin(t), Taylor expansion near the removable singularity.
Complex sinc_inverse(Complex t) {
  if (std::abs(t) < 1e-4) {
    const Complex t2 = t * t;
    return 1.0 + t2 / 6.0 + 7.0 * t2 * t2 / 360.0;
  }
  return t / std::sin(t);
}

// A(x)/A(y), stable for large sites: computed from log-gamma differences.
Complex a_weight_ratio(const AdmissibleParams& p, LatticePoint x, LatticePoint y) {
  if (p.series() == Series::principal) {
    const double tx = log_gamma(Complex(x.x(), 0.0) + p.z() + 0.5).imag();
    const double ty = log_gamma(Complex(y.x(), 0.0) + p.z() + 0.5).imag();
    return std::exp(Complex(0.0, tx - ty));
  }
  const double zr = p.z().real(), zpr = p.zp().real();
  const auto gx1 = log_abs_gamma(x.x() + zr + 0.5);
  const auto gx2 = log_abs_gamma(x.x() + zpr + 0.5);
  const auto gy1 = log_abs_gamma(y.x() + zr + 0.5);
  const auto gy2 = log_abs_gamma(y.x() + zpr + 0.5);
  const double logr = 0.5 * ((gx1.log_abs - gx2.log_abs) - (gy1.log_abs - gy2.log_abs));
  const double sign = static_cast<double>(gx1.sign * gy1.sign);
  return Complex(sign * std::exp(logr), 0.0);
}

// Equal-parameter branch K^{(a,a)}.
double kernel_entry_equal(double a, LatticePoint x, LatticePoint y) {
  const double c = std::sin(kPi * a) / kPi;
  if (x == y) return c * c * trigamma_fd(x.x() + a + 0.5);
  const int sx = gamma_sign(x.x() + a + 0.5);
  const int sy = gamma_sign(y.x() + a + 0.5);
  const double dpsi = real_digamma(x.x() + a + 0.5) - real_digamma(y.x() + a + 0.5);
  return c * c * static_cast<double>(sx * sy) * dpsi / (x.x() - y.x());
}

double take_real(Complex v, const char* what) {
  if (std::abs(v.imag()) > kImaginaryGuard)
    throw ImaginaryResidue(std::string(what) + ": imaginary residue above 1e-10");
  return v.real();
}

}  // namespace

Complex a_weight(const AdmissibleParams& p, LatticePoint x) {
  if (p.series() == Series::principal) {
    const Complex lg = log_gamma(Complex(x.x(), 0.0) + p.z() + 0.5);
    return std::exp(Complex(0.0, lg.imag()));
  }
  const auto g1 = log_abs_gamma(x.x() + p.z().real() + 0.5);
  const auto g2 = log_abs_gamma(x.x() + p.zp().real() + 0.5);
  return Complex(g1.sign * std::exp(0.5 * (g1.log_abs - g2.log_abs)), 0.0);
}

double c_constant(const AdmissibleParams& p) {
  const Complex z = p.z(), zp = p.zp();
  const Complex v =
      std::sin(kPi * z) * std::sin(kPi * zp) / (kPi * kPi) * sinc_inverse(kPi * (z - zp));
  return take_real(v, "c_constant");
}

double kernel_entry(const AdmissibleParams& p, LatticePoint x, LatticePoint y) {
  const Complex z = p.z(), zp = p.zp();
  if (std::abs(z - zp) < kNearDegenerate) {
    const double mid = 0.5 * (z.real() + zp.real());
    if (std::abs(mid - std::round(mid)) > 1e-3)
      return kernel_entry_equal(mid, x, y);
  }
  if (p.series() == Series::degenerate)
    return kernel_entry_equal(z.real(), x, y);

  const Complex pre =
      std::sin(kPi * z) * std::sin(kPi * zp) / (kPi * std::sin(kPi * (z - zp)));
  if (x == y) {
    const Complex w(x.x(), 0.0);
    const Complex v = pre * (digamma(w + z + 0.5) - digamma(w + zp + 0.5));
    return take_real(v, "kernel_entry diagonal");
  }
  const Complex r = a_weight_ratio(p, x, y);
  const Complex v = pre * (r - 1.0 / r) / (x.x() - y.x());
  return take_real(v, "kernel_entry");
}

Complex modified_kernel_entry(const AdmissibleParams& p, LatticePoint x,
                              LatticePoint y) {
  return kernel_entry(p, x, y) / a_weight_ratio(p, x, y);
}

Complex series_term(const AdmissibleParams& p, LatticePoint x, LatticePoint y,
                    long m) {
  const double dm = static_cast<double>(m);
  const Complex rx =
      specfun::gamma_ratio(x.x() + dm, p.zp() + 0.5, p.z() + 1.5);
  const Complex ry =
      specfun::gamma_ratio(y.x() + dm, p.z() + 0.5, p.zp() + 1.5);
  return c_constant(p) * rx * ry;
}

SeriesSum kernel_series(const AdmissibleParams& p, LatticePoint x,
                        LatticePoint y, double tol) {
  if (tol <= 0.0) throw Error("kernel_series: tol must be positive");
  const Complex z = p.z(), zp = p.zp();
  const double xx = x.x(), yy = y.x();
  constexpr long kBudget = 10'000'000;

  // One pass of 4M terms with checkpoints at M and 2M; the term recurrence is
  // an exact rational update, so each term costs O(1).
  const auto pass = [&](long M, Complex& sM, Complex& s2M, Complex& s4M,
                        Complex& last) {
    Complex t = series_term(p, x, y, 0);
    Complex s = t;
    for (long m = 1; m < 4 * M; ++m) {
      const double dm = static_cast<double>(m - 1);
      t *= ((xx + dm + 0.5 + zp) * (yy + dm + 0.5 + z)) /
           ((xx + dm + 1.5 + z) * (yy + dm + 1.5 + zp));
      s += t;
      if (m == M - 1) sM = s;
      if (m == 2 * M - 1) s2M = s;
    }
    s4M = s;
    last = t;
  };

  long M = 256;
  while (true) {
    Complex sM, s2M, s4M, last;
    pass(M, sM, s2M, s4M, last);
    // tail(M) ~ c/M + d/M^2: two elimination levels
    const Complex e1a = 2.0 * s2M - sM;
    const Complex e1b = 2.0 * s4M - s2M;
    const Complex e2 = (4.0 * e1b - e1a) / 3.0;
    const double spread = std::abs(e2 - e1b);
    const double roundoff =
        std::abs(e2) * 1e-15 * std::sqrt(static_cast<double>(4 * M));
    const double bound = 2.0 * spread + std::abs(last) + roundoff;
    if (bound <= tol)
      return SeriesSum{e2, bound, 4 * M};
    if (8 * M > kBudget)
      throw BudgetExceeded("kernel_series: term budget of 1e7 exceeded");
    M *= 4;
  }
}

Complex series_prefactor(const AdmissibleParams& p) {
  const Complex z = p.z(), zp = p.zp();
  if (p.real_pair()) {
    const double d = 1.0 + z.real() - zp.real();  // in (0, 2), off poles
    const auto lg = log_abs_gamma(d);
    return Complex(std::sin(kPi * zp.real()) / kPi * lg.sign * std::exp(lg.log_abs),
                   0.0);
  }
  return std::sin(kPi * zp) / kPi * std::exp(log_gamma(1.0 + z - zp));
}

Complex basis_h(const AdmissibleParams& p, int m, LatticePoint x) {
  const double dm = static_cast<double>(m);
  return series_prefactor(p) *
         specfun::gamma_ratio(x.x(), p.zp() + (dm + 0.5), p.z() + (dm + 1.5));
}

Complex basis_g(const AdmissibleParams& p, int m, LatticePoint x) {
  return a_weight(p, x) * basis_h(p, m, x);
}

}  // namespace gkdpp
