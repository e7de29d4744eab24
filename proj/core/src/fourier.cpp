#include "gkdpp/fourier.hpp"

#include <cmath>
#include <numbers>

#include "gkdpp/gamma_kernel.hpp"
#include "gkdpp/specfun.hpp"

namespace gkdpp {

namespace {
constexpr double kPi = std::numbers::pi;
}

Complex phi_hat_limit(const AdmissibleParams& p, long k) {
  return series_prefactor(p) *
         specfun::gamma_ratio(static_cast<double>(k), p.zp(), p.z() + 1.0);
}

CircleFunction limit_symbol(const AdmissibleParams& p) {
  const Complex z = p.z(), zp = p.zp();
  return [z, zp](double t) -> Complex {
    const Complex u = std::exp(Complex(0.0, t));
    return std::exp(zp * std::log(1.0 - 1.0 / u) - z * std::log(1.0 - u));
  };
}

CircleFunction xi_symbol(const AdmissibleParams& p, double xi) {
  if (!(xi > 0.0 && xi < 1.0)) throw Error("xi_symbol: xi must be in (0,1)");
  const Complex z = p.z(), zp = p.zp();
  const double r = std::sqrt(xi);
  return [z, zp, r](double t) -> Complex {
    const Complex u = std::exp(Complex(0.0, t));
    return std::exp(zp * std::log(1.0 - r / u) - z * std::log(1.0 - r * u));
  };
}

Complex fourier_numeric(const CircleFunction& f, long k, int min_nodes,
                        double tol, int max_nodes) {
  if (min_nodes < 64) throw Error("fourier_numeric: need at least 64 nodes");
  const double dk = static_cast<double>(k);

  const auto midpoint = [&](int n) {
    Complex acc(0.0, 0.0);
    const double h = 2.0 * kPi / n;
    for (int j = 0; j < n; ++j) {
      const double t = h * (j + 0.5);
      acc += f(t) * std::exp(Complex(0.0, -dk * t));
    }
    return acc / static_cast<double>(n);
  };

  Complex prev = midpoint(min_nodes);
  for (int n = 2 * min_nodes; n <= max_nodes; n *= 2) {
    const Complex cur = midpoint(n);
    if (std::abs(cur - prev) <= tol) return cur;
    prev = cur;
  }
  throw NonConvergent("fourier_numeric: refinements disagree at the node cap");
}

}  // namespace gkdpp
