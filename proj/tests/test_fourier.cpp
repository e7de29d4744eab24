#include <doctest.h>

#include <cmath>
#include <numbers>

#include "gkdpp/fourier.hpp"
#include "gkdpp/gamma_kernel.hpp"

using gkdpp::AdmissibleParams;
using gkdpp::CircleFunction;
using gkdpp::Complex;
using gkdpp::fourier_numeric;
using gkdpp::LatticePoint;
using gkdpp::limit_symbol;
using gkdpp::phi_hat_limit;
using gkdpp::xi_symbol;

namespace {

const AdmissibleParams& principal() {
  static const auto p =
      AdmissibleParams::make(Complex(0.4, 0.7), Complex(0.4, -0.7));
  return p;
}
const AdmissibleParams& comp() {
  static const auto p =
      AdmissibleParams::make(Complex(0.2, 0.0), Complex(0.6, 0.0));
  return p;
}

}  // namespace

TEST_SUITE_BEGIN("fourier");

TEST_CASE("monomials are orthonormal under the quadrature") {
  for (long m : {-3L, 0L, 2L}) {
    const CircleFunction f = [m](double t) {
      return std::exp(Complex(0.0, m * t));
    };
    for (long k : {-3L, 0L, 2L}) {
      const Complex c = fourier_numeric(f, k, 64, 1e-12);
      const double expected = (k == m) ? 1.0 : 0.0;
      CHECK(std::abs(c - expected) < 1e-12);
    }
  }
}

TEST_CASE("node floor is enforced") {
  const CircleFunction f = [](double) { return Complex(1.0, 0.0); };
  CHECK_THROWS_AS((void)fourier_numeric(f, 0, 32, 1e-8), gkdpp::Error);
}

TEST_CASE("closed-form coefficients match quadrature of the paired symbol") {
  // the closed-form family for (z,z') is carried by the swapped symbol
  for (const auto* p : {&principal(), &comp()}) {
    const CircleFunction sym_swapped = limit_symbol(p->swapped());
    for (long k : {-2L, 0L, 1L, 3L}) {
      const Complex closed = phi_hat_limit(*p, k);
      const Complex quad = fourier_numeric(sym_swapped, k, 1 << 12, 1e-7);
      CHECK(std::abs(closed - quad) < 1e-6);
    }
  }
}

TEST_CASE("xi-symbol coefficients decay geometrically") {
  const double xi = 0.25;
  const CircleFunction f = xi_symbol(principal(), xi);
  double prev = std::abs(fourier_numeric(f, 6, 1 << 10, 1e-11));
  for (long k = 7; k <= 14; ++k) {
    const double cur = std::abs(fourier_numeric(f, k, 1 << 10, 1e-11));
    CHECK(cur < prev * std::sqrt(xi) * 1.4);
    prev = cur;
  }
}

TEST_CASE("symbol inversion identity") {
  // the swapped symbol is the reciprocal of the original at u^{-1}
  for (const auto* p : {&principal(), &comp()}) {
    const CircleFunction f = limit_symbol(*p);
    const CircleFunction g = limit_symbol(p->swapped());
    for (double t : {0.4, 1.3, 2.9, 5.2}) {
      const Complex lhs = g(t);
      const Complex rhs = 1.0 / f(2.0 * std::numbers::pi - t);
      CHECK(std::abs(lhs - rhs) < 1e-12 * std::abs(lhs));
    }
  }
}

TEST_CASE("coefficient products reproduce the modified kernel") {
  // sum_n phihat(x+n+1/2) phihat'(y+n+1/2) telescopes into the series route
  const AdmissibleParams& p = principal();
  const AdmissibleParams sw = p.swapped();
  const LatticePoint x{2}, y{-3};
  Complex acc(0.0, 0.0);
  // partial sums extrapolated in the cutoff (tail ~ c/N + d/N^2)
  Complex s1, s2, s4;
  const long quarter = 4096;
  for (long n = 0; n < 4 * quarter; ++n) {
    acc += phi_hat_limit(p, x.k + 1 + n) * phi_hat_limit(sw, y.k + 1 + n);
    if (n == quarter - 1) s1 = acc;
    if (n == 2 * quarter - 1) s2 = acc;
  }
  s4 = acc;
  const Complex extrap = (4.0 * (2.0 * s4 - s2) - (2.0 * s2 - s1)) / 3.0;
  const Complex closed = gkdpp::modified_kernel_entry(p, x, y);
  CHECK(std::abs(extrap - closed) < 1e-8);
}

TEST_SUITE_END();
