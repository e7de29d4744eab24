#include <doctest.h>

#include <cmath>

#include "gkdpp/gamma_kernel.hpp"
#include "gkdpp/rng.hpp"
#include "gkdpp/verify.hpp"

using gkdpp::AdmissibleParams;
using gkdpp::Complex;
using gkdpp::kernel_series;
using gkdpp::LatticePoint;
using gkdpp::modified_kernel_entry;
using gkdpp::RandomStream;
using gkdpp::series_term;
using gkdpp::SeriesSum;

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
const AdmissibleParams& degen() {
  static const auto p =
      AdmissibleParams::make(Complex(0.3, 0.0), Complex(0.3, 0.0));
  return p;
}

}  // namespace

TEST_SUITE_BEGIN("series");

TEST_CASE("series route agrees with the closed form across all branches") {
  for (const auto* p : {&principal(), &comp(), &degen()}) {
    for (long long k : {-10LL, -3LL, 0LL, 7LL}) {
      for (long long j : {-8LL, 0LL, 4LL, 9LL}) {
        const LatticePoint x{k}, y{j};
        const Complex closed = modified_kernel_entry(*p, x, y);
        const SeriesSum s = kernel_series(*p, x, y, 1e-10);
        CHECK(std::abs(s.value - closed) <= 1e-8 * std::max(std::abs(closed), 1e-2));
      }
    }
  }
}

TEST_CASE("reported bound covers the true truncation error") {
  RandomStream rng(21, 0);
  for (int trial = 0; trial < 60; ++trial) {
    const auto* p = trial % 2 ? &principal() : &comp();
    const LatticePoint x{static_cast<long long>(rng.uniform() * 24) - 12};
    const LatticePoint y{static_cast<long long>(rng.uniform() * 24) - 12};
    const double tol = std::pow(10.0, -6.0 - 4.0 * rng.uniform());
    const SeriesSum s = kernel_series(*p, x, y, tol);
    CHECK(s.bound <= tol);
    const Complex truth = modified_kernel_entry(*p, x, y);
    CHECK(std::abs(s.value - truth) <= s.bound + 1e-13);
  }
}

TEST_CASE("degenerate terms collapse to the rational product") {
  // with z = z' = a the m-th term is C / ((x+a+1/2+m)(y+a+1/2+m))
  const double a = 0.3;
  const double c = gkdpp::c_constant(degen());
  for (long long k : {-5LL, 2LL}) {
    for (long long j : {0LL, 6LL}) {
      const LatticePoint x{k}, y{j};
      for (long m = 0; m <= 5; ++m) {
        const Complex term = series_term(degen(), x, y, m);
        const double expected =
            c / ((x.x() + a + 0.5 + m) * (y.x() + a + 0.5 + m));
        CHECK(term.imag() == 0.0);
        CHECK(term.real() == doctest::Approx(expected).epsilon(1e-12));
      }
    }
  }
}

TEST_CASE("single leading term underestimates the equal-parameter kernel") {
  // all terms are positive for z = z' once x, y are large positive, so the
  // m = 0 term alone sits below the kernel and the bound must cover the rest
  const LatticePoint x{40}, y{55};
  const Complex t0 = series_term(degen(), x, y, 0);
  const Complex full = modified_kernel_entry(degen(), x, y);
  CHECK(t0.real() < full.real());
  const SeriesSum s = kernel_series(degen(), x, y, 1e-12);
  CHECK(std::abs(s.value - full) <= s.bound + 1e-14);
}

TEST_CASE("budget guard trips for absurd tolerances") {
  CHECK_THROWS_AS(
      (void)kernel_series(comp(), LatticePoint{0}, LatticePoint{1}, 1e-16),
      gkdpp::BudgetExceeded);
}

TEST_CASE("summation lemma at the worked triple") {
  // closed form for (a,b,c) = (1,2,1.5): (G(1.5)^2 - 1)/(-0.25 G(1.5)^2),
  // G(1.5)^2 = pi/4
  const double g2 = std::numbers::pi / 4.0;
  const double expected = (g2 - 1.0) / (-0.25 * g2);
  CHECK(expected == doctest::Approx(1.0929581789406507).epsilon(1e-14));
  const auto r = gkdpp::verify::check_summation_lemma(
      Complex(1.0, 0.0), Complex(2.0, 0.0), Complex(1.5, 0.0), 1e-10);
  CHECK(r.passed);
  CHECK(r.observed_error <= 1e-10);
}

TEST_CASE("summation lemma: continuity branch and switch symmetry") {
  // a = c forces the 0/0 branch
  const auto degenerate = gkdpp::verify::check_summation_lemma(
      Complex(1.3, 0.2), Complex(0.9, -0.4), Complex(1.3, 0.2), 1e-6);
  CHECK(degenerate.passed);

  // the closed form is symmetric under c <-> d
  RandomStream rng(5, 0);
  for (int trial = 0; trial < 20; ++trial) {
    const Complex a(0.5 + 2.0 * rng.uniform(), rng.uniform() - 0.5);
    const Complex b(0.5 + 2.0 * rng.uniform(), rng.uniform() - 0.5);
    const Complex c(0.4 + 1.5 * rng.uniform(), 0.3 * (rng.uniform() - 0.5));
    const Complex d = a + b - c;
    const auto r1 = gkdpp::verify::check_summation_lemma(a, b, c, 1e-8);
    const auto r2 = gkdpp::verify::check_summation_lemma(a, b, d, 1e-8);
    CHECK(r1.passed);
    CHECK(r2.passed);
  }
}

TEST_SUITE_END();
