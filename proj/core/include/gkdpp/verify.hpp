#ifndef GKDPP_VERIFY_HPP
#define GKDPP_VERIFY_HPP

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "gkdpp/params.hpp"

namespace gkdpp::verify {

/// One named, repeatable identity check. passed <=> observed_error <= tolerance.
/// Composite checks normalize their parts (ratio of part error to part
/// tolerance) and report against tolerance 1.
struct CheckResult {
  std::string name;
  std::vector<std::pair<std::string, std::string>> params;
  double observed_error = 0.0;
  double tolerance = 0.0;
  bool passed = false;
  long runtime_ms = 0;
};

/// Closed unilateral summation: partial sums (Richardson-extrapolated) of
/// sum_m Gamma(a+m)Gamma(b+m)/(Gamma(c+m+1)Gamma(d+m+1)), d = a+b-c, against
/// the closed form; the (a-c)(b-c) ~ 0 indeterminacy is resolved by
/// symmetric epsilon-offset averaging.
CheckResult check_summation_lemma(Complex a, Complex b, Complex c, double tol);

/// Truncated two-sided sum of g_m g'_n against delta_{mn}.
CheckResult check_biorthogonality(const AdmissibleParams& p, int m, int n,
                                  long radius, double tol);

/// Series route against the closed form on the grid X_radius^2.
CheckResult check_series_reproduction(const AdmissibleParams& p, int radius_xy,
                                      double tol);

/// Density profile: the exact first-difference identity on |x| <= 100, strict
/// monotonicity, and the x -> +-infinity constants at |x| = x_max.
CheckResult check_rho1(const AdmissibleParams& p, long x_max);

/// Coefficient route: closed-form coefficients against quadrature, kernel
/// reconstruction from coefficients against the closed form, the u -> 1/u
/// symbol identity, and the xi-symbol kernel spectrum.
CheckResult check_fourier_route(const AdmissibleParams& p, int radius, double tol);

/// Partial mass of the mixed measure: monotone increasing, final gap small.
CheckResult check_zmeasure_mass(const AdmissibleParams& p, double xi);

/// Finite synthetic ground sets (random projections, |X| <= 10): projection
/// transform, determinant formula, transport, determinant ratio, regularized
/// determinant identities, particle/hole conditioning, rank additivity, and
/// the rank of the truncated rank-m kernel.
std::vector<CheckResult> check_synthetic_suite(std::uint64_t seed);

struct BatteryOptions {
  std::uint64_t seed = 20240901;
  int threads = 1;
  std::string only;       // run only checks whose name contains this substring
  long mc_samples = 30000;
  int mc_radius = 30;
};

/// The full battery over the canonical parameter sets, run concurrently and
/// merged by name.
std::vector<CheckResult> run_battery(const BatteryOptions& options);

/// Identity slugs that the battery is required to exercise.
const std::vector<std::string>& required_identities();

/// check name prefix -> identity slugs it certifies. Tests fail if the union
/// does not cover required_identities().
const std::map<std::string, std::vector<std::string>>& coverage_manifest();

}  // namespace gkdpp::verify

#endif  // GKDPP_VERIFY_HPP
