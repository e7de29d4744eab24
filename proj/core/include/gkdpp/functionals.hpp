#ifndef GKDPP_FUNCTIONALS_HPP
#define GKDPP_FUNCTIONALS_HPP

#include <functional>
#include <vector>

#include "gkdpp/dpp.hpp"

namespace gkdpp {

using SiteFunction = std::function<double(LatticePoint)>;

/// Psi_a(omega) = prod_{x in omega} a(x) over the window.
double psi_product(const SiteFunction& a, const Configuration& omega,
                   const Window& w);

/// A positive site weight with its truncation schedule and an |a(x)-1| <=
/// c/|x|^gamma decay certificate (gamma > 1/2 makes a-1 square-summable).
struct FunctionalSpec {
  SiteFunction weight;
  std::vector<int> schedule = {25, 50, 100, 200, 400};
  double decay_c = 1.0;
  double decay_gamma = 1.0;
};

struct ConvergenceEntry {
  int radius = 0;
  double normalizer = 0.0;      // det(1 + (a_n - 1) K) on the window
  double regularized = 0.0;     // det2 route; this is the convergent sequence
  double rel_change = 0.0;      // of the regularized normalizer
};

struct ConvergenceReport {
  std::vector<ConvergenceEntry> entries;
  bool converged = false;
};

/// Truncated normalized functionals omega -> Psi_{a_n}(omega)/E(Psi_{a_n})
/// along the schedule. The raw normalizer need not converge when a-1 is only
/// square-summable, so convergence (relative change < tol on three
/// consecutive radii) is declared on the regularized normalizer
/// det2(1+(a_n-1)K) exp(tr((a_n-1-log a_n)K)), which has a strictly positive
/// limit. Both sequences are reported.
ConvergenceReport psi_normalized(const FunctionalSpec& spec,
                                 const KernelFn& kernel, double tol = 1e-4);

struct Det2Result {
  double value = 0.0;
  long terms_used = 0;
  double bound = 0.0;
};

/// det2(1+A) = det(1+A) exp(-tr A).
Det2Result det2(const Eigen::MatrixXd& a);

/// det2(1+(b-1)K) exp(tr((b-1-log b)K)) for strictly positive b; equals
/// det(1+(b-1)K)/exp(tr((log b)K)) up to roundoff.
double e_tilde(const SiteFunction& b, const KernelMatrix& k);

struct TransformResult {
  KernelMatrix projection;
  double idempotency_residual = 0.0;  // max-norm of K~^2 - K~, reported not hidden
};

/// Orthogonal projection onto A Ran(K) for diagonal positive A:
/// A K (1 + (A*A-1)K)^{-1} A*. Both closed forms of the resolvent identity
/// are evaluated and must agree. Throws SingularResolvent when the resolvent
/// conditioning passes 1e12.
TransformResult transform_projection(const KernelMatrix& k,
                                     const Eigen::VectorXd& diag);

}  // namespace gkdpp

#endif  // GKDPP_FUNCTIONALS_HPP
