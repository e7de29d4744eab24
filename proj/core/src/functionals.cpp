#include "gkdpp/functionals.hpp"

#include <Eigen/LU>
#include <Eigen/SVD>
#include <cmath>

namespace gkdpp {

double psi_product(const SiteFunction& a, const Configuration& omega,
                   const Window& w) {
  double prod = 1.0;
  for (long long k : omega.sites) {
    const LatticePoint p{k};
    if (!w.contains(p)) throw Error("psi_product: configuration leaves the window");
    prod *= a(p);
  }
  return prod;
}

ConvergenceReport psi_normalized(const FunctionalSpec& spec,
                                 const KernelFn& kernel, double tol) {
  ConvergenceReport report;
  int streak = 0;
  for (std::size_t i = 0; i < spec.schedule.size(); ++i) {
    const int radius = spec.schedule[i];
    if (radius < 1 || (i > 0 && radius <= spec.schedule[i - 1]))
      throw Error("psi_normalized: schedule must be increasing positive radii");
    const KernelMatrix k = truncate(kernel, Window::symmetric(radius));

    ConvergenceEntry entry;
    entry.radius = radius;
    entry.normalizer = expect_multiplicative(k, spec.weight);
    entry.regularized = e_tilde(spec.weight, k);
    if (!report.entries.empty()) {
      const double prev = report.entries.back().regularized;
      entry.rel_change = std::abs(entry.regularized - prev) /
                         std::max(std::abs(prev), 1e-300);
      streak = (entry.rel_change < tol) ? streak + 1 : 0;
    }
    report.entries.push_back(entry);
    if (streak >= 3) {
      report.converged = true;
      break;
    }
  }
  return report;
}

Det2Result det2(const Eigen::MatrixXd& a) {
  const auto n = a.rows();
  const Eigen::MatrixXd one_plus = Eigen::MatrixXd::Identity(n, n) + a;
  const double value = one_plus.determinant() * std::exp(-a.trace());
  return Det2Result{value, n, std::abs(value) * 1e-13 * static_cast<double>(n)};
}

double e_tilde(const SiteFunction& b, const KernelMatrix& k) {
  const auto n = static_cast<Eigen::Index>(k.window.size());
  Eigen::VectorXd bv(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    const double v = b(k.window[static_cast<std::size_t>(i)]);
    if (!(v > 0.0)) throw NonPositiveWeight("e_tilde: weight must be positive");
    bv[i] = v;
  }
  const Eigen::MatrixXd bk = (bv.array() - 1.0).matrix().asDiagonal() * k.entries;
  double trace_correction = 0.0;
  for (Eigen::Index i = 0; i < n; ++i)
    trace_correction += (bv[i] - 1.0 - std::log(bv[i])) * k.entries(i, i);
  return det2(bk).value * std::exp(trace_correction);
}

TransformResult transform_projection(const KernelMatrix& k,
                                     const Eigen::VectorXd& diag) {
  const auto n = k.entries.rows();
  if (diag.size() != n)
    throw Error("transform_projection: diagonal size mismatch");
  if ((diag.array() <= 0.0).any())
    throw Error("transform_projection: diagonal must be positive");

  const Eigen::MatrixXd a = diag.asDiagonal();
  const Eigen::VectorXd a2 = diag.array().square();
  const Eigen::MatrixXd resolvent =
      Eigen::MatrixXd::Identity(n, n) + (a2.array() - 1.0).matrix().asDiagonal() * k.entries;

  const Eigen::JacobiSVD<Eigen::MatrixXd> svd(resolvent);
  const double cond = svd.singularValues()(0) /
                      svd.singularValues()(svd.singularValues().size() - 1);
  if (!(cond < 1e12))
    throw SingularResolvent("transform_projection: resolvent condition above 1e12");

  const Eigen::PartialPivLU<Eigen::MatrixXd> lu(resolvent);
  const Eigen::MatrixXd first = a * k.entries * lu.inverse() * a;

  // second closed form: A (1 + K(A*A-1))^{-1} K A*
  const Eigen::MatrixXd resolvent2 =
      Eigen::MatrixXd::Identity(n, n) + k.entries * (a2.array() - 1.0).matrix().asDiagonal();
  const Eigen::MatrixXd second =
      a * Eigen::PartialPivLU<Eigen::MatrixXd>(resolvent2).inverse() * k.entries * a;
  if ((first - second).cwiseAbs().maxCoeff() > 1e-10)
    throw Error("transform_projection: the two resolvent forms disagree");

  // symmetrize away roundoff before the spectrum validation
  Eigen::MatrixXd sym = 0.5 * (first + first.transpose());
  const double residual = (sym * sym - sym).cwiseAbs().maxCoeff();
  KernelMatrix out{k.window, std::move(sym)};
  return TransformResult{std::move(out), residual};
}

}  // namespace gkdpp
