#include "gkdpp/kernel_matrix.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>
#include <numbers>
#include <sstream>

#include "gkdpp/gamma_kernel.hpp"

namespace gkdpp {

Window::Window(std::vector<LatticePoint> sites) : sites_(std::move(sites)) {
  if (sites_.empty()) throw Error("Window: empty site set");
  for (std::size_t i = 1; i < sites_.size(); ++i)
    if (!(sites_[i - 1] < sites_[i]))
      throw Error("Window: sites must be strictly increasing");
}

Window Window::symmetric(int radius) {
  if (radius < 1) throw Error("Window::symmetric: radius must be >= 1");
  std::vector<LatticePoint> s;
  s.reserve(2 * radius);
  for (long long k = -radius; k < radius; ++k) s.push_back(LatticePoint{k});
  return Window(std::move(s));
}

Window Window::labels(std::size_t n) {
  std::vector<LatticePoint> s;
  s.reserve(n);
  for (std::size_t k = 0; k < n; ++k)
    s.push_back(LatticePoint{static_cast<long long>(k)});
  return Window(std::move(s));
}

std::optional<std::size_t> Window::index_of(LatticePoint p) const {
  const auto it = std::lower_bound(sites_.begin(), sites_.end(), p);
  if (it == sites_.end() || *it != p) return std::nullopt;
  return static_cast<std::size_t>(it - sites_.begin());
}

Window Window::without(LatticePoint p) const {
  const auto idx = index_of(p);
  if (!idx) throw Error("Window::without: site not in window");
  std::vector<LatticePoint> s = sites_;
  s.erase(s.begin() + static_cast<std::ptrdiff_t>(*idx));
  return Window(std::move(s));
}

KernelMatrix truncate(const KernelFn& kernel, const Window& window) {
  const auto n = static_cast<Eigen::Index>(window.size());
  Eigen::MatrixXd m(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j <= i; ++j) {
      const double kij = kernel(window[i], window[j]);
      if (j < i) {
        const double kji = kernel(window[j], window[i]);
        if (std::abs(kij - kji) > 1e-12 * std::max(1.0, std::abs(kij)))
          throw Error("truncate: entry function is not symmetric");
      }
      m(i, j) = kij;
      m(j, i) = kij;
    }
  }

  const Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(m,
                                                          Eigen::EigenvaluesOnly);
  const double lo = es.eigenvalues().minCoeff();
  const double hi = es.eigenvalues().maxCoeff();
  if (lo < -kSpectrumTolerance || hi > 1.0 + kSpectrumTolerance) {
    std::ostringstream os;
    os << "truncate: spectrum [" << lo << ", " << hi
       << "] outside [0,1] beyond tolerance " << kSpectrumTolerance;
    throw SpectrumOutOfRange(os.str());
  }
  return KernelMatrix{window, std::move(m)};
}

KernelFn gamma_kernel_fn(const AdmissibleParams& p) {
  return [p](LatticePoint x, LatticePoint y) { return kernel_entry(p, x, y); };
}

KernelMatrix gamma_kernel_matrix(const AdmissibleParams& p, const Window& w) {
  return truncate(gamma_kernel_fn(p), w);
}

KernelFn sine_kernel(double alpha) {
  if (!(alpha > 0.0 && alpha < std::numbers::pi))
    throw Error("sine_kernel: alpha must be in (0, pi)");
  return [alpha](LatticePoint x, LatticePoint y) {
    if (x == y) return alpha / std::numbers::pi;
    const double d = x.x() - y.x();
    return std::sin(alpha * d) / (std::numbers::pi * d);
  };
}

}  // namespace gkdpp
