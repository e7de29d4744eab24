#ifndef GKDPP_KERNEL_MATRIX_HPP
#define GKDPP_KERNEL_MATRIX_HPP

#include <Eigen/Core>
#include <functional>

#include "gkdpp/window.hpp"

namespace gkdpp {

using KernelFn = std::function<double(LatticePoint, LatticePoint)>;

// Spectrum of a truncated projection must stay inside [0,1] up to this much
// numerical dust; anything worse aborts rather than being renormalized.
inline constexpr double kSpectrumTolerance = 1e-10;

/// A correlation kernel restricted to a finite window: labeled, dense, real
/// symmetric, eigenvalues in [-tol, 1+tol]. Immutable after construction.
struct KernelMatrix {
  Window window;
  Eigen::MatrixXd entries;

  double at(LatticePoint x, LatticePoint y) const {
    const auto i = window.index_of(x), j = window.index_of(y);
    if (!i || !j) throw Error("KernelMatrix::at: site not in window");
    return entries(static_cast<Eigen::Index>(*i), static_cast<Eigen::Index>(*j));
  }
};

/// Dense truncation of a symmetric entry function; validates symmetry and the
/// [0,1] spectrum (throws SpectrumOutOfRange — a failure here signals an
/// evaluation bug, truncations of projections are contractions).
KernelMatrix truncate(const KernelFn& kernel, const Window& window);

KernelFn gamma_kernel_fn(const AdmissibleParams& p);
KernelMatrix gamma_kernel_matrix(const AdmissibleParams& p, const Window& w);

/// Discrete sine kernel sin(alpha (x-y)) / (pi (x-y)); a translation
/// invariant projection kernel used as a sampler fixture.
KernelFn sine_kernel(double alpha);

}  // namespace gkdpp

#endif  // GKDPP_KERNEL_MATRIX_HPP
