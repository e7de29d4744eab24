#ifndef GKDPP_SAMPLER_HPP
#define GKDPP_SAMPLER_HPP

#include "gkdpp/dpp.hpp"

namespace gkdpp {

/// Draws configurations of the determinantal measure of a kernel matrix:
/// eigendecompose once, then per draw Bernoulli-thin the eigenvectors by
/// eigenvalue and run sequential conditional sampling of the resulting
/// projection (O(n r^2) per draw). Exact projections yield exactly
/// rank-many particles.
class ProjectionSampler {
 public:
  explicit ProjectionSampler(const KernelMatrix& k);

  /// Deterministic in (seed, index).
  Configuration draw(std::uint64_t seed, std::uint64_t index = 0) const;

  const Window& window() const { return window_; }

 private:
  Window window_;
  Eigen::MatrixXd eigenvectors_;
  Eigen::VectorXd eigenvalues_;  // clamped into [0,1]
};

Configuration sample(const KernelMatrix& k, std::uint64_t seed,
                     std::uint64_t index = 0);

/// count draws with stream indices [0, count), split across threads and
/// merged in index order.
std::vector<Configuration> sample_many(const KernelMatrix& k, std::uint64_t seed,
                                       std::size_t count, int threads = 1);

}  // namespace gkdpp

#endif  // GKDPP_SAMPLER_HPP
