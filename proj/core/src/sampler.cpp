#include "gkdpp/sampler.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/QR>
#include <algorithm>
#include <cmath>
#include <thread>

#include "gkdpp/rng.hpp"

namespace gkdpp {

ProjectionSampler::ProjectionSampler(const KernelMatrix& k) : window_(k.window) {
  const Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(k.entries);
  if (es.info() != Eigen::Success)
    throw Error("ProjectionSampler: eigendecomposition failed");
  eigenvectors_ = es.eigenvectors();
  eigenvalues_ = es.eigenvalues().cwiseMax(0.0).cwiseMin(1.0);
}

Configuration ProjectionSampler::draw(std::uint64_t seed,
                                      std::uint64_t index) const {
  RandomStream rng(seed, index);
  const auto n = eigenvectors_.rows();

  std::vector<Eigen::Index> kept;
  for (Eigen::Index i = 0; i < eigenvalues_.size(); ++i)
    if (rng.uniform() < eigenvalues_[i]) kept.push_back(i);

  Configuration out;
  if (kept.empty()) return out;

  Eigen::MatrixXd v(n, static_cast<Eigen::Index>(kept.size()));
  for (std::size_t j = 0; j < kept.size(); ++j) v.col(j) = eigenvectors_.col(kept[j]);

  // Sequential conditional sampling of the projection V V^T: pick a particle
  // with density ||V(x,:)||^2 / r, then restrict the column span to vectors
  // vanishing at the picked site and drop one dimension.
  while (v.cols() > 0) {
    const Eigen::Index r = v.cols();
    Eigen::VectorXd mass = v.rowwise().squaredNorm();
    const double total = mass.sum();

    double u = rng.uniform() * total;
    Eigen::Index x = 0;
    for (; x < n - 1; ++x) {
      u -= mass[x];
      if (u <= 0.0) break;
    }

    if (mass[x] < 1e-12) {
      // residual pivot degenerated; restart the basis from a fresh
      // orthonormalization and pick the heaviest row instead
      const Eigen::HouseholderQR<Eigen::MatrixXd> qr(v);
      v = qr.householderQ() * Eigen::MatrixXd::Identity(n, r);
      mass = v.rowwise().squaredNorm();
      mass.maxCoeff(&x);
    }

    out.sites.push_back(window_[static_cast<std::size_t>(x)].k);

    // Householder rotation on the right so that row x is (c, 0, ..., 0),
    // then drop the first column; the rest stay orthonormal and vanish at x.
    Eigen::VectorXd u_vec = v.row(x).transpose();
    const double norm = u_vec.norm();
    u_vec[0] += (u_vec[0] >= 0.0 ? norm : -norm);
    const double scale = u_vec.squaredNorm();
    if (scale > 0.0) {
      const Eigen::VectorXd w = (v * u_vec) * (2.0 / scale);
      v.noalias() -= w * u_vec.transpose();
    }
    v = v.rightCols(r - 1).eval();
  }

  std::sort(out.sites.begin(), out.sites.end());
  return out;
}

Configuration sample(const KernelMatrix& k, std::uint64_t seed,
                     std::uint64_t index) {
  return ProjectionSampler(k).draw(seed, index);
}

std::vector<Configuration> sample_many(const KernelMatrix& k, std::uint64_t seed,
                                       std::size_t count, int threads) {
  const ProjectionSampler sampler(k);
  std::vector<Configuration> out(count);
  const int workers = std::max(1, threads);
  if (workers == 1 || count < 2) {
    for (std::size_t i = 0; i < count; ++i) out[i] = sampler.draw(seed, i);
    return out;
  }
  std::vector<std::thread> pool;
  pool.reserve(static_cast<std::size_t>(workers));
  for (int w = 0; w < workers; ++w) {
    pool.emplace_back([&, w]() {
      for (std::size_t i = static_cast<std::size_t>(w); i < count;
           i += static_cast<std::size_t>(workers))
        out[i] = sampler.draw(seed, i);
    });
  }
  for (auto& t : pool) t.join();
  return out;
}

}  // namespace gkdpp
