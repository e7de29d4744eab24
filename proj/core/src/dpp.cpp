#include "gkdpp/dpp.hpp"

#include <Eigen/LU>
#include <algorithm>
#include <cmath>

namespace gkdpp {

bool Configuration::occupies(LatticePoint p) const {
  return std::binary_search(sites.begin(), sites.end(), p.k);
}

namespace {

std::vector<Eigen::Index> window_indices(const KernelMatrix& k,
                                         std::span<const LatticePoint> pts,
                                         const char* who) {
  std::vector<Eigen::Index> idx;
  idx.reserve(pts.size());
  for (const auto& p : pts) {
    const auto i = k.window.index_of(p);
    if (!i) throw Error(std::string(who) + ": point outside window");
    idx.push_back(static_cast<Eigen::Index>(*i));
  }
  return idx;
}

}  // namespace

double correlation(const KernelMatrix& k, std::span<const LatticePoint> pts) {
  auto idx = window_indices(k, pts, "correlation");
  auto sorted = idx;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw DuplicatePoint("correlation: repeated point");

  const auto n = static_cast<Eigen::Index>(idx.size());
  Eigen::MatrixXd minor(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j)
      minor(i, j) = k.entries(idx[i], idx[j]);
  const double det = minor.determinant();
  return det < 0.0 ? 0.0 : det;
}

double cylinder_prob(const KernelMatrix& k, std::span<const LatticePoint> T,
                     std::span<const LatticePoint> S) {
  const auto t_idx = window_indices(k, T, "cylinder_prob");
  for (const auto& s : S)
    if (std::find(T.begin(), T.end(), s) == T.end())
      throw SubsetViolation("cylinder_prob: S must be a subset of T");

  const auto n = static_cast<Eigen::Index>(T.size());
  Eigen::MatrixXd m(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j)
      m(i, j) = k.entries(t_idx[i], t_idx[j]);

  int complement = 0;
  for (Eigen::Index i = 0; i < n; ++i) {
    const bool in_s = std::find(S.begin(), S.end(), T[i]) != S.end();
    if (!in_s) {
      m(i, i) -= 1.0;
      ++complement;
    }
  }
  double prob = (complement % 2 == 0 ? 1.0 : -1.0) * m.determinant();
  if (prob < -1e-10 || prob > 1.0 + 1e-10)
    throw Error("cylinder_prob: probability outside [0,1] beyond tolerance");
  return std::clamp(prob, 0.0, 1.0);
}

double expect_multiplicative(const KernelMatrix& k,
                             const std::function<double(LatticePoint)>& a) {
  const auto n = static_cast<Eigen::Index>(k.window.size());
  Eigen::MatrixXd m = Eigen::MatrixXd::Identity(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    const double w = a(k.window[static_cast<std::size_t>(i)]) - 1.0;
    m.row(i) += w * k.entries.row(i);
  }
  return m.determinant();
}

std::vector<std::pair<std::uint32_t, double>> enumerate_measure(
    const KernelMatrix& k) {
  const std::size_t n = k.window.size();
  if (n > 20) throw WindowTooLarge("enumerate_measure: window above 20 sites");

  std::vector<std::pair<std::uint32_t, double>> out;
  out.reserve(std::size_t{1} << n);
  double total = 0.0;
  for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << n); ++mask) {
    Eigen::MatrixXd m = k.entries;
    int complement = 0;
    for (std::size_t i = 0; i < n; ++i)
      if (!(mask & (std::uint32_t{1} << i))) {
        m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(i)) -= 1.0;
        ++complement;
      }
    double prob = (complement % 2 == 0 ? 1.0 : -1.0) * m.determinant();
    prob = std::clamp(prob, 0.0, 1.0);
    total += prob;
    out.emplace_back(mask, prob);
  }
  if (std::abs(total - 1.0) > 1e-9)
    throw Error("enumerate_measure: probabilities do not sum to 1");
  return out;
}

}  // namespace gkdpp
