#ifndef GKDPP_DPP_HPP
#define GKDPP_DPP_HPP

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "gkdpp/kernel_matrix.hpp"

namespace gkdpp {

/// A particle pattern: the sorted k-labels of occupied sites.
struct Configuration {
  std::vector<long long> sites;

  bool occupies(LatticePoint p) const;
  friend bool operator==(const Configuration&, const Configuration&) = default;
};

/// n-point correlation: determinant of the minor indexed by pts. Distinct
/// in-window points required; tiny negative determinants clamp to 0.
double correlation(const KernelMatrix& k, std::span<const LatticePoint> pts);

/// P(omega cap T = S) = (-1)^{|T\S|} det(K_T - I_{T\S}); needs S subset of T
/// subset of window. Result clamped into [0,1] within 1e-10.
double cylinder_prob(const KernelMatrix& k, std::span<const LatticePoint> T,
                     std::span<const LatticePoint> S);

/// E[prod_{x in omega} a(x)] = det(1 + (a-1)K) over the window.
double expect_multiplicative(const KernelMatrix& k,
                             const std::function<double(LatticePoint)>& a);

/// Exhaustive law of the windowed process: probability of every bitmask
/// (bit i = window site i occupied). Brute-force oracle; window capped at 20
/// sites. Probabilities sum to 1 within 1e-9.
std::vector<std::pair<std::uint32_t, double>> enumerate_measure(
    const KernelMatrix& k);

}  // namespace gkdpp

#endif  // GKDPP_DPP_HPP
