#ifndef GKDPP_WINDOW_HPP
#define GKDPP_WINDOW_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include "gkdpp/errors.hpp"
#include "gkdpp/params.hpp"

namespace gkdpp {

/// A finite, strictly increasing set of sites. The symmetric lattice window
/// X_n = {-n+1/2, ..., n-1/2} is constructible by radius; synthetic ground
/// sets use consecutive labels starting at 0.
class Window {
 public:
  explicit Window(std::vector<LatticePoint> sites);

  static Window symmetric(int radius);      // k in [-radius, radius-1]
  static Window labels(std::size_t n);      // k in [0, n-1]

  std::size_t size() const { return sites_.size(); }
  LatticePoint operator[](std::size_t i) const { return sites_[i]; }
  const std::vector<LatticePoint>& sites() const { return sites_; }

  bool contains(LatticePoint p) const { return index_of(p).has_value(); }
  std::optional<std::size_t> index_of(LatticePoint p) const;

  /// The window with one site removed; throws if the site is absent.
  Window without(LatticePoint p) const;

 private:
  std::vector<LatticePoint> sites_;
};

}  // namespace gkdpp

#endif  // GKDPP_WINDOW_HPP
