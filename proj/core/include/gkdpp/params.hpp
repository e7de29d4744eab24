#ifndef GKDPP_PARAMS_HPP
#define GKDPP_PARAMS_HPP

#include <complex>

#include "gkdpp/errors.hpp"

namespace gkdpp {

using Complex = std::complex<double>;

// The two admissible regimes, with the equal-real-pair case kept apart since
// the kernel evaluates through a different branch there.
enum class Series { principal, complementary, degenerate };

/// An admissible parameter pair (z, z'): either a complex-conjugate pair with
/// z off the integers (principal), or two reals inside a common open unit
/// interval (l, l+1) (complementary; degenerate when equal). Construction via
/// make() rejects everything else.
class AdmissibleParams {
 public:
  static AdmissibleParams make(Complex z, Complex zp);

  Complex z() const { return z_; }
  Complex zp() const { return zp_; }
  Series series() const { return series_; }
  bool real_pair() const { return series_ != Series::principal; }

  // The l with z, z' in (l, l+1); only meaningful for real pairs.
  int interval_floor() const { return ell_; }

  AdmissibleParams shifted(int m) const;   // (z+m, z'+m)
  AdmissibleParams swapped() const;        // (z', z)

 private:
  AdmissibleParams(Complex z, Complex zp, Series s, int ell)
      : z_(z), zp_(zp), series_(s), ell_(ell) {}

  Complex z_, zp_;
  Series series_;
  int ell_;
};

/// A site x = k + 1/2 of the half-integer lattice, stored exactly. Synthetic
/// ground sets reuse the k field as an abstract label.
struct LatticePoint {
  long long k = 0;

  double x() const { return static_cast<double>(k) + 0.5; }
  friend auto operator<=>(const LatticePoint&, const LatticePoint&) = default;
};

}  // namespace gkdpp

#endif  // GKDPP_PARAMS_HPP
