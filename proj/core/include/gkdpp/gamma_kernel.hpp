#ifndef GKDPP_GAMMA_KERNEL_HPP
#define GKDPP_GAMMA_KERNEL_HPP

#include "gkdpp/params.hpp"

namespace gkdpp {

/// Gauge weight A(x) = Gamma(x+z+1/2)/sqrt(Gamma(x+z+1/2)Gamma(x+z'+1/2)),
/// positive square root. Unimodular for the principal series; real nonzero
/// for real pairs; reduces to sgn Gamma(x+a+1/2) when z = z' = a.
Complex a_weight(const AdmissibleParams& p, LatticePoint x);

/// C(z,z') = (sin(pi z) sin(pi z') / pi^2) * S(pi (z-z')), S(t) = t/sin(t)
/// with its removable singularity filled by Taylor series. Strictly positive
/// for admissible parameters.
double c_constant(const AdmissibleParams& p);

/// Kernel entry K(x,y): real and symmetric. Branches: generic off-diagonal
/// and digamma diagonal for z != z'; for z = z' = a the off-diagonal carries
/// the sign factors sgn Gamma(x+a+1/2) sgn Gamma(y+a+1/2) (without them the
/// restriction to a sign-mixed window loses positive semidefiniteness) and
/// the diagonal uses the trigamma value. Near-equal real pairs
/// (|z-z'| < 1e-8) reroute through the equal-parameter branch at the
/// midpoint, which resolves a 0/0 amplification.
double kernel_entry(const AdmissibleParams& p, LatticePoint x, LatticePoint y);

/// Gauge-transformed kernel (A(y)/A(x)) K(x,y).
Complex modified_kernel_entry(const AdmissibleParams& p, LatticePoint x,
                              LatticePoint y);

struct SeriesSum {
  Complex value;
  double bound = 0.0;  // covers |value - true sum|
  long terms = 0;
};

/// m-th term of the series expansion of the modified kernel, including the
/// C(z,z') prefactor.
Complex series_term(const AdmissibleParams& p, LatticePoint x, LatticePoint y,
                    long m);

/// Series route to the modified kernel: partial sums of the absolutely
/// convergent O(m^-2) expansion, Richardson-extrapolated in the truncation
/// length, with the reported bound taken from the extrapolation spread.
/// Throws BudgetExceeded past 1e7 terms.
SeriesSum kernel_series(const AdmissibleParams& p, LatticePoint x,
                        LatticePoint y, double tol);

/// kappa(z,z') = sin(pi z') Gamma(1+z-z') / pi; the prefactor of the basis
/// functions. kappa(z,z') * kappa(z',z) = C(z,z').
Complex series_prefactor(const AdmissibleParams& p);

/// h_m(x) = kappa(z,z') Gamma(x+z'+m+1/2)/Gamma(x+z+m+3/2), any integer m.
Complex basis_h(const AdmissibleParams& p, int m, LatticePoint x);

/// g_m(x) = A(x) h_m(x). For the principal series {g_m : m >= 0} is an
/// orthonormal basis of the kernel's range; in general the biorthogonal
/// partner family is g with swapped parameters.
Complex basis_g(const AdmissibleParams& p, int m, LatticePoint x);

inline double rho1(const AdmissibleParams& p, LatticePoint x) {
  return kernel_entry(p, x, x);
}

}  // namespace gkdpp

#endif  // GKDPP_GAMMA_KERNEL_HPP
