#ifndef GKDPP_FOURIER_HPP
#define GKDPP_FOURIER_HPP

#include <functional>

#include "gkdpp/params.hpp"

namespace gkdpp {

/// A function on the unit circle, sampled as theta -> f(e^{i theta}).
using CircleFunction = std::function<Complex(double)>;

/// Closed-form coefficient family kappa(z,z') Gamma(k+z')/Gamma(k+z+1).
/// Paired per the half-integer indexing k = x+n+1/2 these reproduce the
/// series expansion of the modified kernel; numerically they are the Fourier
/// coefficients of the swapped-parameter limit symbol.
Complex phi_hat_limit(const AdmissibleParams& p, long k);

/// The boundary symbol (1-u^{-1})^{z'} / (1-u)^{z} with principal-branch
/// powers; discontinuous at u = 1, integrable on the circle.
CircleFunction limit_symbol(const AdmissibleParams& p);

/// The symbol (1-u^{-1} sqrt(xi))^{z'} / (1-u sqrt(xi))^{z}, 0 < xi < 1;
/// holomorphic in an annulus around the circle.
CircleFunction xi_symbol(const AdmissibleParams& p, double xi);

/// k-th Fourier coefficient (1/2pi) Int f(e^{it}) e^{-ikt} dt by composite
/// midpoint quadrature (the nodes never hit u = 1), refined until two
/// successive levels agree within tol. Throws NonConvergent at the node cap.
Complex fourier_numeric(const CircleFunction& f, long k, int min_nodes = 64,
                        double tol = 1e-8, int max_nodes = 1 << 22);

}  // namespace gkdpp

#endif  // GKDPP_FOURIER_HPP
