#ifndef GKDPP_ZMEASURE_HPP
#define GKDPP_ZMEASURE_HPP

#include <vector>

#include "gkdpp/params.hpp"
#include "gkdpp/partitions.hpp"

namespace gkdpp {

/// Weight of one partition under the mixed measure with parameters (z,z')
/// and mixing parameter xi in (0,1):
///   (1-xi)^{z z'} xi^{|la|} (z)_la (z')_la (dim la / |la|!)^2,
/// strictly positive for admissible parameters. dim is computed through the
/// hook length formula.
double zmeasure_weight(const AdmissibleParams& p, double xi, const Partition& la);

/// Cumulative mass sum_{|la| <= n} weight for n = 0..max_size, in the fixed
/// size-then-lex enumeration order. Monotone increasing toward 1.
std::vector<double> zmeasure_partial_mass(const AdmissibleParams& p, double xi,
                                          int max_size);

}  // namespace gkdpp

#endif  // GKDPP_ZMEASURE_HPP
