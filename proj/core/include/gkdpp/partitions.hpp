#ifndef GKDPP_PARTITIONS_HPP
#define GKDPP_PARTITIONS_HPP

#include <functional>
#include <vector>

#include "gkdpp/errors.hpp"

namespace gkdpp {

/// An integer partition, parts weakly decreasing and positive. The empty
/// partition is allowed.
struct Partition {
  std::vector<int> parts;

  int size() const;  // number of boxes
  std::vector<int> conjugate() const;

  /// log(dim / n!) where dim is the number of standard tableaux of this
  /// shape, via the hook length formula: dim = n! / prod(hooks).
  double log_dim_over_factorial() const;
};

/// Visit every partition of n in lexicographically decreasing part order
/// ([n], [n-1,1], ..., [1^n]); deterministic, so partial sums over partitions
/// are reproducible.
void for_each_partition(int n, const std::function<void(const Partition&)>& fn);

}  // namespace gkdpp

#endif  // GKDPP_PARTITIONS_HPP
