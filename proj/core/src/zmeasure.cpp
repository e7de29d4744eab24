#include "gkdpp/zmeasure.hpp"

#include <cmath>

namespace gkdpp {

double zmeasure_weight(const AdmissibleParams& p, double xi, const Partition& la) {
  if (!(xi > 0.0 && xi < 1.0)) throw Error("zmeasure_weight: xi must be in (0,1)");
  const Complex z = p.z(), zp = p.zp();
  const double zzp = (z * zp).real();  // z z' > 0 for admissible pairs

  double log_w = zzp * std::log1p(-xi) +
                 la.size() * std::log(xi) +
                 2.0 * la.log_dim_over_factorial();
  for (std::size_t i = 0; i < la.parts.size(); ++i)
    for (int j = 0; j < la.parts[i]; ++j) {
      const double content = static_cast<double>(j) - static_cast<double>(i);
      // (z+c)(z'+c) is real and strictly positive for admissible parameters
      const double factor = ((z + content) * (zp + content)).real();
      log_w += std::log(factor);
    }
  return std::exp(log_w);
}

std::vector<double> zmeasure_partial_mass(const AdmissibleParams& p, double xi,
                                          int max_size) {
  std::vector<double> cumulative;
  cumulative.reserve(max_size + 1);
  double acc = 0.0;
  for (int n = 0; n <= max_size; ++n) {
    for_each_partition(
        n, [&](const Partition& la) { acc += zmeasure_weight(p, xi, la); });
    cumulative.push_back(acc);
  }
  return cumulative;
}

}  // namespace gkdpp
