#include "gkdpp/params.hpp"

#include <cmath>
#include <sstream>

namespace gkdpp {

namespace {

bool near_integer(double t) { return std::abs(t - std::round(t)) < 1e-12; }

}  // namespace

AdmissibleParams AdmissibleParams::make(Complex z, Complex zp) {
  const double scale = std::max({1.0, std::abs(z), std::abs(zp)});
  const bool z_real = std::abs(z.imag()) <= 1e-13 * scale;
  const bool zp_real = std::abs(zp.imag()) <= 1e-13 * scale;

  if (z_real && zp_real) {
    const double a = z.real();
    const double b = zp.real();
    if (near_integer(a) || near_integer(b))
      throw NotAdmissible("real parameters must not be integers");
    const double fa = std::floor(a);
    if (fa != std::floor(b)) {
      std::ostringstream os;
      os << "real pair (" << a << ", " << b
         << ") does not lie in a common open unit interval (l, l+1)";
      throw NotAdmissible(os.str());
    }
    const int ell = static_cast<int>(fa);
    const Series s = (a == b) ? Series::degenerate : Series::complementary;
    return AdmissibleParams(Complex(a, 0.0), Complex(b, 0.0), s, ell);
  }

  if (std::abs(zp - std::conj(z)) > 1e-12 * scale)
    throw NotAdmissible("complex parameters must form a conjugate pair z' = conj(z)");
  return AdmissibleParams(z, std::conj(z), Series::principal, 0);
}

AdmissibleParams AdmissibleParams::shifted(int m) const {
  const double dm = static_cast<double>(m);
  return AdmissibleParams(z_ + dm, zp_ + dm, series_, ell_ + m);
}

AdmissibleParams AdmissibleParams::swapped() const {
  return AdmissibleParams(zp_, z_, series_, ell_);
}

}  // namespace gkdpp
