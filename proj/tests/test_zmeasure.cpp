#include <doctest.h>

#include <cmath>

#include "gkdpp/zmeasure.hpp"

using gkdpp::AdmissibleParams;
using gkdpp::Complex;
using gkdpp::for_each_partition;
using gkdpp::Partition;
using gkdpp::zmeasure_partial_mass;
using gkdpp::zmeasure_weight;

namespace {

const AdmissibleParams& principal() {
  static const auto p =
      AdmissibleParams::make(Complex(0.4, 0.7), Complex(0.4, -0.7));
  return p;
}

}  // namespace

TEST_SUITE_BEGIN("zmeasure");

TEST_CASE("partition enumeration counts and order") {
  int count = 0;
  std::vector<std::vector<int>> seen;
  for_each_partition(5, [&](const Partition& la) {
    ++count;
    seen.push_back(la.parts);
  });
  CHECK(count == 7);  // p(5) = 7
  CHECK(seen.front() == std::vector<int>{5});
  CHECK(seen.back() == std::vector<int>{1, 1, 1, 1, 1});

  count = 0;
  for_each_partition(10, [&](const Partition&) { ++count; });
  CHECK(count == 42);  // p(10) = 42
}

TEST_CASE("hook-length dimension for small shapes") {
  // dim [1] = 1; dim [2,1] = 2; dim [2,2] = 2; dim [3,2] via hooks = 5
  const auto dim = [](const Partition& la) {
    double logf = 0.0;
    for (int i = 2; i <= la.size(); ++i) logf += std::log(static_cast<double>(i));
    return std::exp(la.log_dim_over_factorial() + logf);
  };
  CHECK(dim(Partition{{1}}) == doctest::Approx(1.0));
  CHECK(dim(Partition{{2, 1}}) == doctest::Approx(2.0));
  CHECK(dim(Partition{{2, 2}}) == doctest::Approx(2.0));
  CHECK(dim(Partition{{3, 2}}) == doctest::Approx(5.0));
  CHECK(dim(Partition{{4, 3, 1}}) == doctest::Approx(70.0).epsilon(1e-10));
}

TEST_CASE("empty partition weight is (1-xi)^{z z'}") {
  const double xi = 0.3;
  const double zz = std::norm(principal().z());
  CHECK(zmeasure_weight(principal(), xi, Partition{}) ==
        doctest::Approx(std::pow(1.0 - xi, zz)).epsilon(1e-13));
}

TEST_CASE("single-box and two-box weights from the content products") {
  const double xi = 0.3;
  const Complex z = principal().z(), zp = principal().zp();
  const double base = std::pow(1.0 - xi, std::norm(z));
  CHECK(zmeasure_weight(principal(), xi, Partition{{1}}) ==
        doctest::Approx(base * xi * (z * zp).real()).epsilon(1e-12));
  // [2]: contents {0, 1}; [1,1]: contents {0, -1}; dim = 1, |la|! = 2
  CHECK(zmeasure_weight(principal(), xi, Partition{{2}}) ==
        doctest::Approx(base * xi * xi * (z * (z + 1.0) * zp * (zp + 1.0)).real() / 4.0)
            .epsilon(1e-12));
  CHECK(zmeasure_weight(principal(), xi, Partition{{1, 1}}) ==
        doctest::Approx(base * xi * xi * (z * (z - 1.0) * zp * (zp - 1.0)).real() / 4.0)
            .epsilon(1e-12));
}

TEST_CASE("weights are strictly positive across the admissible regimes") {
  const auto comp = AdmissibleParams::make(Complex(-1.8, 0.0), Complex(-1.3, 0.0));
  for (const auto* p : {&principal(), &comp}) {
    for (int n = 0; n <= 8; ++n)
      for_each_partition(n, [&](const Partition& la) {
        CHECK(zmeasure_weight(*p, 0.4, la) > 0.0);
      });
  }
}

TEST_CASE("partial mass increases to 1") {
  const auto mass = zmeasure_partial_mass(principal(), 0.3, 26);
  for (std::size_t i = 1; i < mass.size(); ++i) CHECK(mass[i] >= mass[i - 1]);
  CHECK(mass.back() >= 1.0 - 1e-6);
  CHECK(mass.back() <= 1.0 + 1e-9);
}

TEST_SUITE_END();
