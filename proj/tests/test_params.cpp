#include <doctest.h>

#include "gkdpp/params.hpp"

using gkdpp::AdmissibleParams;
using gkdpp::Complex;
using gkdpp::NotAdmissible;
using gkdpp::Series;

TEST_SUITE_BEGIN("params");

TEST_CASE("principal classification") {
  const auto p = AdmissibleParams::make(Complex(0.4, 0.7), Complex(0.4, -0.7));
  CHECK(p.series() == Series::principal);
  CHECK(!p.real_pair());
  CHECK(p.zp() == std::conj(p.z()));
}

TEST_CASE("complementary classification with interval floor") {
  const auto p = AdmissibleParams::make(Complex(0.2, 0.0), Complex(0.6, 0.0));
  CHECK(p.series() == Series::complementary);
  CHECK(p.interval_floor() == 0);

  const auto q = AdmissibleParams::make(Complex(-1.8, 0.0), Complex(-1.3, 0.0));
  CHECK(q.series() == Series::complementary);
  CHECK(q.interval_floor() == -2);
}

TEST_CASE("degenerate equal-real pair") {
  const auto p = AdmissibleParams::make(Complex(0.3, 0.0), Complex(0.3, 0.0));
  CHECK(p.series() == Series::degenerate);
  CHECK(p.real_pair());
}

TEST_CASE("rejections carry reasons") {
  CHECK_THROWS_AS(AdmissibleParams::make(Complex(0.2, 0.0), Complex(1.6, 0.0)),
                  NotAdmissible);
  CHECK_THROWS_AS(AdmissibleParams::make(Complex(2.0, 0.0), Complex(2.2, 0.0)),
                  NotAdmissible);
  CHECK_THROWS_AS(AdmissibleParams::make(Complex(0.4, 0.7), Complex(0.5, -0.7)),
                  NotAdmissible);
  CHECK_THROWS_WITH_AS(
      AdmissibleParams::make(Complex(0.2, 0.0), Complex(1.6, 0.0)),
      doctest::Contains("common open unit interval"), NotAdmissible);
}

TEST_CASE("shift and swap preserve admissibility") {
  const auto p = AdmissibleParams::make(Complex(0.2, 0.0), Complex(0.6, 0.0));
  const auto up = p.shifted(3);
  CHECK(up.z().real() == doctest::Approx(3.2));
  CHECK(up.interval_floor() == 3);
  const auto sw = p.swapped();
  CHECK(sw.z().real() == doctest::Approx(0.6));
  CHECK(sw.series() == Series::complementary);

  const auto principal = AdmissibleParams::make(Complex(0.4, 0.7), Complex(0.4, -0.7));
  CHECK(principal.shifted(-2).z() == Complex(-1.6, 0.7));
  CHECK(principal.swapped().z() == Complex(0.4, -0.7));
}

TEST_SUITE_END();
