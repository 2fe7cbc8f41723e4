#include <doctest.h>

#include <cmath>

#include "altknot/augmentation.hpp"
#include "altknot/error.hpp"
#include "altknot/volume.hpp"
#include "oracles.hpp"

using namespace altknot;

TEST_CASE("constants against independent oracles") {
  const VolumeConstants& c = constants();
  CHECK(std::abs(c.v3 - oracle::v3_quadrature()) <= 1e-12);
  CHECK(std::abs(c.four_catalan - oracle::four_catalan_series()) <= 1e-12);
  CHECK(c.v3 == doctest::Approx(1.014941606409653).epsilon(1e-14));
  CHECK(c.four_catalan == doctest::Approx(3.663862376708876).epsilon(1e-14));
  CHECK(c.v3 > 0);
  CHECK(c.four_catalan > 0);
}

TEST_CASE("Lackenby bounds") {
  const double v3 = constants().v3;
  VolumeBounds t2 = lackenby_bounds(2);
  CHECK(t2.lower == 0.0);
  CHECK(t2.upper == doctest::Approx(10.14941606).epsilon(1e-9));
  VolumeBounds t4 = lackenby_bounds(4);
  CHECK(t4.lower == doctest::Approx(2.029883213).epsilon(1e-9));
  CHECK(t4.upper == doctest::Approx(30.44824819).epsilon(1e-9));
  VolumeBounds t1 = lackenby_bounds(1);
  CHECK(t1.lower_raw == doctest::Approx(-1.014941606).epsilon(1e-9));
  CHECK(t1.lower == 0.0);
  CHECK(t1.upper == 0.0);
  for (int t = 1; t <= 100; ++t) {
    VolumeBounds b = lackenby_bounds(t);
    CHECK(b.lower_raw == v3 * (t - 2));
    CHECK(b.upper == 10 * v3 * (t - 1));
    CHECK(b.upper - b.lower_raw == doctest::Approx(v3 * (9 * t - 8)));
    if (t > 1) CHECK(b.upper >= lackenby_bounds(t - 1).upper);
  }
  try {
    lackenby_bounds(0);
    FAIL("no error");
  } catch (const Error& e) {
    CHECK(e.kind() == "DomainError");
  }
}

TEST_CASE("AltVol bounds") {
  const VolumeConstants& c = constants();
  AltVolBounds one = altvol_bounds(1);
  CHECK(one.upper.upper == 40 * c.v3);
  CHECK(one.upper.upper == doctest::Approx(40.59766426).epsilon(1e-9));
  CHECK(c.four_catalan <= one.upper.upper);
  CHECK_FALSE(one.lower);
  CHECK(altvol_bounds(2).upper.upper == 90 * c.v3);
  AltVolBounds claim = altvol_bounds(1, 3);
  REQUIRE(claim.lower);
  CHECK(claim.lower->lower == c.v3);
  for (int t = 1; t <= 100; ++t) CHECK(altvol_bounds(t).upper.upper == 10 * c.v3 * (5 * t - 1));
}

TEST_CASE("volume report") {
  const double v3 = constants().v3;
  AugmentationResult res;
  res.t_D = 3;
  res.t_G = 11;
  res.certificate.verdict = Verdict::Hyperbolic;
  VolumeReport v = volume_report(res);
  CHECK(v.link.lower == doctest::Approx(9 * v3));
  CHECK(v.link.upper == doctest::Approx(100 * v3));
  CHECK(v.altvol.upper.upper == doctest::Approx(140 * v3));
  CHECK(v.audit);

  res.certificate.verdict = Verdict::NotCertified;
  try {
    volume_report(res);
    FAIL("no error");
  } catch (const Error& e) {
    CHECK(e.kind() == "NotCertified");
  }
}
