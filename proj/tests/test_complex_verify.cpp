#include <doctest.h>

#include <cmath>
#include <numbers>

#include "sdmaps/complex_verify.hpp"
#include "sdmaps/sampling.hpp"
#include "sdmaps/sd_core.hpp"

using namespace sdmaps;

TEST_CASE("default complex suite passes") {
  const auto s = verify_complex(1e-9, 1000, 1);
  CHECK(s.passed());
  CHECK(s.identity_sd.checked_pairs == 1000);
  CHECK(s.conjugation_sd.checked_pairs == 1000);
  CHECK(s.half_angle.checked_pairs == 1000);
}

TEST_CASE("conjugation residual at (1+2i, 3-i) is rounding only") {
  CHECK(conjugation_spot_residual() <= 1e-12);
  // Exact value of both sides: (4+i)/(-2+3i) conjugated = (-5-14i)/13 conj.
  const ApproxComplexField field;
  const auto sides = sd_sides(field, conjugation_map(field), field.make(1, 2), field.make(3, -1));
  CHECK(std::abs(sides.lhs.re - (-5.0 / 13)) < 1e-15);
  CHECK(std::abs(sides.lhs.im - (14.0 / 13)) < 1e-15);
}

TEST_CASE("half-angle identities at pi/3") {
  const ApproxComplexField field;
  CHECK(half_angle_check(field, std::numbers::pi / 3).passed());
  CHECK(std::abs(std::sqrt((1 + std::cos(std::numbers::pi / 3)) / 2) - std::sqrt(3.0) / 2) < 1e-15);
}

TEST_CASE("z -> -z and z -> z^2 are rejected on complex samples") {
  const ApproxComplexField field;
  SampleRng rng(3);
  const auto pairs = sample_pairs(field, rng, 50);
  const SdCandidate<ApproxComplexField> neg{"neg", [&](const ApproxComplex& z) { return field.neg(z); }};
  const SdCandidate<ApproxComplexField> sq{"square", [&](const ApproxComplex& z) { return field.mul(z, z); }};
  CHECK_FALSE(check_sd(field, neg, pairs).passed());
  CHECK_FALSE(check_sd(field, sq, pairs).passed());
}

TEST_CASE("the suite is reproducible for a fixed seed") {
  CHECK(to_json(verify_complex(1e-9, 200, 5)).dump() == to_json(verify_complex(1e-9, 200, 5)).dump());
}
