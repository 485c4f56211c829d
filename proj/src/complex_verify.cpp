#include "sdmaps/complex_verify.hpp"

#include <cmath>
#include <numbers>

#include "sdmaps/errors.hpp"
#include "sdmaps/sampling.hpp"
#include "sdmaps/sd_core.hpp"

namespace sdmaps {

bool ComplexSuite::passed() const {
  return identity_sd.passed() && conjugation_sd.passed() && identity_quotient.passed() &&
         conjugation_quotient.passed() && half_angle.passed() && spot_checks.passed();
}

namespace {

void expect_eq(SdReport& report, const ApproxComplexField& field, const char* kind, const std::string& at,
               const ApproxComplex& got, const ApproxComplex& want) {
  if (!field.eq(got, want)) report.add_violation({kind, at, "", field.format(got), field.format(want)});
}

SdReport quotient_suite(const ApproxComplexField& field, const SdCandidate<ApproxComplexField>& f, bool conj,
                        const std::vector<ApproxComplex>& zs, const std::vector<double>& thetas) {
  SdReport report;
  for (const ApproxComplex& z : zs) {
    if (field.is_zero(z)) continue;
    const std::string at = field.format(z);
    const ApproxComplex zbar = field.conj(z);
    const ApproxComplex quotient = field.div(z, zbar);
    const ApproxComplex expected = conj ? field.div(zbar, z) : quotient;
    const ApproxComplex x = field.make(z.re, 0.0);
    const ApproxComplex y = field.make(0.0, z.im);
    const ApproxComplex via_sd = field.div(field.add(f(x), f(y)), field.sub(f(x), f(y)));
    ++report.checked_pairs;
    expect_eq(report, field, "quotient_via_sd", at, via_sd, expected);
    expect_eq(report, field, "quotient", at, f(quotient), expected);
    const ApproxComplex z2 = field.mul(z, z);
    const ApproxComplex norm2 = field.mul(z, zbar);
    expect_eq(report, field, "square", at, f(z2), conj ? field.mul(zbar, zbar) : z2);
    expect_eq(report, field, "chain", at, field.mul(f(quotient), norm2), f(z2));
  }
  for (double t : thetas) {
    const ApproxComplex e = field.make(std::cos(t), std::sin(t));
    const ApproxComplex w = field.make(std::cos(t / 2), std::sin(t / 2));
    const ApproxComplex ww = field.div(w, field.conj(w));
    ++report.checked_pairs;
    expect_eq(report, field, "unit_quotient", std::to_string(t), ww, e);
    expect_eq(report, field, "unit_image", std::to_string(t), f(ww), conj ? field.conj(e) : e);
  }
  report.note(std::string("quotient case for ") + f.name);
  return report;
}

}  // namespace

SdReport half_angle_check(const ApproxComplexField& field, double theta) {
  SdReport report;
  const std::string at = std::to_string(theta);
  const double c = std::cos(theta);
  ++report.checked_pairs;
  expect_eq(report, field, "cos_half", at, field.make(std::cos(theta / 2), 0.0),
            field.make(std::sqrt((1 + c) / 2), 0.0));
  expect_eq(report, field, "sin_half", at, field.make(std::fabs(std::sin(theta / 2)), 0.0),
            field.make(std::sqrt((1 - c) / 2), 0.0));
  const ApproxComplex w = field.make(std::cos(theta / 2), std::sin(theta / 2));
  expect_eq(report, field, "half_square", at, field.mul(w, w), field.make(c, std::sin(theta)));
  return report;
}

double conjugation_spot_residual() {
  const ApproxComplexField field;
  const auto residual = sd_residual(field, conjugation_map(field), field.make(1, 2), field.make(3, -1));
  return std::abs(residual.value());
}

ComplexSuite verify_complex(double tol, std::size_t samples, std::uint64_t seed) {
  const ApproxComplexField field(tol);
  SampleRng rng(seed);
  const auto pairs = sample_pairs(field, rng, samples);
  const auto zs = sample_elements(field, rng, samples);
  std::vector<double> thetas;
  thetas.reserve(samples);
  while (thetas.size() < samples) {
    const double t = rng.uniform_real(-std::numbers::pi, std::numbers::pi);
    if (t > -std::numbers::pi) thetas.push_back(t);
  }

  ComplexSuite s;
  const auto id = identity_map(field);
  const auto cj = conjugation_map(field);
  s.identity_sd = check_sd(field, id, pairs);
  s.conjugation_sd = check_sd(field, cj, pairs);
  s.identity_quotient = quotient_suite(field, id, false, zs, thetas);
  s.conjugation_quotient = quotient_suite(field, cj, true, zs, thetas);
  for (double t : thetas) s.half_angle.merge(half_angle_check(field, t));
  s.half_angle.note("half-angle identities on " + std::to_string(thetas.size()) + " angles");

  const double residual = conjugation_spot_residual();
  ++s.spot_checks.checked_pairs;
  if (!(residual <= kSpotResidualBound))
    s.spot_checks.add_violation({"spot_residual", "1+2*i", "3-1*i", std::to_string(residual), "0"});
  s.spot_checks.merge(half_angle_check(field, std::numbers::pi / 3));
  return s;
}

Json to_json(const ComplexSuite& s) {
  Json j;
  j["identity_sd"] = to_json(s.identity_sd);
  j["conjugation_sd"] = to_json(s.conjugation_sd);
  j["identity_quotient"] = to_json(s.identity_quotient);
  j["conjugation_quotient"] = to_json(s.conjugation_quotient);
  j["half_angle"] = to_json(s.half_angle);
  j["spot_checks"] = to_json(s.spot_checks);
  return j;
}

}  // namespace sdmaps
