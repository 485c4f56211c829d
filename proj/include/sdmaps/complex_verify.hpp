#pragma once

#include <cstdint>

#include "sdmaps/fields.hpp"
#include "sdmaps/sd_report.hpp"

namespace sdmaps {

// Numerical smoke test of the conclusions about R-preserving SD maps on C.
// All comparisons use the carrier's mixed tolerance.
struct ComplexSuite {
  SdReport identity_sd;
  SdReport conjugation_sd;
  // f(z/zbar) (direct and via the SD equation at (Re z, i Im z)), f(z^2),
  // and f(e^{i theta}) = f(w/wbar) with w = e^{i theta/2}, for both maps.
  SdReport identity_quotient;
  SdReport conjugation_quotient;
  // cos(t/2) = sqrt((1+cos t)/2), |sin(t/2)| = sqrt((1-cos t)/2),
  // (e^{i t/2})^2 = e^{i t} for t in (-pi, pi).
  SdReport half_angle;
  // Conjugation at (1+2i, 3-i) with |residual| <= 1e-12, and theta = pi/3.
  SdReport spot_checks;

  bool passed() const;
};

ComplexSuite verify_complex(double tol, std::size_t samples, std::uint64_t seed);

// Half-angle identities at a single angle.
SdReport half_angle_check(const ApproxComplexField& field, double theta);

inline constexpr double kSpotResidualBound = 1e-12;

// |lhs - rhs| of the SD equation for conjugation at x = 1+2i, y = 3-i.
double conjugation_spot_residual();

Json to_json(const ComplexSuite& s);

}  // namespace sdmaps
