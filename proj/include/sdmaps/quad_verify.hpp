#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "sdmaps/fields.hpp"
#include "sdmaps/sd_core.hpp"
#include "sdmaps/sd_report.hpp"

namespace sdmaps {

enum class QuadMap { identity, conjugation };
std::string to_string(QuadMap m);
QuadMap parse_quad_map(const std::string& text);  // "id" | "identity" | "conj" | "conjugation"

SdCandidate<QuadraticField> quad_candidate(const QuadraticField& field, QuadMap which);

// check_sd for the identity or conjugation on sample_size seeded pairs of
// Q(sqrt d). Throws PreconditionError if d is rejected.
SdReport verify_automorphism_sd(const Rational& d, QuadMap which, std::size_t sample_size, std::uint64_t seed);

// The two cases for an SD map on Q(sqrt d):
//   plus:  f(sqrt d) = sqrt d,  f(z/zbar) = z/zbar and f(z)^2 = z^2
//   minus: f(sqrt d) = -sqrt d, f(z/zbar) = zbar/z and f(z)^2 = zbar^2
enum class SignCase { plus, minus };
std::string to_string(SignCase c);

// Instantiates f as the identity (plus) or conjugation (minus) and checks on
// every sampled z != 0:
//   f(z/zbar) obtained from the SD equation at (x, y) = (a, b sqrt d),
//   f(z/zbar) equals z/zbar (plus) or zbar/z (minus),
//   f(z/zbar) * (z zbar) = f(z^2), with z zbar rational and hence fixed,
//   f(z)^2 = f(z^2) = z^2 (plus) or zbar^2 (minus).
SdReport quotient_case_formulas(const Rational& d, SignCase which, std::span<const QuadraticElement> sample);

struct SignComparison {
  int sign = 1;                  // compared against sign * target
  bool equal = false;            // hypothetical == sign * target
  QuadraticElement discrepancy;  // (hypothetical - sign*target) * (cleared denominator)
};

struct ContradictionResult {
  bool confirmed = false;
  QuadraticElement hypothetical;  // value forced on 2 + sqrt d by the wrong sign at 1 + sqrt d
  QuadraticElement closed_form;   // d/(2+sqrt d) or -d/(sqrt d - 2)
  std::vector<SignComparison> comparisons;
  SdReport report;
};

// Rules out the wrong sign at 1 + sqrt d. Assuming f(1+sqrt d) = -(1+sqrt d)
// (plus branch; sqrt d - 1 in the minus branch), one forward progression
// step from sqrt d forces a value on 2 + sqrt d that is neither of the two
// values +-(2+sqrt d) (resp. +-(2-sqrt d)) the quotient cases allow. With
// denominators cleared, each discrepancy has sqrt d coefficient -4*sign, so
// equality would put 4 sqrt d in Q.
ContradictionResult sign_contradiction(const Rational& d, SignCase branch);

enum class LatticeOrder { row_major, column_major };
std::string to_string(LatticeOrder o);

struct LatticePoint {
  QuadraticElement value;  // certified f(m + n sqrt d)
  std::string provenance;
};

// Certified behaviour of f on {m + n sqrt d : |m| <= M, |n| <= N} \ {0}.
struct LatticeFixation {
  Rational d;
  QuadMap which = QuadMap::identity;
  long m_bound = 0;
  long n_bound = 0;
  std::map<std::pair<long, long>, LatticePoint> grid;
  SdReport report;
};

// Replays the lattice argument. Works with g = f (identity) or g = conj o f
// (conjugation), which fixes sqrt d in both branches:
//   axes:       g(m) = m and g(n sqrt d) = n g(sqrt d) = n sqrt d
//   1 + sqrt d: g(1+sqrt d) = +-(1+sqrt d), minus ruled out by sign_contradiction
//   row-major:     line m = 1 by progression (1, sqrt d), then each row n != 0
//                  by progression (n sqrt d, 1)
//   column-major:  row n = 1 by progression (sqrt d, 1), then each column
//                  m != 0 by progression (m, sqrt d)
// Every certified value is cross-checked against the candidate map and the
// closed form m + n sqrt d (identity) or m - n sqrt d (conjugation).
LatticeFixation lattice_fix(const Rational& d, QuadMap which, long m_bound, long n_bound,
                            LatticeOrder order = LatticeOrder::row_major);

// {d, map, grid: "MxN", certified, points: [{m, n, value, provenance}], report}
Json to_json(const LatticeFixation& lf, bool include_points = true);
Json to_json(const ContradictionResult& c);

}  // namespace sdmaps
