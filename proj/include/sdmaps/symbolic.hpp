#pragma once

#include <vector>

#include "sdmaps/polynomial.hpp"
#include "sdmaps/rational_function.hpp"
#include "sdmaps/sd_report.hpp"

namespace sdmaps {

inline constexpr int kDefaultSymbolicCap = 50;

// f(0), f(1), ..., f(N) of an SD map on a field of characteristic 0 as
// rational functions of u = f(2), generated by
//   f(n+1) = f(n-1) * (f(n)+1)/(f(n)-1),  n >= 2,
// from f(0) = 0, f(1) = 1, f(2) = u.
struct SymbolicSequence {
  std::vector<RationalFunction> entries;
};

// Throws PreconditionError unless 2 <= N <= cap, and RecurrenceDegenerate if
// some entry is identically 1.
SymbolicSequence symbolic_sequence(int n, int cap = kDefaultSymbolicCap);

// The closed forms of f(0..8) as functions of u, e.g. f(5) = (u^2+1)/(u-1)^2
// and f(8) = u^2 (u^2 - 2u + 2), used to cross-check the recurrence.
std::vector<RationalFunction> published_symbolic_values();

struct UConstraint {
  // Numerator of f(8) - f(2) f(4), canonical (monic).
  Polynomial numerator;
  std::vector<RootMultiplicity> roots;
  // Roots left after removing u = 0 and u = 1, which injectivity forbids.
  std::vector<Rational> surviving;
  SdReport report;
};

// Multiplicativity forces f(8) = f(2) f(4); solves for u. The report fails
// unless the root multiset is {0, 0, 1, 2} and exactly u = 2 survives.
UConstraint u_constraint();

// With f(1) = 1 and f(2) = 2, iterates the recurrence in exact rationals and
// checks f(n) = n for all n <= N. Throws PreconditionError for N < 3.
SdReport integer_induction_check(long n);

}  // namespace sdmaps
