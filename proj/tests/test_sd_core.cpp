#include <doctest.h>

#include <set>

#include "sdmaps/errors.hpp"
#include "sdmaps/sampling.hpp"
#include "sdmaps/sd_core.hpp"

using namespace sdmaps;

namespace {

const SdCandidate<RationalField> kSquare{"square", [](const Rational& x) { return x * x; }};
const SdCandidate<RationalField> kShift{"shift", [](const Rational& x) { return x + Rational(1); }};
const SdCandidate<RationalField> kCube{"cube", [](const Rational& x) { return x * x * x; }};

template <FieldCarrier F>
std::set<std::string> term_set(const F& field, const ApResult<F>& r) {
  std::set<std::string> out;
  for (const auto& t : r.terms) out.insert(std::to_string(t.k) + ":" + field.format(t.value));
  return out;
}

}  // namespace

TEST_CASE("automorphisms pass check_sd exactly") {
  const RationalField q;
  SampleRng rng(1);
  const auto pairs = sample_pairs(q, rng, 300);
  const auto r = check_sd(q, identity_map(q), pairs);
  CHECK(r.passed());
  CHECK(r.checked_pairs == 300);
  for (int d : {2, 3, 5, -1, -2, -3}) {
    const QuadraticField field{Rational(d)};
    SampleRng qr(static_cast<std::uint64_t>(d + 10));
    const auto qp = sample_pairs(field, qr, 200);
    CHECK(check_sd(field, identity_map(field), qp).passed());
    CHECK(check_sd(field, conjugation_map(field), qp).passed());
  }
  const PrimeField f5(5);
  CHECK(check_sd(f5, identity_map(f5), all_ordered_pairs(f5)).passed());
}

TEST_CASE("non-SD maps are rejected with the offending pair") {
  const RationalField q;
  const std::vector<std::pair<Rational, Rational>> pairs = {{Rational(2), Rational(1)}};
  const auto r = check_sd(q, kSquare, pairs);
  REQUIRE(r.violations.size() == 1);
  // ((2+1)/(2-1))^2 = 9 against (4+1)/(4-1) = 5/3
  CHECK(r.violations[0].kind == "sd");
  CHECK(r.violations[0].lhs == "9");
  CHECK(r.violations[0].rhs == "5/3");
  CHECK(r.status == Status::fail);
  CHECK_FALSE(check_sd(q, kShift, pairs).passed());
}

TEST_CASE("f(x) = f(y) is recorded as an injectivity violation") {
  const RationalField q;
  const std::vector<std::pair<Rational, Rational>> pairs = {{Rational(3), Rational(-3)}};
  const auto r = check_sd(q, kSquare, pairs);
  REQUIRE(r.violations.size() == 1);
  CHECK(r.violations[0].kind == "injectivity");
  CHECK(r.violations[0].rhs == "undefined");
  CHECK_THROWS_AS(sd_sides(q, kSquare, Rational(3), Rational(-3)), InjectivityViolation);
  CHECK_THROWS_AS(sd_sides(q, identity_map(q), Rational(3), Rational(3)), InvalidPair);
}

// Swapping x and y negates (x+y)/(x-y) and the right-hand side, so for odd f
// the residual vanishes at (x, y) iff it vanishes at (y, x).
TEST_CASE("residual vanishes at (x, y) iff it vanishes at (y, x) for odd maps") {
  const RationalField q;
  SampleRng rng(4);
  const auto pairs = sample_pairs(q, rng, 500);
  // Also include pairs where the cube map happens to satisfy the equation.
  std::vector<std::pair<Rational, Rational>> all(pairs.begin(), pairs.end());
  all.emplace_back(Rational(1), Rational(0));
  all.emplace_back(Rational(0), Rational(5, 2));
  const SdCandidate<RationalField> negate{"negate", [](const Rational& x) { return -x; }};
  for (const auto& cand : {identity_map(q), kCube, negate}) {
    for (const auto& [x, y] : all) {
      bool xy_zero = false, yx_zero = false;
      try {
        xy_zero = sd_residual(q, cand, x, y).is_zero();
        yx_zero = sd_residual(q, cand, y, x).is_zero();
      } catch (const InjectivityViolation&) {
        continue;
      }
      CHECK(xy_zero == yx_zero);
    }
  }
}

TEST_CASE("structural properties of SD maps hold for the identity and fail for x+1") {
  const RationalField q;
  SampleRng rng(2);
  const auto sample = sample_elements(q, rng, 100);
  CHECK(check_properties(q, identity_map(q), sample).passed());
  const auto bad = check_properties(q, kShift, sample);
  CHECK_FALSE(bad.passed());
  std::set<std::string> kinds;
  for (const auto& v : bad.violations) kinds.insert(v.kind);
  CHECK(kinds.count("f(0)=0"));
  CHECK(kinds.count("f(1)=1"));
}

TEST_CASE("progression engine: forward and backward moves") {
  const RationalField q;
  const auto id = identity_map(q);

  // a = 1, d = 1 reaches 0 at k = -1.
  CHECK_THROWS_AS(ap_propagate(q, id, Rational(1), Rational(1), 3), ZeroTermEncountered);
  const auto r = ap_propagate(q, id, Rational(1), Rational(1), 3, ApOrder::forward_then_backward,
                              ZeroTermPolicy::stop);
  CHECK(r.report.passed());
  REQUIRE(r.backward_stop.has_value());
  CHECK(*r.backward_stop == -1);
  std::vector<std::string> values;
  for (const auto& t : r.terms) values.push_back(t.value.to_string());
  CHECK(values == std::vector<std::string>{"1", "2", "3", "4", "0"});

  // Backward quotient at k = -1 is (a - d)/(a + d).
  const Rational a(5, 3), d(2, 7);
  const auto rb = ap_propagate(q, id, a, d, 4);
  CHECK(rb.report.passed());
  for (const auto& t : rb.terms) {
    if (t.k == -1) CHECK(t.ratio == (a - d) / (a + d));
    if (t.k == 2) CHECK(t.ratio == (a + d + d) / a);
    CHECK(t.value == a + Rational(t.k) * d);
  }

  try {
    ap_propagate(q, id, Rational(1), Rational(-1, 2), 2);
    FAIL("expected ZeroTermEncountered");
  } catch (const ZeroTermEncountered& e) {
    CHECK(e.k() == 2);
  }
}

TEST_CASE("progression engine over Q(sqrt 2)") {
  const QuadraticField field{Rational(2)};
  const auto r = ap_propagate(field, identity_map(field), field.sqrt_d(), field.one(), 5);
  CHECK(r.report.passed());
  for (const auto& t : r.terms) CHECK(t.value == field.make(Rational(t.k), Rational(1)));
  // Conjugation does not fix sqrt 2, so propagation's precondition fails.
  CHECK_THROWS_AS(ap_propagate(field, conjugation_map(field), field.sqrt_d(), field.one(), 5), PreconditionError);
  // Conjugation fixes the rational progression 2, 5, 8, ...
  CHECK(ap_propagate(field, conjugation_map(field), field.from_int(2), field.from_int(3), 5).report.passed());
}

TEST_CASE("progression output does not depend on step order") {
  const RationalField q;
  for (const auto& [a, d] : std::vector<std::pair<Rational, Rational>>{
           {Rational(7, 2), Rational(1, 3)}, {Rational(-9), Rational(-1, 5)}, {Rational(1, 1000), Rational(3)}}) {
    try {
      const auto fb = ap_propagate(q, identity_map(q), a, d, 20, ApOrder::forward_then_backward);
      const auto il = ap_propagate(q, identity_map(q), a, d, 20, ApOrder::interleaved);
      CHECK(term_set(q, fb) == term_set(q, il));
    } catch (const ZeroTermEncountered&) {
      CHECK_THROWS_AS(ap_propagate(q, identity_map(q), a, d, 20, ApOrder::interleaved), ZeroTermEncountered);
    }
  }
  const auto fb = ap_propagate(q, identity_map(q), Rational(1), Rational(1), 50, ApOrder::forward_then_backward,
                               ZeroTermPolicy::stop);
  const auto il =
      ap_propagate(q, identity_map(q), Rational(1), Rational(1), 50, ApOrder::interleaved, ZeroTermPolicy::stop);
  CHECK(term_set(q, fb) == term_set(q, il));
}

TEST_CASE("a candidate that does not fix every term is caught") {
  const RationalField q;
  // Fixes 1, 2 and 1 but moves 4.
  const SdCandidate<RationalField> liar{"liar", [](const Rational& x) { return x == Rational(4) ? Rational(5) : x; }};
  const auto r = ap_propagate(q, liar, Rational(1), Rational(1), 5, ApOrder::forward_then_backward,
                              ZeroTermPolicy::stop);
  CHECK_FALSE(r.report.passed());
  CHECK_THROWS_AS(ap_propagate(q, kSquare, Rational(2), Rational(1), 3), PreconditionError);
}

TEST_CASE("zero step is a degenerate pass-through") {
  const RationalField q;
  const auto r = ap_propagate(q, identity_map(q), Rational(3), Rational(0), 4);
  CHECK(r.report.passed());
  for (const auto& t : r.terms) CHECK(t.value == Rational(3));
}
