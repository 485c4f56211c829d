#pragma once

#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include "sdmaps/fields.hpp"

namespace sdmaps {

// Deterministic sampler. mt19937_64's output sequence is fixed by the
// standard; range reduction is done here so samples do not depend on the
// standard library's distribution implementations.
class SampleRng {
 public:
  explicit SampleRng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }
  // Uniform in [lo, hi].
  std::int64_t uniform(std::int64_t lo, std::int64_t hi);
  // Uniform in [0, 1).
  double unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
  double uniform_real(double lo, double hi) { return lo + (hi - lo) * unit(); }

 private:
  std::mt19937_64 engine_;
};

inline constexpr std::int64_t kRationalSampleBound = 1'000'000;

// Numerator uniform in [-bound, bound], denominator uniform in [1, bound].
Rational random_rational(SampleRng& rng, std::int64_t bound = kRationalSampleBound);

Rational sample_element(const RationalField& field, SampleRng& rng);
QuadraticElement sample_element(const QuadraticField& field, SampleRng& rng);
PrimeFieldElement sample_element(const PrimeField& field, SampleRng& rng);
// Components uniform in [-10, 10].
ApproxComplex sample_element(const ApproxComplexField& field, SampleRng& rng);
// Numerator and denominator of degree <= 2 with integer coefficients in [-5, 5].
RationalFunction sample_element(const FunctionField& field, SampleRng& rng);

template <FieldCarrier F>
using ElementPair = std::pair<typename F::element_type, typename F::element_type>;

// n pairs with x != y.
template <FieldCarrier F>
std::vector<ElementPair<F>> sample_pairs(const F& field, SampleRng& rng, std::size_t n) {
  std::vector<ElementPair<F>> out;
  out.reserve(n);
  while (out.size() < n) {
    auto x = sample_element(field, rng);
    auto y = sample_element(field, rng);
    if (field.eq(x, y)) continue;
    out.emplace_back(std::move(x), std::move(y));
  }
  return out;
}

template <FieldCarrier F>
std::vector<typename F::element_type> sample_elements(const F& field, SampleRng& rng, std::size_t n) {
  std::vector<typename F::element_type> out;
  out.reserve(n);
  while (out.size() < n) out.push_back(sample_element(field, rng));
  return out;
}

// Every ordered pair x != y of F_p, y-major then x ascending:
// (1,0), (2,0), ..., (0,1), (2,1), ...
std::vector<ElementPair<PrimeField>> all_ordered_pairs(const PrimeField& field);

}  // namespace sdmaps
