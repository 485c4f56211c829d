#include "sdmaps/sampling.hpp"

#include "sdmaps/errors.hpp"

namespace sdmaps {

std::int64_t SampleRng::uniform(std::int64_t lo, std::int64_t hi) {
  if (hi < lo) throw PreconditionError("empty sampling range");
  const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
  if (span == 0) return static_cast<std::int64_t>(next());
  // Rejection keeps the draw unbiased.
  const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % span);
  std::uint64_t v = next();
  while (v >= limit) v = next();
  return lo + static_cast<std::int64_t>(v % span);
}

Rational random_rational(SampleRng& rng, std::int64_t bound) {
  const std::int64_t num = rng.uniform(-bound, bound);
  const std::int64_t den = rng.uniform(1, bound);
  return Rational(num, den);
}

Rational sample_element(const RationalField&, SampleRng& rng) { return random_rational(rng); }

QuadraticElement sample_element(const QuadraticField& field, SampleRng& rng) {
  Rational a = random_rational(rng);
  Rational b = random_rational(rng);
  return field.make(a, b);
}

PrimeFieldElement sample_element(const PrimeField& field, SampleRng& rng) {
  return field.make(rng.uniform(0, static_cast<std::int64_t>(field.p()) - 1));
}

ApproxComplex sample_element(const ApproxComplexField& field, SampleRng& rng) {
  const double re = rng.uniform_real(-10.0, 10.0);
  const double im = rng.uniform_real(-10.0, 10.0);
  return field.make(re, im);
}

RationalFunction sample_element(const FunctionField&, SampleRng& rng) {
  const auto random_poly = [&rng](bool nonzero) {
    for (;;) {
      const std::int64_t degree = rng.uniform(0, 2);
      std::vector<Rational> c;
      for (std::int64_t i = 0; i <= degree; ++i) c.emplace_back(rng.uniform(-5, 5));
      Polynomial p(std::move(c));
      if (!nonzero || !p.is_zero()) return p;
    }
  };
  Polynomial num = random_poly(false);
  Polynomial den = random_poly(true);
  return RationalFunction(std::move(num), std::move(den));
}

std::vector<ElementPair<PrimeField>> all_ordered_pairs(const PrimeField& field) {
  const auto p = static_cast<std::int64_t>(field.p());
  std::vector<ElementPair<PrimeField>> out;
  out.reserve(static_cast<std::size_t>(p * (p - 1)));
  for (std::int64_t y = 0; y < p; ++y)
    for (std::int64_t x = 0; x < p; ++x)
      if (x != y) out.emplace_back(field.make(x), field.make(y));
  return out;
}

}  // namespace sdmaps
