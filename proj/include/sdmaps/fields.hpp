#pragma once

#include <complex>
#include <concepts>
#include <cstdint>
#include <string>
#include <string_view>

#include "sdmaps/rational.hpp"
#include "sdmaps/rational_function.hpp"

namespace sdmaps {

// A field carrier owns the per-field parameters (d, p, tolerance) and
// implements arithmetic on its element type. Every SD check is written once
// against this contract.
template <class F>
concept FieldCarrier = requires(const F& f, const typename F::element_type& a,
                                const typename F::element_type& b, std::int64_t n) {
  { F::exact } -> std::convertible_to<bool>;
  { f.zero() } -> std::same_as<typename F::element_type>;
  { f.one() } -> std::same_as<typename F::element_type>;
  { f.from_int(n) } -> std::same_as<typename F::element_type>;
  { f.add(a, b) } -> std::same_as<typename F::element_type>;
  { f.sub(a, b) } -> std::same_as<typename F::element_type>;
  { f.mul(a, b) } -> std::same_as<typename F::element_type>;
  { f.div(a, b) } -> std::same_as<typename F::element_type>;
  { f.neg(a) } -> std::same_as<typename F::element_type>;
  { f.eq(a, b) } -> std::same_as<bool>;
  { f.is_zero(a) } -> std::same_as<bool>;
  { f.format(a) } -> std::same_as<std::string>;
  { f.name() } -> std::same_as<std::string>;
};

// ---------------------------------------------------------------- Q

class RationalField {
 public:
  using element_type = Rational;
  static constexpr bool exact = true;

  Rational zero() const { return Rational(0); }
  Rational one() const { return Rational(1); }
  Rational from_int(std::int64_t n) const { return Rational(n); }
  Rational add(const Rational& a, const Rational& b) const { return a + b; }
  Rational sub(const Rational& a, const Rational& b) const { return a - b; }
  Rational mul(const Rational& a, const Rational& b) const { return a * b; }
  Rational div(const Rational& a, const Rational& b) const { return a / b; }
  Rational neg(const Rational& a) const { return -a; }
  bool eq(const Rational& a, const Rational& b) const { return a == b; }
  bool is_zero(const Rational& a) const { return a.is_zero(); }
  std::string format(const Rational& a) const { return a.to_string(); }
  std::string name() const { return "Q"; }
  Rational parse(std::string_view text) const { return Rational::parse(text); }
};

// ---------------------------------------------------------------- Q(sqrt d)

struct DValidation {
  bool accepted = false;
  std::string reason;  // empty when accepted
};

// Accepts d iff d != 0 and d is not the square of a rational.
DValidation validate_d(const Rational& d);

// a + b*sqrt(d). d travels with the element so mixed-field arithmetic is
// detected rather than silently computed.
struct QuadraticElement {
  Rational a;
  Rational b;
  Rational d;

  bool is_zero() const { return a.is_zero() && b.is_zero(); }
  bool is_rational() const { return b.is_zero(); }
  friend bool operator==(const QuadraticElement&, const QuadraticElement&) = default;
};

// Throw FieldMismatch when d differs.
QuadraticElement quad_add(const QuadraticElement& z, const QuadraticElement& w);
QuadraticElement quad_sub(const QuadraticElement& z, const QuadraticElement& w);
QuadraticElement quad_mul(const QuadraticElement& z, const QuadraticElement& w);
QuadraticElement quad_div(const QuadraticElement& z, const QuadraticElement& w);
QuadraticElement quad_neg(const QuadraticElement& z);
// conj(z) / norm(z). Throws DivisionByZero for z = 0.
QuadraticElement quad_inverse(const QuadraticElement& z);
QuadraticElement quad_conj(const QuadraticElement& z);
// z * conj(z) = a^2 - d b^2, a rational.
Rational quad_norm(const QuadraticElement& z);

// "a+b*sqrt(d)" with the usual simplifications: "7", "sqrt(2)", "-1/2*sqrt(-3)",
// "3-2*sqrt(5)".
std::string format_quadratic(const QuadraticElement& z);
QuadraticElement parse_quadratic(std::string_view text);

class QuadraticField {
 public:
  using element_type = QuadraticElement;
  static constexpr bool exact = true;

  // Throws PreconditionError if validate_d rejects d.
  explicit QuadraticField(Rational d);

  const Rational& d() const { return d_; }
  QuadraticElement make(const Rational& a, const Rational& b) const { return {a, b, d_}; }
  QuadraticElement sqrt_d() const { return make(Rational(0), Rational(1)); }

  QuadraticElement zero() const { return make(Rational(0), Rational(0)); }
  QuadraticElement one() const { return make(Rational(1), Rational(0)); }
  QuadraticElement from_int(std::int64_t n) const { return make(Rational(n), Rational(0)); }
  QuadraticElement add(const QuadraticElement& x, const QuadraticElement& y) const { return quad_add(x, y); }
  QuadraticElement sub(const QuadraticElement& x, const QuadraticElement& y) const { return quad_sub(x, y); }
  QuadraticElement mul(const QuadraticElement& x, const QuadraticElement& y) const { return quad_mul(x, y); }
  QuadraticElement div(const QuadraticElement& x, const QuadraticElement& y) const { return quad_div(x, y); }
  QuadraticElement neg(const QuadraticElement& x) const { return quad_neg(x); }
  bool eq(const QuadraticElement& x, const QuadraticElement& y) const { return x == y; }
  bool is_zero(const QuadraticElement& x) const { return x.is_zero(); }
  std::string format(const QuadraticElement& x) const { return format_quadratic(x); }
  std::string name() const { return "Q(sqrt(" + d_.to_string() + "))"; }
  // Parses a quadratic literal; its sqrt(d) must match this field (a bare
  // rational is accepted too).
  QuadraticElement parse(std::string_view text) const;

 private:
  Rational d_;
};

// ---------------------------------------------------------------- F_p

struct PrimeFieldElement {
  std::uint64_t value = 0;
  std::uint64_t p = 0;
  friend bool operator==(const PrimeFieldElement&, const PrimeFieldElement&) = default;
};

bool is_prime(std::uint64_t n);
std::uint64_t mod_pow(std::uint64_t base, std::uint64_t exponent, std::uint64_t p);
// Extended Euclid; throws DivisionByZero when x == 0 mod p.
std::uint64_t mod_inverse(std::uint64_t x, std::uint64_t p);

class PrimeField {
 public:
  using element_type = PrimeFieldElement;
  static constexpr bool exact = true;
  // Keeps products of two residues inside 64 bits.
  static constexpr std::uint64_t kMaxPrime = (std::uint64_t{1} << 31) - 1;

  // Throws NotPrime unless p is an odd prime no larger than kMaxPrime.
  explicit PrimeField(std::uint64_t p);

  std::uint64_t p() const { return p_; }
  PrimeFieldElement make(std::int64_t n) const;

  PrimeFieldElement zero() const { return {0, p_}; }
  PrimeFieldElement one() const { return {1, p_}; }
  PrimeFieldElement from_int(std::int64_t n) const { return make(n); }
  PrimeFieldElement add(const PrimeFieldElement& x, const PrimeFieldElement& y) const;
  PrimeFieldElement sub(const PrimeFieldElement& x, const PrimeFieldElement& y) const;
  PrimeFieldElement mul(const PrimeFieldElement& x, const PrimeFieldElement& y) const;
  PrimeFieldElement div(const PrimeFieldElement& x, const PrimeFieldElement& y) const;
  PrimeFieldElement neg(const PrimeFieldElement& x) const;
  PrimeFieldElement pow(const PrimeFieldElement& x, std::uint64_t e) const;
  bool eq(const PrimeFieldElement& x, const PrimeFieldElement& y) const;
  bool is_zero(const PrimeFieldElement& x) const { return x.value == 0; }
  // "n mod p"
  std::string format(const PrimeFieldElement& x) const;
  std::string name() const { return "F_" + std::to_string(p_); }
  // Accepts "n" or "n mod p" (p must match).
  PrimeFieldElement parse(std::string_view text) const;

 private:
  void check(const PrimeFieldElement& x) const;
  std::uint64_t p_;
};

// ---------------------------------------------------------------- approximate C

struct ApproxComplex {
  double re = 0.0;
  double im = 0.0;
  std::complex<double> value() const { return {re, im}; }
};

class ApproxComplexField {
 public:
  using element_type = ApproxComplex;
  static constexpr bool exact = false;
  static constexpr double kDefaultTolerance = 1e-9;

  // Throws PreconditionError unless tol is finite and positive.
  explicit ApproxComplexField(double tol = kDefaultTolerance);

  double tolerance() const { return tol_; }
  ApproxComplex make(double re, double im) const;

  ApproxComplex zero() const { return {0.0, 0.0}; }
  ApproxComplex one() const { return {1.0, 0.0}; }
  ApproxComplex from_int(std::int64_t n) const { return {static_cast<double>(n), 0.0}; }
  ApproxComplex add(const ApproxComplex& x, const ApproxComplex& y) const;
  ApproxComplex sub(const ApproxComplex& x, const ApproxComplex& y) const;
  ApproxComplex mul(const ApproxComplex& x, const ApproxComplex& y) const;
  // Throws DivisionByZero when is_zero(y).
  ApproxComplex div(const ApproxComplex& x, const ApproxComplex& y) const;
  ApproxComplex neg(const ApproxComplex& x) const { return {-x.re, -x.im}; }
  ApproxComplex conj(const ApproxComplex& x) const { return {x.re, -x.im}; }
  // |x - y| <= tol * max(1, |x|, |y|)
  bool eq(const ApproxComplex& x, const ApproxComplex& y) const;
  bool is_zero(const ApproxComplex& x) const { return eq(x, zero()); }
  // Mixed absolute/relative discrepancy |x - y| / max(1, |x|, |y|).
  double discrepancy(const ApproxComplex& x, const ApproxComplex& y) const;
  // "re+im*i" with round-trip precision.
  std::string format(const ApproxComplex& x) const;
  std::string name() const { return "C~"; }
  ApproxComplex parse(std::string_view text) const;

 private:
  ApproxComplex checked(std::complex<double> v) const;
  double tol_;
};

// ---------------------------------------------------------------- Q(x), model of Q(pi)

class FunctionField {
 public:
  using element_type = RationalFunction;
  static constexpr bool exact = true;
  static constexpr std::string_view kVariable = "x";

  RationalFunction zero() const { return RationalFunction(); }
  RationalFunction one() const { return RationalFunction(Rational(1)); }
  RationalFunction from_int(std::int64_t n) const { return RationalFunction(Rational(n)); }
  RationalFunction add(const RationalFunction& a, const RationalFunction& b) const { return a + b; }
  RationalFunction sub(const RationalFunction& a, const RationalFunction& b) const { return a - b; }
  RationalFunction mul(const RationalFunction& a, const RationalFunction& b) const { return a * b; }
  RationalFunction div(const RationalFunction& a, const RationalFunction& b) const { return a / b; }
  RationalFunction neg(const RationalFunction& a) const { return -a; }
  bool eq(const RationalFunction& a, const RationalFunction& b) const { return a == b; }
  bool is_zero(const RationalFunction& a) const { return a.is_zero(); }
  std::string format(const RationalFunction& a) const { return a.to_string(kVariable); }
  std::string name() const { return "Q(x)"; }
  RationalFunction parse(std::string_view text) const { return RationalFunction::parse(text, kVariable); }
};

// f_k: g(x) -> g(x^k), a field endomorphism of Q(x). Requires k >= 1.
RationalFunction qpi_endomorphism(unsigned k, const RationalFunction& g);

struct ImageMembership {
  bool in_image = false;
  // When not in the image: the first exponent (numerator first, ascending)
  // that is not a multiple of k.
  long witness_exponent = 0;
  std::string witness_part;  // "numerator" or "denominator"
};

// Decides whether g lies in the image of f_k. Requires k >= 2 and g != 0.
ImageMembership qpi_in_image(unsigned k, const RationalFunction& g);

static_assert(FieldCarrier<RationalField>);
static_assert(FieldCarrier<QuadraticField>);
static_assert(FieldCarrier<PrimeField>);
static_assert(FieldCarrier<ApproxComplexField>);
static_assert(FieldCarrier<FunctionField>);

}  // namespace sdmaps
