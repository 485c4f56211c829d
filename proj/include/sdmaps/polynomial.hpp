#pragma once

#include <limits>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "sdmaps/rational.hpp"

namespace sdmaps {

// Dense univariate polynomial over Q. coefficients()[i] is the coefficient
// of var^i; the leading coefficient is never zero, so the zero polynomial has
// no coefficients at all.
class Polynomial {
 public:
  // Degree of the zero polynomial.
  static constexpr long kMinusInfinity = std::numeric_limits<long>::min();

  Polynomial() = default;
  explicit Polynomial(std::vector<Rational> coefficients);
  Polynomial(std::initializer_list<Rational> coefficients);

  static Polynomial constant(const Rational& c);
  static Polynomial monomial(const Rational& c, std::size_t degree);
  static Polynomial variable() { return monomial(Rational(1), 1); }

  // Accepts the rendering grammar of to_string() (and any expression of
  // sums/products/powers that evaluates to a polynomial).
  static Polynomial parse(std::string_view text, std::string_view var = "u");

  long degree() const {
    return coeffs_.empty() ? kMinusInfinity : static_cast<long>(coeffs_.size()) - 1;
  }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_constant() const { return coeffs_.size() <= 1; }
  bool is_monic() const { return !coeffs_.empty() && coeffs_.back().is_one(); }
  std::span<const Rational> coefficients() const { return coeffs_; }
  Rational coefficient(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Rational(); }
  const Rational& leading() const;

  Polynomial monic() const;
  Rational eval(const Rational& x) const;
  // p(x) -> p(x^k).
  Polynomial substitute_power(unsigned k) const;

  // Descending-degree rendering, e.g. "u^4 - 3*u^3 + 2*u^2", "1/2*u - 1", "0".
  std::string to_string(std::string_view var = "u") const;

  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const Polynomial& o);
  Polynomial& operator*=(const Rational& c);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(Polynomial a, const Polynomial& b) { return a *= b; }
  friend Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }
  friend Polynomial operator*(const Rational& c, Polynomial a) { return a *= c; }
  Polynomial operator-() const;

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

struct PolyDivision {
  Polynomial quotient;
  Polynomial remainder;
};

// Euclidean division over Q; throws DivisionByZero for a zero divisor.
PolyDivision divmod(const Polynomial& dividend, const Polynomial& divisor);

// Monic gcd. gcd(0, 0) throws UndefinedGcd.
Polynomial poly_gcd(const Polynomial& p, const Polynomial& q);

// Integer polynomial proportional to p with content 1 and positive leading
// coefficient. Index i holds the coefficient of var^i.
std::vector<mpz_class> primitive_integer_form(const Polynomial& p);

struct RootMultiplicity {
  Rational root;
  int multiplicity = 0;
  friend bool operator==(const RootMultiplicity&, const RootMultiplicity&) = default;
};

// All rational roots with multiplicities, ascending by root. Candidates come
// from the rational-root theorem on the primitive integer form; multiplicities
// by repeated exact division. Throws UndefinedRoots for the zero polynomial.
std::vector<RootMultiplicity> rational_roots(const Polynomial& p);

}  // namespace sdmaps
