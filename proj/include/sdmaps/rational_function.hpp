#pragma once

#include <string>
#include <string_view>

#include "sdmaps/polynomial.hpp"

namespace sdmaps {

// Element of Q(var): num/den with gcd(num, den) = 1 and den monic, so two
// functions are equal iff their representations are equal.
class RationalFunction {
 public:
  RationalFunction() : den_(Polynomial::constant(Rational(1))) {}
  RationalFunction(const Rational& c);  // NOLINT(google-explicit-constructor)
  explicit RationalFunction(Polynomial num);
  // Throws DivisionByZero if den is zero.
  RationalFunction(Polynomial num, Polynomial den);

  static RationalFunction variable() { return RationalFunction(Polynomial::variable()); }

  // Expression grammar over integers, the variable, + - * / ^ and parentheses.
  // Accepts everything to_string() produces.
  static RationalFunction parse(std::string_view text, std::string_view var = "u");

  const Polynomial& numerator() const { return num_; }
  const Polynomial& denominator() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.degree() == 0; }

  // Throws PoleError when the denominator vanishes at x.
  Rational eval(const Rational& x) const;

  // "num" when den == 1, otherwise "(num)/(den)" (parentheses dropped around
  // single-term operands).
  std::string to_string(std::string_view var = "u") const;

  RationalFunction& operator+=(const RationalFunction& o);
  RationalFunction& operator-=(const RationalFunction& o);
  RationalFunction& operator*=(const RationalFunction& o);
  RationalFunction& operator/=(const RationalFunction& o);

  friend RationalFunction operator+(RationalFunction a, const RationalFunction& b) { return a += b; }
  friend RationalFunction operator-(RationalFunction a, const RationalFunction& b) { return a -= b; }
  friend RationalFunction operator*(RationalFunction a, const RationalFunction& b) { return a *= b; }
  friend RationalFunction operator/(RationalFunction a, const RationalFunction& b) { return a /= b; }
  RationalFunction operator-() const;

  friend bool operator==(const RationalFunction&, const RationalFunction&) = default;

 private:
  void canonicalize();
  Polynomial num_;
  Polynomial den_;
};

RationalFunction pow(RationalFunction base, long exponent);

}  // namespace sdmaps
