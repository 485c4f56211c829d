#include "sdmaps/polynomial.hpp"

#include <algorithm>
#include <set>

#include "sdmaps/errors.hpp"
#include "sdmaps/rational_function.hpp"

namespace sdmaps {

Polynomial::Polynomial(std::vector<Rational> coefficients) : coeffs_(std::move(coefficients)) {
  trim();
}

Polynomial::Polynomial(std::initializer_list<Rational> coefficients) : coeffs_(coefficients) {
  trim();
}

Polynomial Polynomial::constant(const Rational& c) { return Polynomial(std::vector<Rational>{c}); }

Polynomial Polynomial::monomial(const Rational& c, std::size_t degree) {
  std::vector<Rational> v(degree + 1);
  v[degree] = c;
  return Polynomial(std::move(v));
}

Polynomial Polynomial::parse(std::string_view text, std::string_view var) {
  const RationalFunction f = RationalFunction::parse(text, var);
  if (!f.is_polynomial()) throw ParseError("'" + std::string(text) + "' is not a polynomial");
  return f.numerator();
}

void Polynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

const Rational& Polynomial::leading() const {
  if (coeffs_.empty()) throw PreconditionError("leading coefficient of the zero polynomial");
  return coeffs_.back();
}

Polynomial Polynomial::monic() const {
  if (is_zero()) return *this;
  Polynomial out = *this;
  out *= leading().inverse();
  return out;
}

Rational Polynomial::eval(const Rational& x) const {
  Rational acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc *= x;
    acc += *it;
  }
  return acc;
}

Polynomial Polynomial::substitute_power(unsigned k) const {
  if (k == 0) throw PreconditionError("substitute_power requires k >= 1");
  if (is_zero()) return *this;
  std::vector<Rational> v((coeffs_.size() - 1) * k + 1);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) v[i * k] = coeffs_[i];
  return Polynomial(std::move(v));
}

std::string Polynomial::to_string(std::string_view var) const {
  if (is_zero()) return "0";
  std::string out;
  bool first = true;
  for (std::size_t idx = coeffs_.size(); idx-- > 0;) {
    const Rational& c = coeffs_[idx];
    if (c.is_zero()) continue;
    const bool negative = c.sign() < 0;
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    const Rational mag = c.abs();
    if (idx == 0) {
      out += mag.to_string();
      continue;
    }
    if (!mag.is_one()) out += mag.to_string() + "*";
    out += var;
    if (idx > 1) out += "^" + std::to_string(idx);
  }
  return out;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  trim();
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  trim();
  return *this;
}

Polynomial& Polynomial::operator*=(const Polynomial& o) {
  if (is_zero() || o.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  std::vector<Rational> out(coeffs_.size() + o.coeffs_.size() - 1);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < o.coeffs_.size(); ++j) out[i + j] += coeffs_[i] * o.coeffs_[j];
  }
  coeffs_ = std::move(out);
  trim();
  return *this;
}

Polynomial& Polynomial::operator*=(const Rational& c) {
  for (auto& x : coeffs_) x *= c;
  trim();
  return *this;
}

Polynomial Polynomial::operator-() const {
  Polynomial out = *this;
  for (auto& x : out.coeffs_) x = -x;
  return out;
}

PolyDivision divmod(const Polynomial& dividend, const Polynomial& divisor) {
  if (divisor.is_zero()) throw DivisionByZero("polynomial division by zero");
  std::vector<Rational> rem(dividend.coefficients().begin(), dividend.coefficients().end());
  const auto dcoef = divisor.coefficients();
  const std::size_t dn = dcoef.size();
  if (rem.size() < dn) return {Polynomial(), dividend};
  const Rational inv_lead = divisor.leading().inverse();
  std::vector<Rational> quot(rem.size() - dn + 1);
  for (std::size_t shift = quot.size(); shift-- > 0;) {
    const Rational& top = rem[shift + dn - 1];
    if (top.is_zero()) continue;
    const Rational factor = top * inv_lead;
    for (std::size_t j = 0; j < dn; ++j) rem[shift + j] -= factor * dcoef[j];
    quot[shift] = factor;
  }
  rem.resize(dn - 1);
  return {Polynomial(std::move(quot)), Polynomial(std::move(rem))};
}

Polynomial poly_gcd(const Polynomial& p, const Polynomial& q) {
  if (p.is_zero() && q.is_zero()) throw UndefinedGcd();
  Polynomial a = p;
  Polynomial b = q;
  while (!b.is_zero()) {
    Polynomial r = divmod(a, b).remainder;
    a = std::move(b);
    b = r.monic();
  }
  return a.monic();
}

std::vector<mpz_class> primitive_integer_form(const Polynomial& p) {
  if (p.is_zero()) return {};
  mpz_class lcm_den = 1;
  for (const auto& c : p.coefficients()) {
    const mpz_class den = c.denominator();
    mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), den.get_mpz_t());
  }
  std::vector<mpz_class> ints;
  ints.reserve(p.coefficients().size());
  mpz_class content = 0;
  for (const auto& c : p.coefficients()) {
    mpz_class v = c.numerator() * (lcm_den / c.denominator());
    mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), v.get_mpz_t());
    ints.push_back(std::move(v));
  }
  if (ints.back() < 0) content = -content;
  for (auto& v : ints) v /= content;
  return ints;
}

namespace {

// Positive divisors of |n| (n != 0), ascending.
std::vector<mpz_class> positive_divisors(mpz_class n) {
  n = abs(n);
  std::vector<std::pair<mpz_class, int>> factors;
  for (mpz_class f = 2; f * f <= n; ++f) {
    int e = 0;
    while (n % f == 0) {
      n /= f;
      ++e;
    }
    if (e > 0) factors.emplace_back(f, e);
  }
  if (n > 1) factors.emplace_back(n, 1);
  std::vector<mpz_class> divs{1};
  for (const auto& [prime, e] : factors) {
    const std::size_t base = divs.size();
    mpz_class power = 1;
    for (int i = 1; i <= e; ++i) {
      power *= prime;
      for (std::size_t j = 0; j < base; ++j) divs.push_back(divs[j] * power);
    }
  }
  std::sort(divs.begin(), divs.end());
  return divs;
}

}  // namespace

std::vector<RootMultiplicity> rational_roots(const Polynomial& p) {
  if (p.is_zero()) throw UndefinedRoots();
  std::vector<RootMultiplicity> roots;

  // Zero roots first so the remaining constant term is nonzero.
  std::size_t zero_mult = 0;
  while (p.coefficient(zero_mult).is_zero()) ++zero_mult;
  std::vector<Rational> shifted(p.coefficients().begin() + static_cast<long>(zero_mult),
                                p.coefficients().end());
  Polynomial rest(std::move(shifted));
  if (zero_mult > 0) roots.push_back({Rational(0), static_cast<int>(zero_mult)});
  if (rest.is_constant()) return roots;

  const std::vector<mpz_class> ints = primitive_integer_form(rest);
  const auto nums = positive_divisors(ints.front());
  const auto dens = positive_divisors(ints.back());
  std::set<Rational> candidates;
  for (const auto& a : nums) {
    for (const auto& b : dens) {
      candidates.insert(Rational(a, b));
      candidates.insert(Rational(mpz_class(-a), b));
    }
  }
  for (const Rational& r : candidates) {
    if (rest.is_constant()) break;
    int mult = 0;
    const Polynomial linear{-r, Rational(1)};
    while (!rest.is_constant() && rest.eval(r).is_zero()) {
      PolyDivision qr = divmod(rest, linear);
      rest = std::move(qr.quotient);
      ++mult;
    }
    if (mult > 0) roots.push_back({r, mult});
  }
  std::sort(roots.begin(), roots.end(),
            [](const RootMultiplicity& a, const RootMultiplicity& b) { return a.root < b.root; });
  return roots;
}

}  // namespace sdmaps
