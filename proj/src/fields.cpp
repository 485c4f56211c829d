#include "sdmaps/fields.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <optional>
#include <tuple>
#include <utility>

#include "sdmaps/errors.hpp"

namespace sdmaps {

namespace {

std::string strip_spaces(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) out.push_back(c);
  return out;
}

void require_same_d(const QuadraticElement& z, const QuadraticElement& w) {
  if (z.d != w.d)
    throw FieldMismatch("sqrt(" + z.d.to_string() + ") vs sqrt(" + w.d.to_string() + ")");
}

}  // namespace

// ---------------------------------------------------------------- Q(sqrt d)

DValidation validate_d(const Rational& d) {
  if (d.is_zero()) return {false, "d = 0"};
  // d = p/q reduced is a rational square iff p*q is a perfect square.
  const mpz_class pq = d.numerator() * d.denominator();
  if (is_perfect_square(pq)) return {false, "perfect square"};
  return {true, {}};
}

QuadraticElement quad_add(const QuadraticElement& z, const QuadraticElement& w) {
  require_same_d(z, w);
  return {z.a + w.a, z.b + w.b, z.d};
}

QuadraticElement quad_sub(const QuadraticElement& z, const QuadraticElement& w) {
  require_same_d(z, w);
  return {z.a - w.a, z.b - w.b, z.d};
}

QuadraticElement quad_mul(const QuadraticElement& z, const QuadraticElement& w) {
  require_same_d(z, w);
  return {z.a * w.a + z.d * z.b * w.b, z.a * w.b + w.a * z.b, z.d};
}

QuadraticElement quad_neg(const QuadraticElement& z) { return {-z.a, -z.b, z.d}; }

QuadraticElement quad_conj(const QuadraticElement& z) { return {z.a, -z.b, z.d}; }

Rational quad_norm(const QuadraticElement& z) { return z.a * z.a - z.d * z.b * z.b; }

QuadraticElement quad_inverse(const QuadraticElement& z) {
  if (z.is_zero()) throw DivisionByZero();
  const Rational inv_norm = quad_norm(z).inverse();
  return {z.a * inv_norm, -z.b * inv_norm, z.d};
}

QuadraticElement quad_div(const QuadraticElement& z, const QuadraticElement& w) {
  require_same_d(z, w);
  return quad_mul(z, quad_inverse(w));
}

std::string format_quadratic(const QuadraticElement& z) {
  if (z.b.is_zero()) return z.a.to_string();
  const Rational mag = z.b.abs();
  std::string surd = "sqrt(" + z.d.to_string() + ")";
  if (!mag.is_one()) surd = mag.to_string() + "*" + surd;
  if (z.a.is_zero()) return z.b.sign() < 0 ? "-" + surd : surd;
  return z.a.to_string() + (z.b.sign() < 0 ? "-" : "+") + surd;
}

QuadraticElement parse_quadratic(std::string_view text) {
  const std::string t = strip_spaces(text);
  const auto at = t.find("sqrt(");
  if (at == std::string::npos) throw ParseError("expected sqrt(d) in '" + std::string(text) + "'");
  const auto close = t.find(')', at);
  if (close == std::string::npos || close + 1 != t.size())
    throw ParseError("malformed quadratic literal '" + std::string(text) + "'");
  const Rational d = Rational::parse(std::string_view(t).substr(at + 5, close - at - 5));

  std::string prefix = t.substr(0, at);
  if (!prefix.empty() && prefix.back() == '*') prefix.pop_back();
  std::size_t split = std::string::npos;
  for (std::size_t i = prefix.size(); i-- > 1;) {
    if (prefix[i] == '+' || prefix[i] == '-') {
      split = i;
      break;
    }
  }
  Rational a(0);
  std::string coef = prefix;
  if (split != std::string::npos) {
    a = Rational::parse(prefix.substr(0, split));
    coef = prefix.substr(split);
  }
  Rational b(1);
  if (coef == "-") {
    b = Rational(-1);
  } else if (!coef.empty() && coef != "+") {
    b = Rational::parse(coef.front() == '+' ? coef.substr(1) : coef);
  }
  return {a, b, d};
}

QuadraticField::QuadraticField(Rational d) : d_(std::move(d)) {
  const DValidation v = validate_d(d_);
  if (!v.accepted) throw PreconditionError("invalid d = " + d_.to_string() + ": " + v.reason);
}

QuadraticElement QuadraticField::parse(std::string_view text) const {
  if (text.find("sqrt") == std::string_view::npos) return make(Rational::parse(text), Rational(0));
  QuadraticElement z = parse_quadratic(text);
  if (z.d != d_)
    throw FieldMismatch("literal uses sqrt(" + z.d.to_string() + ") in " + name());
  return z;
}

// ---------------------------------------------------------------- F_p

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t f = 3; f * f <= n; f += 2)
    if (n % f == 0) return false;
  return true;
}

std::uint64_t mod_pow(std::uint64_t base, std::uint64_t exponent, std::uint64_t p) {
  std::uint64_t result = 1 % p;
  base %= p;
  while (exponent > 0) {
    if (exponent & 1) result = static_cast<std::uint64_t>((unsigned __int128)result * base % p);
    base = static_cast<std::uint64_t>((unsigned __int128)base * base % p);
    exponent >>= 1;
  }
  return result;
}

std::uint64_t mod_inverse(std::uint64_t x, std::uint64_t p) {
  x %= p;
  if (x == 0) throw DivisionByZero();
  std::int64_t old_r = static_cast<std::int64_t>(x), r = static_cast<std::int64_t>(p);
  std::int64_t old_s = 1, s = 0;
  while (r != 0) {
    const std::int64_t q = old_r / r;
    std::tie(old_r, r) = std::make_pair(r, old_r - q * r);
    std::tie(old_s, s) = std::make_pair(s, old_s - q * s);
  }
  const auto pp = static_cast<std::int64_t>(p);
  return static_cast<std::uint64_t>(((old_s % pp) + pp) % pp);
}

PrimeField::PrimeField(std::uint64_t p) : p_(p) {
  if (p == 2) throw NotPrime("characteristic 2 is excluded");
  if (p > kMaxPrime) throw PreconditionError("prime " + std::to_string(p) + " exceeds 2^31 - 1");
  if (!is_prime(p)) throw NotPrime(static_cast<long long>(p));
}

PrimeFieldElement PrimeField::make(std::int64_t n) const {
  const auto pp = static_cast<std::int64_t>(p_);
  return {static_cast<std::uint64_t>(((n % pp) + pp) % pp), p_};
}

void PrimeField::check(const PrimeFieldElement& x) const {
  if (x.p != p_) throw FieldMismatch(std::to_string(x.p) + " vs " + std::to_string(p_));
}

PrimeFieldElement PrimeField::add(const PrimeFieldElement& x, const PrimeFieldElement& y) const {
  check(x);
  check(y);
  const std::uint64_t s = x.value + y.value;
  return {s >= p_ ? s - p_ : s, p_};
}

PrimeFieldElement PrimeField::sub(const PrimeFieldElement& x, const PrimeFieldElement& y) const {
  check(x);
  check(y);
  return {x.value >= y.value ? x.value - y.value : x.value + p_ - y.value, p_};
}

PrimeFieldElement PrimeField::mul(const PrimeFieldElement& x, const PrimeFieldElement& y) const {
  check(x);
  check(y);
  return {x.value * y.value % p_, p_};
}

PrimeFieldElement PrimeField::div(const PrimeFieldElement& x, const PrimeFieldElement& y) const {
  check(x);
  check(y);
  return {x.value * mod_inverse(y.value, p_) % p_, p_};
}

PrimeFieldElement PrimeField::neg(const PrimeFieldElement& x) const {
  check(x);
  return {x.value == 0 ? 0 : p_ - x.value, p_};
}

PrimeFieldElement PrimeField::pow(const PrimeFieldElement& x, std::uint64_t e) const {
  check(x);
  return {mod_pow(x.value, e, p_), p_};
}

bool PrimeField::eq(const PrimeFieldElement& x, const PrimeFieldElement& y) const {
  check(x);
  check(y);
  return x.value == y.value;
}

std::string PrimeField::format(const PrimeFieldElement& x) const {
  return std::to_string(x.value) + " mod " + std::to_string(p_);
}

PrimeFieldElement PrimeField::parse(std::string_view text) const {
  const std::string t = strip_spaces(text);
  const auto at = t.find("mod");
  const std::string value = t.substr(0, at);
  if (at != std::string::npos) {
    const Rational modulus = Rational::parse(t.substr(at + 3));
    if (modulus != Rational(static_cast<std::int64_t>(p_)))
      throw FieldMismatch("literal '" + std::string(text) + "' in " + name());
  }
  const Rational v = Rational::parse(value);
  if (!v.is_integer()) throw ParseError("prime-field literal must be an integer: '" + t + "'");
  const mpz_class pz(static_cast<unsigned long>(p_));
  mpz_class r = v.numerator() % pz;
  if (r < 0) r += pz;
  return {r.get_ui(), p_};
}

// ---------------------------------------------------------------- approximate C

ApproxComplexField::ApproxComplexField(double tol) : tol_(tol) {
  if (!(std::isfinite(tol) && tol > 0.0)) throw PreconditionError("tolerance must be positive and finite");
}

ApproxComplex ApproxComplexField::checked(std::complex<double> v) const {
  if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
    throw PreconditionError("non-finite complex value");
  return {v.real(), v.imag()};
}

ApproxComplex ApproxComplexField::make(double re, double im) const { return checked({re, im}); }

ApproxComplex ApproxComplexField::add(const ApproxComplex& x, const ApproxComplex& y) const {
  return checked(x.value() + y.value());
}

ApproxComplex ApproxComplexField::sub(const ApproxComplex& x, const ApproxComplex& y) const {
  return checked(x.value() - y.value());
}

ApproxComplex ApproxComplexField::mul(const ApproxComplex& x, const ApproxComplex& y) const {
  return checked(x.value() * y.value());
}

ApproxComplex ApproxComplexField::div(const ApproxComplex& x, const ApproxComplex& y) const {
  if (is_zero(y)) throw DivisionByZero("complex division by a value within tolerance of 0");
  return checked(x.value() / y.value());
}

double ApproxComplexField::discrepancy(const ApproxComplex& x, const ApproxComplex& y) const {
  const double scale = std::max({1.0, std::abs(x.value()), std::abs(y.value())});
  return std::abs(x.value() - y.value()) / scale;
}

bool ApproxComplexField::eq(const ApproxComplex& x, const ApproxComplex& y) const {
  return discrepancy(x, y) <= tol_;
}

std::string ApproxComplexField::format(const ApproxComplex& x) const {
  char buf[96];
  std::snprintf(buf, sizeof buf, "%.17g%s%.17g*i", x.re, x.im < 0 || std::signbit(x.im) ? "-" : "+",
                std::fabs(x.im));
  return buf;
}

ApproxComplex ApproxComplexField::parse(std::string_view text) const {
  const std::string t = strip_spaces(text);
  const char* begin = t.c_str();
  char* end = nullptr;
  const double first = std::strtod(begin, &end);
  if (end == begin) {
    // "i", "-i", "+i"
    if (t == "i" || t == "+i") return make(0.0, 1.0);
    if (t == "-i") return make(0.0, -1.0);
    throw ParseError("malformed complex literal '" + t + "'");
  }
  std::string rest(end);
  if (rest.empty()) return make(first, 0.0);
  if (rest == "*i" || rest == "i") return make(0.0, first);
  const char* rb = end;
  const double second = std::strtod(rb, &end);
  std::string tail(end);
  if (end == rb) {
    if (rest == "+i") return make(first, 1.0);
    if (rest == "-i") return make(first, -1.0);
    throw ParseError("malformed complex literal '" + t + "'");
  }
  if (tail != "*i" && tail != "i") throw ParseError("malformed complex literal '" + t + "'");
  return make(first, second);
}

// ---------------------------------------------------------------- Q(x)

RationalFunction qpi_endomorphism(unsigned k, const RationalFunction& g) {
  if (k < 1) throw PreconditionError("f_k requires k >= 1");
  return RationalFunction(g.numerator().substitute_power(k), g.denominator().substitute_power(k));
}

ImageMembership qpi_in_image(unsigned k, const RationalFunction& g) {
  if (k < 2) throw PreconditionError("qpi_in_image requires k >= 2");
  if (g.is_zero()) throw PreconditionError("qpi_in_image requires g != 0");
  const auto scan = [k](const Polynomial& p, const char* part) -> std::optional<ImageMembership> {
    const auto coeffs = p.coefficients();
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
      if (!coeffs[i].is_zero() && i % k != 0)
        return ImageMembership{false, static_cast<long>(i), part};
    }
    return std::nullopt;
  };
  if (auto w = scan(g.numerator(), "numerator")) return *w;
  if (auto w = scan(g.denominator(), "denominator")) return *w;
  return ImageMembership{true, 0, {}};
}

}  // namespace sdmaps
