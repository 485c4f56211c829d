#include "sdmaps/rational.hpp"

#include <cctype>
#include <ostream>

#include "sdmaps/errors.hpp"

namespace sdmaps {

static_assert(sizeof(long) == sizeof(std::int64_t));

Rational::Rational(std::int64_t n) : value_(static_cast<long>(n)) {}

Rational::Rational(std::int64_t num, std::int64_t den)
    : Rational(mpz_class(static_cast<long>(num)), mpz_class(static_cast<long>(den))) {}

Rational::Rational(const mpz_class& num, const mpz_class& den) {
  if (den == 0) throw DivisionByZero();
  value_ = mpq_class(num, den);
  value_.canonicalize();
}

Rational::Rational(const mpz_class& n) : value_(n) {}

Rational::Rational(mpq_class q) : value_(std::move(q)) {
  if (value_.get_den() == 0) throw DivisionByZero();
  value_.canonicalize();
}

namespace {

mpz_class parse_integer(std::string_view text, std::string_view whole) {
  std::size_t i = 0;
  bool negative = false;
  if (i < text.size() && (text[i] == '+' || text[i] == '-')) {
    negative = text[i] == '-';
    ++i;
  }
  if (i == text.size()) throw ParseError("expected integer in '" + std::string(whole) + "'");
  for (std::size_t j = i; j < text.size(); ++j) {
    if (!std::isdigit(static_cast<unsigned char>(text[j])))
      throw ParseError("unexpected character in '" + std::string(whole) + "'");
  }
  mpz_class value(std::string(text.substr(i)), 10);
  return negative ? mpz_class(-value) : value;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

Rational Rational::parse(std::string_view text) {
  const std::string_view t = trim(text);
  const auto slash = t.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(t, text));
  const mpz_class num = parse_integer(trim(t.substr(0, slash)), text);
  const std::string_view den_text = trim(t.substr(slash + 1));
  if (!den_text.empty() && (den_text.front() == '+' || den_text.front() == '-'))
    throw ParseError("signed denominator in '" + std::string(text) + "'");
  const mpz_class den = parse_integer(den_text, text);
  if (den == 0) throw DivisionByZero("zero denominator in '" + std::string(text) + "'");
  return Rational(num, den);
}

Rational Rational::inverse() const {
  if (is_zero()) throw DivisionByZero();
  mpq_class q(value_.get_den(), value_.get_num());
  q.canonicalize();
  return Rational(std::move(q));
}

Rational Rational::abs() const { return Rational(mpq_class(::abs(value_))); }

std::string Rational::to_string() const {
  if (value_.get_den() == 1) return value_.get_num().get_str();
  return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

Rational& Rational::operator+=(const Rational& o) {
  value_ += o.value_;
  return *this;
}

Rational& Rational::operator-=(const Rational& o) {
  value_ -= o.value_;
  return *this;
}

Rational& Rational::operator*=(const Rational& o) {
  value_ *= o.value_;
  return *this;
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw DivisionByZero();
  value_ /= o.value_;
  return *this;
}

Rational Rational::operator-() const { return Rational(mpq_class(-value_)); }

Rational pow(Rational base, long exponent) {
  if (exponent < 0) {
    base = base.inverse();
    exponent = -exponent;
  }
  Rational result(1);
  while (exponent > 0) {
    if (exponent & 1) result *= base;
    base *= base;
    exponent >>= 1;
  }
  return result;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

bool is_perfect_square(const mpz_class& n) {
  if (n < 0) return false;
  return mpz_perfect_square_p(n.get_mpz_t()) != 0;
}

}  // namespace sdmaps
