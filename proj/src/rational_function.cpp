#include "sdmaps/rational_function.hpp"

#include <cctype>

#include "sdmaps/errors.hpp"

namespace sdmaps {

RationalFunction::RationalFunction(const Rational& c)
    : num_(Polynomial::constant(c)), den_(Polynomial::constant(Rational(1))) {}

RationalFunction::RationalFunction(Polynomial num)
    : num_(std::move(num)), den_(Polynomial::constant(Rational(1))) {}

RationalFunction::RationalFunction(Polynomial num, Polynomial den)
    : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw DivisionByZero("rational function with zero denominator");
  canonicalize();
}

void RationalFunction::canonicalize() {
  if (num_.is_zero()) {
    den_ = Polynomial::constant(Rational(1));
    return;
  }
  if (den_.degree() > 0) {
    const Polynomial g = poly_gcd(num_, den_);
    if (g.degree() > 0) {
      num_ = divmod(num_, g).quotient;
      den_ = divmod(den_, g).quotient;
    }
  }
  const Rational lead = den_.leading();
  if (!lead.is_one()) {
    const Rational inv = lead.inverse();
    num_ *= inv;
    den_ *= inv;
  }
}

Rational RationalFunction::eval(const Rational& x) const {
  const Rational d = den_.eval(x);
  if (d.is_zero()) throw PoleError(x.to_string());
  return num_.eval(x) / d;
}

namespace {

bool is_single_term(const Polynomial& p) {
  int nonzero = 0;
  for (const auto& c : p.coefficients()) nonzero += c.is_zero() ? 0 : 1;
  return nonzero == 1;
}

}  // namespace

std::string RationalFunction::to_string(std::string_view var) const {
  if (is_polynomial()) return num_.to_string(var);
  const std::string n = num_.to_string(var);
  const std::string d = den_.to_string(var);
  const bool wrap_num = !is_single_term(num_) || n.find('/') != std::string::npos;
  const bool wrap_den = !is_single_term(den_) || d.find('*') != std::string::npos ||
                        d.find('/') != std::string::npos;
  return (wrap_num ? "(" + n + ")" : n) + "/" + (wrap_den ? "(" + d + ")" : d);
}

RationalFunction& RationalFunction::operator+=(const RationalFunction& o) {
  if (den_ == o.den_) {
    num_ += o.num_;
  } else {
    num_ = num_ * o.den_ + o.num_ * den_;
    den_ *= o.den_;
  }
  canonicalize();
  return *this;
}

RationalFunction& RationalFunction::operator-=(const RationalFunction& o) {
  if (den_ == o.den_) {
    num_ -= o.num_;
  } else {
    num_ = num_ * o.den_ - o.num_ * den_;
    den_ *= o.den_;
  }
  canonicalize();
  return *this;
}

RationalFunction& RationalFunction::operator*=(const RationalFunction& o) {
  num_ *= o.num_;
  den_ *= o.den_;
  canonicalize();
  return *this;
}

RationalFunction& RationalFunction::operator/=(const RationalFunction& o) {
  if (o.is_zero()) throw DivisionByZero("division by the zero rational function");
  num_ *= o.den_;
  den_ *= o.num_;
  canonicalize();
  return *this;
}

RationalFunction RationalFunction::operator-() const {
  RationalFunction out = *this;
  out.num_ = -out.num_;
  return out;
}

RationalFunction pow(RationalFunction base, long exponent) {
  if (exponent < 0) {
    base = RationalFunction(Rational(1)) / base;
    exponent = -exponent;
  }
  RationalFunction result(Rational(1));
  while (exponent > 0) {
    if (exponent & 1) result *= base;
    base *= base;
    exponent >>= 1;
  }
  return result;
}

namespace {

class ExpressionParser {
 public:
  ExpressionParser(std::string_view text, std::string_view var) : text_(text), var_(var) {}

  RationalFunction run() {
    RationalFunction value = expression();
    skip_space();
    if (pos_ != text_.size()) fail("trailing input");
    return value;
  }

 private:
  [[noreturn]] void fail(const std::string& why) const {
    throw ParseError(why + " at offset " + std::to_string(pos_) + " in '" + std::string(text_) + "'");
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  RationalFunction expression() {
    RationalFunction acc = term();
    for (;;) {
      if (accept('+')) {
        acc += term();
      } else if (accept('-')) {
        acc -= term();
      } else {
        return acc;
      }
    }
  }

  RationalFunction term() {
    RationalFunction acc = unary();
    for (;;) {
      if (accept('*')) {
        acc *= unary();
      } else if (accept('/')) {
        acc /= unary();
      } else {
        return acc;
      }
    }
  }

  RationalFunction unary() {
    if (accept('-')) return -unary();
    if (accept('+')) return unary();
    return power();
  }

  RationalFunction power() {
    RationalFunction base = primary();
    if (accept('^')) {
      bool negative = false;
      if (accept('-')) negative = true;
      skip_space();
      const std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      if (start == pos_) fail("expected exponent");
      const long e = std::stol(std::string(text_.substr(start, pos_ - start)));
      return pow(std::move(base), negative ? -e : e);
    }
    return base;
  }

  RationalFunction primary() {
    skip_space();
    if (accept('(')) {
      RationalFunction inner = expression();
      if (!accept(')')) fail("expected ')'");
      return inner;
    }
    if (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      const std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      return RationalFunction(Rational(mpz_class(std::string(text_.substr(start, pos_ - start)))));
    }
    if (!var_.empty() && text_.substr(pos_, var_.size()) == var_) {
      pos_ += var_.size();
      return RationalFunction::variable();
    }
    fail("unexpected token");
  }

  std::string_view text_;
  std::string_view var_;
  std::size_t pos_ = 0;
};

}  // namespace

RationalFunction RationalFunction::parse(std::string_view text, std::string_view var) {
  return ExpressionParser(text, var).run();
}

}  // namespace sdmaps
