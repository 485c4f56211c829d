#pragma once

#include <cstdio>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "sdmaps/errors.hpp"
#include "sdmaps/fields.hpp"
#include "sdmaps/sd_report.hpp"

namespace sdmaps {

// A candidate self-map of a field, given as a rule.
template <FieldCarrier F>
struct SdCandidate {
  using element_type = typename F::element_type;
  std::string name;
  std::function<element_type(const element_type&)> apply;

  element_type operator()(const element_type& x) const { return apply(x); }
};

template <FieldCarrier F>
SdCandidate<F> identity_map(const F&) {
  return {"identity", [](const typename F::element_type& x) { return x; }};
}

inline SdCandidate<QuadraticField> conjugation_map(const QuadraticField&) {
  return {"conjugation", [](const QuadraticElement& z) { return quad_conj(z); }};
}

inline SdCandidate<ApproxComplexField> conjugation_map(const ApproxComplexField& field) {
  return {"conjugation", [field](const ApproxComplex& z) { return field.conj(z); }};
}

// Both sides of the SD equation at (x, y).
template <FieldCarrier F>
struct SdSides {
  typename F::element_type lhs;
  typename F::element_type rhs;
};

// lhs = f((x+y)/(x-y)), rhs = (f(x)+f(y))/(f(x)-f(y)).
// Throws InvalidPair when x == y and InjectivityViolation when f(x) == f(y).
template <FieldCarrier F>
SdSides<F> sd_sides(const F& field, const SdCandidate<F>& f, const typename F::element_type& x,
                    const typename F::element_type& y) {
  if (field.eq(x, y)) throw InvalidPair();
  const auto fx = f(x);
  const auto fy = f(y);
  if (field.eq(fx, fy)) throw InjectivityViolation(field.format(x), field.format(y), field.format(fx));
  auto lhs = f(field.div(field.add(x, y), field.sub(x, y)));
  auto rhs = field.div(field.add(fx, fy), field.sub(fx, fy));
  return {std::move(lhs), std::move(rhs)};
}

// f((x+y)/(x-y)) - (f(x)+f(y))/(f(x)-f(y)); zero (or within tolerance of
// zero on approximate carriers) iff the pair satisfies the SD equation.
template <FieldCarrier F>
typename F::element_type sd_residual(const F& field, const SdCandidate<F>& f,
                                     const typename F::element_type& x,
                                     const typename F::element_type& y) {
  auto sides = sd_sides(field, f, x, y);
  return field.sub(sides.lhs, sides.rhs);
}

// Evaluates the SD equation on every pair. Injectivity violations become
// report entries; so does any arithmetic failure, which marks the run as an
// error.
template <FieldCarrier F>
SdReport check_sd(const F& field, const SdCandidate<F>& f,
                  std::span<const std::pair<typename F::element_type, typename F::element_type>> pairs) {
  SdReport report;
  if (pairs.empty()) {
    report.set_error("empty pair sample");
    return report;
  }
  double worst = 0.0;
  for (const auto& [x, y] : pairs) {
    ++report.checked_pairs;
    try {
      const auto sides = sd_sides(field, f, x, y);
      if constexpr (!F::exact) worst = std::max(worst, field.discrepancy(sides.lhs, sides.rhs));
      if (!field.eq(sides.lhs, sides.rhs)) {
        report.add_violation({"sd", field.format(x), field.format(y), field.format(sides.lhs),
                              field.format(sides.rhs)});
      }
    } catch (const InjectivityViolation& e) {
      report.add_violation({"injectivity", e.x(), e.y(), e.fx(), "undefined"});
    } catch (const InvalidPair&) {
      report.set_error("pair with x == y: " + field.format(x));
    } catch (const Error& e) {
      report.set_error(std::string(e.what()) + " at x=" + field.format(x) + " y=" + field.format(y));
    }
  }
  report.note("map " + f.name + " on " + field.name());
  if constexpr (!F::exact) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "max discrepancy %.3e", worst);
    report.note(buf);
  }
  return report;
}

template <FieldCarrier F>
SdReport check_sd(const F& field, const SdCandidate<F>& f,
                  const std::vector<std::pair<typename F::element_type, typename F::element_type>>& pairs) {
  return check_sd(field, f,
                  std::span<const std::pair<typename F::element_type, typename F::element_type>>(pairs));
}

// The structural consequences every SD map must have: f(0) = 0, f(1) = 1,
// f(-x) = -f(x), f(xy) = f(x)f(y), and injectivity, evaluated on a sample.
// Multiplicativity is tested on cyclically adjacent sample elements and
// injectivity on all pairs of the sample.
template <FieldCarrier F>
SdReport check_properties(const F& field, const SdCandidate<F>& f,
                          std::span<const typename F::element_type> sample) {
  SdReport report;
  if (sample.empty()) {
    report.set_error("empty sample");
    return report;
  }
  const auto fmt = [&field](const auto& v) { return field.format(v); };
  try {
    const auto zero = field.zero();
    const auto one = field.one();
    const auto f0 = f(zero);
    const auto f1 = f(one);
    report.checked_pairs += 2;
    if (!field.eq(f0, zero)) report.add_violation({"f(0)=0", fmt(zero), "", fmt(f0), fmt(zero)});
    if (!field.eq(f1, one)) report.add_violation({"f(1)=1", fmt(one), "", fmt(f1), fmt(one)});

    std::vector<typename F::element_type> images;
    images.reserve(sample.size());
    for (const auto& x : sample) images.push_back(f(x));

    for (std::size_t i = 0; i < sample.size(); ++i) {
      const auto& x = sample[i];
      const auto lhs = f(field.neg(x));
      const auto rhs = field.neg(images[i]);
      ++report.checked_pairs;
      if (!field.eq(lhs, rhs)) report.add_violation({"odd", fmt(x), "", fmt(lhs), fmt(rhs)});
    }
    for (std::size_t i = 0; i < sample.size(); ++i) {
      const std::size_t j = (i + 1) % sample.size();
      const auto lhs = f(field.mul(sample[i], sample[j]));
      const auto rhs = field.mul(images[i], images[j]);
      ++report.checked_pairs;
      if (!field.eq(lhs, rhs))
        report.add_violation({"multiplicative", fmt(sample[i]), fmt(sample[j]), fmt(lhs), fmt(rhs)});
    }
    for (std::size_t i = 0; i < sample.size(); ++i) {
      for (std::size_t j = i + 1; j < sample.size(); ++j) {
        if (field.eq(sample[i], sample[j])) continue;
        ++report.checked_pairs;
        if (field.eq(images[i], images[j]))
          report.add_violation({"injective", fmt(sample[i]), fmt(sample[j]), fmt(images[i]), fmt(images[j])});
      }
    }
  } catch (const Error& e) {
    report.set_error(e.what());
  }
  report.note("map " + f.name + " on " + field.name());
  return report;
}

template <FieldCarrier F>
SdReport check_properties(const F& field, const SdCandidate<F>& f,
                          const std::vector<typename F::element_type>& sample) {
  return check_properties(field, f, std::span<const typename F::element_type>(sample));
}

// ---------------------------------------------------------------- progression engine

enum class ApOrder { forward_then_backward, interleaved };

// What to do when the progression reaches 0. raise throws
// ZeroTermEncountered; stop certifies the zero term through the move that
// reaches it (its quotient is 0) and ends the sweep in that direction.
enum class ZeroTermPolicy { raise, stop };

template <FieldCarrier F>
struct ApTerm {
  long k = 0;
  typename F::element_type value;  // a + k*step, certified fixed
  std::string move;                // "base", "forward", "backward", "degenerate"
  // The fixed quotient the move establishes: (a'+2d)/a' forward,
  // (a''-d)/(a''+d) backward. Equals one for base and degenerate terms.
  typename F::element_type ratio;
};

template <FieldCarrier F>
struct ApResult {
  std::vector<ApTerm<F>> terms;
  SdReport report;
  // Index of the zero term that ended each sweep under ZeroTermPolicy::stop.
  std::optional<long> forward_stop;
  std::optional<long> backward_stop;
};

// If an SD map fixes a, a+step and step, it fixes every a + k*step. Each
// derived term is certified by replaying the two moves against the supplied
// candidate:
//   forward  (x, y) = (t[k-1], step):  f(t[k]/t[k-2]) = t[k]/t[k-2], then
//            f(t[k]) = f(t[k]/t[k-2]) * f(t[k-2])
//   backward (x, y) = (t[k+1], -step): f(t[k]/t[k+2]) = t[k]/t[k+2], then
//            f(t[k]) = f(t[k]/t[k+2]) * f(t[k+2])
// The quotient's value is derived from already-certified terms only; the
// candidate must agree with every derived value, else a violation is
// recorded. Throws ZeroTermEncountered when a visited term is zero (a zero
// a or a+step always throws), and PreconditionError when the candidate does
// not fix a, a+step and step.
template <FieldCarrier F>
ApResult<F> ap_propagate(const F& field, const SdCandidate<F>& f, const typename F::element_type& a,
                         const typename F::element_type& step, long steps,
                         ApOrder order = ApOrder::forward_then_backward,
                         ZeroTermPolicy on_zero = ZeroTermPolicy::raise) {
  using E = typename F::element_type;
  if (steps < 1) throw PreconditionError("ap_propagate requires steps >= 1");
  const auto fmt = [&field](const E& v) { return field.format(v); };
  const auto term = [&](long k) { return field.add(a, field.mul(field.from_int(k), step)); };

  ApResult<F> out;
  SdReport& report = out.report;
  const E a1 = field.add(a, step);
  for (const auto& [label, value] : {std::pair<const char*, const E&>{"a", a}, {"a+d", a1}, {"d", step}}) {
    if (!field.eq(f(value), value))
      throw PreconditionError(std::string("candidate ") + f.name + " does not fix " + label + " = " + fmt(value));
  }

  if (field.is_zero(step)) {
    if (field.is_zero(a)) throw ZeroTermEncountered(0);
    out.terms.push_back({0, a, "base", field.one()});
    for (long k = 2; k <= steps; ++k) out.terms.push_back({k, a, "degenerate", field.one()});
    for (long k = -1; k >= -steps; --k) out.terms.push_back({k, a, "degenerate", field.one()});
    report.checked_pairs = 1;
    report.note("step is zero; progression is constant");
    return out;
  }
  if (field.is_zero(a)) throw ZeroTermEncountered(0);
  if (field.is_zero(a1)) throw ZeroTermEncountered(1);
  out.terms.push_back({0, a, "base", field.one()});
  out.terms.push_back({1, a1, "base", field.one()});

  const E neg_step = field.neg(step);

  // Certified values by k. Only the two most recent on each side are needed.
  E fwd_prev2 = a, fwd_prev1 = a1;  // t[k-2], t[k-1]
  E bwd_next1 = a, bwd_next2 = a1;  // t[k+1], t[k+2]

  const auto verify = [&](long k, const E& tk, const E& ratio, const E& anchor, const E& x, const E& y,
                          const char* move) {
    // Sides of the SD equation for the candidate at (x, y).
    report.checked_pairs += 1;
    try {
      const auto sides = sd_sides(field, f, x, y);
      if (!field.eq(sides.lhs, sides.rhs))
        report.add_violation({std::string("ap_") + move + "_sd", fmt(x), fmt(y), fmt(sides.lhs), fmt(sides.rhs)});
    } catch (const InjectivityViolation& e) {
      report.add_violation({std::string("ap_") + move + "_injectivity", e.x(), e.y(), e.fx(), "undefined"});
    }
    const E f_ratio = f(ratio);
    if (!field.eq(f_ratio, ratio))
      report.add_violation({std::string("ap_") + move + "_quotient", fmt(ratio), "", fmt(f_ratio), fmt(ratio)});
    const E derived = field.mul(ratio, anchor);
    if (!field.eq(derived, tk))
      report.add_violation({std::string("ap_") + move + "_derivation", std::to_string(k), "", fmt(derived), fmt(tk)});
    const E f_tk = f(tk);
    const E product = field.mul(f_ratio, f(anchor));
    if (!field.eq(f_tk, product))
      report.add_violation({std::string("ap_") + move + "_multiplicative", fmt(ratio), fmt(anchor), fmt(f_tk),
                            fmt(product)});
    if (!field.eq(f_tk, derived))
      report.add_violation({std::string("ap_") + move + "_fixed", fmt(tk), "", fmt(f_tk), fmt(derived)});
  };

  const auto forward = [&](long k) {
    if (out.forward_stop) return;
    const E tk = field.add(fwd_prev1, step);
    if (field.is_zero(tk)) {
      if (on_zero == ZeroTermPolicy::raise) throw ZeroTermEncountered(k);
      out.forward_stop = k;
    }
    // (x+y)/(x-y) at x = t[k-1], y = step, with f(x) = x and f(y) = y.
    const E ratio = field.div(field.add(fwd_prev1, step), field.sub(fwd_prev1, step));
    verify(k, tk, ratio, fwd_prev2, fwd_prev1, step, "forward");
    out.terms.push_back({k, tk, "forward", ratio});
    fwd_prev2 = fwd_prev1;
    fwd_prev1 = tk;
  };

  const auto backward = [&](long k) {
    if (out.backward_stop) return;
    const E tk = field.sub(bwd_next1, step);
    if (field.is_zero(tk)) {
      if (on_zero == ZeroTermPolicy::raise) throw ZeroTermEncountered(k);
      out.backward_stop = k;
    }
    // Oddness gives f(-step) = -step, so the right side is (t-step)/(t+step).
    const E f_neg = f(neg_step);
    report.checked_pairs += 1;
    if (!field.eq(f_neg, neg_step))
      report.add_violation({"ap_backward_odd", fmt(neg_step), "", fmt(f_neg), fmt(neg_step)});
    const E ratio = field.div(field.sub(bwd_next1, step), field.add(bwd_next1, step));
    verify(k, tk, ratio, bwd_next2, bwd_next1, neg_step, "backward");
    out.terms.push_back({k, tk, "backward", ratio});
    bwd_next2 = bwd_next1;
    bwd_next1 = tk;
  };

  if (order == ApOrder::forward_then_backward) {
    for (long k = 2; k <= steps; ++k) forward(k);
    for (long k = -1; k >= -steps; --k) backward(k);
  } else {
    for (long i = 1; i <= steps; ++i) {
      if (i + 1 <= steps) forward(i + 1);
      backward(-i);
    }
  }

  for (const auto& t : out.terms) {
    if (!field.eq(t.value, term(t.k)))
      report.add_violation({"ap_index", std::to_string(t.k), "", fmt(t.value), fmt(term(t.k))});
  }
  report.note("progression a=" + fmt(a) + " d=" + fmt(step) + " against " + f.name);
  if (out.forward_stop) report.note("forward sweep ends at zero term k=" + std::to_string(*out.forward_stop));
  if (out.backward_stop) report.note("backward sweep ends at zero term k=" + std::to_string(*out.backward_stop));
  return out;
}

}  // namespace sdmaps
