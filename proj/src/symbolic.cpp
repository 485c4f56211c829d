#include "sdmaps/symbolic.hpp"

#include "sdmaps/errors.hpp"

namespace sdmaps {

SymbolicSequence symbolic_sequence(int n, int cap) {
  if (n < 2) throw PreconditionError("symbolic_sequence requires N >= 2");
  if (n > cap) throw PreconditionError("N = " + std::to_string(n) + " exceeds cap " + std::to_string(cap));
  const RationalFunction one(Rational(1));
  SymbolicSequence seq;
  seq.entries.reserve(static_cast<std::size_t>(n) + 1);
  seq.entries.push_back(RationalFunction());
  seq.entries.push_back(one);
  seq.entries.push_back(RationalFunction::variable());
  for (int k = 2; k < n; ++k) {
    const RationalFunction& cur = seq.entries[static_cast<std::size_t>(k)];
    const RationalFunction denom = cur - one;
    if (denom.is_zero()) throw RecurrenceDegenerate(k);
    seq.entries.push_back(seq.entries[static_cast<std::size_t>(k) - 1] * ((cur + one) / denom));
  }
  seq.entries.resize(static_cast<std::size_t>(n) + 1);
  return seq;
}

std::vector<RationalFunction> published_symbolic_values() {
  static const char* const kValues[] = {
      "0",
      "1",
      "u",
      "(u + 1)/(u - 1)",
      "u^2",
      "(u^2 + 1)/(u - 1)^2",
      "u*(u^2 - u + 1)",
      "(u^3 - u^2 + u + 1)/(u^3 - 3*u^2 + 3*u - 1)",
      "u^2*(u^2 - 2*u + 2)",
  };
  std::vector<RationalFunction> out;
  for (const char* v : kValues) out.push_back(RationalFunction::parse(v, "u"));
  return out;
}

UConstraint u_constraint() {
  const SymbolicSequence seq = symbolic_sequence(8);
  const RationalFunction& u = seq.entries[2];
  const RationalFunction diff = seq.entries[8] - u * seq.entries[4];

  UConstraint out;
  out.numerator = diff.numerator().monic();
  out.roots = rational_roots(out.numerator);
  for (const auto& r : out.roots)
    if (!r.root.is_zero() && !r.root.is_one()) out.surviving.push_back(r.root);

  SdReport& report = out.report;
  report.checked_pairs = 1;
  const std::vector<RootMultiplicity> expected{{Rational(0), 2}, {Rational(1), 1}, {Rational(2), 1}};
  const auto render_roots = [](const std::vector<RootMultiplicity>& rs) {
    std::string s = "{";
    for (std::size_t i = 0; i < rs.size(); ++i) {
      if (i) s += ", ";
      s += rs[i].root.to_string() + "^" + std::to_string(rs[i].multiplicity);
    }
    return s + "}";
  };
  if (out.roots != expected)
    report.add_violation({"root_multiset", out.numerator.to_string("u"), "", render_roots(out.roots),
                          render_roots(expected)});
  if (out.surviving != std::vector<Rational>{Rational(2)}) {
    std::string s;
    for (const auto& r : out.surviving) s += (s.empty() ? "" : ", ") + r.to_string();
    report.add_violation({"surviving_root", "", "", "{" + s + "}", "{2}"});
  }
  const Rational f8 = seq.entries[8].eval(Rational(2));
  if (f8 != Rational(8)) report.add_violation({"f(8) at u=2", "2", "", f8.to_string(), "8"});
  report.note("f(8) - u f(4) numerator: " + out.numerator.to_string("u"));
  return out;
}

SdReport integer_induction_check(long n) {
  if (n < 3) throw PreconditionError("integer_induction_check requires N >= 3");
  SdReport report;
  Rational prev(1);  // f(n-1)
  Rational cur(2);   // f(n)
  report.checked_pairs = 3;  // f(0), f(1), f(2) are the seeds
  for (long k = 2; k < n; ++k) {
    const Rational denom = cur - Rational(1);
    if (denom.is_zero()) {
      report.add_violation({"recurrence_degenerate", std::to_string(k), "", cur.to_string(), "1"});
      break;
    }
    Rational next = prev * ((cur + Rational(1)) / denom);
    ++report.checked_pairs;
    if (next != Rational(k + 1)) {
      report.add_violation({"f(n)=n", std::to_string(k + 1), "", next.to_string(), std::to_string(k + 1)});
      report.note("first offending n = " + std::to_string(k + 1));
      break;
    }
    prev = std::move(cur);
    cur = std::move(next);
  }
  report.note("f(n) = n for n <= " + std::to_string(n) + " from f(1) = 1, f(2) = 2");
  return report;
}

}  // namespace sdmaps
