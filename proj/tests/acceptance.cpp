// Acceptance suite: one line per criterion, exit status 0 iff all pass.
// Usage: acceptance <path to sdmaps CLI>

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "sdmaps/cli.hpp"
#include "sdmaps/complex_verify.hpp"
#include "sdmaps/errors.hpp"
#include "sdmaps/finite_classifier.hpp"
#include "sdmaps/quad_verify.hpp"
#include "sdmaps/sampling.hpp"
#include "sdmaps/sd_core.hpp"
#include "sdmaps/symbolic.hpp"

using namespace sdmaps;

namespace {

constexpr std::uint64_t kSeed = 20240917;

struct Verdict {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      if (!detail.empty()) detail += "; ";
      detail += "failed: " + what;
    }
  }
};

struct Criterion {
  int id;
  std::string name;
  double limit_seconds;  // <= 0: no limit
  std::function<Verdict()> body;
};

std::set<std::vector<std::uint32_t>> tables(const ClassificationResult& r) {
  std::set<std::vector<std::uint32_t>> out;
  for (const auto& m : r.sd_maps) out.insert(m.table);
  return out;
}

// x^k mod p by repeated multiplication.
std::vector<std::uint32_t> power_table(std::uint32_t p, std::uint32_t k) {
  std::vector<std::uint32_t> t(p);
  for (std::uint64_t x = 0; x < p; ++x) {
    std::uint64_t r = 1;
    for (std::uint32_t i = 0; i < k; ++i) r = r * x % p;
    t[x] = static_cast<std::uint32_t>(r);
  }
  return t;
}

Verdict symbolic_table() {
  Verdict v;
  const auto seq = symbolic_sequence(8);
  const std::vector<std::string> printed = {"0",
                                            "1",
                                            "u",
                                            "(u+1)/(u-1)",
                                            "u^2",
                                            "(u^2+1)/(u-1)^2",
                                            "u*(u^2-u+1)",
                                            "(u^3-u^2+u+1)/(u^3-3*u^2+3*u-1)",
                                            "u^2*(u^2-2*u+2)"};
  v.require(seq.entries.size() == printed.size(), "nine entries");
  for (std::size_t n = 0; n < printed.size() && n < seq.entries.size(); ++n)
    v.require(seq.entries[n] == RationalFunction::parse(printed[n]), "f(" + std::to_string(n) + ")");
  if (v.pass) v.detail = "f(0..8) equal the closed forms";
  return v;
}

Verdict constraint_cubic() {
  Verdict v;
  const auto uc = u_constraint();
  std::multiset<std::string> roots;
  for (const auto& r : uc.roots)
    for (int i = 0; i < r.multiplicity; ++i) roots.insert(r.root.to_string());
  v.require(roots == std::multiset<std::string>{"0", "0", "1", "2"}, "root multiset {0,0,1,2}");
  v.require(uc.surviving == std::vector<Rational>{Rational(2)}, "only u = 2 survives");
  v.require(uc.report.passed(), "report");
  if (v.pass) v.detail = uc.numerator.to_string("u") + " has roots {0,0,1,2}; u = 2";
  return v;
}

Verdict integer_induction() {
  Verdict v;
  const auto r = integer_induction_check(1000);
  v.require(r.passed(), "f(n) = n");
  v.require(r.checked_pairs == 1001, "all n <= 1000 checked");
  if (v.pass) v.detail = "f(n) = n for 0 <= n <= 1000";
  return v;
}

Verdict f5_classification() {
  Verdict v;
  const auto r = classify(5);
  const std::set<std::vector<std::uint32_t>> expected = {power_table(5, 1), power_table(5, 3)};
  v.require(tables(r) == expected, "maps are exactly identity and x^3");
  const auto oracle = oracle_all_maps(5);
  v.require(oracle.stats.candidates_examined == 3125, "oracle enumerates 3125 maps");
  v.require(tables(oracle) == expected, "all-maps oracle agrees");
  if (v.pass) v.detail = "{x, x^3}; all-maps oracle over 3125 maps agrees";
  return v;
}

Verdict oracle_concordance() {
  Verdict v;
  for (std::uint32_t p : {3u, 5u, 7u}) {
    const auto all = tables(oracle_all_maps(p));
    const auto con = tables(oracle_constrained(p));
    const auto pow = tables(classify(p, {OracleTier::none}));
    v.require(all == con && con == pow, "p = " + std::to_string(p));
  }
  for (std::uint32_t p : {11u, 13u}) {
    v.require(tables(oracle_constrained(p)) == tables(classify(p, {OracleTier::none})), "p = " + std::to_string(p));
  }
  if (v.pass) v.detail = "p in {3,5,7}: three methods agree; p in {11,13}: two methods agree";
  return v;
}

Verdict automorphism_suite() {
  Verdict v;
  for (int d : {2, 3, 5, -1, -2, -3})
    for (QuadMap m : {QuadMap::identity, QuadMap::conjugation}) {
      const auto r = verify_automorphism_sd(Rational(d), m, 500, kSeed);
      v.require(r.passed() && r.violations.empty() && r.checked_pairs == 500,
                to_string(m) + " on d = " + std::to_string(d));
    }
  if (v.pass) v.detail = "12 runs x 500 pairs, 0 violations";
  return v;
}

Verdict quadratic_replay() {
  Verdict v;
  for (int d : {2, 3, 5, -1, -2, -3})
    for (SignCase c : {SignCase::plus, SignCase::minus}) {
      const auto r = sign_contradiction(Rational(d), c);
      bool nonzero = !r.comparisons.empty();
      for (const auto& cmp : r.comparisons) nonzero = nonzero && !cmp.discrepancy.b.is_zero();
      v.require(r.confirmed && nonzero, "contradiction d = " + std::to_string(d) + " " + to_string(c));
    }
  const auto rows = lattice_fix(Rational(2), QuadMap::identity, 20, 20, LatticeOrder::row_major);
  const auto cols = lattice_fix(Rational(2), QuadMap::identity, 20, 20, LatticeOrder::column_major);
  v.require(rows.report.passed() && cols.report.passed(), "lattice reports");
  v.require(rows.grid.size() == 1680 && cols.grid.size() == 1680, "1680 points");
  const QuadraticField field{Rational(2)};
  bool closed = true, same = true;
  for (const auto& [mn, pt] : rows.grid) {
    closed = closed && pt.value == field.make(Rational(mn.first), Rational(mn.second));
    const auto it = cols.grid.find(mn);
    same = same && it != cols.grid.end() && it->second.value == pt.value;
  }
  v.require(closed, "points equal m + n sqrt 2");
  v.require(same, "row-major and column-major agree");
  if (v.pass) v.detail = "12 contradictions confirmed; 1680 points certified in both orders";
  return v;
}

Verdict progression_engine() {
  Verdict v;
  const RationalField q;
  const Rational a(1), d(1);
  // The progression 1, 2, 3, ... passes through 0 at k = -1, so the backward
  // sweep ends there.
  const auto r = ap_propagate(q, identity_map(q), a, d, 50, ApOrder::forward_then_backward, ZeroTermPolicy::stop);
  v.require(r.report.passed(), "report");
  long forward = 0;
  bool backward_identity = false;
  for (const auto& t : r.terms) {
    v.require(t.value == Rational(t.k + 1), "term k = " + std::to_string(t.k));
    if (t.move == "forward") ++forward;
    if (t.k == -1) backward_identity = t.move == "backward" && t.ratio == (a - d) / (a + d);
  }
  v.require(forward == 49, "49 forward terms");
  v.require(backward_identity, "backward quotient (a-d)/(a+d)");
  v.require(r.backward_stop == -1, "backward sweep ends at the zero term");

  // Same checks on a progression that avoids 0.
  const Rational a2(1, 2);
  const auto r2 = ap_propagate(q, identity_map(q), a2, d, 50);
  v.require(r2.report.passed() && r2.terms.size() == 101, "a = 1/2 progression");
  for (const auto& t : r2.terms)
    if (t.k == -1) v.require(t.ratio == (a2 - d) / (a2 + d), "backward quotient for a = 1/2");
  if (v.pass) v.detail = "f(n) = n for n = 0..51; backward quotient (a-d)/(a+d) reproduced";
  return v;
}

Verdict counterexample_suite() {
  Verdict v;
  const FunctionField field;
  SampleRng rng(kSeed);
  const auto pairs = sample_pairs(field, rng, 200);
  for (unsigned k : {2u, 3u}) {
    const SdCandidate<FunctionField> fk{"f_k", [k](const RationalFunction& g) { return qpi_endomorphism(k, g); }};
    const auto r = check_sd(field, fk, pairs);
    v.require(r.passed() && r.checked_pairs == 200, "f_" + std::to_string(k) + " SD");
    const auto img = qpi_in_image(k, RationalFunction::variable());
    v.require(!img.in_image && img.witness_exponent % static_cast<long>(k) != 0, "x not in image");
  }
  if (v.pass) v.detail = "f_2, f_3 SD on 200 pairs; x outside both images (exponent 1)";
  return v;
}

Verdict complex_smoke() {
  Verdict v;
  const auto s = verify_complex(1e-9, 1000, kSeed);
  v.require(s.identity_sd.passed() && s.identity_sd.checked_pairs == 1000, "identity");
  v.require(s.conjugation_sd.passed() && s.conjugation_sd.checked_pairs == 1000, "conjugation");
  v.require(s.identity_quotient.passed() && s.conjugation_quotient.passed(), "z/zbar");
  v.require(s.half_angle.passed() && s.half_angle.checked_pairs == 1000, "half-angle");
  v.require(conjugation_spot_residual() <= 1e-12, "residual at (1+2i, 3-i)");
  if (v.pass) v.detail = "1000 pairs, 1000 z, 1000 angles within 1e-9";
  return v;
}

Verdict negative_controls() {
  Verdict v;
  const RationalField q;
  SampleRng rng(kSeed);
  const auto pairs = sample_pairs(q, rng, 200);
  const SdCandidate<RationalField> sq{"x^2", [](const Rational& x) { return x * x; }};
  const SdCandidate<RationalField> sh{"x+1", [](const Rational& x) { return x + Rational(1); }};
  std::string witnesses;
  for (const auto* c : {&sq, &sh}) {
    const auto r = check_sd(q, *c, pairs);
    const bool concrete = !r.violations.empty() && !r.violations[0].x.empty() && !r.violations[0].y.empty();
    v.require(!r.passed() && concrete, c->name + " rejected with a pair");
  }
  const auto f7 = is_sd_power_map(7, 5);
  v.require(!f7.pass && f7.witness && f7.witness->x == 2 && f7.witness->y == 1 && f7.witness->lhs == 5 &&
                f7.witness->rhs == 4,
            "F_7 x^5 witness (2,1): 5 vs 4");
  if (v.pass) v.detail = "x^2, x+1 rejected on Q; x^5 on F_7 rejected at (2,1) with 5 vs 4";
  return v;
}

std::string slurp(const std::string& path) {
  std::ifstream f(path);
  std::stringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

Verdict determinism(const std::string& cli) {
  Verdict v;
  const std::vector<std::string> commands = {
      "verify-symbolic",
      "classify --primes 3,5,7,11,13",
      "verify-quad --d 2",
      "verify-quad --d -3 --map conj --grid 6x6",
      "verify-complex",
      "ap-demo",
      "ap-demo --a 1 --d -1/2 --steps 2",
      "ap-demo --a 'sqrt(2)' --d 1 --steps 10",
      "counterexamples",
  };
  for (const auto& cmd : commands) {
    std::string payload[2];
    for (int i = 0; i < 2; ++i) {
      const std::string out = "acceptance_run_" + std::to_string(i) + ".json";
      std::remove(out.c_str());
      const std::string line = "\"" + cli + "\" --seed " + std::to_string(kSeed) + " --json " + out + " " + cmd +
                               " > /dev/null 2>&1";
      if (std::system(line.c_str()) == -1) v.require(false, cmd + " could not be started");
      const std::string text = slurp(out);
      std::remove(out.c_str());
      if (text.empty()) {
        v.require(false, cmd + " wrote no JSON");
        break;
      }
      payload[i] = strip_stats(Json::parse(text)).dump();
    }
    v.require(!payload[0].empty() && payload[0] == payload[1], cmd);
  }
  if (v.pass) v.detail = std::to_string(commands.size()) + " command lines, identical payloads";
  return v;
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 2) {
    std::cerr << "usage: acceptance <sdmaps-cli>\n";
    return 1;
  }
  const std::string cli = argv[1];

  const std::vector<Criterion> criteria = {
      {1, "symbolic table reproduction", 1, symbolic_table},
      {2, "constraint polynomial roots", 1, constraint_cubic},
      {3, "integer induction to 1000", 5, integer_induction},
      {4, "F_5 classification", 10, f5_classification},
      {5, "oracle concordance", 300, oracle_concordance},
      {6, "automorphism SD suite", 10, automorphism_suite},
      {7, "quadratic proof replay", 30, quadratic_replay},
      {8, "progression engine", 0, progression_engine},
      {9, "counterexample suite", 30, counterexample_suite},
      {10, "complex smoke test", 5, complex_smoke},
      {11, "negative controls", 0, negative_controls},
      {12, "determinism", 0, [&cli] { return determinism(cli); }},
  };

  int failed = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Verdict v;
    try {
      v = c.body();
    } catch (const std::exception& e) {
      v.pass = false;
      v.detail = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.limit_seconds > 0 && secs >= c.limit_seconds) v.require(false, "time limit " + std::to_string(c.limit_seconds) + " s");
    if (!v.pass) ++failed;
    char timing[32];
    std::snprintf(timing, sizeof timing, "%.3fs", secs);
    std::cout << (v.pass ? "PASS" : "FAIL") << "  " << c.id << ". " << c.name << " [" << timing << "]  " << v.detail
              << "\n";
  }
  std::cout << (criteria.size() - failed) << "/" << criteria.size() << " criteria passed\n";
  return failed == 0 ? 0 : 1;
}
