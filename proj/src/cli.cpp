#include "sdmaps/cli.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <fstream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <utility>

#include <CLI11.hpp>

#include "sdmaps/complex_verify.hpp"
#include "sdmaps/errors.hpp"
#include "sdmaps/fields.hpp"
#include "sdmaps/finite_classifier.hpp"
#include "sdmaps/quad_verify.hpp"
#include "sdmaps/sampling.hpp"
#include "sdmaps/sd_core.hpp"
#include "sdmaps/symbolic.hpp"

namespace sdmaps {

namespace {

const std::vector<std::string> kCommands = {"verify-symbolic", "classify",  "verify-quad",
                                            "verify-complex",  "ap-demo",   "counterexamples"};
const std::vector<std::string> kGlobalKeys = {"seed", "json", "format", "config"};

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// What a command produced. Text output and JSON come from the same sections.
struct Outcome {
  Json body = Json::object();
  std::vector<std::pair<std::string, SdReport>> sections;
  std::vector<std::string> lines;
  int exit_floor = kExitPass;  // set by per-prime classification errors

  void add(const std::string& title, const SdReport& r) { sections.emplace_back(title, r); }
};

struct Settings {
  std::uint64_t seed = 1;
  std::string json_path;
  std::string format = "text";
  std::string config_path;

  int max_n = 8;
  int symbolic_n = 8;

  std::vector<long long> primes;
  std::string oracle_tier = "auto";
  std::uint32_t max_prime = kDefaultMaxPrime;

  std::string d = "2";
  std::string map = "both";
  std::string grid = "20x20";
  std::size_t quad_samples = 500;

  double tol = ApproxComplexField::kDefaultTolerance;
  std::size_t complex_samples = 1000;

  std::string ap_a = "1/2";
  std::string ap_d = "1";
  long ap_steps = 10;
  std::string ap_order = "forward-then-backward";
  std::string ap_on_zero = "raise";

  std::vector<long long> ks = {2, 3};
  std::size_t ce_samples = 200;
};

Json violation_json(const Violation& v) {
  return {{"kind", v.kind}, {"x", v.x}, {"y", v.y}, {"lhs", v.lhs}, {"rhs", v.rhs}};
}

// ------------------------------------------------------------ verify-symbolic

Outcome run_verify_symbolic(const Settings& s) {
  if (s.max_n < 3) throw UsageError("--max-n must be at least 3");
  if (s.symbolic_n < 2 || s.symbolic_n > kDefaultSymbolicCap)
    throw UsageError("--symbolic-n must be in [2, " + std::to_string(kDefaultSymbolicCap) + "]");

  Outcome o;
  const auto seq = symbolic_sequence(s.symbolic_n);
  const auto published = published_symbolic_values();
  SdReport table;
  Json entries = Json::array();
  for (std::size_t n = 0; n < seq.entries.size(); ++n) {
    const std::string value = seq.entries[n].to_string("u");
    Json e = {{"n", n}, {"value", value}};
    if (n < published.size()) {
      ++table.checked_pairs;
      const bool match = seq.entries[n] == published[n];
      e["matches_published"] = match;
      if (!match) table.add_violation({"symbolic_value", std::to_string(n), "", value, published[n].to_string("u")});
    }
    o.lines.push_back("  f(" + std::to_string(n) + ") = " + value);
    entries.push_back(std::move(e));
  }
  o.body["symbolic"] = {{"n", s.symbolic_n}, {"entries", entries}, {"report", to_json(table)}};
  o.add("symbolic table", table);

  const auto uc = u_constraint();
  Json roots = Json::array();
  for (const auto& r : uc.roots) roots.push_back({{"root", r.root.to_string()}, {"multiplicity", r.multiplicity}});
  Json surviving = Json::array();
  for (const auto& r : uc.surviving) surviving.push_back(r.to_string());
  o.body["u_constraint"] = {{"numerator", uc.numerator.to_string("u")},
                            {"roots", roots},
                            {"surviving", surviving},
                            {"report", to_json(uc.report)}};
  o.add("u constraint " + uc.numerator.to_string("u") + " = 0", uc.report);

  const auto induction = integer_induction_check(s.max_n);
  o.body["induction"] = {{"max_n", s.max_n}, {"report", to_json(induction)}};
  o.add("f(n) = n for n <= " + std::to_string(s.max_n), induction);
  return o;
}

// ------------------------------------------------------------ classify

Outcome run_classify(const Settings& s) {
  if (s.primes.empty()) throw UsageError("--primes must list at least one prime");
  ClassifyOptions options;
  if (s.oracle_tier != "auto") options.max_oracle_tier = parse_oracle_tier(s.oracle_tier);
  options.max_prime = s.max_prime;

  Outcome o;
  Json results = Json::array();
  Json counts = Json::array();
  SdReport summary;
  for (const auto& outcome : classify_range(s.primes, options)) {
    if (const auto* r = std::get_if<ClassificationResult>(&outcome)) {
      results.push_back(to_json(*r));
      counts.push_back(r->sd_maps.size());
      ++summary.checked_pairs;
      std::string maps;
      for (const auto& m : r->sd_maps) {
        if (!maps.empty()) maps += ", ";
        maps += m.k ? "x^" + std::to_string(*m.k) : "table";
      }
      o.lines.push_back("  p=" + std::to_string(r->p) + ": " + std::to_string(r->sd_maps.size()) + " map(s) {" +
                        maps + "} via " + r->method);
    } else {
      const auto& e = std::get<ClassificationError>(outcome);
      results.push_back(to_json(e));
      counts.push_back(nullptr);
      summary.set_error("p=" + std::to_string(e.p) + ": " + e.message);
      o.lines.push_back("  p=" + std::to_string(e.p) + ": " + e.message);
      o.exit_floor = std::max(o.exit_floor, e.kind == "internal_inconsistency" ? int{kExitInternal} : int{kExitUsage});
    }
  }
  o.body["results"] = std::move(results);
  o.body["counts"] = std::move(counts);
  o.add("classification", summary);
  return o;
}

// ------------------------------------------------------------ verify-quad

std::pair<long, long> parse_grid(const std::string& text) {
  const auto x = text.find_first_of("xX");
  try {
    if (x == std::string::npos) throw std::invalid_argument(text);
    std::size_t used = 0;
    const long m = std::stol(text.substr(0, x), &used);
    if (used != x) throw std::invalid_argument(text);
    const std::string rest = text.substr(x + 1);
    const long n = std::stol(rest, &used);
    if (used != rest.size()) throw std::invalid_argument(text);
    if (m < 1 || n < 1) throw std::invalid_argument(text);
    return {m, n};
  } catch (const std::logic_error&) {
    throw UsageError("--grid expects MxN with M, N >= 1, got '" + text + "'");
  }
}

SdReport compare_grids(const LatticeFixation& a, const LatticeFixation& b) {
  SdReport r;
  for (const auto& [mn, point] : a.grid) {
    ++r.checked_pairs;
    const auto it = b.grid.find(mn);
    const std::string at = std::to_string(mn.first) + "," + std::to_string(mn.second);
    if (it == b.grid.end()) {
      r.add_violation({"order_missing", at, "", format_quadratic(point.value), "absent"});
    } else if (!(it->second.value == point.value)) {
      r.add_violation({"order_mismatch", at, "", format_quadratic(point.value), format_quadratic(it->second.value)});
    }
  }
  if (a.grid.size() != b.grid.size())
    r.add_violation({"order_size", std::to_string(a.grid.size()), "", std::to_string(a.grid.size()),
                     std::to_string(b.grid.size())});
  return r;
}

Outcome run_verify_quad(const Settings& s) {
  const Rational d = Rational::parse(s.d);
  if (const auto v = validate_d(d); !v.accepted) throw UsageError("--d " + s.d + " rejected: " + v.reason);
  const auto [m_bound, n_bound] = parse_grid(s.grid);
  if (s.quad_samples < 1) throw UsageError("--samples must be positive");
  std::vector<QuadMap> maps;
  if (s.map == "both") {
    maps = {QuadMap::identity, QuadMap::conjugation};
  } else {
    maps = {parse_quad_map(s.map)};
  }

  Outcome o;
  o.body["d"] = d.to_string();
  Json per_map = Json::array();
  for (QuadMap which : maps) {
    const std::string name = to_string(which);
    const auto sd = verify_automorphism_sd(d, which, s.quad_samples, s.seed);
    const auto rows = lattice_fix(d, which, m_bound, n_bound, LatticeOrder::row_major);
    const auto cols = lattice_fix(d, which, m_bound, n_bound, LatticeOrder::column_major);
    const auto order = compare_grids(rows, cols);
    o.add(name + " SD on samples", sd);
    o.add(name + " lattice " + s.grid, rows.report);
    o.add(name + " lattice (column-major)", cols.report);
    o.add(name + " lattice order independence", order);
    per_map.push_back({{"map", name},
                       {"sd", to_json(sd)},
                       {"lattice", to_json(rows, true)},
                       {"lattice_column_major", to_json(cols, false)},
                       {"order_independence", to_json(order)}});
  }
  o.body["maps"] = std::move(per_map);

  const QuadraticField field(d);
  SampleRng rng(s.seed);
  std::vector<QuadraticElement> sample;
  for (const auto& z : sample_elements(field, rng, s.quad_samples))
    if (!z.is_zero()) sample.push_back(z);
  Json cases = Json::object();
  Json contradictions = Json::object();
  for (SignCase c : {SignCase::plus, SignCase::minus}) {
    const auto q = quotient_case_formulas(d, c, sample);
    cases[to_string(c)] = to_json(q);
    o.add("quotient case " + to_string(c), q);
    const auto contra = sign_contradiction(d, c);
    contradictions[to_string(c)] = to_json(contra);
    o.add("sign contradiction " + to_string(c), contra.report);
  }
  o.body["quotient_cases"] = std::move(cases);
  o.body["sign_contradiction"] = std::move(contradictions);
  return o;
}

// ------------------------------------------------------------ verify-complex

Outcome run_verify_complex(const Settings& s) {
  if (!(s.tol > 0) || !std::isfinite(s.tol)) throw UsageError("--tol must be a positive number");
  if (s.complex_samples < 1) throw UsageError("--samples must be positive");
  const auto suite = verify_complex(s.tol, s.complex_samples, s.seed);
  Outcome o;
  o.body["tolerance"] = s.tol;
  o.body["samples"] = s.complex_samples;
  o.body["suite"] = to_json(suite);
  o.add("identity SD", suite.identity_sd);
  o.add("conjugation SD", suite.conjugation_sd);
  o.add("identity z/zbar", suite.identity_quotient);
  o.add("conjugation z/zbar", suite.conjugation_quotient);
  o.add("half-angle", suite.half_angle);
  o.add("spot checks", suite.spot_checks);
  return o;
}

// ------------------------------------------------------------ ap-demo

template <FieldCarrier F>
void run_progression(const F& field, const typename F::element_type& a, const typename F::element_type& step,
                     long steps, ApOrder order, ZeroTermPolicy on_zero, Outcome& o) {
  o.body["field"] = field.name();
  o.body["a"] = field.format(a);
  o.body["d"] = field.format(step);
  try {
    const auto result = ap_propagate(field, identity_map(field), a, step, steps, order, on_zero);
    Json terms = Json::array();
    for (const auto& t : result.terms) {
      terms.push_back({{"k", t.k}, {"value", field.format(t.value)}, {"move", t.move}, {"ratio", field.format(t.ratio)}});
      o.lines.push_back("  k=" + std::to_string(t.k) + " " + field.format(t.value) + " (" + t.move + ")");
    }
    o.body["terms"] = std::move(terms);
    if (result.forward_stop) o.body["forward_stop"] = *result.forward_stop;
    if (result.backward_stop) o.body["backward_stop"] = *result.backward_stop;
    o.body["report"] = to_json(result.report);
    o.add("progression", result.report);
  } catch (const ZeroTermEncountered& e) {
    SdReport r;
    r.add_violation({"zero_term", std::to_string(e.k()), "", "0", "nonzero"});
    r.note(std::string("ZeroTermEncountered: ") + e.what());
    o.body["zero_term"] = e.k();
    o.body["report"] = to_json(r);
    o.add("progression", r);
  }
}

Outcome run_ap_demo(const Settings& s) {
  if (s.ap_steps < 1) throw UsageError("--steps must be positive");
  ApOrder order;
  if (s.ap_order == "forward-then-backward") {
    order = ApOrder::forward_then_backward;
  } else if (s.ap_order == "interleaved") {
    order = ApOrder::interleaved;
  } else {
    throw UsageError("--order must be forward-then-backward or interleaved");
  }
  const ZeroTermPolicy on_zero = s.ap_on_zero == "stop" ? ZeroTermPolicy::stop : ZeroTermPolicy::raise;
  Outcome o;
  const bool quadratic =
      s.ap_a.find("sqrt") != std::string::npos || s.ap_d.find("sqrt") != std::string::npos;
  if (quadratic) {
    const std::string& literal = s.ap_a.find("sqrt") != std::string::npos ? s.ap_a : s.ap_d;
    const QuadraticField field(parse_quadratic(literal).d);
    run_progression(field, field.parse(s.ap_a), field.parse(s.ap_d), s.ap_steps, order, on_zero, o);
  } else {
    const RationalField field;
    run_progression(field, field.parse(s.ap_a), field.parse(s.ap_d), s.ap_steps, order, on_zero, o);
  }
  return o;
}

// ------------------------------------------------------------ counterexamples

// A negative control passes when check_sd rejects the map; the first
// violation is kept as the witness.
SdReport expect_rejection(const SdReport& checked, Json& witness) {
  SdReport r;
  r.checked_pairs = checked.checked_pairs;
  if (checked.violations.empty()) {
    r.add_violation({"control_accepted", "", "", to_string(checked.status), "fail"});
    witness = nullptr;
  } else {
    witness = violation_json(checked.violations.front());
    r.note("rejected at " + checked.violations.front().x + ", " + checked.violations.front().y);
  }
  return r;
}

Outcome run_counterexamples(const Settings& s) {
  for (long long k : s.ks)
    if (k < 2 || k > 64) throw UsageError("--k values must be in [2, 64]");
  if (s.ce_samples < 1) throw UsageError("--samples must be positive");

  Outcome o;
  SampleRng rng(s.seed);
  const FunctionField ff;
  const auto pairs = sample_pairs(ff, rng, s.ce_samples);
  const RationalFunction x = RationalFunction::variable();
  Json endos = Json::array();
  for (long long k : s.ks) {
    const auto ku = static_cast<unsigned>(k);
    const SdCandidate<FunctionField> fk{"f_" + std::to_string(k),
                                        [ku](const RationalFunction& g) { return qpi_endomorphism(ku, g); }};
    const auto sd = check_sd(ff, fk, pairs);
    const auto image = qpi_in_image(ku, x);
    SdReport surj;
    ++surj.checked_pairs;
    std::string witness;
    if (image.in_image) {
      surj.add_violation({"surjective", "x", "", "in image", "not in image"});
    } else {
      witness = "x not in image of f_" + std::to_string(k);
      surj.note(witness + ": exponent " + std::to_string(image.witness_exponent) + " of the " +
                image.witness_part + " is not a multiple of " + std::to_string(k));
    }
    endos.push_back({{"k", k},
                     {"sd", to_json(sd)},
                     {"image", {{"in_image", image.in_image},
                                {"witness", witness},
                                {"witness_exponent", image.witness_exponent},
                                {"witness_part", image.witness_part}}}});
    o.add("f_" + std::to_string(k) + " on Q(x)", sd);
    o.add("f_" + std::to_string(k) + " not surjective", surj);
  }
  o.body["endomorphisms"] = std::move(endos);

  // x -> x^3 on F_5: SD but not additive.
  {
    const auto verdict = is_sd_power_map(5, 3);
    const auto table = power_map_table(5, 3);
    SdReport r;
    r.checked_pairs = 5 * 4;
    if (!verdict.pass) {
      const auto& w = *verdict.witness;
      r.add_violation({"sd", std::to_string(w.x), std::to_string(w.y), std::to_string(w.lhs), std::to_string(w.rhs)});
    }
    Json additivity = nullptr;
    for (std::uint32_t a = 0; a < 5 && additivity.is_null(); ++a)
      for (std::uint32_t b = 0; b < 5 && additivity.is_null(); ++b)
        if (table[(a + b) % 5] != (table[a] + table[b]) % 5)
          additivity = {{"x", a}, {"y", b}, {"f(x+y)", table[(a + b) % 5]}, {"f(x)+f(y)", (table[a] + table[b]) % 5}};
    if (additivity.is_null()) r.add_violation({"additive", "", "", "additive", "not additive"});
    o.body["f5_cube"] = {{"table", table}, {"report", to_json(r)}, {"not_additive", additivity}};
    o.add("x^3 on F_5 is SD and not additive", r);
  }

  Json controls = Json::array();
  const RationalField qf;
  const auto qpairs = sample_pairs(qf, rng, s.ce_samples);
  const std::vector<SdCandidate<RationalField>> q_controls = {
      {"x^2", [](const Rational& v) { return v * v; }},
      {"x+1", [](const Rational& v) { return v + Rational(1); }},
  };
  for (const auto& c : q_controls) {
    Json witness;
    const auto r = expect_rejection(check_sd(qf, c, qpairs), witness);
    controls.push_back({{"map", c.name}, {"field", "Q"}, {"rejected", r.passed()}, {"witness", witness}});
    o.add("control " + c.name + " rejected", r);
  }
  {
    const auto verdict = is_sd_power_map(7, 5);
    SdReport r;
    r.checked_pairs = 7 * 6;
    Json witness = nullptr;
    if (verdict.pass) {
      r.add_violation({"control_accepted", "x^5", "", "pass", "fail"});
    } else {
      const auto& w = *verdict.witness;
      witness = {{"x", w.x}, {"y", w.y}, {"lhs", w.lhs}, {"rhs", w.rhs}, {"injectivity", w.injectivity}};
      r.note("rejected at (" + std::to_string(w.x) + ", " + std::to_string(w.y) + "): lhs " + std::to_string(w.lhs) +
             " vs rhs " + std::to_string(w.rhs));
    }
    controls.push_back({{"map", "x^5"}, {"field", "F_7"}, {"rejected", r.passed()}, {"witness", witness}});
    o.add("control x^5 on F_7 rejected", r);
  }
  o.body["negative_controls"] = std::move(controls);
  return o;
}

// ------------------------------------------------------------ config handling

bool has_flag(const std::vector<std::string>& args, const std::string& key) {
  const std::string flag = "--" + key;
  return std::any_of(args.begin(), args.end(),
                     [&](const std::string& a) { return a == flag || a.rfind(flag + "=", 0) == 0; });
}

std::optional<std::string> config_path_of(const std::vector<std::string>& args) {
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (args[i] == "--config" && i + 1 < args.size()) return args[i + 1];
    if (args[i].rfind("--config=", 0) == 0) return args[i].substr(9);
  }
  return std::nullopt;
}

// Index of the subcommand, skipping values of global options.
std::optional<std::size_t> command_index(const std::vector<std::string>& args) {
  for (std::size_t i = 0; i < args.size(); ++i) {
    const auto& a = args[i];
    if (std::find(kCommands.begin(), kCommands.end(), a) != kCommands.end()) return i;
    if (a.size() > 2 && a.rfind("--", 0) == 0 && a.find('=') == std::string::npos &&
        std::find(kGlobalKeys.begin(), kGlobalKeys.end(), a.substr(2)) != kGlobalKeys.end())
      ++i;
  }
  return std::nullopt;
}

// Splices key=value settings from the config file into the argument list.
// Keys already given on the command line are left alone. Top-level keys that
// belong to another command are skipped; keys no command knows are errors.
std::vector<std::string> apply_config(std::vector<std::string> args, CLI::App& app) {
  const auto path = config_path_of(args);
  if (!path) return args;
  const auto cmd = command_index(args);
  if (!cmd) return args;
  const std::string command = args[*cmd];

  std::vector<CLI::ConfigItem> items;
  try {
    items = CLI::ConfigINI().from_file(*path);
  } catch (const CLI::Error& e) {
    throw UsageError("cannot read config file " + *path + ": " + e.what());
  }
  std::vector<std::string> global, local;
  CLI::App* sub = app.get_subcommand(command);
  for (const auto& item : items) {
    // CLI11 marks section boundaries with "++" and "--" items.
    if (item.name.empty() || item.name == "++" || item.name == "--") continue;
    if (!item.parents.empty() && item.parents.front() != command) continue;
    if (item.name == "config" || has_flag(args, item.name)) continue;
    const std::string flag = "--" + item.name;
    const bool known_here = sub->get_option_no_throw(flag) != nullptr;
    const bool is_global_key =
        std::find(kGlobalKeys.begin(), kGlobalKeys.end(), item.name) != kGlobalKeys.end();
    if (!known_here && !is_global_key) {
      const bool known_elsewhere = std::any_of(kCommands.begin(), kCommands.end(), [&](const std::string& c) {
        return app.get_subcommand(c)->get_option_no_throw(flag) != nullptr;
      });
      if (known_elsewhere && item.parents.empty()) continue;
      throw UsageError("unknown config key '" + item.fullname() + "' for " + command);
    }
    std::string value;
    for (const auto& in : item.inputs) value += (value.empty() ? "" : ",") + in;
    auto& dst = is_global_key ? global : local;
    dst.push_back(flag);
    dst.push_back(value);
  }
  args.insert(args.begin() + static_cast<long>(*cmd) + 1, local.begin(), local.end());
  args.insert(args.begin() + static_cast<long>(*cmd), global.begin(), global.end());
  return args;
}

int exit_for(const Outcome& o, Status status) {
  if (o.exit_floor != kExitPass) return o.exit_floor;
  return status == Status::pass ? kExitPass : kExitMath;
}

}  // namespace

Json strip_stats(const Json& payload) {
  if (payload.is_object()) {
    Json out = Json::object();
    for (auto it = payload.begin(); it != payload.end(); ++it)
      if (it.key() != "stats") out[it.key()] = strip_stats(it.value());
    return out;
  }
  if (payload.is_array()) {
    Json out = Json::array();
    for (const auto& v : payload) out.push_back(strip_stats(v));
    return out;
  }
  return payload;
}

int run_cli(const std::vector<std::string>& raw_args, std::ostream& out, std::ostream& err) {
  Settings s;
  CLI::App app{"Verification suites and finite-field classification for SD maps", "sdmaps"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--seed", s.seed, "Seed for every sampled input");
  app.add_option("--json", s.json_path, "Write the JSON report to this path");
  app.add_option("--format", s.format, "Output on stdout")->check(CLI::IsMember({"json", "text"}));
  app.add_option("--config", s.config_path, "key=value file; command-line flags take precedence");

  auto* sym = app.add_subcommand("verify-symbolic", "Symbolic values, the constraint on f(2), and f(n) = n");
  sym->add_option("--max-n", s.max_n, "Upper bound for the integer induction");
  sym->add_option("--symbolic-n", s.symbolic_n, "Number of symbolic values beyond f(0)");

  auto* cls = app.add_subcommand("classify", "Classify SD maps on F_p");
  cls->add_option("--primes", s.primes, "Comma-separated primes")->delimiter(',')->required();
  cls->add_option("--max-oracle-tier", s.oracle_tier)
      ->check(CLI::IsMember({"auto", "none", "constrained", "all-maps"}));
  cls->add_option("--max-prime", s.max_prime);

  auto* quad = app.add_subcommand("verify-quad", "Quadratic field suite");
  quad->add_option("--d", s.d, "Non-square rational d");
  quad->add_option("--map", s.map)->check(CLI::IsMember({"id", "identity", "conj", "conjugation", "both"}));
  quad->add_option("--grid", s.grid, "Lattice bounds MxN");
  quad->add_option("--samples", s.quad_samples);

  auto* cx = app.add_subcommand("verify-complex", "Numerical checks on approximate complex numbers");
  cx->add_option("--tol", s.tol, "Mixed absolute/relative tolerance");
  cx->add_option("--samples", s.complex_samples);

  auto* ap = app.add_subcommand("ap-demo", "Propagate fixed points along a + k*d under the identity");
  ap->add_option("--a", s.ap_a, "First term (rational or a+b*sqrt(d))");
  ap->add_option("--d", s.ap_d, "Common difference");
  ap->add_option("--steps", s.ap_steps);
  ap->add_option("--order", s.ap_order)->check(CLI::IsMember({"forward-then-backward", "interleaved"}));
  ap->add_option("--on-zero", s.ap_on_zero, "raise: a zero term is an error; stop: end that sweep at it")
      ->check(CLI::IsMember({"raise", "stop"}));

  auto* ce = app.add_subcommand("counterexamples", "Non-surjective SD maps and negative controls");
  ce->add_option("--k", s.ks, "Comma-separated exponents")->delimiter(',');
  ce->add_option("--samples", s.ce_samples);

  std::string command;
  try {
    auto args = apply_config(raw_args, app);
    std::reverse(args.begin(), args.end());
    app.parse(args);
    command = app.get_subcommands().front()->get_name();
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitPass;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitPass;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  const auto start = std::chrono::steady_clock::now();
  Outcome o;
  try {
    if (command == "verify-symbolic") o = run_verify_symbolic(s);
    else if (command == "classify") o = run_classify(s);
    else if (command == "verify-quad") o = run_verify_quad(s);
    else if (command == "verify-complex") o = run_verify_complex(s);
    else if (command == "ap-demo") o = run_ap_demo(s);
    else o = run_counterexamples(s);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const PreconditionError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const NotPrime& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const FieldMismatch& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const InternalInconsistency& e) {
    err << "internal inconsistency: " << e.what() << "\n";
    return kExitInternal;
  } catch (const Error& e) {
    err << "failure: " << e.what() << "\n";
    return kExitMath;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kExitInternal;
  }
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

  Status status = Status::pass;
  Json summary = Json::array();
  for (const auto& [title, report] : o.sections) {
    if (report.status == Status::error) status = Status::error;
    else if (report.status == Status::fail && status == Status::pass) status = Status::fail;
    summary.push_back({{"check", title}, {"status", to_string(report.status)}});
  }
  if (o.exit_floor != kExitPass && status == Status::pass) status = Status::error;

  Json payload;
  payload["command"] = command;
  payload["seed"] = s.seed;
  payload["status"] = to_string(status);
  payload["checks"] = std::move(summary);
  for (auto it = o.body.begin(); it != o.body.end(); ++it) payload[it.key()] = it.value();
  payload["stats"] = {{"wall_seconds", seconds}};

  if (!s.json_path.empty()) {
    std::ofstream file(s.json_path);
    if (!file) {
      err << "error: cannot write " << s.json_path << "\n";
      return kExitUsage;
    }
    file << payload.dump(2) << "\n";
  }
  if (s.format == "json") {
    out << payload.dump(2) << "\n";
  } else {
    out << command << ": " << to_string(status) << "\n";
    for (const auto& line : o.lines) out << line << "\n";
    for (const auto& [title, report] : o.sections) out << to_text(report, title);
  }
  for (const auto& [title, report] : o.sections)
    if (report.status == Status::error) err << title << ": " << report.notes << "\n";
  return exit_for(o, status);
}

}  // namespace sdmaps
