#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "sdmaps/sd_report.hpp"

namespace sdmaps {

enum class Provenance { all_maps_oracle, constrained_oracle, power_map };
std::string to_string(Provenance p);

// A total map on F_p given by its value table: table[x] = f(x).
struct FpMap {
  std::uint32_t p = 0;
  std::vector<std::uint32_t> table;
  Provenance provenance = Provenance::power_map;
  // Exponent when the map is x -> x^k (always set for power-map results;
  // oracle results get it filled in when the table matches a power map).
  std::optional<std::uint32_t> k;

  friend bool operator==(const FpMap& a, const FpMap& b) { return a.p == b.p && a.table == b.table; }
};

// Strongest method run, ordered weakest to strongest.
enum class OracleTier { none, constrained, all_maps };
std::string to_string(OracleTier t);
// "none", "constrained", "all-maps"; "auto" is handled by the caller.
OracleTier parse_oracle_tier(const std::string& text);

inline constexpr std::uint32_t kAllMapsBudget = 7;
inline constexpr std::uint32_t kConstrainedBudget = 13;
inline constexpr std::uint32_t kDefaultMaxPrime = 10007;

struct ClassificationStats {
  std::uint64_t candidates_examined = 0;
  std::uint64_t pairs_checked = 0;
  double wall_seconds = 0.0;
};

struct ClassificationResult {
  std::uint32_t p = 0;
  std::vector<FpMap> sd_maps;  // sorted by k (non-power maps last, by table), deduplicated
  std::string method;          // strongest method used
  std::vector<std::string> methods_run;
  ClassificationStats stats;
};

// Every ordered pair x != y, y-major: f(x) != f(y) and the SD equation holds.
// On failure returns the first offending pair.
struct PairWitness {
  std::uint32_t x = 0, y = 0;
  std::uint32_t lhs = 0, rhs = 0;
  bool injectivity = false;  // f(x) == f(y); rhs is meaningless then
};
std::optional<PairWitness> find_sd_violation(std::uint32_t p, const std::vector<std::uint32_t>& table,
                                             std::uint64_t* pairs_checked = nullptr);

// Brute force over all p^p maps. Requires p in {3, 5, 7}; otherwise
// BudgetExceeded (NotPrime for composites).
ClassificationResult oracle_all_maps(std::uint32_t p);

// Permutations fixing 0, 1 and p-1. Requires p <= 13.
ClassificationResult oracle_constrained(std::uint32_t p);

// Odd k in [1, p-1) with gcd(k, p-1) = 1, ascending.
std::vector<std::uint32_t> power_map_candidates(std::uint32_t p);

struct PowerMapVerdict {
  bool pass = false;
  std::optional<PairWitness> witness;
};
// Exhaustive check of x -> x^k over all p(p-1) ordered pairs.
PowerMapVerdict is_sd_power_map(std::uint32_t p, std::uint32_t k);

// Table of x -> x^k on F_p.
std::vector<std::uint32_t> power_map_table(std::uint32_t p, std::uint32_t k);

struct ClassifyOptions {
  // Strongest oracle tier allowed; nullopt = choose automatically from budgets.
  std::optional<OracleTier> max_oracle_tier;
  std::uint32_t max_prime = kDefaultMaxPrime;
  // Results for p up to this bound are re-verified through the generic
  // field-level SD checker.
  std::uint32_t reverify_limit = 1000;
};

// Power-map search, cross-checked against the strongest affordable oracle.
// Throws NotPrime, PreconditionError (p > max_prime), InternalInconsistency
// (oracle and search disagree, or a reported map fails re-verification).
ClassificationResult classify(std::uint32_t p, const ClassifyOptions& options = {});

struct ClassificationError {
  long long p = 0;
  std::string kind;  // "not_prime", "precondition", "internal_inconsistency", ...
  std::string message;
};

using ClassificationOutcome = std::variant<ClassificationResult, ClassificationError>;

// Independent classifications in input order; errors are collected per entry.
std::vector<ClassificationOutcome> classify_range(const std::vector<long long>& primes,
                                                  const ClassifyOptions& options = {});

// {p, maps: [{k?, table, provenance}], method, methods_run, stats: {...}}
Json to_json(const ClassificationResult& r);
Json to_json(const ClassificationError& e);

}  // namespace sdmaps
