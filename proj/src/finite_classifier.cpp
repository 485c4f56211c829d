#include "sdmaps/finite_classifier.hpp"

#include <algorithm>
#include <chrono>
#include <numeric>

#include "sdmaps/errors.hpp"
#include "sdmaps/fields.hpp"
#include "sdmaps/sampling.hpp"
#include "sdmaps/sd_core.hpp"

namespace sdmaps {

std::string to_string(Provenance p) {
  switch (p) {
    case Provenance::all_maps_oracle:
      return "all_maps_oracle";
    case Provenance::constrained_oracle:
      return "constrained_oracle";
    case Provenance::power_map:
      return "power_map";
  }
  return "power_map";
}

std::string to_string(OracleTier t) {
  switch (t) {
    case OracleTier::none:
      return "none";
    case OracleTier::constrained:
      return "constrained";
    case OracleTier::all_maps:
      return "all-maps";
  }
  return "none";
}

OracleTier parse_oracle_tier(const std::string& text) {
  if (text == "none") return OracleTier::none;
  if (text == "constrained") return OracleTier::constrained;
  if (text == "all-maps" || text == "all_maps") return OracleTier::all_maps;
  throw ParseError("unknown oracle tier '" + text + "'");
}

namespace {

using Clock = std::chrono::steady_clock;

void require_odd_prime(long long p) {
  if (p == 2) throw NotPrime("2 is excluded: characteristic 2");
  if (p < 2 || p > static_cast<long long>(PrimeField::kMaxPrime) ||
      !is_prime(static_cast<std::uint64_t>(p)))
    throw NotPrime(p);
}

std::vector<std::uint32_t> inverse_table(std::uint32_t p) {
  std::vector<std::uint32_t> inv(p, 0);
  if (p > 1) inv[1] = 1;
  for (std::uint64_t i = 2; i < p; ++i)
    inv[i] = static_cast<std::uint32_t>((p - (p / i) * inv[p % i] % p) % p);
  return inv;
}

// Shared pair loop; inv is the table of inverses mod p.
std::optional<PairWitness> scan_pairs(std::uint32_t p, const std::vector<std::uint32_t>& inv,
                                      const std::vector<std::uint32_t>& t, std::uint64_t& pairs) {
  const std::uint64_t pp = p;
  for (std::uint32_t y = 0; y < p; ++y) {
    const std::uint64_t fy = t[y];
    for (std::uint32_t x = 0; x < p; ++x) {
      if (x == y) continue;
      ++pairs;
      const std::uint64_t fx = t[x];
      if (fx == fy) return PairWitness{x, y, static_cast<std::uint32_t>(fx), 0, true};
      const std::uint64_t sum = (x + static_cast<std::uint64_t>(y)) % pp;
      const std::uint64_t diff = (x + pp - y) % pp;
      const std::uint64_t lhs = t[sum * inv[diff] % pp];
      const std::uint64_t rhs = (fx + fy) % pp * inv[(fx + pp - fy) % pp] % pp;
      if (lhs != rhs)
        return PairWitness{x, y, static_cast<std::uint32_t>(lhs), static_cast<std::uint32_t>(rhs), false};
    }
  }
  return std::nullopt;
}

std::optional<std::uint32_t> matching_power(std::uint32_t p, const std::vector<std::uint32_t>& table) {
  for (std::uint32_t k : power_map_candidates(p))
    if (power_map_table(p, k) == table) return k;
  return std::nullopt;
}

void finalize(ClassificationResult& r) {
  std::sort(r.sd_maps.begin(), r.sd_maps.end(),
            [](const FpMap& a, const FpMap& b) {
              const auto ka = a.k.value_or(UINT32_MAX), kb = b.k.value_or(UINT32_MAX);
              return ka != kb ? ka < kb : a.table < b.table;
            });
  r.sd_maps.erase(std::unique(r.sd_maps.begin(), r.sd_maps.end()), r.sd_maps.end());
}

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

}  // namespace

std::optional<PairWitness> find_sd_violation(std::uint32_t p, const std::vector<std::uint32_t>& table,
                                             std::uint64_t* pairs_checked) {
  if (table.size() != p) throw PreconditionError("table size differs from p");
  for (auto v : table)
    if (v >= p) throw PreconditionError("table entry out of range");
  std::uint64_t pairs = 0;
  auto w = scan_pairs(p, inverse_table(p), table, pairs);
  if (pairs_checked) *pairs_checked += pairs;
  return w;
}

ClassificationResult oracle_all_maps(std::uint32_t p) {
  require_odd_prime(p);
  if (p > kAllMapsBudget)
    throw BudgetExceeded("all-maps oracle limited to p <= " + std::to_string(kAllMapsBudget));
  const auto start = Clock::now();
  ClassificationResult r;
  r.p = p;
  r.method = to_string(Provenance::all_maps_oracle);
  r.methods_run = {r.method};
  const auto inv = inverse_table(p);
  std::vector<std::uint32_t> t(p, 0);
  for (;;) {
    ++r.stats.candidates_examined;
    if (!scan_pairs(p, inv, t, r.stats.pairs_checked))
      r.sd_maps.push_back({p, t, Provenance::all_maps_oracle, matching_power(p, t)});
    // Odometer over all p^p tables.
    std::size_t i = 0;
    while (i < p && ++t[i] == p) t[i++] = 0;
    if (i == p) break;
  }
  finalize(r);
  r.stats.wall_seconds = seconds_since(start);
  return r;
}

ClassificationResult oracle_constrained(std::uint32_t p) {
  require_odd_prime(p);
  if (p > kConstrainedBudget)
    throw BudgetExceeded("constrained oracle limited to p <= " + std::to_string(kConstrainedBudget));
  const auto start = Clock::now();
  ClassificationResult r;
  r.p = p;
  r.method = to_string(Provenance::constrained_oracle);
  r.methods_run = {r.method};
  const auto inv = inverse_table(p);
  std::vector<std::uint32_t> free_values;
  for (std::uint32_t v = 2; v + 1 < p; ++v) free_values.push_back(v);
  std::vector<std::uint32_t> t(p);
  t[0] = 0;
  t[1] = 1;
  t[p - 1] = p - 1;
  do {
    std::copy(free_values.begin(), free_values.end(), t.begin() + 2);
    ++r.stats.candidates_examined;
    if (!scan_pairs(p, inv, t, r.stats.pairs_checked))
      r.sd_maps.push_back({p, t, Provenance::constrained_oracle, matching_power(p, t)});
  } while (std::next_permutation(free_values.begin(), free_values.end()));
  finalize(r);
  r.stats.wall_seconds = seconds_since(start);
  return r;
}

std::vector<std::uint32_t> power_map_candidates(std::uint32_t p) {
  require_odd_prime(p);
  std::vector<std::uint32_t> ks;
  for (std::uint32_t k = 1; k < p - 1; k += 2)
    if (std::gcd(k, p - 1) == 1) ks.push_back(k);
  return ks;
}

std::vector<std::uint32_t> power_map_table(std::uint32_t p, std::uint32_t k) {
  std::vector<std::uint32_t> t(p);
  for (std::uint32_t x = 0; x < p; ++x) t[x] = static_cast<std::uint32_t>(mod_pow(x, k, p));
  if (k == 0) t[0] = 0;
  return t;
}

PowerMapVerdict is_sd_power_map(std::uint32_t p, std::uint32_t k) {
  const auto ks = power_map_candidates(p);
  if (std::find(ks.begin(), ks.end(), k) == ks.end())
    throw PreconditionError("k = " + std::to_string(k) + " is not a power-map candidate for p = " +
                            std::to_string(p));
  std::uint64_t pairs = 0;
  auto w = scan_pairs(p, inverse_table(p), power_map_table(p, k), pairs);
  return {!w.has_value(), w};
}

ClassificationResult classify(std::uint32_t p, const ClassifyOptions& options) {
  require_odd_prime(p);
  if (p > options.max_prime)
    throw PreconditionError("p = " + std::to_string(p) + " exceeds max prime " + std::to_string(options.max_prime));
  const auto start = Clock::now();

  ClassificationResult r;
  r.p = p;
  const auto inv = inverse_table(p);
  for (std::uint32_t k : power_map_candidates(p)) {
    auto table = power_map_table(p, k);
    ++r.stats.candidates_examined;
    if (!scan_pairs(p, inv, table, r.stats.pairs_checked))
      r.sd_maps.push_back({p, std::move(table), Provenance::power_map, k});
  }
  finalize(r);
  r.method = to_string(Provenance::power_map);
  r.methods_run = {r.method};

  OracleTier affordable = OracleTier::none;
  if (p <= kAllMapsBudget) {
    affordable = OracleTier::all_maps;
  } else if (p <= kConstrainedBudget) {
    affordable = OracleTier::constrained;
  }
  const OracleTier tier = options.max_oracle_tier ? std::min(affordable, *options.max_oracle_tier) : affordable;
  if (tier != OracleTier::none) {
    ClassificationResult oracle = tier == OracleTier::all_maps ? oracle_all_maps(p) : oracle_constrained(p);
    if (oracle.sd_maps != r.sd_maps) {
      throw InternalInconsistency("p = " + std::to_string(p) + ": " + oracle.method + " found " +
                                  std::to_string(oracle.sd_maps.size()) + " maps, power-map search found " +
                                  std::to_string(r.sd_maps.size()));
    }
    r.stats.candidates_examined += oracle.stats.candidates_examined;
    r.stats.pairs_checked += oracle.stats.pairs_checked;
    r.sd_maps = std::move(oracle.sd_maps);
    r.method = oracle.method;
    r.methods_run.push_back(oracle.method);
  }

  if (p <= options.reverify_limit) {
    const PrimeField field(p);
    const auto pairs = all_ordered_pairs(field);
    for (const FpMap& m : r.sd_maps) {
      const SdCandidate<PrimeField> f{"table", [&m, &field](const PrimeFieldElement& x) {
                                        return field.make(m.table[x.value]);
                                      }};
      const SdReport rep = check_sd(field, f, pairs);
      r.stats.pairs_checked += rep.checked_pairs;
      if (!rep.passed()) throw InternalInconsistency("p = " + std::to_string(p) + ": reported map fails re-verification");
    }
    r.methods_run.push_back("reverified");
  }
  r.stats.wall_seconds = seconds_since(start);
  return r;
}

std::vector<ClassificationOutcome> classify_range(const std::vector<long long>& primes,
                                                  const ClassifyOptions& options) {
  std::vector<ClassificationOutcome> out;
  out.reserve(primes.size());
  for (long long p : primes) {
    try {
      require_odd_prime(p);
      out.emplace_back(classify(static_cast<std::uint32_t>(p), options));
    } catch (const NotPrime& e) {
      out.emplace_back(ClassificationError{p, "not_prime", e.what()});
    } catch (const InternalInconsistency& e) {
      out.emplace_back(ClassificationError{p, "internal_inconsistency", e.what()});
    } catch (const BudgetExceeded& e) {
      out.emplace_back(ClassificationError{p, "budget_exceeded", e.what()});
    } catch (const Error& e) {
      out.emplace_back(ClassificationError{p, "precondition", e.what()});
    }
  }
  return out;
}

Json to_json(const ClassificationResult& r) {
  Json j;
  j["p"] = r.p;
  Json maps = Json::array();
  for (const auto& m : r.sd_maps) {
    Json e;
    if (m.k) {
      e["k"] = *m.k;
    } else {
      e["table"] = m.table;
    }
    e["provenance"] = to_string(m.provenance);
    maps.push_back(std::move(e));
  }
  j["maps"] = std::move(maps);
  j["count"] = r.sd_maps.size();
  j["method"] = r.method;
  j["methods_run"] = r.methods_run;
  j["stats"] = {{"candidates_examined", r.stats.candidates_examined},
                {"pairs_checked", r.stats.pairs_checked},
                {"wall_seconds", r.stats.wall_seconds}};
  return j;
}

Json to_json(const ClassificationError& e) {
  return {{"p", e.p}, {"error", e.kind}, {"message", e.message}};
}

}  // namespace sdmaps
