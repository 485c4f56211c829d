#include <doctest.h>

#include <numeric>
#include <set>

#include "sdmaps/errors.hpp"
#include "sdmaps/finite_classifier.hpp"

using namespace sdmaps;

namespace {

// Independent SD test on F_p: inverses by search, every ordered pair.
bool naive_is_sd(std::uint32_t p, const std::vector<std::uint32_t>& f) {
  const auto inv = [p](std::uint64_t x) {
    for (std::uint64_t y = 1; y < p; ++y)
      if (x * y % p == 1) return y;
    return std::uint64_t{0};
  };
  for (std::uint64_t x = 0; x < p; ++x)
    for (std::uint64_t y = 0; y < p; ++y) {
      if (x == y) continue;
      if (f[x] == f[y]) return false;
      const std::uint64_t q = (x + y) % p * inv((x + p - y) % p) % p;
      const std::uint64_t rhs = (f[x] + f[y]) % p * inv((f[x] + p - f[y]) % p) % p;
      if (f[q] != rhs) return false;
    }
  return true;
}

std::vector<std::uint32_t> naive_power(std::uint32_t p, std::uint32_t k) {
  std::vector<std::uint32_t> t(p);
  for (std::uint64_t x = 0; x < p; ++x) {
    std::uint64_t r = 1;
    for (std::uint32_t i = 0; i < k; ++i) r = r * x % p;
    t[x] = static_cast<std::uint32_t>(k == 0 ? 1 : r);
  }
  return t;
}

std::set<std::vector<std::uint32_t>> tables(const ClassificationResult& r) {
  std::set<std::vector<std::uint32_t>> out;
  for (const auto& m : r.sd_maps) out.insert(m.table);
  return out;
}

void check_invariants(const ClassificationResult& r) {
  const std::uint32_t p = r.p;
  bool has_identity = false;
  for (const auto& m : r.sd_maps) {
    REQUIRE(m.table.size() == p);
    CHECK(std::set<std::uint32_t>(m.table.begin(), m.table.end()).size() == p);
    CHECK(m.table[0] == 0);
    CHECK(m.table[1] == 1);
    CHECK(m.table[p - 1] == p - 1);
    for (std::uint64_t x = 1; x < p; ++x)
      for (std::uint64_t y = 1; y < p; ++y) CHECK(m.table[x * y % p] == std::uint64_t{m.table[x]} * m.table[y] % p);
    CHECK(naive_is_sd(p, m.table));
    bool identity = true;
    for (std::uint32_t x = 0; x < p; ++x) identity = identity && m.table[x] == x;
    has_identity = has_identity || identity;
  }
  CHECK(has_identity);
}

}  // namespace

TEST_CASE("power map tables and the SD test agree with naive versions") {
  for (std::uint32_t p : {3u, 5u, 7u, 11u, 13u, 17u, 19u, 23u, 29u, 31u}) {
    std::vector<std::uint32_t> expected;
    for (std::uint32_t k = 1; k < p - 1; k += 2)
      if (std::gcd(k, p - 1) == 1) expected.push_back(k);
    CHECK(power_map_candidates(p) == expected);
    for (std::uint32_t k : expected) {
      CHECK(power_map_table(p, k) == naive_power(p, k));
      CHECK(is_sd_power_map(p, k).pass == naive_is_sd(p, naive_power(p, k)));
    }
  }
  CHECK_THROWS(is_sd_power_map(7, 2));
}

TEST_CASE("x^3 on F_5 is SD; x^5 on F_7 fails at (2, 1)") {
  CHECK(is_sd_power_map(5, 3).pass);
  const auto v = is_sd_power_map(7, 5);
  CHECK_FALSE(v.pass);
  REQUIRE(v.witness.has_value());
  CHECK(v.witness->x == 2);
  CHECK(v.witness->y == 1);
  CHECK(v.witness->lhs == 5);
  CHECK(v.witness->rhs == 4);
  CHECK_FALSE(v.witness->injectivity);
  // Independently: (2+1)/(2-1) = 3, 3^5 = 243 = 5 mod 7; (32+1)/(32-1) = 33/31 = 5/3 = 4 mod 7.
  CHECK(naive_power(7, 5)[3] == 5);
}

TEST_CASE("classify(5) finds exactly the identity and the cube map") {
  const auto r = classify(5);
  REQUIRE(r.sd_maps.size() == 2);
  CHECK(r.sd_maps[0].k == 1u);
  CHECK(r.sd_maps[1].k == 3u);
  CHECK(r.method == "all_maps_oracle");
  CHECK(tables(r) == tables(oracle_all_maps(5)));
  check_invariants(r);
}

TEST_CASE("oracles and power-map search agree on small primes") {
  for (std::uint32_t p : {3u, 5u, 7u}) {
    const auto all = oracle_all_maps(p);
    const auto constrained = oracle_constrained(p);
    CHECK(tables(all) == tables(constrained));
    CHECK(tables(classify(p, {OracleTier::none})) == tables(all));
    check_invariants(all);
  }
  CHECK(classify(3).sd_maps.size() == 1);
  CHECK(classify(7).sd_maps.size() == 1);
  const auto c11 = classify(11);
  CHECK(tables(c11) == tables(oracle_constrained(11)));
  check_invariants(c11);
}

TEST_CASE("power-map search on larger primes satisfies the invariants") {
  for (std::uint32_t p : {17u, 19u, 23u, 101u, 1009u}) {
    const auto r = classify(p, {OracleTier::none});
    check_invariants(r);
    CHECK(r.method == "power_map");
  }
}

TEST_CASE("oracle budgets and preconditions") {
  CHECK_THROWS_AS(oracle_all_maps(11), BudgetExceeded);
  CHECK_THROWS_AS(oracle_constrained(17), BudgetExceeded);
  CHECK_THROWS_AS(classify(4), NotPrime);
  CHECK_THROWS_AS(classify(2), NotPrime);
  CHECK_THROWS_AS(classify(10009, {std::nullopt, 10007}), PreconditionError);
  CHECK(parse_oracle_tier("all-maps") == OracleTier::all_maps);
  CHECK_THROWS_AS(parse_oracle_tier("everything"), ParseError);
}

TEST_CASE("classify_range keeps input order and collects errors") {
  const auto out = classify_range({3, 4, 5, -7});
  REQUIRE(out.size() == 4);
  CHECK(std::get<ClassificationResult>(out[0]).p == 3);
  CHECK(std::get<ClassificationError>(out[1]).kind == "not_prime");
  CHECK(std::get<ClassificationResult>(out[2]).sd_maps.size() == 2);
  CHECK(std::get<ClassificationError>(out[3]).kind == "not_prime");
}

TEST_CASE("classification JSON lists maps by exponent with provenance") {
  const auto j = to_json(classify(5));
  CHECK(j["p"] == 5);
  CHECK(j["count"] == 2);
  CHECK(j["maps"][0]["k"] == 1);
  CHECK(j["maps"][1]["k"] == 3);
  CHECK(j.contains("stats"));
  CHECK(find_sd_violation(5, power_map_table(5, 3)) == std::nullopt);
}
