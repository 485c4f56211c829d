#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

namespace sdmaps {

using Json = nlohmann::ordered_json;

enum class Status { pass, fail, error };

std::string to_string(Status s);

// One failed check. For SD checks x != y and lhs/rhs are the two sides of the
// functional equation; rhs is "undefined" for an injectivity violation. Unary
// property checks leave y empty.
struct Violation {
  std::string kind;
  std::string x;
  std::string y;
  std::string lhs;
  std::string rhs;
  friend bool operator==(const Violation&, const Violation&) = default;
};

// Verdict of a verification run. status == fail iff violations is nonempty;
// error means the run could not be completed (notes say why).
struct SdReport {
  Status status = Status::pass;
  std::uint64_t checked_pairs = 0;
  std::vector<Violation> violations;
  std::string notes;

  bool passed() const { return status == Status::pass; }
  void add_violation(Violation v);
  void set_error(const std::string& why);
  void note(const std::string& text);
  // Folds another report in: counts add, violations append, worst status wins.
  void merge(const SdReport& other);
};

// {"status", "checked_pairs", "violations": [{kind, x, y, lhs, rhs}], "notes"}
Json to_json(const SdReport& r);
SdReport report_from_json(const Json& j);
std::string to_text(const SdReport& r, const std::string& title = {});

}  // namespace sdmaps
