#include "sdmaps/sd_report.hpp"

#include <sstream>

#include "sdmaps/errors.hpp"

namespace sdmaps {

std::string to_string(Status s) {
  switch (s) {
    case Status::pass:
      return "pass";
    case Status::fail:
      return "fail";
    case Status::error:
      return "error";
  }
  return "error";
}

void SdReport::add_violation(Violation v) {
  violations.push_back(std::move(v));
  if (status == Status::pass) status = Status::fail;
}

void SdReport::set_error(const std::string& why) {
  status = Status::error;
  note(why);
}

void SdReport::note(const std::string& text) {
  if (!notes.empty()) notes += "; ";
  notes += text;
}

void SdReport::merge(const SdReport& other) {
  checked_pairs += other.checked_pairs;
  violations.insert(violations.end(), other.violations.begin(), other.violations.end());
  if (other.status == Status::error || status == Status::error) {
    status = Status::error;
  } else if (!violations.empty()) {
    status = Status::fail;
  }
  if (!other.notes.empty()) note(other.notes);
}

Json to_json(const SdReport& r) {
  Json j;
  j["status"] = to_string(r.status);
  j["checked_pairs"] = r.checked_pairs;
  Json vs = Json::array();
  for (const auto& v : r.violations) {
    vs.push_back({{"kind", v.kind}, {"x", v.x}, {"y", v.y}, {"lhs", v.lhs}, {"rhs", v.rhs}});
  }
  j["violations"] = std::move(vs);
  j["notes"] = r.notes;
  return j;
}

SdReport report_from_json(const Json& j) {
  SdReport r;
  const std::string s = j.at("status").get<std::string>();
  if (s == "pass") {
    r.status = Status::pass;
  } else if (s == "fail") {
    r.status = Status::fail;
  } else if (s == "error") {
    r.status = Status::error;
  } else {
    throw ParseError("unknown report status '" + s + "'");
  }
  r.checked_pairs = j.at("checked_pairs").get<std::uint64_t>();
  for (const auto& v : j.at("violations")) {
    r.violations.push_back({v.at("kind").get<std::string>(), v.at("x").get<std::string>(),
                            v.at("y").get<std::string>(), v.at("lhs").get<std::string>(),
                            v.at("rhs").get<std::string>()});
  }
  r.notes = j.at("notes").get<std::string>();
  return r;
}

std::string to_text(const SdReport& r, const std::string& title) {
  std::ostringstream os;
  if (!title.empty()) os << title << ": ";
  os << to_string(r.status) << " (" << r.checked_pairs << " checks, " << r.violations.size()
     << " violations)\n";
  for (const auto& v : r.violations) {
    os << "  [" << v.kind << "] x=" << v.x;
    if (!v.y.empty()) os << " y=" << v.y;
    os << " lhs=" << v.lhs << " rhs=" << v.rhs << "\n";
  }
  if (!r.notes.empty()) os << "  notes: " << r.notes << "\n";
  return os.str();
}

}  // namespace sdmaps
