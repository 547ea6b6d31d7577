#pragma once

#include <string>

#include <json.hpp>

// Machine-readable verification reports. JSON output depends only on the
// inputs: the timing field is reported in human mode but never serialized,
// so identical runs stay byte-identical.

namespace tilint {

struct Report {
  enum class Status { Pass, Fail, Partial };

  std::string command;
  Status status = Status::Pass;
  nlohmann::json findings = nlohmann::json::array();
  double seconds = 0.0;

  void add_finding(nlohmann::json f) { findings.push_back(std::move(f)); }

  void worsen(Status s) {
    if (s == Status::Fail || status == Status::Fail) status = Status::Fail;
    else if (s == Status::Partial || status == Status::Partial) status = Status::Partial;
  }
};

inline const char* to_string(Report::Status s) {
  switch (s) {
    case Report::Status::Pass: return "pass";
    case Report::Status::Fail: return "fail";
    case Report::Status::Partial: return "partial";
  }
  return "?";
}

inline std::string emit_report(const Report& r, bool json_mode) {
  if (json_mode) {
    nlohmann::json j{{"command", r.command}, {"status", to_string(r.status)}, {"findings", r.findings}};
    return j.dump(2) + "\n";
  }
  std::string out;
  const char* status = r.status == Report::Status::Pass ? "PASS"
                       : r.status == Report::Status::Fail ? "FAIL"
                                                          : "PARTIAL";
  out += status;
  out += " (" + std::to_string(r.findings.size()) + " findings)\n";
  for (const auto& f : r.findings) {
    out += "  - ";
    if (f.is_object()) {
      bool first = true;
      for (const auto& [k, v] : f.items()) {
        if (!first) out += ", ";
        first = false;
        out += k + "=" + (v.is_string() ? v.get<std::string>() : v.dump());
      }
    } else {
      out += f.dump();
    }
    out += "\n";
  }
  char buf[64];
  std::snprintf(buf, sizeof(buf), "time: %.3f s\n", r.seconds);
  out += buf;
  return out;
}

}  // namespace tilint
