#pragma once
// Uniform result type for verification checks, with canonical JSON and text
// renderings. JSON objects serialize with alphabetically ordered keys, so a
// dump -> parse -> dump round trip is byte-identical.

#include <chrono>
#include <cstdint>
#include <map>
#include <string>

#include <json.hpp>

namespace qzeta {

enum class CheckStatus { Pass, Fail, Error };

inline const char* to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::Pass: return "pass";
    case CheckStatus::Fail: return "fail";
    case CheckStatus::Error: return "error";
  }
  return "error";
}

struct RelationReport {
  std::string check;
  std::map<std::string, std::string> params;
  CheckStatus status = CheckStatus::Error;
  std::string detail;
  std::int64_t runtime_ms = 0;

  bool passed() const { return status == CheckStatus::Pass; }
};

inline nlohmann::json report_to_json(const RelationReport& r) {
  return nlohmann::json{{"check", r.check},
                        {"detail", r.detail},
                        {"params", r.params},
                        {"runtime_ms", r.runtime_ms},
                        {"status", to_string(r.status)}};
}

inline RelationReport report_from_json(const nlohmann::json& j) {
  RelationReport r;
  r.check = j.at("check").get<std::string>();
  r.detail = j.at("detail").get<std::string>();
  r.params = j.at("params").get<std::map<std::string, std::string>>();
  r.runtime_ms = j.at("runtime_ms").get<std::int64_t>();
  const std::string s = j.at("status").get<std::string>();
  r.status = s == "pass" ? CheckStatus::Pass : (s == "fail" ? CheckStatus::Fail : CheckStatus::Error);
  return r;
}

inline std::string report_to_text(const RelationReport& r) {
  std::string out = std::string(r.status == CheckStatus::Pass   ? "PASS "
                                : r.status == CheckStatus::Fail ? "FAIL "
                                                                : "ERROR") +
                    " " + r.check;
  for (const auto& [key, value] : r.params) out += " " + key + "=" + value;
  out += " (" + std::to_string(r.runtime_ms) + " ms)";
  if (!r.detail.empty()) out += "\n  " + r.detail;
  return out;
}

class Stopwatch {
 public:
  std::int64_t ms() const {
    return std::chrono::duration_cast<std::chrono::milliseconds>(
               std::chrono::steady_clock::now() - start_)
        .count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

}  // namespace qzeta
