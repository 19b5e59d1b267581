#pragma once

#include <json.hpp>

#include <chrono>
#include <string>

#include "exactmath.hpp"

namespace cruciform {

inline constexpr const char* kVersion = "1.0.0";

struct VerificationReport {
  std::string name;
  nlohmann::json instance = nlohmann::json::object();
  LaurentPoly lhs;
  LaurentPoly rhs;
  bool equal = false;
  double elapsed_ms = 0;
  std::string engine = "brute";
  std::string note;
};

class Stopwatch {
 public:
  Stopwatch() : t0_(std::chrono::steady_clock::now()) {}
  double ms() const {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0_).count();
  }

 private:
  std::chrono::steady_clock::time_point t0_;
};

inline VerificationReport make_report(std::string name, nlohmann::json instance, LaurentPoly lhs,
                                      LaurentPoly rhs, const Stopwatch& sw) {
  VerificationReport r;
  r.name = std::move(name);
  r.instance = std::move(instance);
  r.equal = lhs == rhs;
  r.lhs = std::move(lhs);
  r.rhs = std::move(rhs);
  r.elapsed_ms = sw.ms();
  return r;
}

inline nlohmann::json poly_json(const LaurentPoly& p) { return nlohmann::json::parse(p.to_json()); }

// Timing lives under its own key so the rest of the record is reproducible byte for byte.
inline nlohmann::json to_json(const VerificationReport& r) {
  nlohmann::json j;
  j["instance"] = r.instance;
  j["instance"]["check"] = r.name;
  j["lhs"] = poly_json(r.lhs);
  j["rhs"] = poly_json(r.rhs);
  j["equal"] = r.equal;
  j["engine"] = r.engine;
  j["elapsed_ms"] = static_cast<std::int64_t>(r.elapsed_ms + 0.5);
  j["version"] = kVersion;
  if (!r.note.empty()) j["note"] = r.note;
  return j;
}

}  // namespace cruciform
