#pragma once

// Verifier output. A certificate is a deterministic function of its
// parameters: the theorem id, the parameter record, one entry per checked
// sub-identity and the overall status. status == pass iff every check
// compared exactly equal. Precondition violations produce status == error.

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "eulerid/serialize.hpp"

namespace eulerid {

enum class Status { pass, fail, error };

inline std::string_view to_string(Status s) {
  switch (s) {
    case Status::pass: return "pass";
    case Status::fail: return "fail";
    case Status::error: return "error";
  }
  return "?";
}

inline Status status_from_string(std::string_view s) {
  if (s == "pass") return Status::pass;
  if (s == "fail") return Status::fail;
  if (s == "error") return Status::error;
  throw std::invalid_argument("unknown certificate status");
}

struct Check {
  std::string name;
  Json lhs;
  Json rhs;
  bool pass = false;
  /// Index (or parameter tuple) of the first disagreement; null when passing.
  Json first_mismatch;
  friend bool operator==(const Check&, const Check&) = default;
};

struct IdentityCertificate {
  std::string theorem;
  Json params = Json::object();
  Status status = Status::pass;
  Json lhs;
  Json rhs;
  Json first_mismatch;
  std::vector<Check> checks;
  std::string error;

  bool passed() const { return status == Status::pass; }
  friend bool operator==(const IdentityCertificate&, const IdentityCertificate&) = default;
};

/// Element-wise comparison of two sequences; the mismatch is reported by position.
template <class T>
Check compare_sequences(std::string name, const std::vector<T>& lhs, const std::vector<T>& rhs,
                        std::string_view index_label = "index") {
  Check c{std::move(name), lhs, rhs, true, nullptr};
  const std::size_t n = std::max(lhs.size(), rhs.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (i < lhs.size() && i < rhs.size() && lhs[i] == rhs[i]) continue;
    c.pass = false;
    c.first_mismatch = Json{{std::string(index_label), i}};
    break;
  }
  return c;
}

template <class T>
Check compare_values(std::string name, const T& lhs, const T& rhs) {
  const bool ok = lhs == rhs;
  return Check{std::move(name), lhs, rhs, ok, ok ? Json(nullptr) : Json("value")};
}

/// A check that could not be evaluated (for example a series with a pole).
inline Check failed_check(std::string name, std::string reason) {
  return Check{std::move(name), nullptr, nullptr, false, Json{{"reason", std::move(reason)}}};
}

/// Assembles the certificate; lhs/rhs/first_mismatch mirror the first failing check (or the first check).
inline IdentityCertificate make_certificate(std::string theorem, Json params, std::vector<Check> checks) {
  IdentityCertificate cert;
  cert.theorem = std::move(theorem);
  cert.params = std::move(params);
  cert.checks = std::move(checks);
  cert.status = Status::pass;
  const Check* shown = cert.checks.empty() ? nullptr : &cert.checks.front();
  for (const auto& c : cert.checks) {
    if (!c.pass) {
      cert.status = Status::fail;
      shown = &c;
      break;
    }
  }
  if (shown) {
    cert.lhs = shown->lhs;
    cert.rhs = shown->rhs;
    if (!shown->pass) cert.first_mismatch = Json{{"check", shown->name}, {"at", shown->first_mismatch}};
  }
  return cert;
}

inline IdentityCertificate error_certificate(std::string theorem, Json params, std::string message) {
  IdentityCertificate cert;
  cert.theorem = std::move(theorem);
  cert.params = std::move(params);
  cert.status = Status::error;
  cert.error = std::move(message);
  return cert;
}

inline void to_json(Json& j, const Check& c) {
  j = Json::object();
  j["name"] = c.name;
  j["status"] = c.pass ? "pass" : "fail";
  j["lhs"] = c.lhs;
  j["rhs"] = c.rhs;
  j["first_mismatch"] = c.first_mismatch;
}
inline void from_json(const Json& j, Check& c) {
  c.name = j.at("name").get<std::string>();
  c.pass = j.at("status").get<std::string>() == "pass";
  c.lhs = j.at("lhs");
  c.rhs = j.at("rhs");
  c.first_mismatch = j.at("first_mismatch");
}

inline void to_json(Json& j, const IdentityCertificate& c) {
  j = Json::object();
  j["theorem"] = c.theorem;
  j["params"] = c.params;
  j["status"] = to_string(c.status);
  j["lhs"] = c.lhs;
  j["rhs"] = c.rhs;
  j["first_mismatch"] = c.first_mismatch;
  j["checks"] = c.checks;
  if (c.status == Status::error) j["error"] = c.error;
}
inline void from_json(const Json& j, IdentityCertificate& c) {
  c.theorem = j.at("theorem").get<std::string>();
  c.params = j.at("params");
  c.status = status_from_string(j.at("status").get<std::string>());
  c.lhs = j.at("lhs");
  c.rhs = j.at("rhs");
  c.first_mismatch = j.at("first_mismatch");
  c.checks = j.at("checks").get<std::vector<Check>>();
  c.error = j.value("error", std::string{});
}

}  // namespace eulerid
