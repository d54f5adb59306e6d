#pragma once

#include "rhom/cli/lie_file.hpp"

#include <string>
#include <utility>
#include <vector>

namespace rhom::cli {

inline constexpr const char* kToolVersion = "0.1.0";

enum class ClaimStatus { Pass, Discrepant, Unstated };

std::string to_string(ClaimStatus s);
/// "PASS", "DISCREPANT" or "UNSTATED". Throws ParseError.
ClaimStatus parse_status(const std::string& s);

struct ClaimRecord {
  std::string id;
  /// What the claim says, in words.
  std::string anchor;
  Json computed;
  /// Null when no value is stated.
  Json expected;
  ClaimStatus status = ClaimStatus::Unstated;
  std::string note;

  friend bool operator==(const ClaimRecord&, const ClaimRecord&) = default;
};

struct AuditReport {
  std::string tool_version = kToolVersion;
  std::string algebra_name;
  std::vector<ClaimRecord> claims;
  Json verdict;
  /// Step name and wall time in milliseconds; empty unless requested.
  std::vector<std::pair<std::string, long long>> timings;

  const ClaimRecord* find(const std::string& id) const;
  std::size_t count(ClaimStatus s) const;

  friend bool operator==(const AuditReport&, const AuditReport&) = default;
};

enum class ReportFormat { Text, Json };

Json report_json(const AuditReport& r);
/// Throws ParseError.
AuditReport report_from_json(const Json& doc);
std::string emit_report(const AuditReport& r, ReportFormat format);
AuditReport parse_report(const std::string& json_text);

}  // namespace rhom::cli
