#include "rhom/cli/report.hpp"

#include <algorithm>
#include <sstream>

namespace rhom::cli {

std::string to_string(ClaimStatus s) {
  switch (s) {
    case ClaimStatus::Pass: return "PASS";
    case ClaimStatus::Discrepant: return "DISCREPANT";
    case ClaimStatus::Unstated: return "UNSTATED";
  }
  return "UNSTATED";
}

ClaimStatus parse_status(const std::string& s) {
  if (s == "PASS") return ClaimStatus::Pass;
  if (s == "DISCREPANT") return ClaimStatus::Discrepant;
  if (s == "UNSTATED") return ClaimStatus::Unstated;
  throw ParseError("unknown claim status '" + s + "'");
}

const ClaimRecord* AuditReport::find(const std::string& id) const {
  auto it = std::find_if(claims.begin(), claims.end(), [&](const ClaimRecord& c) { return c.id == id; });
  return it == claims.end() ? nullptr : &*it;
}

std::size_t AuditReport::count(ClaimStatus s) const {
  return static_cast<std::size_t>(std::count_if(claims.begin(), claims.end(), [&](const ClaimRecord& c) { return c.status == s; }));
}

Json report_json(const AuditReport& r) {
  Json doc;
  doc["tool_version"] = r.tool_version;
  doc["algebra_name"] = r.algebra_name;
  Json claims = Json::array();
  for (const auto& c : r.claims) {
    Json rec;
    rec["id"] = c.id;
    rec["anchor"] = c.anchor;
    rec["computed"] = c.computed;
    rec["expected"] = c.expected;
    rec["status"] = to_string(c.status);
    if (!c.note.empty()) rec["note"] = c.note;
    claims.push_back(std::move(rec));
  }
  doc["claims"] = std::move(claims);
  doc["verdict"] = r.verdict;
  Json timings = Json::object();
  for (const auto& [step, ms] : r.timings) timings[step] = ms;
  doc["timings"] = std::move(timings);
  return doc;
}

AuditReport report_from_json(const Json& doc) {
  auto need = [&](const Json& obj, const char* key, const std::string& where) -> const Json& {
    if (!obj.is_object() || !obj.contains(key)) throw ParseError(where + ": missing field '" + key + "'");
    return obj.at(key);
  };
  auto str = [&](const Json& obj, const char* key, const std::string& where) {
    const Json& v = need(obj, key, where);
    if (!v.is_string()) throw ParseError(where + "." + key + ": expected a string");
    return v.get<std::string>();
  };
  AuditReport r;
  r.tool_version = str(doc, "tool_version", "report");
  r.algebra_name = str(doc, "algebra_name", "report");
  const Json& claims = need(doc, "claims", "report");
  if (!claims.is_array()) throw ParseError("report.claims: expected a list");
  for (std::size_t i = 0; i < claims.size(); ++i) {
    const std::string where = "claims[" + std::to_string(i) + "]";
    const Json& rec = claims[i];
    ClaimRecord c;
    c.id = str(rec, "id", where);
    c.anchor = str(rec, "anchor", where);
    c.computed = need(rec, "computed", where);
    c.expected = need(rec, "expected", where);
    c.status = parse_status(str(rec, "status", where));
    if (rec.contains("note")) c.note = str(rec, "note", where);
    r.claims.push_back(std::move(c));
  }
  r.verdict = need(doc, "verdict", "report");
  const Json& timings = need(doc, "timings", "report");
  if (!timings.is_object()) throw ParseError("report.timings: expected an object");
  for (const auto& [step, ms] : timings.items()) {
    if (!ms.is_number_integer()) throw ParseError("report.timings." + step + ": expected integer milliseconds");
    r.timings.emplace_back(step, ms.get<long long>());
  }
  return r;
}

std::string emit_report(const AuditReport& r, ReportFormat format) {
  if (format == ReportFormat::Json) return report_json(r).dump(2) + "\n";
  std::ostringstream out;
  out << "audit of " << (r.algebra_name.empty() ? "(none)" : r.algebra_name) << " (rhom " << r.tool_version << ")\n";
  for (const auto& c : r.claims) {
    std::string status = to_string(c.status);
    out << status << std::string(11 - status.size(), ' ') << c.id << "\n";
    out << "           claim:    " << c.anchor << "\n";
    out << "           computed: " << c.computed.dump() << "\n";
    if (!c.expected.is_null()) out << "           expected: " << c.expected.dump() << "\n";
    if (!c.note.empty()) out << "           note:     " << c.note << "\n";
  }
  out << "summary: " << r.count(ClaimStatus::Pass) << " pass, " << r.count(ClaimStatus::Discrepant) << " discrepant, "
      << r.count(ClaimStatus::Unstated) << " unstated\n";
  if (r.verdict.is_object() && r.verdict.contains("summary"))
    out << "verdict: " << r.verdict["summary"].get<std::string>() << "\n";
  for (const auto& [step, ms] : r.timings) out << "time " << step << ": " << ms << " ms\n";
  return out.str();
}

AuditReport parse_report(const std::string& json_text) {
  Json doc;
  try {
    doc = Json::parse(json_text);
  } catch (const Json::parse_error& e) {
    throw ParseError(std::string("report: ") + e.what());
  }
  return report_from_json(doc);
}

}  // namespace rhom::cli
