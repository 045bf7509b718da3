#include "lorder/report.hpp"

#include <sstream>

#include <json.hpp>

namespace lorder {

bool Report::all_passed() const {
  for (const auto& c : checks) {
    if (c.mandatory && !c.passed) return false;
  }
  if (cone && cone->rejected() > 0) return false;
  for (const auto& child : children) {
    if (!child.all_passed()) return false;
  }
  return true;
}

namespace {

std::string join_indices(const IndexSequence& seq) {
  std::string out;
  for (std::size_t i : seq) {
    if (!out.empty()) out += ' ';
    out += std::to_string(i);
  }
  return out;
}

void render_text(const Report& r, std::ostringstream& out, const std::string& indent) {
  out << indent << "== " << r.name << " ==\n";
  if (r.seed) out << indent << "seed: " << *r.seed << "\n";
  for (const auto& c : r.checks) {
    const char* tag = c.passed ? "PASS" : (c.mandatory ? "FAIL" : "NOTE");
    out << indent << "[" << tag << "] " << c.name;
    if (!c.detail.empty()) out << ": " << c.detail;
    out << "\n";
    if (!c.passed && c.mandatory && !c.claim.empty()) out << indent << "       claim: " << c.claim << "\n";
  }
  if (r.cone) {
    const auto& cone = *r.cone;
    out << indent << "elements:";
    for (std::size_t i = 0; i < cone.names.size(); ++i) out << " " << i << "=" << cone.names[i];
    out << "\n" << indent << "mode: " << to_string(cone.mode) << ", depth: " << cone.depth << "\n";
    for (const auto& row : cone.rows) {
      out << indent << "  [" << format_signs(row.signs) << "] " << to_string(row.status);
      if (!row.source.empty()) out << " (" << row.source << ")";
      if (row.reported_only) out << " reported-only";
      if (!row.witness.empty()) out << " : " << join_indices(row.witness);
      out << "\n";
    }
    out << indent << "witnessed: " << cone.witnessed() << "/" << cone.rows.size() << "\n";
    out << indent << "note: an exhausted row is not evidence of left-orderability\n";
  }
  out << indent << "verdict: " << to_string(r.verdict);
  if (r.expected) out << " (expected " << to_string(*r.expected) << ")";
  out << "\n";
  for (const auto& child : r.children) render_text(child, out, indent + "  ");
}

nlohmann::ordered_json to_json(const Report& r) {
  nlohmann::ordered_json j;
  j["name"] = r.name;
  if (r.seed) j["seed"] = *r.seed;
  auto checks = nlohmann::ordered_json::array();
  for (const auto& c : r.checks) {
    nlohmann::ordered_json cj;
    cj["name"] = c.name;
    cj["claim"] = c.claim;
    cj["passed"] = c.passed;
    cj["mandatory"] = c.mandatory;
    cj["detail"] = c.detail;
    checks.push_back(std::move(cj));
  }
  j["checks"] = std::move(checks);
  if (r.cone) {
    const auto& cone = *r.cone;
    nlohmann::ordered_json cj;
    cj["elements"] = cone.names;
    cj["mode"] = to_string(cone.mode);
    cj["depth"] = cone.depth;
    auto rows = nlohmann::ordered_json::array();
    for (const auto& row : cone.rows) {
      nlohmann::ordered_json rj;
      rj["signs"] = row.signs;
      rj["status"] = to_string(row.status);
      rj["source"] = row.source;
      rj["reported_only"] = row.reported_only;
      rj["witness"] = row.witness;
      rj["verified"] = row.has_witness();
      rows.push_back(std::move(rj));
    }
    cj["assignments"] = std::move(rows);
    cj["witnessed"] = cone.witnessed();
    cj["total"] = cone.rows.size();
    j["cone"] = std::move(cj);
  }
  j["verdict"] = to_string(r.verdict);
  if (r.expected) j["expected"] = to_string(*r.expected);
  if (!r.children.empty()) {
    auto children = nlohmann::ordered_json::array();
    for (const auto& c : r.children) children.push_back(to_json(c));
    j["children"] = std::move(children);
  }
  return j;
}

}  // namespace

std::string render(const Report& report, ReportFormat format) {
  if (format == ReportFormat::json) {
    nlohmann::ordered_json j;
    j["format"] = kReportFormat;
    j["report"] = to_json(report);
    return j.dump(2) + "\n";
  }
  std::ostringstream out;
  out << kReportFormat << "\n";
  render_text(report, out, "");
  return out.str();
}

}  // namespace lorder
