#pragma once

// Deterministic text/JSON reports for scenario runs and the claim regression suite.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "lorder/cone.hpp"

namespace lorder {

inline constexpr const char* kReportFormat = "lorder-report/1";

struct Check {
  std::string name;
  std::string claim;  // the published statement this check instantiates
  bool passed = false;
  std::string detail;
  bool mandatory = true;
};

struct Report {
  std::string name;
  std::vector<Check> checks;
  std::optional<ConeReport> cone;
  Verdict verdict = Verdict::checks_only;
  std::optional<Verdict> expected;
  std::optional<std::uint64_t> seed;
  std::vector<Report> children;

  void add(Check c) { checks.push_back(std::move(c)); }

  /// All mandatory checks here and in every child pass and no witness was rejected.
  bool all_passed() const;
};

enum class ReportFormat { text, json };

std::string render(const Report& report, ReportFormat format);

}  // namespace lorder
