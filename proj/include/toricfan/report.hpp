#pragma once

#include "toricfan/document.hpp"
#include "toricfan/homology.hpp"
#include "toricfan/shelling.hpp"

#include "json.hpp"

#include <optional>
#include <string>
#include <vector>

namespace toricfan {

using Report = nlohmann::ordered_json;

struct RunOptions {
  std::vector<FieldSpec> fields{FieldSpec::rationals()};
  long box_radius = 4;
  SearchBudget budget;
  std::optional<int> degree;  // localcoh
  bool timing = false;
};

struct RunOutcome {
  Report report;
  bool unknown_present = false;
};

/// validate, analyze, cohomology, omega, localcoh, gorenstein, canonical-ideal,
/// boundary-duality, shelling, semishelling, clean, all.
const std::vector<std::string>& command_names();

/// Single-check commands let precondition failures escape as Error; the
/// composite commands (analyze, all) record them inside the report instead.
RunOutcome run_command(const std::string& command, const FanDocument& doc, const RunOptions& opts);

/// Plain-text rendering of a report, a deterministic walk of the JSON tree.
std::string render_text(const Report& report);

/// {"error": {"code": ..., "message": ...}}
Report error_report(const std::string& code, const std::string& message);

}  // namespace toricfan
