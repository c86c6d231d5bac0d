// Copyright 2026 The refex Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "report_json.hpp"

namespace refex::report {
namespace {

std::string warning_message(const ImplicatureWarning& warning,
                            const std::string& genre_name) {
  switch (warning.reason) {
    case ImplicatureReason::NotGenrePreferred:
      return "attribute '" + warning.item.attribute +
             "' not identification-preferred in genre '" + genre_name + "'";
    case ImplicatureReason::SurplusToIdentification:
      return "property '" + to_string(warning.item) +
             "' is surplus to identification";
  }
  return "";
}

nlohmann::json goal_json(const GoalOutcome& outcome) {
  nlohmann::json doc;
  doc["kind"] =
      outcome.goal.kind == GoalKind::Identify ? "Identify" : "Convey";
  doc["referent"] = outcome.goal.referent;
  if (outcome.goal.payload) {
    doc["payload"] = attribute_value_json(*outcome.goal.payload);
  }
  doc["satisfied"] = outcome.satisfied;
  doc["supported_by"] = nlohmann::json::array();
  for (const auto& item : outcome.supported_by) {
    doc["supported_by"].push_back(attribute_value_json(item));
  }
  return doc;
}

nlohmann::json strategy_json(const StrategyOutcome& outcome,
                             const std::string& genre_name,
                             bool with_timings) {
  nlohmann::json doc;
  doc["strategy"] = strategy_name(outcome.strategy);
  doc["ok"] = outcome.ok;
  if (outcome.ok) {
    doc["description"] = description_json(outcome.description);
    doc["length"] = outcome.description.size();
    doc["warnings"] = warnings_json(outcome.warnings, genre_name);
  } else {
    doc["error"] = error_code_name(outcome.error);
    doc["message"] = outcome.error_message;
  }
  if (with_timings) doc["wall_time_us"] = outcome.wall_time_us;
  return doc;
}

}  // namespace

nlohmann::json attribute_value_json(const AttributeValue& item) {
  return {{"attribute", item.attribute}, {"value", item.value}};
}

nlohmann::json description_json(const Description& description) {
  nlohmann::json doc;
  doc["items"] = nlohmann::json::array();
  for (const auto& item : description.items()) {
    doc["items"].push_back(attribute_value_json(item));
  }
  doc["surface"] = description.surface();
  return doc;
}

nlohmann::json trace_json(const GenerationTrace& trace) {
  nlohmann::json steps = nlohmann::json::array();
  for (const auto& step : trace.steps) {
    nlohmann::json doc;
    doc["property"] = attribute_value_json(step.property);
    doc["ruled_out"] = step.ruled_out;
    doc["remaining_after"] = step.remaining_after;
    steps.push_back(std::move(doc));
  }
  return steps;
}

nlohmann::json warnings_json(const std::vector<ImplicatureWarning>& warnings,
                             const std::string& genre_name) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& warning : warnings) {
    nlohmann::json doc;
    doc["item"] = attribute_value_json(warning.item);
    doc["reason"] = implicature_reason_name(warning.reason);
    doc["message"] = warning_message(warning, genre_name);
    out.push_back(std::move(doc));
  }
  return out;
}

nlohmann::json interpretation_json(const InterpretationReport& report) {
  nlohmann::json doc;
  doc["outcome"] = resolution_outcome_name(report.outcome);
  doc["resolved"] = report.resolved;
  doc["classifications"] = nlohmann::json::array();
  for (const auto& [item, purpose] : report.classifications) {
    doc["classifications"].push_back(
        {{"item", attribute_value_json(item)},
         {"purpose", descriptor_purpose_name(purpose)}});
  }
  return doc;
}

nlohmann::json plan_json(const PlanReport& report,
                         const std::string& genre_name) {
  nlohmann::json doc;
  doc["description"] = description_json(report.description);
  doc["trace"] = trace_json(report.trace);
  doc["warnings"] = warnings_json(report.warnings, genre_name);
  doc["goals"] = nlohmann::json::array();
  for (const auto& outcome : report.goals) {
    doc["goals"].push_back(goal_json(outcome));
  }
  doc["agenda_remaining"] = nlohmann::json::array();
  for (const auto& goal : report.agenda_remaining) {
    doc["agenda_remaining"].push_back(
        goal_json(GoalOutcome{goal, false, {}}));
  }
  doc["attributions"] = nlohmann::json::array();
  for (const auto& attribution : report.attributions) {
    nlohmann::json entry;
    entry["item"] = attribute_value_json(attribution.item);
    entry["sources"] = nlohmann::json::array();
    for (const auto& source : attribution.sources) {
      entry["sources"].push_back(attribution_source_name(source));
    }
    doc["attributions"].push_back(std::move(entry));
  }
  doc["verification"] = interpretation_json(report.verification);
  return doc;
}

nlohmann::json comparison_json(const ComparisonReport& report,
                               const std::string& genre_name,
                               bool with_timings) {
  nlohmann::json doc;
  doc["strategies"] = nlohmann::json::array();
  for (const auto& outcome : report.strategies) {
    doc["strategies"].push_back(
        strategy_json(outcome, genre_name, with_timings));
  }
  nlohmann::json oracle;
  oracle["ok"] = report.oracle.ok;
  if (report.oracle.ok) {
    oracle["minimal_descriptions"] = nlohmann::json::array();
    for (const auto& description : report.oracle.minimal_descriptions) {
      oracle["minimal_descriptions"].push_back(description_json(description));
    }
  } else {
    oracle["error"] = error_code_name(report.oracle.error);
    oracle["message"] = report.oracle.error_message;
  }
  if (with_timings) oracle["wall_time_us"] = report.oracle.wall_time_us;
  doc["oracle"] = std::move(oracle);
  if (report.minimality_gap) doc["minimality_gap"] = *report.minimality_gap;
  return doc;
}

std::string dump(const nlohmann::json& doc) { return doc.dump(2) + "\n"; }

}  // namespace refex::report
