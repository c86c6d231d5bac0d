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

#include "refex/goals.hpp"

#include <algorithm>
#include <utility>

namespace refex {
namespace {

// Per-item replay of a finished full-brevity description. Minimality
// guarantees every extension item still rules out at least one distractor
// at its replay position: were some item inert there, the description
// minus that item would already distinguish, contradicting minimality.
GenerationTrace replay_trace(const Description& description,
                             std::size_t seed_size, const std::string& referent,
                             const ContextSet& context,
                             const KnowledgeBase& kb) {
  GenerationTrace trace;
  std::vector<AttributeValue> prefix(description.items().begin(),
                                     description.items().begin() +
                                         static_cast<std::ptrdiff_t>(seed_size));
  std::set<std::string> remaining = satisfiers(prefix, context, kb);
  remaining.erase(referent);
  for (std::size_t i = seed_size; i < description.items().size(); ++i) {
    const AttributeValue& item = description.items()[i];
    std::set<std::string> ruled = rules_out(item, remaining, kb);
    for (const auto& id : ruled) remaining.erase(id);
    trace.steps.push_back({item, std::move(ruled), remaining.size()});
  }
  return trace;
}

}  // namespace

Goal Goal::identify(std::string referent) {
  return {GoalKind::Identify, std::move(referent), std::nullopt};
}

Goal Goal::convey(std::string referent, AttributeValue payload) {
  return {GoalKind::Convey, std::move(referent), std::move(payload)};
}

GoalAgenda::GoalAgenda(std::vector<Goal> goals) : goals_(std::move(goals)) {
  std::size_t identify_count = 0;
  for (const auto& goal : goals_) {
    if (goal.referent.empty()) {
      throw Error(ErrorCode::InvalidArgument,
                  "goal referent must be non-empty");
    }
    switch (goal.kind) {
      case GoalKind::Identify:
        if (goal.payload) {
          throw Error(ErrorCode::InvalidArgument,
                      "Identify goals carry no payload");
        }
        ++identify_count;
        referent_ = goal.referent;
        break;
      case GoalKind::Convey:
        if (!goal.payload) {
          throw Error(ErrorCode::InvalidArgument,
                      "Convey goals carry exactly one payload");
        }
        break;
    }
  }
  if (identify_count != 1) {
    throw Error(ErrorCode::InvalidArgument,
                "agenda must contain exactly one Identify goal");
  }
  for (const auto& goal : goals_) {
    if (goal.referent != referent_) {
      throw Error(ErrorCode::InvalidArgument,
                  "all agenda goals must share one referent");
    }
  }
}

std::vector<AttributeValue> GoalAgenda::convey_payloads() const {
  std::vector<AttributeValue> payloads;
  for (const auto& goal : goals_) {
    if (goal.kind == GoalKind::Convey) payloads.push_back(*goal.payload);
  }
  return payloads;
}

AgendaValidation validate_agenda(const GoalAgenda& agenda,
                                 const KnowledgeBase& kb) {
  const Entity& target = kb.entity(agenda.referent());
  AgendaValidation result;
  for (const auto& payload : agenda.convey_payloads()) {
    if (!target.has(payload)) {
      result.ok = false;
      result.false_payloads.push_back(payload);
    }
  }
  return result;
}

std::optional<Strategy> strategy_from_name(std::string_view name) {
  if (name == "full-brevity") return Strategy::FullBrevity;
  if (name == "greedy") return Strategy::Greedy;
  if (name == "incremental") return Strategy::Incremental;
  return std::nullopt;
}

const char* strategy_name(Strategy strategy) {
  switch (strategy) {
    case Strategy::FullBrevity:
      return "full-brevity";
    case Strategy::Greedy:
      return "greedy";
    case Strategy::Incremental:
      return "incremental";
  }
  return "Unknown";
}

const char* attribution_source_name(AttributionSource source) {
  switch (source) {
    case AttributionSource::Identification:
      return "Identification";
    case AttributionSource::ConveyGoal:
      return "ConveyGoal";
    case AttributionSource::TypeOption:
      return "TypeOption";
  }
  return "Unknown";
}

PlanReport plan_description(const GoalAgenda& agenda, const ContextSet& context,
                            const KnowledgeBase& kb, const GenreProfile& genre,
                            Strategy strategy,
                            const IncrementalOptions& options) {
  // Quality gate first: false content is refused before any search runs.
  AgendaValidation validation = validate_agenda(agenda, kb);
  if (!validation.ok) {
    std::string message =
        "agenda conveys content false of '" + agenda.referent() + "':";
    for (const auto& payload : validation.false_payloads) {
      message += " " + to_string(payload);
    }
    throw Error(ErrorCode::QualityViolation, message);
  }

  const std::string& referent = agenda.referent();
  if (!context.contains(referent)) {
    throw Error(ErrorCode::ReferentNotInContext,
                "referent '" + referent + "' is not in the context set");
  }

  // Convey content is seeded before identification, so it can double as
  // identificational content. Repeated payloads collapse (set semantics);
  // a same-attribute clash is impossible past the gate.
  Description seed;
  for (const auto& payload : agenda.convey_payloads()) {
    if (!seed.contains(payload)) seed.append(payload);
  }

  PlanReport report;
  switch (strategy) {
    case Strategy::FullBrevity:
      report.description = full_brevity(referent, context, kb, seed);
      report.trace =
          replay_trace(report.description, seed.size(), referent, context, kb);
      break;
    case Strategy::Greedy: {
      GreedyResult run = greedy_heuristic(referent, context, kb, seed);
      report.description = std::move(run.description);
      report.trace = std::move(run.trace);
      break;
    }
    case Strategy::Incremental: {
      IncrementalResult run =
          incremental(referent, context, kb, genre, options, seed);
      report.description = std::move(run.description);
      report.trace = std::move(run.trace);
      report.warnings = std::move(run.warnings);
      break;
    }
  }

  // Self-monitoring: interpret our own output before asserting success.
  report.verification = resolve(report.description, context, kb);
  if (report.verification.outcome != ResolutionOutcome::UniqueReferent ||
      *report.verification.resolved.begin() != referent) {
    throw Error(ErrorCode::VerificationFailure,
                "self-monitoring failed: description '" +
                    report.description.surface() + "' does not resolve to '" +
                    referent + "'");
  }
  report.verification.classifications =
      attribute_purposes(report.description, referent, context, kb);

  const std::vector<AttributeValue> payloads = agenda.convey_payloads();
  const bool had_distractors = context.size() > 1;
  std::vector<AttributeValue> identificational;
  for (const auto& item : report.description.items()) {
    ItemAttribution attribution{item, {}};
    const bool seeded = seed.contains(item);
    bool in_trace_ruling = false;
    bool type_option_step = false;
    for (const auto& step : report.trace.steps) {
      if (step.property != item) continue;
      if (step.ruled_out.empty()) {
        type_option_step = true;  // only the always-include-type step is inert
      } else {
        in_trace_ruling = true;
      }
    }
    if (in_trace_ruling || (seeded && had_distractors)) {
      attribution.sources.push_back(AttributionSource::Identification);
      identificational.push_back(item);
    }
    if (std::find(payloads.begin(), payloads.end(), item) != payloads.end()) {
      attribution.sources.push_back(AttributionSource::ConveyGoal);
    }
    if (type_option_step) {
      attribution.sources.push_back(AttributionSource::TypeOption);
    }
    report.attributions.push_back(std::move(attribution));
  }

  for (const auto& goal : agenda.goals()) {
    GoalOutcome outcome{goal, true, {}};
    if (goal.kind == GoalKind::Identify) {
      outcome.supported_by = identificational;
    } else {
      outcome.supported_by = {*goal.payload};
    }
    report.goals.push_back(std::move(outcome));
  }
  // agenda_remaining stays empty: every failure path above threw instead.
  return report;
}

}  // namespace refex
