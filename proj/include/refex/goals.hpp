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

#ifndef REFEX_GOALS_HPP_
#define REFEX_GOALS_HPP_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "refex/describe.hpp"
#include "refex/genre.hpp"
#include "refex/hearer.hpp"
#include "refex/kb.hpp"

namespace refex {

enum class GoalKind {
  Identify,  // get the hearer to identify the referent
  Convey,    // alert the hearer that the referent has a given property
};

struct Goal {
  GoalKind kind;
  std::string referent;
  std::optional<AttributeValue> payload;  // Convey only

  static Goal identify(std::string referent);
  static Goal convey(std::string referent, AttributeValue payload);

  bool operator==(const Goal&) const = default;
};

/// The speaker's ordered goals: exactly one Identify plus zero or more
/// Convey goals, all about the same referent. Goal order never affects
/// output content; it is preserved only for reporting.
class GoalAgenda {
 public:
  explicit GoalAgenda(std::vector<Goal> goals);

  const std::vector<Goal>& goals() const noexcept { return goals_; }
  const std::string& referent() const noexcept { return referent_; }

  /// Convey payloads in agenda order.
  std::vector<AttributeValue> convey_payloads() const;

 private:
  std::vector<Goal> goals_;
  std::string referent_;
};

struct AgendaValidation {
  bool ok = true;
  std::vector<AttributeValue> false_payloads;
};

/// The quality gate: ok iff every Convey payload is a property the knowledge
/// base asserts of the referent. Never consults the context; runs before any
/// generation.
AgendaValidation validate_agenda(const GoalAgenda& agenda,
                                 const KnowledgeBase& kb);

enum class Strategy { FullBrevity, Greedy, Incremental };

/// "full-brevity", "greedy", "incremental".
std::optional<Strategy> strategy_from_name(std::string_view name);
const char* strategy_name(Strategy strategy);

enum class AttributionSource {
  Identification,  // ruled out a distractor, or was seeded while distractors remained
  ConveyGoal,      // carries a Convey payload
  TypeOption,      // appended by always_include_type
};

const char* attribution_source_name(AttributionSource source);

struct ItemAttribution {
  AttributeValue item;
  std::vector<AttributionSource> sources;
};

struct GoalOutcome {
  Goal goal;
  bool satisfied = false;
  std::vector<AttributeValue> supported_by;
};

struct PlanReport {
  Description description;
  GenerationTrace trace;
  std::vector<ImplicatureWarning> warnings;
  std::vector<GoalOutcome> goals;
  std::vector<Goal> agenda_remaining;  // empty on success
  std::vector<ItemAttribution> attributions;
  InterpretationReport verification;
};

/// Satisfies a whole agenda with one description: validates the agenda
/// (QualityViolation on any false payload), seeds the description with all
/// Convey payloads so conveyed content can double as identificational
/// content, runs the chosen identification strategy from that seed, and
/// verifies the result hearer-side before reporting. A verification mismatch
/// is VerificationFailure and signals a bug, never a valid outcome.
PlanReport plan_description(const GoalAgenda& agenda, const ContextSet& context,
                            const KnowledgeBase& kb, const GenreProfile& genre,
                            Strategy strategy,
                            const IncrementalOptions& options = {});

}  // namespace refex

#endif  // REFEX_GOALS_HPP_
