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

#include "refex/hearer.hpp"

namespace refex {

const char* resolution_outcome_name(ResolutionOutcome outcome) {
  switch (outcome) {
    case ResolutionOutcome::UniqueReferent:
      return "UniqueReferent";
    case ResolutionOutcome::Ambiguous:
      return "Ambiguous";
    case ResolutionOutcome::NoReferent:
      return "NoReferent";
  }
  return "Unknown";
}

const char* descriptor_purpose_name(DescriptorPurpose purpose) {
  switch (purpose) {
    case DescriptorPurpose::Necessary:
      return "Necessary";
    case DescriptorPurpose::RedundantIdentificational:
      return "RedundantIdentificational";
    case DescriptorPurpose::Surplus:
      return "Surplus";
  }
  return "Unknown";
}

InterpretationReport resolve(const Description& description,
                             const ContextSet& context,
                             const KnowledgeBase& kb) {
  InterpretationReport report;
  report.resolved = satisfiers(description, context, kb);
  if (report.resolved.size() == 1) {
    report.outcome = ResolutionOutcome::UniqueReferent;
  } else if (report.resolved.empty()) {
    report.outcome = ResolutionOutcome::NoReferent;
  } else {
    report.outcome = ResolutionOutcome::Ambiguous;
  }
  return report;
}

std::map<AttributeValue, DescriptorPurpose> attribute_purposes(
    const Description& description, const std::string& referent,
    const ContextSet& context, const KnowledgeBase& kb) {
  kb.entity(referent);
  const std::set<std::string> only_referent{referent};
  if (satisfiers(description, context, kb) != only_referent) {
    throw Error(ErrorCode::NotDistinguishing,
                "description '" + description.surface() +
                    "' does not uniquely identify '" + referent + "'");
  }

  // The three labels partition the items: an item ruling out nothing is
  // always removable, and an irremovable item always rules something out.
  std::map<AttributeValue, DescriptorPurpose> result;
  for (const auto& item : description.items()) {
    if (rules_out(item, context.members(), kb).empty()) {
      result[item] = DescriptorPurpose::Surplus;
    } else if (satisfiers(description.without(item), context, kb) ==
               only_referent) {
      result[item] = DescriptorPurpose::RedundantIdentificational;
    } else {
      result[item] = DescriptorPurpose::Necessary;
    }
  }
  return result;
}

}  // namespace refex
