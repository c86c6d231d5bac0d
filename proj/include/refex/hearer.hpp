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

#ifndef REFEX_HEARER_HPP_
#define REFEX_HEARER_HPP_

#include <map>
#include <set>
#include <string>

#include "refex/describe.hpp"
#include "refex/kb.hpp"

namespace refex {

enum class ResolutionOutcome {
  UniqueReferent,  // exactly one context entity satisfies the description
  Ambiguous,       // more than one
  NoReferent,      // none
};

const char* resolution_outcome_name(ResolutionOutcome outcome);

/// The hearer's reading of one descriptor.
enum class DescriptorPurpose {
  /// Removing it loses distinguishingness.
  Necessary,
  /// Removable, but it does rule out some context entity: plausibly included
  /// to help identification even if not strictly needed.
  RedundantIdentificational,
  /// Rules out nothing; the hearer should look for a non-identificational
  /// purpose.
  Surplus,
};

const char* descriptor_purpose_name(DescriptorPurpose purpose);

struct InterpretationReport {
  std::set<std::string> resolved;
  ResolutionOutcome outcome = ResolutionOutcome::NoReferent;
  // Filled by attribute_purposes; empty after plain resolution.
  std::map<AttributeValue, DescriptorPurpose> classifications;
};

/// Hearer-side resolution: who could this description mean?
InterpretationReport resolve(const Description& description,
                             const ContextSet& context,
                             const KnowledgeBase& kb);

/// Classifies each descriptor by single-item removal. Requires that the
/// description uniquely resolves to `referent` (NotDistinguishing otherwise).
std::map<AttributeValue, DescriptorPurpose> attribute_purposes(
    const Description& description, const std::string& referent,
    const ContextSet& context, const KnowledgeBase& kb);

}  // namespace refex

#endif  // REFEX_HEARER_HPP_
