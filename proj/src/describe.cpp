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

#include "refex/describe.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <cstdint>
#include <numeric>

namespace refex {
namespace {

std::string_view trim(std::string_view text) {
  while (!text.empty() &&
         std::isspace(static_cast<unsigned char>(text.front()))) {
    text.remove_prefix(1);
  }
  while (!text.empty() &&
         std::isspace(static_cast<unsigned char>(text.back()))) {
    text.remove_suffix(1);
  }
  return text;
}

// Shared entry checks for the three strategies. The seed is mandatory
// content supplied by the goal planner; properties false of the referent
// can never appear in it (the Quality gate runs first), so a violation
// here is caller misuse, not speaker error.
const Entity& check_generation_inputs(const std::string& referent,
                                      const ContextSet& context,
                                      const KnowledgeBase& kb,
                                      const Description& seed) {
  const Entity& target = kb.entity(referent);
  if (!context.contains(referent)) {
    throw Error(ErrorCode::ReferentNotInContext,
                "referent '" + referent + "' is not in the context set");
  }
  for (const auto& item : seed.items()) {
    if (!target.has(item)) {
      throw Error(ErrorCode::InvalidArgument,
                  "seed property '" + to_string(item) +
                      "' is not true of referent '" + referent + "'");
    }
  }
  return target;
}

// Context members other than the referent still compatible with the seed.
std::set<std::string> live_distractors(const std::string& referent,
                                       const ContextSet& context,
                                       const KnowledgeBase& kb,
                                       const Description& seed) {
  std::set<std::string> remaining = satisfiers(seed.items(), context, kb);
  remaining.erase(referent);
  return remaining;
}

[[noreturn]] void no_distinguishing(const std::string& referent) {
  throw Error(ErrorCode::NoDistinguishingDescription,
              "no distinguishing description exists for '" + referent + "'");
}

}  // namespace

Description::Description(std::vector<AttributeValue> items)
    : items_(std::move(items)) {
  for (std::size_t i = 0; i < items_.size(); ++i) {
    if (items_[i].attribute.empty() || items_[i].value.empty()) {
      throw Error(ErrorCode::InvalidArgument,
                  "description items require non-empty attribute and value");
    }
    for (std::size_t j = 0; j < i; ++j) {
      if (items_[j].attribute == items_[i].attribute) {
        throw Error(ErrorCode::DuplicateAttribute,
                    "duplicate attribute '" + items_[i].attribute +
                        "' in description");
      }
    }
  }
}

Description Description::parse(std::string_view text) {
  Description result;
  if (trim(text).empty()) return result;
  std::size_t start = 0;
  while (true) {
    std::size_t comma = text.find(',', start);
    std::string_view piece = comma == std::string_view::npos
                                 ? text.substr(start)
                                 : text.substr(start, comma - start);
    result.append(parse_attribute_value(piece));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return result;
}

void Description::append(AttributeValue item) {
  if (contains_attribute(item.attribute)) {
    throw Error(ErrorCode::DuplicateAttribute,
                "duplicate attribute '" + item.attribute + "' in description");
  }
  items_.push_back(std::move(item));
}

bool Description::contains(const AttributeValue& item) const {
  return std::find(items_.begin(), items_.end(), item) != items_.end();
}

bool Description::contains_attribute(const std::string& attribute) const {
  return std::any_of(items_.begin(), items_.end(), [&](const auto& item) {
    return item.attribute == attribute;
  });
}

Description Description::without(const AttributeValue& item) const {
  Description result;
  bool dropped = false;
  for (const auto& existing : items_) {
    if (!dropped && existing == item) {
      dropped = true;
      continue;
    }
    result.items_.push_back(existing);
  }
  return result;
}

std::vector<AttributeValue> Description::sorted_items() const {
  std::vector<AttributeValue> result = items_;
  std::sort(result.begin(), result.end());
  return result;
}

std::string Description::surface() const {
  std::string out;
  for (const auto& item : sorted_items()) {
    if (!out.empty()) out += ", ";
    out += to_string(item);
  }
  return out;
}

Description full_brevity(const std::string& referent, const ContextSet& context,
                         const KnowledgeBase& kb, const Description& seed) {
  const Entity& target = check_generation_inputs(referent, context, kb, seed);

  std::vector<const Entity*> distractors;
  for (const auto& id : live_distractors(referent, context, kb, seed)) {
    distractors.push_back(&kb.entity(id));
  }
  if (distractors.empty()) return seed;

  std::vector<AttributeValue> candidates;
  for (const auto& property : target.properties()) {
    if (!seed.contains_attribute(property.attribute)) {
      candidates.push_back(property);  // already sorted
    }
  }

  const std::size_t n = candidates.size();
  const std::size_t m = distractors.size();
  const std::size_t chunks = (m + 63) / 64;

  // ruled[i] = bitmask over distractors that candidate i rules out.
  std::vector<std::vector<std::uint64_t>> ruled(
      n, std::vector<std::uint64_t>(chunks, 0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      if (!distractors[j]->has(candidates[i])) {
        ruled[i][j / 64] |= std::uint64_t{1} << (j % 64);
      }
    }
  }
  std::vector<std::uint64_t> all(chunks, 0);
  for (std::size_t j = 0; j < m; ++j) {
    all[j / 64] |= std::uint64_t{1} << (j % 64);
  }

  // Subsets by increasing cardinality; within one cardinality, combinations
  // in lexicographic index order over the sorted pool, so the first hit is
  // the lexicographically least property sequence of that size.
  std::vector<std::uint64_t> acc(chunks);
  for (std::size_t k = 1; k <= n; ++k) {
    std::vector<std::size_t> pick(k);
    std::iota(pick.begin(), pick.end(), 0);
    while (true) {
      std::fill(acc.begin(), acc.end(), 0);
      for (std::size_t i : pick) {
        for (std::size_t c = 0; c < chunks; ++c) acc[c] |= ruled[i][c];
      }
      if (acc == all) {
        Description result = seed;
        for (std::size_t i : pick) result.append(candidates[i]);
        return result;
      }
      std::size_t p = k;
      while (p > 0 && pick[p - 1] == n - k + p - 1) --p;
      if (p == 0) break;
      ++pick[p - 1];
      for (std::size_t j = p; j < k; ++j) pick[j] = pick[j - 1] + 1;
    }
  }
  no_distinguishing(referent);
}

GreedyResult greedy_heuristic(const std::string& referent,
                              const ContextSet& context,
                              const KnowledgeBase& kb,
                              const Description& seed) {
  const Entity& target = check_generation_inputs(referent, context, kb, seed);
  const std::vector<AttributeValue> pool = target.properties();

  GreedyResult result;
  result.description = seed;
  std::set<std::string> remaining = live_distractors(referent, context, kb, seed);

  // Step 1, Check Success: runs before any property is chosen, so a
  // singleton context yields the empty description.
  while (!remaining.empty()) {
    // Step 2, Choose Property: most ruled out wins; the pool is sorted and
    // the comparison strict, so ties fall to the least (attribute, value).
    bool found = false;
    AttributeValue best;
    std::set<std::string> best_ruled;
    for (const auto& property : pool) {
      if (result.description.contains_attribute(property.attribute)) continue;
      std::set<std::string> candidate_ruled = rules_out(property, remaining, kb);
      if (candidate_ruled.empty()) continue;
      if (!found || candidate_ruled.size() > best_ruled.size()) {
        found = true;
        best = property;
        best_ruled = std::move(candidate_ruled);
      }
    }
    if (!found) no_distinguishing(referent);

    // Step 3, Extend Description.
    result.description.append(best);
    for (const auto& id : best_ruled) remaining.erase(id);
    result.trace.steps.push_back(
        {std::move(best), std::move(best_ruled), remaining.size()});
  }
  return result;
}

IncrementalResult incremental(const std::string& referent,
                              const ContextSet& context,
                              const KnowledgeBase& kb,
                              const GenreProfile& genre,
                              const IncrementalOptions& options,
                              const Description& seed) {
  const Entity& target = check_generation_inputs(referent, context, kb, seed);

  IncrementalResult result;
  result.description = seed;
  std::set<std::string> remaining = live_distractors(referent, context, kb, seed);

  auto include_if_useful = [&](const AttributeValue& property, bool fallback) {
    std::set<std::string> ruled = rules_out(property, remaining, kb);
    if (ruled.empty()) return;
    result.description.append(property);
    for (const auto& id : ruled) remaining.erase(id);
    result.trace.steps.push_back({property, std::move(ruled), remaining.size()});
    if (fallback) {
      result.warnings.push_back(
          {property, ImplicatureReason::NotGenrePreferred});
    }
  };

  for (const auto& attribute : genre.preferred_attributes) {
    if (remaining.empty()) break;
    if (result.description.contains_attribute(attribute)) continue;
    auto value = target.value_of(attribute);
    if (!value) continue;
    include_if_useful({attribute, *value}, /*fallback=*/false);
  }

  // Preferred attributes exhausted: fall back to whatever distinguishes.
  // A preferred attribute skipped above stays useless here (its rules-out
  // set only shrinks as the context shrinks), so no fallback inclusion can
  // ever involve a genre-preferred attribute.
  for (const auto& property : target.properties()) {
    if (remaining.empty()) break;
    if (result.description.contains_attribute(property.attribute)) continue;
    include_if_useful(property, /*fallback=*/true);
  }
  if (!remaining.empty()) no_distinguishing(referent);

  if (options.always_include_type) {
    const std::string type_attribute{kTypeAttribute};
    auto value = target.value_of(type_attribute);
    if (value && !result.description.contains_attribute(type_attribute)) {
      AttributeValue item{type_attribute, *value};
      result.description.append(item);
      result.trace.steps.push_back({std::move(item), {}, remaining.size()});
    }
  }
  return result;
}

std::vector<Description> naive_oracle(const std::string& referent,
                                      const ContextSet& context,
                                      const KnowledgeBase& kb,
                                      std::size_t max_properties) {
  const Entity& target = kb.entity(referent);
  if (!context.contains(referent)) {
    throw Error(ErrorCode::ReferentNotInContext,
                "referent '" + referent + "' is not in the context set");
  }
  const std::vector<AttributeValue> properties = target.properties();
  const std::size_t n = properties.size();
  const std::size_t guard = std::min<std::size_t>(max_properties, 63);
  if (n > guard) {
    throw Error(ErrorCode::InstanceTooLarge,
                "referent '" + referent + "' has " + std::to_string(n) +
                    " properties, exceeding the oracle guard of " +
                    std::to_string(guard));
  }

  std::vector<const Entity*> others;
  for (const auto& id : context.members()) {
    if (id != referent) others.push_back(&kb.entity(id));
  }

  // Deliberately shares nothing with full_brevity: plain bitmask subsets
  // with an inline satisfaction test.
  auto distinguishing = [&](unsigned long long mask) {
    for (const Entity* other : others) {
      bool ruled = false;
      for (std::size_t i = 0; i < n && !ruled; ++i) {
        if ((mask >> i) & 1ULL) ruled = !other->has(properties[i]);
      }
      if (!ruled) return false;
    }
    return true;
  };

  const unsigned long long subsets = 1ULL << n;
  std::size_t best = n + 1;
  for (unsigned long long mask = 0; mask < subsets; ++mask) {
    const auto size = static_cast<std::size_t>(std::popcount(mask));
    if (size < best && distinguishing(mask)) best = size;
  }
  if (best > n) no_distinguishing(referent);

  std::vector<Description> result;
  for (unsigned long long mask = 0; mask < subsets; ++mask) {
    if (static_cast<std::size_t>(std::popcount(mask)) != best ||
        !distinguishing(mask)) {
      continue;
    }
    std::vector<AttributeValue> items;
    for (std::size_t i = 0; i < n; ++i) {
      if ((mask >> i) & 1ULL) items.push_back(properties[i]);
    }
    result.push_back(Description(std::move(items)));
  }
  std::sort(result.begin(), result.end(),
            [](const Description& a, const Description& b) {
              return a.items() < b.items();
            });
  return result;
}

}  // namespace refex
