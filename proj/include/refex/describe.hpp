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

#ifndef REFEX_DESCRIBE_HPP_
#define REFEX_DESCRIBE_HPP_

#include <cstddef>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "refex/genre.hpp"
#include "refex/kb.hpp"

namespace refex {

/// The semantic content of a referring expression: an ordered, duplicate-free
/// list of properties with at most one value per attribute. Order records
/// inclusion order; satisfaction semantics ignore it.
class Description {
 public:
  Description() = default;
  explicit Description(std::vector<AttributeValue> items);

  /// Parses the surface syntax "attr=value,attr=value". The empty string is
  /// the empty description.
  static Description parse(std::string_view text);

  /// Throws DuplicateAttribute if the item's attribute is already present.
  void append(AttributeValue item);

  bool contains(const AttributeValue& item) const;
  bool contains_attribute(const std::string& attribute) const;

  /// A copy with the first occurrence of `item` removed.
  Description without(const AttributeValue& item) const;

  const std::vector<AttributeValue>& items() const noexcept { return items_; }
  std::vector<AttributeValue> sorted_items() const;
  std::size_t size() const noexcept { return items_.size(); }
  bool empty() const noexcept { return items_.empty(); }

  /// Sorted "attr=value, attr=value" dump; empty string for the empty
  /// description.
  std::string surface() const;

  bool operator==(const Description&) const = default;

 private:
  std::vector<AttributeValue> items_;
};

/// One step of a generation run: the property chosen, the entities it ruled
/// out, and how many context entities remained afterwards.
struct TraceStep {
  AttributeValue property;
  std::set<std::string> ruled_out;
  std::size_t remaining_after = 0;

  bool operator==(const TraceStep&) const = default;
};

struct GenerationTrace {
  std::vector<TraceStep> steps;

  bool operator==(const GenerationTrace&) const = default;
};

struct IncrementalOptions {
  /// Include the referent's "type" value even when it rules out nothing,
  /// appended last if not already chosen.
  bool always_include_type = true;
};

inline constexpr std::string_view kTypeAttribute = "type";

/// Property-count ceiling for the exhaustive oracle.
inline constexpr std::size_t kDefaultOracleGuard = 20;

struct GreedyResult {
  Description description;
  GenerationTrace trace;
};

struct IncrementalResult {
  Description description;
  std::vector<ImplicatureWarning> warnings;
  GenerationTrace trace;
};

/// Exhaustive full-brevity search: returns a distinguishing description of
/// minimum cardinality among all subsets of the referent's properties,
/// enumerating subsets by increasing cardinality and stopping at the first
/// size with a solution. Among same-size candidates the lexicographically
/// least sorted (attribute, value) sequence wins. Exponential in the
/// referent's property count on hard instances.
///
/// A non-empty `seed` fixes mandatory content: the result is the seed plus a
/// minimum-cardinality extension. Every seed property must hold of the
/// referent.
Description full_brevity(const std::string& referent, const ContextSet& context,
                         const KnowledgeBase& kb, const Description& seed = {});

/// The three-step greedy loop: check success, choose the property ruling out
/// the most remaining entities (ties broken by (attribute, value) order),
/// extend the description and shrink the context. Distinguishing but not
/// guaranteed minimal.
GreedyResult greedy_heuristic(const std::string& referent,
                              const ContextSet& context,
                              const KnowledgeBase& kb,
                              const Description& seed = {});

/// Genre-driven incremental strategy: walks the genre's preferred attributes
/// in order, including the referent's value iff it rules out at least one
/// remaining entity, and stops as soon as the description distinguishes.
/// If the preferred attributes are exhausted it falls back to the referent's
/// remaining attributes in lexicographic order, emitting one
/// NotGenrePreferred warning per fallback attribute used.
IncrementalResult incremental(const std::string& referent,
                              const ContextSet& context,
                              const KnowledgeBase& kb,
                              const GenreProfile& genre,
                              const IncrementalOptions& options = {},
                              const Description& seed = {});

/// Independent exhaustive baseline: enumerates every subset of the
/// referent's properties and returns all distinguishing subsets of minimum
/// cardinality, sorted. Shares no search code with full_brevity so the two
/// can cross-check. Refuses instances with more than `max_properties`
/// referent properties (InstanceTooLarge).
std::vector<Description> naive_oracle(const std::string& referent,
                                      const ContextSet& context,
                                      const KnowledgeBase& kb,
                                      std::size_t max_properties = kDefaultOracleGuard);

inline std::set<std::string> satisfiers(const Description& description,
                                        const ContextSet& context,
                                        const KnowledgeBase& kb) {
  return satisfiers(description.items(), context, kb);
}

}  // namespace refex

#endif  // REFEX_DESCRIBE_HPP_
