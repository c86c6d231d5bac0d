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

#ifndef REFEX_KB_HPP_
#define REFEX_KB_HPP_

#include <compare>
#include <filesystem>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "refex/error.hpp"

namespace refex {

/// One attribute-value property of an entity; the atomic unit of
/// description content. Comparison is case-sensitive string equality,
/// ordered by (attribute, value).
struct AttributeValue {
  std::string attribute;
  std::string value;

  auto operator<=>(const AttributeValue&) const = default;
};

/// Renders a property as "attribute=value".
std::string to_string(const AttributeValue& property);

/// Parses "attribute=value". Leading/trailing whitespace around the pair and
/// around the two parts is ignored; both parts must be non-empty.
AttributeValue parse_attribute_value(std::string_view text);

/// An entity with at most one value per attribute. Entities are immutable
/// once constructed; an absent attribute never satisfies any value of it.
class Entity {
 public:
  Entity(std::string id, std::map<std::string, std::string> properties);

  const std::string& id() const noexcept { return id_; }

  bool has(const AttributeValue& property) const;
  std::optional<std::string> value_of(const std::string& attribute) const;

  /// All properties, sorted by (attribute, value).
  std::vector<AttributeValue> properties() const;
  std::size_t property_count() const noexcept { return properties_.size(); }

  bool operator==(const Entity&) const = default;

 private:
  std::string id_;
  std::map<std::string, std::string> properties_;
};

/// Immutable map from entity id to entity. Lookup of an absent id is an
/// error, never a silent default.
class KnowledgeBase {
 public:
  KnowledgeBase() = default;
  explicit KnowledgeBase(std::map<std::string, Entity> entities);

  /// Throws ErrorCode::UnknownEntity for an absent id.
  const Entity& entity(const std::string& id) const;

  bool contains(const std::string& id) const;
  std::size_t size() const noexcept { return entities_.size(); }
  const std::map<std::string, Entity>& entities() const noexcept {
    return entities_;
  }

  /// Canonical JSON rendering: keys in sorted order, two-space indent,
  /// trailing newline. Loading the output reproduces this knowledge base.
  std::string to_json() const;

  bool operator==(const KnowledgeBase&) const = default;

 private:
  std::map<std::string, Entity> entities_;
};

/// The set of entities a referent must be distinguished from. Non-empty, and
/// every member id resolves in the knowledge base it was built against.
class ContextSet {
 public:
  ContextSet(std::set<std::string> member_ids, const KnowledgeBase& kb);

  const std::set<std::string>& members() const noexcept { return members_; }
  bool contains(const std::string& id) const;
  std::size_t size() const noexcept { return members_.size(); }

 private:
  std::set<std::string> members_;
};

/// Loads a knowledge base from a JSON document of the form
///   { "entities": { "<id>": { "<attribute>": "<value>", ... }, ... } }
/// Malformed documents raise ParseError with line/position information;
/// repeated entity ids raise DuplicateEntity; a repeated attribute within
/// one entity raises DuplicateAttribute.
KnowledgeBase load_kb(std::string_view json_text);
KnowledgeBase load_kb_file(const std::filesystem::path& path);

/// The context members possessing every property in `description`.
/// The empty description is satisfied by every context member.
std::set<std::string> satisfiers(const std::vector<AttributeValue>& description,
                                 const ContextSet& context,
                                 const KnowledgeBase& kb);

/// The subset of `remaining` for which `property` does NOT hold. An entity
/// lacking the attribute counts as not holding it.
std::set<std::string> rules_out(const AttributeValue& property,
                                const std::set<std::string>& remaining,
                                const KnowledgeBase& kb);

}  // namespace refex

#endif  // REFEX_KB_HPP_
