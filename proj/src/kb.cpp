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

#include "refex/kb.hpp"

#include <cctype>
#include <fstream>
#include <sstream>
#include <utility>

#include "json.hpp"

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

// nlohmann prefixes messages with "[json.exception.parse_error.NNN] ";
// the part after the bracket already carries line/column.
std::string strip_exception_tag(const std::string& what) {
  if (!what.empty() && what.front() == '[') {
    auto pos = what.find("] ");
    if (pos != std::string::npos) return what.substr(pos + 2);
  }
  return what;
}

// SAX builder for the knowledge-base format. A DOM parse would silently
// keep the last of two identical keys, so duplicate entities/attributes
// have to be caught at event level.
class KbBuilder final : public nlohmann::json_sax<nlohmann::json> {
 public:
  std::map<std::string, Entity> take_entities() {
    std::map<std::string, Entity> result;
    for (auto& [id, properties] : raw_) {
      result.emplace(id, Entity(id, std::move(properties)));
    }
    return result;
  }

  bool start_object(std::size_t /*elements*/) override {
    switch (state_) {
      case State::kStart:
        state_ = State::kTop;
        return true;
      case State::kAwaitEntities:
        state_ = State::kEntities;
        return true;
      case State::kAwaitEntity:
        state_ = State::kEntity;
        return true;
      default:
        fail("unexpected object");
    }
  }

  bool end_object() override {
    switch (state_) {
      case State::kEntity:
        state_ = State::kEntities;
        return true;
      case State::kEntities:
        state_ = State::kTop;
        return true;
      case State::kTop:
        if (!seen_entities_) fail("missing required key 'entities'");
        state_ = State::kDone;
        return true;
      default:
        fail("unexpected end of object");
    }
  }

  bool key(string_t& val) override {
    switch (state_) {
      case State::kTop:
        if (val != "entities") fail("unexpected top-level key '" + val + "'");
        if (seen_entities_) fail("duplicate key 'entities'");
        seen_entities_ = true;
        state_ = State::kAwaitEntities;
        return true;
      case State::kEntities:
        if (val.empty()) fail("empty entity id");
        if (raw_.count(val) != 0) {
          throw Error(ErrorCode::DuplicateEntity,
                      "duplicate entity '" + val + "'");
        }
        current_id_ = val;
        raw_[val];
        state_ = State::kAwaitEntity;
        return true;
      case State::kEntity:
        if (val.empty()) {
          fail("empty attribute name in entity '" + current_id_ + "'");
        }
        if (raw_[current_id_].count(val) != 0) {
          throw Error(ErrorCode::DuplicateAttribute,
                      "duplicate attribute '" + val + "' in entity '" +
                          current_id_ + "'");
        }
        current_attribute_ = val;
        return true;
      default:
        fail("unexpected key '" + val + "'");
    }
  }

  bool string(string_t& val) override {
    if (state_ != State::kEntity) fail("unexpected string value");
    if (val.empty()) {
      fail("empty value for attribute '" + current_attribute_ +
           "' in entity '" + current_id_ + "'");
    }
    raw_[current_id_].emplace(current_attribute_, val);
    return true;
  }

  bool null() override { fail("attribute values must be strings"); }
  bool boolean(bool) override { fail("attribute values must be strings"); }
  bool number_integer(number_integer_t) override {
    fail("attribute values must be strings");
  }
  bool number_unsigned(number_unsigned_t) override {
    fail("attribute values must be strings");
  }
  bool number_float(number_float_t, const string_t&) override {
    fail("attribute values must be strings");
  }
  bool binary(binary_t&) override { fail("attribute values must be strings"); }
  bool start_array(std::size_t) override { fail("unexpected array"); }
  bool end_array() override { fail("unexpected end of array"); }

  bool parse_error(std::size_t /*position*/, const std::string& /*last_token*/,
                   const nlohmann::detail::exception& ex) override {
    throw Error(ErrorCode::ParseError, strip_exception_tag(ex.what()));
  }

 private:
  enum class State {
    kStart,
    kTop,
    kAwaitEntities,
    kEntities,
    kAwaitEntity,
    kEntity,
    kDone,
  };

  [[noreturn]] void fail(const std::string& message) const {
    throw Error(ErrorCode::ParseError, message);
  }

  State state_ = State::kStart;
  bool seen_entities_ = false;
  std::string current_id_;
  std::string current_attribute_;
  std::map<std::string, std::map<std::string, std::string>> raw_;
};

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw Error(ErrorCode::IoError,
                "cannot open file '" + path.string() + "'");
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  if (in.bad()) {
    throw Error(ErrorCode::IoError,
                "cannot read file '" + path.string() + "'");
  }
  return std::move(buffer).str();
}

}  // namespace

std::string to_string(const AttributeValue& property) {
  return property.attribute + "=" + property.value;
}

AttributeValue parse_attribute_value(std::string_view text) {
  std::string_view pair = trim(text);
  auto eq = pair.find('=');
  if (eq == std::string_view::npos) {
    throw Error(ErrorCode::ParseError,
                "expected 'attribute=value', got '" + std::string(text) + "'");
  }
  std::string_view attribute = trim(pair.substr(0, eq));
  std::string_view value = trim(pair.substr(eq + 1));
  if (attribute.empty() || value.empty()) {
    throw Error(ErrorCode::ParseError,
                "expected 'attribute=value', got '" + std::string(text) + "'");
  }
  return {std::string(attribute), std::string(value)};
}

Entity::Entity(std::string id, std::map<std::string, std::string> properties)
    : id_(std::move(id)), properties_(std::move(properties)) {
  if (id_.empty()) {
    throw Error(ErrorCode::InvalidArgument, "entity id must be non-empty");
  }
  for (const auto& [attribute, value] : properties_) {
    if (attribute.empty() || value.empty()) {
      throw Error(ErrorCode::InvalidArgument,
                  "entity '" + id_ +
                      "' has an empty attribute name or value");
    }
  }
}

bool Entity::has(const AttributeValue& property) const {
  auto it = properties_.find(property.attribute);
  return it != properties_.end() && it->second == property.value;
}

std::optional<std::string> Entity::value_of(
    const std::string& attribute) const {
  auto it = properties_.find(attribute);
  if (it == properties_.end()) return std::nullopt;
  return it->second;
}

std::vector<AttributeValue> Entity::properties() const {
  std::vector<AttributeValue> result;
  result.reserve(properties_.size());
  for (const auto& [attribute, value] : properties_) {
    result.push_back({attribute, value});
  }
  return result;  // map order == sorted (attribute, value): one value per attribute
}

KnowledgeBase::KnowledgeBase(std::map<std::string, Entity> entities)
    : entities_(std::move(entities)) {
  for (const auto& [id, entity] : entities_) {
    if (id != entity.id()) {
      throw Error(ErrorCode::InvalidArgument,
                  "entity map key '" + id + "' does not match entity id '" +
                      entity.id() + "'");
    }
  }
}

const Entity& KnowledgeBase::entity(const std::string& id) const {
  auto it = entities_.find(id);
  if (it == entities_.end()) {
    throw Error(ErrorCode::UnknownEntity, "unknown entity '" + id + "'");
  }
  return it->second;
}

bool KnowledgeBase::contains(const std::string& id) const {
  return entities_.count(id) != 0;
}

std::string KnowledgeBase::to_json() const {
  nlohmann::json doc;
  doc["entities"] = nlohmann::json::object();
  for (const auto& [id, entity] : entities_) {
    nlohmann::json& node = doc["entities"][id] = nlohmann::json::object();
    for (const auto& property : entity.properties()) {
      node[property.attribute] = property.value;
    }
  }
  return doc.dump(2) + "\n";
}

ContextSet::ContextSet(std::set<std::string> member_ids,
                       const KnowledgeBase& kb)
    : members_(std::move(member_ids)) {
  if (members_.empty()) {
    throw Error(ErrorCode::InvalidArgument, "context set must be non-empty");
  }
  for (const auto& id : members_) {
    kb.entity(id);  // throws UnknownEntity
  }
}

bool ContextSet::contains(const std::string& id) const {
  return members_.count(id) != 0;
}

KnowledgeBase load_kb(std::string_view json_text) {
  KbBuilder builder;
  nlohmann::json::sax_parse(json_text, &builder);
  return KnowledgeBase(builder.take_entities());
}

KnowledgeBase load_kb_file(const std::filesystem::path& path) {
  return load_kb(read_file(path));
}

std::set<std::string> satisfiers(const std::vector<AttributeValue>& description,
                                 const ContextSet& context,
                                 const KnowledgeBase& kb) {
  std::set<std::string> result;
  for (const auto& id : context.members()) {
    const Entity& entity = kb.entity(id);
    bool all = true;
    for (const auto& property : description) {
      if (!entity.has(property)) {
        all = false;
        break;
      }
    }
    if (all) result.insert(id);
  }
  return result;
}

std::set<std::string> rules_out(const AttributeValue& property,
                                const std::set<std::string>& remaining,
                                const KnowledgeBase& kb) {
  std::set<std::string> result;
  for (const auto& id : remaining) {
    if (!kb.entity(id).has(property)) result.insert(id);
  }
  return result;
}

}  // namespace refex
