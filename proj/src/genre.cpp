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

#include "refex/genre.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "refex/describe.hpp"

namespace refex {
namespace {

std::string strip_exception_tag(const std::string& what) {
  if (!what.empty() && what.front() == '[') {
    auto pos = what.find("] ");
    if (pos != std::string::npos) return what.substr(pos + 2);
  }
  return what;
}

[[noreturn]] void bad_profile(const std::string& message) {
  throw Error(ErrorCode::ParseError, message);
}

}  // namespace

bool GenreProfile::prefers(const std::string& attribute) const {
  return std::find(preferred_attributes.begin(), preferred_attributes.end(),
                   attribute) != preferred_attributes.end();
}

std::string GenreProfile::to_json() const {
  nlohmann::json doc;
  doc["name"] = name;
  doc["preferred_attributes"] = preferred_attributes;
  return doc.dump(2) + "\n";
}

GenreProfile load_genre(std::string_view json_text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::parse_error& ex) {
    throw Error(ErrorCode::ParseError, strip_exception_tag(ex.what()));
  }
  if (!doc.is_object()) bad_profile("genre profile must be a JSON object");
  for (const auto& [key, value] : doc.items()) {
    if (key != "name" && key != "preferred_attributes") {
      bad_profile("unexpected key '" + key + "' in genre profile");
    }
  }
  if (!doc.contains("name") || !doc["name"].is_string()) {
    bad_profile("genre profile requires a string 'name'");
  }
  if (!doc.contains("preferred_attributes") ||
      !doc["preferred_attributes"].is_array()) {
    bad_profile("genre profile requires an array 'preferred_attributes'");
  }

  GenreProfile profile;
  profile.name = doc["name"].get<std::string>();
  if (profile.name.empty()) bad_profile("genre name must be non-empty");
  for (const auto& element : doc["preferred_attributes"]) {
    if (!element.is_string()) {
      bad_profile("preferred_attributes entries must be strings");
    }
    std::string attribute = element.get<std::string>();
    if (attribute.empty()) bad_profile("preferred attribute must be non-empty");
    if (profile.prefers(attribute)) {
      bad_profile("duplicate preferred attribute '" + attribute + "'");
    }
    profile.preferred_attributes.push_back(std::move(attribute));
  }
  return profile;
}

GenreProfile load_genre_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw Error(ErrorCode::IoError, "cannot open file '" + path.string() + "'");
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  if (in.bad()) {
    throw Error(ErrorCode::IoError, "cannot read file '" + path.string() + "'");
  }
  return load_genre(buffer.str());
}

std::optional<GenreProfile> builtin_genre(std::string_view name) {
  // Illustrative defaults, not empirical data.
  if (name == "casual") {
    return GenreProfile{"casual", {"type", "colour", "size"}};
  }
  if (name == "inventory") {
    return GenreProfile{"inventory", {"type", "manufacturer", "colour"}};
  }
  return std::nullopt;
}

const char* implicature_reason_name(ImplicatureReason reason) {
  switch (reason) {
    case ImplicatureReason::NotGenrePreferred:
      return "NotGenrePreferred";
    case ImplicatureReason::SurplusToIdentification:
      return "SurplusToIdentification";
  }
  return "Unknown";
}

std::vector<ImplicatureWarning> implicature_risk(const Description& description,
                                                 const std::string& referent,
                                                 const ContextSet& context,
                                                 const KnowledgeBase& kb,
                                                 const GenreProfile& genre) {
  kb.entity(referent);
  const std::set<std::string> only_referent{referent};
  if (satisfiers(description, context, kb) != only_referent) {
    throw Error(ErrorCode::NotDistinguishing,
                "description '" + description.surface() +
                    "' does not uniquely identify '" + referent + "'");
  }

  std::vector<ImplicatureWarning> warnings;
  for (const auto& item : description.items()) {
    if (!genre.prefers(item.attribute)) {
      warnings.push_back({item, ImplicatureReason::NotGenrePreferred});
    }
    // Surplus needs BOTH: inert against the whole context, and removable.
    // (Redundant-but-helpful properties get neither warning.)
    if (rules_out(item, context.members(), kb).empty() &&
        satisfiers(description.without(item), context, kb) == only_referent) {
      warnings.push_back({item, ImplicatureReason::SurplusToIdentification});
    }
  }
  return warnings;
}

}  // namespace refex
