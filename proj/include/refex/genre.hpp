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

#ifndef REFEX_GENRE_HPP_
#define REFEX_GENRE_HPP_

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "refex/kb.hpp"

namespace refex {

class Description;

/// A genre's ordered list of attributes conventionally used for
/// identification-only reference. Order is the incremental strategy's
/// iteration order.
struct GenreProfile {
  std::string name;
  std::vector<std::string> preferred_attributes;

  bool prefers(const std::string& attribute) const;

  /// Canonical JSON rendering (sorted keys, two-space indent, newline).
  std::string to_json() const;
};

/// Parses { "name": "<genre>", "preferred_attributes": ["<attr>", ...] }.
GenreProfile load_genre(std::string_view json_text);
GenreProfile load_genre_file(const std::filesystem::path& path);

/// Profiles shipped with the engine: "casual" = [type, colour, size] and
/// "inventory" = [type, manufacturer, colour]. These are illustrative
/// defaults, not empirical data.
std::optional<GenreProfile> builtin_genre(std::string_view name);

enum class ImplicatureReason {
  NotGenrePreferred,
  SurplusToIdentification,
};

const char* implicature_reason_name(ImplicatureReason reason);

struct ImplicatureWarning {
  AttributeValue item;
  ImplicatureReason reason;

  bool operator==(const ImplicatureWarning&) const = default;
};

/// Advisory analysis of a finished description: flags items whose attribute
/// is outside the genre's preferred list, and items that both rule out no
/// context entity and can be removed without losing distinguishingness.
/// Never blocks or alters generation. The description must be distinguishing
/// for `referent` (NotDistinguishing otherwise).
std::vector<ImplicatureWarning> implicature_risk(const Description& description,
                                                 const std::string& referent,
                                                 const ContextSet& context,
                                                 const KnowledgeBase& kb,
                                                 const GenreProfile& genre);

}  // namespace refex

#endif  // REFEX_GENRE_HPP_
