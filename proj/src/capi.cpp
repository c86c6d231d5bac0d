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

#include "refex/refex.h"

#include <set>
#include <string>
#include <utility>
#include <vector>

#include "refex/compare.hpp"
#include "refex/describe.hpp"
#include "refex/error.hpp"
#include "refex/genre.hpp"
#include "refex/goals.hpp"
#include "refex/hearer.hpp"
#include "refex/kb.hpp"
#include "report_json.hpp"

struct refex_kb {
  refex::KnowledgeBase value;
};

struct refex_genre {
  refex::GenreProfile value;
};

struct refex_report {
  std::string json;
};

namespace {

thread_local std::string g_last_error;

refex_status status_from(refex::ErrorCode code) {
  // ErrorCode and refex_status share numbering by construction.
  return static_cast<refex_status>(code);
}

template <typename Fn>
refex_status guarded(Fn&& fn) {
  g_last_error.clear();
  try {
    return fn();
  } catch (const refex::Error& error) {
    g_last_error = error.what();
    return status_from(error.code());
  } catch (const std::exception& error) {
    g_last_error = error.what();
    return REFEX_ERR_INVALID_ARGUMENT;
  }
}

refex_status invalid(const char* message) {
  g_last_error = message;
  return REFEX_ERR_INVALID_ARGUMENT;
}

refex::ContextSet make_context(const refex::KnowledgeBase& kb,
                               const char* const* context_ids,
                               size_t context_count) {
  std::set<std::string> members;
  if (context_count == 0) {
    for (const auto& [id, entity] : kb.entities()) members.insert(id);
  } else {
    if (context_ids == nullptr) {
      throw refex::Error(refex::ErrorCode::InvalidArgument,
                         "context_ids must not be NULL when context_count > 0");
    }
    for (size_t i = 0; i < context_count; ++i) {
      if (context_ids[i] == nullptr) {
        throw refex::Error(refex::ErrorCode::InvalidArgument,
                           "context ids must not be NULL");
      }
      members.insert(context_ids[i]);
    }
  }
  return refex::ContextSet(std::move(members), kb);
}

refex::GenreProfile effective_genre(const refex_genre* genre) {
  if (genre != nullptr) return genre->value;
  return *refex::builtin_genre("casual");
}

refex_report* wrap(nlohmann::json doc) {
  return new refex_report{refex::report::dump(doc)};
}

}  // namespace

extern "C" {

const char* refex_version(void) { return "0.1.0"; }

const char* refex_last_error(void) { return g_last_error.c_str(); }

const char* refex_status_name(refex_status status) {
  if (status == REFEX_OK) return "Ok";
  if (status >= REFEX_ERR_PARSE && status <= REFEX_ERR_INVALID_ARGUMENT) {
    return refex::error_code_name(static_cast<refex::ErrorCode>(status));
  }
  return "Unknown";
}

refex_status refex_kb_parse(const char* json_text, refex_kb** out_kb) {
  if (out_kb == nullptr) return invalid("out_kb must not be NULL");
  *out_kb = nullptr;
  if (json_text == nullptr) return invalid("json_text must not be NULL");
  return guarded([&] {
    *out_kb = new refex_kb{refex::load_kb(json_text)};
    return REFEX_OK;
  });
}

refex_status refex_kb_load_file(const char* path, refex_kb** out_kb) {
  if (out_kb == nullptr) return invalid("out_kb must not be NULL");
  *out_kb = nullptr;
  if (path == nullptr) return invalid("path must not be NULL");
  return guarded([&] {
    *out_kb = new refex_kb{refex::load_kb_file(path)};
    return REFEX_OK;
  });
}

size_t refex_kb_entity_count(const refex_kb* kb) {
  return kb == nullptr ? 0 : kb->value.size();
}

void refex_kb_free(refex_kb* kb) { delete kb; }

refex_status refex_genre_parse(const char* json_text, refex_genre** out_genre) {
  if (out_genre == nullptr) return invalid("out_genre must not be NULL");
  *out_genre = nullptr;
  if (json_text == nullptr) return invalid("json_text must not be NULL");
  return guarded([&] {
    *out_genre = new refex_genre{refex::load_genre(json_text)};
    return REFEX_OK;
  });
}

refex_status refex_genre_load_file(const char* path, refex_genre** out_genre) {
  if (out_genre == nullptr) return invalid("out_genre must not be NULL");
  *out_genre = nullptr;
  if (path == nullptr) return invalid("path must not be NULL");
  return guarded([&] {
    *out_genre = new refex_genre{refex::load_genre_file(path)};
    return REFEX_OK;
  });
}

refex_status refex_genre_builtin(const char* name, refex_genre** out_genre) {
  if (out_genre == nullptr) return invalid("out_genre must not be NULL");
  *out_genre = nullptr;
  if (name == nullptr) return invalid("name must not be NULL");
  auto profile = refex::builtin_genre(name);
  if (!profile) {
    g_last_error = "unknown built-in genre '" + std::string(name) + "'";
    return REFEX_ERR_INVALID_ARGUMENT;
  }
  g_last_error.clear();
  *out_genre = new refex_genre{std::move(*profile)};
  return REFEX_OK;
}

const char* refex_genre_name(const refex_genre* genre) {
  return genre == nullptr ? "" : genre->value.name.c_str();
}

void refex_genre_free(refex_genre* genre) { delete genre; }

refex_status refex_generate(const refex_kb* kb, const char* referent,
                            const char* const* context_ids,
                            size_t context_count, refex_strategy strategy,
                            const refex_genre* genre,
                            const char* const* convey_items,
                            size_t convey_count, int always_include_type,
                            refex_report** out_report) {
  if (out_report == nullptr) return invalid("out_report must not be NULL");
  *out_report = nullptr;
  if (kb == nullptr) return invalid("kb must not be NULL");
  if (referent == nullptr) return invalid("referent must not be NULL");
  if (convey_count > 0 && convey_items == nullptr) {
    return invalid("convey_items must not be NULL when convey_count > 0");
  }

  refex::Strategy chosen;
  switch (strategy) {
    case REFEX_STRATEGY_FULL_BREVITY:
      chosen = refex::Strategy::FullBrevity;
      break;
    case REFEX_STRATEGY_GREEDY:
      chosen = refex::Strategy::Greedy;
      break;
    case REFEX_STRATEGY_INCREMENTAL:
      chosen = refex::Strategy::Incremental;
      break;
    default:
      return invalid("unknown strategy value");
  }

  return guarded([&] {
    std::vector<refex::Goal> goals;
    goals.push_back(refex::Goal::identify(referent));
    for (size_t i = 0; i < convey_count; ++i) {
      if (convey_items[i] == nullptr) {
        throw refex::Error(refex::ErrorCode::InvalidArgument,
                           "convey items must not be NULL");
      }
      goals.push_back(refex::Goal::convey(
          referent, refex::parse_attribute_value(convey_items[i])));
    }
    refex::GoalAgenda agenda(std::move(goals));
    refex::ContextSet context = make_context(kb->value, context_ids, context_count);
    refex::GenreProfile profile = effective_genre(genre);
    refex::IncrementalOptions options;
    options.always_include_type = always_include_type != 0;

    refex::PlanReport plan = refex::plan_description(
        agenda, context, kb->value, profile, chosen, options);
    *out_report = wrap(refex::report::plan_json(plan, profile.name));
    return REFEX_OK;
  });
}

refex_status refex_interpret(const refex_kb* kb, const char* description,
                             const char* const* context_ids,
                             size_t context_count, const char* referent,
                             refex_report** out_report) {
  if (out_report == nullptr) return invalid("out_report must not be NULL");
  *out_report = nullptr;
  if (kb == nullptr) return invalid("kb must not be NULL");
  if (description == nullptr) return invalid("description must not be NULL");

  return guarded([&] {
    refex::Description parsed = refex::Description::parse(description);
    refex::ContextSet context = make_context(kb->value, context_ids, context_count);
    refex::InterpretationReport report = refex::resolve(parsed, context, kb->value);
    if (referent == nullptr) {
      *out_report = wrap(refex::report::interpretation_json(report));
      return REFEX_OK;
    }
    kb->value.entity(referent);  // UnknownEntity for a bad referent
    if (report.outcome != refex::ResolutionOutcome::UniqueReferent ||
        *report.resolved.begin() != referent) {
      // Still hand the resolution back; the caller sees both the status
      // and what the description actually picked out.
      *out_report = wrap(refex::report::interpretation_json(report));
      g_last_error = "description '" + parsed.surface() +
                     "' does not uniquely identify '" + referent + "'";
      return REFEX_ERR_NOT_DISTINGUISHING;
    }
    report.classifications =
        refex::attribute_purposes(parsed, referent, context, kb->value);
    *out_report = wrap(refex::report::interpretation_json(report));
    return REFEX_OK;
  });
}

refex_status refex_compare(const refex_kb* kb, const char* referent,
                           const char* const* context_ids,
                           size_t context_count, const refex_genre* genre,
                           size_t oracle_guard, int with_timings,
                           refex_report** out_report) {
  if (out_report == nullptr) return invalid("out_report must not be NULL");
  *out_report = nullptr;
  if (kb == nullptr) return invalid("kb must not be NULL");
  if (referent == nullptr) return invalid("referent must not be NULL");

  return guarded([&] {
    refex::ContextSet context = make_context(kb->value, context_ids, context_count);
    refex::GenreProfile profile = effective_genre(genre);
    const size_t guard =
        oracle_guard == 0 ? refex::kDefaultOracleGuard : oracle_guard;
    refex::ComparisonReport comparison =
        refex::compare_strategies(referent, context, kb->value, profile, guard);
    *out_report = wrap(refex::report::comparison_json(comparison, profile.name,
                                                      with_timings != 0));
    return REFEX_OK;
  });
}

const char* refex_report_json(const refex_report* report) {
  return report == nullptr ? "" : report->json.c_str();
}

void refex_report_free(refex_report* report) { delete report; }

}  // extern "C"
