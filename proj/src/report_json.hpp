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

// Internal JSON renderings of the engine's report types. This is the wire
// format of the C API (and therefore of the CLI); keys come out sorted, so
// identical inputs dump byte-identically.

#ifndef REFEX_SRC_REPORT_JSON_HPP_
#define REFEX_SRC_REPORT_JSON_HPP_

#include <string>

#include "json.hpp"
#include "refex/compare.hpp"
#include "refex/describe.hpp"
#include "refex/goals.hpp"
#include "refex/hearer.hpp"

namespace refex::report {

nlohmann::json attribute_value_json(const AttributeValue& item);
nlohmann::json description_json(const Description& description);
nlohmann::json trace_json(const GenerationTrace& trace);
nlohmann::json warnings_json(const std::vector<ImplicatureWarning>& warnings,
                             const std::string& genre_name);
nlohmann::json interpretation_json(const InterpretationReport& report);
nlohmann::json plan_json(const PlanReport& report,
                         const std::string& genre_name);
nlohmann::json comparison_json(const ComparisonReport& report,
                               const std::string& genre_name,
                               bool with_timings);

std::string dump(const nlohmann::json& doc);

}  // namespace refex::report

#endif  // REFEX_SRC_REPORT_JSON_HPP_
