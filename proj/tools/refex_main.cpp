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

// Command-line front end. Deliberately a pure consumer of the C API: every
// result is rendered from the library's JSON reports, so anything shown here
// is reachable by any other binding as well.

#include <cstdlib>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "refex/refex.h"

namespace {

struct KbDeleter {
  void operator()(refex_kb* kb) const { refex_kb_free(kb); }
};
struct GenreDeleter {
  void operator()(refex_genre* genre) const { refex_genre_free(genre); }
};
struct ReportDeleter {
  void operator()(refex_report* report) const { refex_report_free(report); }
};

using KbHandle = std::unique_ptr<refex_kb, KbDeleter>;
using GenreHandle = std::unique_ptr<refex_genre, GenreDeleter>;
using ReportHandle = std::unique_ptr<refex_report, ReportDeleter>;

int exit_code_for(refex_status status) {
  switch (status) {
    case REFEX_OK:
      return 0;
    case REFEX_ERR_NO_DISTINGUISHING_DESCRIPTION:
    case REFEX_ERR_NOT_DISTINGUISHING:
      return 2;
    case REFEX_ERR_QUALITY_VIOLATION:
      return 3;
    default:
      return 1;
  }
}

void print_error(refex_status status) {
  std::cerr << "error: " << refex_status_name(status) << ": "
            << refex_last_error() << "\n";
}

int fail(refex_status status) {
  print_error(status);
  return exit_code_for(status);
}

std::vector<std::string> split_csv(const std::string& text) {
  std::vector<std::string> pieces;
  std::string piece;
  std::istringstream in(text);
  while (std::getline(in, piece, ',')) pieces.push_back(piece);
  if (!text.empty() && text.back() == ',') pieces.push_back("");
  return pieces;
}

// Shared option plumbing: a context id list and the C-pointer view the API
// wants. An empty list means "every entity in the knowledge base".
struct ContextArg {
  std::vector<std::string> ids;
  std::vector<const char*> pointers;

  bool parse(const std::string& csv) {
    if (csv.empty()) return true;
    for (auto& id : split_csv(csv)) {
      if (id.empty()) {
        std::cerr << "error: InvalidArgument: empty context id\n";
        return false;
      }
      ids.push_back(id);
    }
    for (const auto& id : ids) pointers.push_back(id.c_str());
    return true;
  }

  const char* const* data() const {
    return pointers.empty() ? nullptr : pointers.data();
  }
  size_t count() const { return pointers.size(); }
};

KbHandle load_kb_arg(const std::string& path, refex_status& status) {
  refex_kb* kb = nullptr;
  status = refex_kb_load_file(path.c_str(), &kb);
  return KbHandle(kb);
}

// A genre argument is a built-in name first, a file path second.
GenreHandle load_genre_arg(const std::string& name_or_path,
                           refex_status& status) {
  refex_genre* genre = nullptr;
  if (refex_genre_builtin(name_or_path.c_str(), &genre) == REFEX_OK) {
    status = REFEX_OK;
    return GenreHandle(genre);
  }
  status = refex_genre_load_file(name_or_path.c_str(), &genre);
  return GenreHandle(genre);
}

std::string item_surface(const nlohmann::json& item) {
  return item.at("attribute").get<std::string>() + "=" +
         item.at("value").get<std::string>();
}

void print_warnings(const nlohmann::json& warnings) {
  for (const auto& warning : warnings) {
    std::cerr << "warning: " << warning.at("message").get<std::string>()
              << "\n";
  }
}

std::string rtrim(std::string line) {
  while (!line.empty() && line.back() == ' ') line.pop_back();
  return line;
}

std::string pad(const std::string& text, std::size_t width) {
  std::string out = text;
  while (out.size() < width) out += ' ';
  return out;
}

int run_generate(const std::string& kb_path, const std::string& referent,
                 const std::string& context_csv, const std::string& strategy,
                 const std::string& genre_arg,
                 const std::vector<std::string>& convey, bool no_type,
                 bool json) {
  refex_status status = REFEX_OK;
  KbHandle kb = load_kb_arg(kb_path, status);
  if (!kb) return fail(status);

  ContextArg context;
  if (!context.parse(context_csv)) return 1;

  GenreHandle genre = load_genre_arg(genre_arg, status);
  if (!genre) return fail(status);

  refex_strategy chosen = REFEX_STRATEGY_GREEDY;
  if (strategy == "full-brevity") {
    chosen = REFEX_STRATEGY_FULL_BREVITY;
  } else if (strategy == "greedy") {
    chosen = REFEX_STRATEGY_GREEDY;
  } else if (strategy == "incremental") {
    chosen = REFEX_STRATEGY_INCREMENTAL;
  }

  std::vector<std::string> convey_items;
  for (const auto& entry : convey) {
    for (auto& piece : split_csv(entry)) convey_items.push_back(piece);
  }
  std::vector<const char*> convey_pointers;
  for (const auto& item : convey_items) convey_pointers.push_back(item.c_str());

  refex_report* raw = nullptr;
  status = refex_generate(
      kb.get(), referent.c_str(), context.data(), context.count(), chosen,
      genre.get(), convey_pointers.empty() ? nullptr : convey_pointers.data(),
      convey_pointers.size(), no_type ? 0 : 1, &raw);
  ReportHandle report(raw);
  if (status != REFEX_OK) return fail(status);

  if (json) {
    std::cout << refex_report_json(report.get());
    return 0;
  }
  nlohmann::json doc = nlohmann::json::parse(refex_report_json(report.get()));
  std::cout << doc.at("description").at("surface").get<std::string>() << "\n";
  print_warnings(doc.at("warnings"));
  return 0;
}

int run_interpret(const std::string& kb_path, const std::string& description,
                  const std::string& context_csv, const std::string& referent,
                  bool json) {
  refex_status status = REFEX_OK;
  KbHandle kb = load_kb_arg(kb_path, status);
  if (!kb) return fail(status);

  ContextArg context;
  if (!context.parse(context_csv)) return 1;

  refex_report* raw = nullptr;
  status = refex_interpret(kb.get(), description.c_str(), context.data(),
                           context.count(),
                           referent.empty() ? nullptr : referent.c_str(), &raw);
  ReportHandle report(raw);
  if (!report) return fail(status);  // NotDistinguishing still has a report

  if (json) {
    std::cout << refex_report_json(report.get());
  } else {
    nlohmann::json doc = nlohmann::json::parse(refex_report_json(report.get()));
    std::cout << "outcome: " << doc.at("outcome").get<std::string>() << "\n";
    std::string resolved;
    for (const auto& id : doc.at("resolved")) {
      if (!resolved.empty()) resolved += ", ";
      resolved += id.get<std::string>();
    }
    std::cout << "resolved: " << (resolved.empty() ? "(none)" : resolved)
              << "\n";
    const auto& classifications = doc.at("classifications");
    if (!classifications.empty()) {
      std::cout << "purposes:\n";
      for (const auto& entry : classifications) {
        std::cout << "  " << item_surface(entry.at("item")) << ": "
                  << entry.at("purpose").get<std::string>() << "\n";
      }
    }
  }
  if (status != REFEX_OK) print_error(status);
  return exit_code_for(status);
}

int run_compare(const std::string& kb_path, const std::string& referent,
                const std::string& context_csv, const std::string& genre_arg,
                bool timings, bool json) {
  refex_status status = REFEX_OK;
  KbHandle kb = load_kb_arg(kb_path, status);
  if (!kb) return fail(status);

  ContextArg context;
  if (!context.parse(context_csv)) return 1;

  GenreHandle genre = load_genre_arg(genre_arg, status);
  if (!genre) return fail(status);

  size_t oracle_guard = 0;  // library default
  if (const char* env = std::getenv("REFEX_ORACLE_GUARD")) {
    std::string text(env);
    if (text.empty() ||
        text.find_first_not_of("0123456789") != std::string::npos) {
      std::cerr << "error: InvalidArgument: REFEX_ORACLE_GUARD must be a "
                   "non-negative integer\n";
      return 1;
    }
    try {
      oracle_guard = std::stoull(text);
    } catch (const std::exception&) {
      std::cerr << "error: InvalidArgument: REFEX_ORACLE_GUARD is out of "
                   "range\n";
      return 1;
    }
  }

  refex_report* raw = nullptr;
  status = refex_compare(kb.get(), referent.c_str(), context.data(),
                         context.count(), genre.get(), oracle_guard,
                         timings ? 1 : 0, &raw);
  ReportHandle report(raw);
  if (status != REFEX_OK) return fail(status);

  if (json) {
    std::cout << refex_report_json(report.get());
    return 0;
  }

  nlohmann::json doc = nlohmann::json::parse(refex_report_json(report.get()));
  std::cout << rtrim(pad("strategy", 14) + pad("ok", 4) + pad("length", 8) +
                     "description")
            << "\n";
  for (const auto& entry : doc.at("strategies")) {
    std::string row = pad(entry.at("strategy").get<std::string>(), 14);
    if (entry.at("ok").get<bool>()) {
      row += pad("yes", 4);
      row += pad(std::to_string(entry.at("length").get<std::size_t>()), 8);
      row += entry.at("description").at("surface").get<std::string>();
      print_warnings(entry.at("warnings"));
    } else {
      row += pad("no", 4);
      row += pad("-", 8);
      row += entry.at("error").get<std::string>() + ": " +
             entry.at("message").get<std::string>();
    }
    std::cout << rtrim(row) << "\n";
  }
  const auto& oracle = doc.at("oracle");
  if (oracle.at("ok").get<bool>()) {
    const auto& minimal = oracle.at("minimal_descriptions");
    std::size_t length =
        minimal.empty() ? 0 : minimal[0].at("items").size();
    std::cout << "oracle: " << minimal.size()
              << " minimal description(s) of length " << length << "\n";
  } else {
    std::cout << "oracle: " << oracle.at("error").get<std::string>() << ": "
              << oracle.at("message").get<std::string>() << "\n";
  }
  if (doc.contains("minimality_gap")) {
    std::cout << "minimality gap (greedy - full-brevity): "
              << doc.at("minimality_gap").get<long>() << "\n";
  }
  if (timings) {
    for (const auto& entry : doc.at("strategies")) {
      std::cout << "timing: " << entry.at("strategy").get<std::string>() << " "
                << entry.at("wall_time_us").get<std::uint64_t>() << " us\n";
    }
    std::cout << "timing: oracle "
              << oracle.at("wall_time_us").get<std::uint64_t>() << " us\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Referring-expression engine: generate distinguishing "
               "descriptions, interpret them hearer-side, and compare "
               "content-determination strategies."};
  app.require_subcommand(1);

  std::string kb_path;
  std::string referent;
  std::string context_csv;
  std::string strategy = "greedy";
  std::string genre_arg = "casual";
  std::string description_text;
  std::vector<std::string> convey;
  bool no_type = false;
  bool json = false;
  bool timings = false;

  const std::string genre_help =
      "Built-in genre name (casual, inventory) or path to a genre JSON file";
  const std::string context_help =
      "Comma-separated entity ids forming the context set "
      "(default: every entity in the knowledge base)";

  CLI::App* generate =
      app.add_subcommand("generate", "Generate a distinguishing description");
  generate->add_option("--kb", kb_path, "Path to the knowledge-base JSON file")
      ->required();
  generate->add_option("--referent", referent, "Intended referent id")
      ->required();
  generate->add_option("--context", context_csv, context_help);
  generate
      ->add_option("--strategy", strategy,
                   "Content-determination strategy (default: greedy)")
      ->check(CLI::IsMember({"full-brevity", "greedy", "incremental"}));
  generate->add_option("--genre", genre_arg, genre_help);
  generate->add_option(
      "--convey", convey,
      "Convey goal payload 'attribute=value' (repeatable, comma-separable)");
  generate->add_flag("--no-type", no_type,
                     "Disable the always-include-type option of the "
                     "incremental strategy");
  generate->add_flag("--json", json, "Emit the full plan report as JSON");

  CLI::App* interpret = app.add_subcommand(
      "interpret", "Resolve a description against a context, hearer-side");
  interpret
      ->add_option("--kb", kb_path, "Path to the knowledge-base JSON file")
      ->required();
  interpret
      ->add_option("description", description_text,
                   "Comma-separated 'attribute=value' pairs")
      ->required();
  interpret->add_option("--context", context_csv, context_help);
  interpret->add_option("--referent", referent,
                        "Classify each descriptor's purpose against this "
                        "intended referent");
  interpret->add_flag("--json", json, "Emit the interpretation report as JSON");

  CLI::App* compare = app.add_subcommand(
      "compare", "Run all strategies plus the exhaustive oracle side by side");
  compare->add_option("--kb", kb_path, "Path to the knowledge-base JSON file")
      ->required();
  compare->add_option("--referent", referent, "Intended referent id")
      ->required();
  compare->add_option("--context", context_csv, context_help);
  compare->add_option("--genre", genre_arg, genre_help);
  compare->add_flag("--timings", timings,
                    "Include wall-clock timings (makes output nondeterministic)");
  compare->add_flag("--json", json, "Emit the comparison report as JSON");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& error) {
    int code = app.exit(error);
    return code == 0 ? 0 : 1;  // input errors are exit 1, help/version 0
  }

  if (generate->parsed()) {
    return run_generate(kb_path, referent, context_csv, strategy, genre_arg,
                        convey, no_type, json);
  }
  if (interpret->parsed()) {
    return run_interpret(kb_path, description_text, context_csv, referent,
                         json);
  }
  return run_compare(kb_path, referent, context_csv, genre_arg, timings, json);
}
