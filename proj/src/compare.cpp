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

#include "refex/compare.hpp"

#include <chrono>

namespace refex {
namespace {

class Stopwatch {
 public:
  std::uint64_t elapsed_us() const {
    return static_cast<std::uint64_t>(
        std::chrono::duration_cast<std::chrono::microseconds>(
            std::chrono::steady_clock::now() - start_)
            .count());
  }

 private:
  std::chrono::steady_clock::time_point start_ =
      std::chrono::steady_clock::now();
};

}  // namespace

ComparisonReport compare_strategies(const std::string& referent,
                                    const ContextSet& context,
                                    const KnowledgeBase& kb,
                                    const GenreProfile& genre,
                                    std::size_t oracle_guard,
                                    const IncrementalOptions& options) {
  kb.entity(referent);
  if (!context.contains(referent)) {
    throw Error(ErrorCode::ReferentNotInContext,
                "referent '" + referent + "' is not in the context set");
  }

  ComparisonReport report;
  for (Strategy strategy :
       {Strategy::FullBrevity, Strategy::Greedy, Strategy::Incremental}) {
    StrategyOutcome outcome;
    outcome.strategy = strategy;
    Stopwatch watch;
    try {
      switch (strategy) {
        case Strategy::FullBrevity:
          outcome.description = full_brevity(referent, context, kb);
          break;
        case Strategy::Greedy:
          outcome.description =
              greedy_heuristic(referent, context, kb).description;
          break;
        case Strategy::Incremental: {
          IncrementalResult run =
              incremental(referent, context, kb, genre, options);
          outcome.description = std::move(run.description);
          outcome.warnings = std::move(run.warnings);
          break;
        }
      }
      outcome.ok = true;
    } catch (const Error& error) {
      outcome.error = error.code();
      outcome.error_message = error.what();
    }
    outcome.wall_time_us = watch.elapsed_us();
    report.strategies.push_back(std::move(outcome));
  }

  {
    Stopwatch watch;
    try {
      report.oracle.minimal_descriptions =
          naive_oracle(referent, context, kb, oracle_guard);
      report.oracle.ok = true;
    } catch (const Error& error) {
      report.oracle.error = error.code();
      report.oracle.error_message = error.what();
    }
    report.oracle.wall_time_us = watch.elapsed_us();
  }

  const StrategyOutcome& fb = report.strategies[0];
  const StrategyOutcome& greedy = report.strategies[1];
  if (fb.ok && greedy.ok && report.oracle.ok) {
    report.minimality_gap = static_cast<long>(greedy.description.size()) -
                            static_cast<long>(fb.description.size());
  }
  return report;
}

}  // namespace refex
