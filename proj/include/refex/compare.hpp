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

#ifndef REFEX_COMPARE_HPP_
#define REFEX_COMPARE_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "refex/describe.hpp"
#include "refex/goals.hpp"

namespace refex {

struct StrategyOutcome {
  Strategy strategy = Strategy::FullBrevity;
  bool ok = false;
  ErrorCode error{};          // meaningful when !ok
  std::string error_message;  // ditto
  Description description;
  std::vector<ImplicatureWarning> warnings;
  std::uint64_t wall_time_us = 0;
};

struct OracleOutcome {
  bool ok = false;
  ErrorCode error{};
  std::string error_message;
  std::vector<Description> minimal_descriptions;
  std::uint64_t wall_time_us = 0;
};

/// Side-by-side view of the minimality-vs-efficiency trade-off on one
/// instance.
struct ComparisonReport {
  std::vector<StrategyOutcome> strategies;  // full-brevity, greedy, incremental
  OracleOutcome oracle;
  /// Greedy length minus full-brevity length; present only when both
  /// strategies and the oracle succeeded. Never negative.
  std::optional<long> minimality_gap;
};

/// Runs all three strategies plus the exhaustive oracle on one instance.
/// Input errors (unresolvable ids, referent outside the context) throw;
/// per-strategy failures are recorded without aborting the others.
ComparisonReport compare_strategies(const std::string& referent,
                                    const ContextSet& context,
                                    const KnowledgeBase& kb,
                                    const GenreProfile& genre,
                                    std::size_t oracle_guard = kDefaultOracleGuard,
                                    const IncrementalOptions& options = {});

}  // namespace refex

#endif  // REFEX_COMPARE_HPP_
