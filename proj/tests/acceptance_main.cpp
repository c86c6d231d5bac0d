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

// The release gate. Each criterion prints exactly one PASS/FAIL line; the
// exit code is the number of failed criteria. Seeds are fixed so a failure
// reproduces exactly.

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <cstdio>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "refex/compare.hpp"
#include "refex/describe.hpp"
#include "refex/genre.hpp"
#include "refex/goals.hpp"
#include "refex/hearer.hpp"
#include "refex/kb.hpp"
#include "support/instance_gen.hpp"

using refex::AttributeValue;
using refex::ContextSet;
using refex::Description;
using refex::Error;
using refex::ErrorCode;
using refex::GenerationTrace;
using refex::Goal;
using refex::GoalAgenda;
using refex::KnowledgeBase;
using refex::Strategy;

namespace {

constexpr std::uint32_t kBaseSeed = 20260814;
constexpr int kSweepCount = 1200;

std::string data_path(const std::string& name) {
  return std::string(REFEX_DATA_DIR) + "/" + name;
}

struct StrategyRun {
  bool ndd = false;  // NoDistinguishingDescription
  Description description;
  GenerationTrace trace;
};

struct InstanceRun {
  refex_testing::RandomInstance instance;
  StrategyRun fb;
  StrategyRun greedy;
  StrategyRun incr;
};

// Shared across criteria: criterion 1 generates, later criteria reuse.
std::vector<InstanceRun> g_sweep;
// Parallel to g_sweep: nullopt = oracle reported no distinguishing
// description. Filled by criterion 2.
std::vector<std::optional<std::vector<Description>>> g_oracle;

struct Outcome {
  bool pass = false;
  std::string detail;
};

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                       start)
      .count();
}

// Runs one strategy, mapping NoDistinguishingDescription to a flag and
// letting every other error escape to fail the criterion loudly.
template <typename Fn>
StrategyRun attempt(Fn&& fn) {
  StrategyRun run;
  try {
    fn(run);
  } catch (const Error& error) {
    if (error.code() != ErrorCode::NoDistinguishingDescription) throw;
    run.ndd = true;
  }
  return run;
}

Outcome criterion_soundness() {
  auto start = std::chrono::steady_clock::now();
  int violations = 0;
  int descriptions = 0;
  g_sweep.reserve(kSweepCount);
  for (int i = 0; i < kSweepCount; ++i) {
    std::mt19937 rng(kBaseSeed + static_cast<std::uint32_t>(i));
    InstanceRun run;
    run.instance = refex_testing::random_instance(rng);
    ContextSet context = refex_testing::context_of(run.instance);
    const KnowledgeBase& kb = run.instance.kb;
    const std::string& r = run.instance.referent;

    run.fb = attempt([&](StrategyRun& out) {
      out.description = refex::full_brevity(r, context, kb);
    });
    run.greedy = attempt([&](StrategyRun& out) {
      auto result = refex::greedy_heuristic(r, context, kb);
      out.description = std::move(result.description);
      out.trace = std::move(result.trace);
    });
    run.incr = attempt([&](StrategyRun& out) {
      auto result =
          refex::incremental(r, context, kb, run.instance.genre);
      out.description = std::move(result.description);
      out.trace = std::move(result.trace);
    });

    for (const StrategyRun* sr : {&run.fb, &run.greedy, &run.incr}) {
      if (sr->ndd) continue;
      ++descriptions;
      auto report = refex::resolve(sr->description, context, kb);
      if (report.outcome != refex::ResolutionOutcome::UniqueReferent ||
          report.resolved != std::set<std::string>{r}) {
        ++violations;
      }
    }
    g_sweep.push_back(std::move(run));
  }
  double elapsed = seconds_since(start);
  std::ostringstream detail;
  detail.precision(2);
  detail << std::fixed << kSweepCount << " instances, " << descriptions
         << " descriptions checked, " << violations << " violations, "
         << elapsed << " s";
  return {violations == 0 && elapsed < 10.0, detail.str()};
}

Outcome criterion_oracle_equivalence() {
  int successes = 0;
  int cardinality_mismatches = 0;
  int membership_misses = 0;
  g_oracle.reserve(g_sweep.size());
  for (const InstanceRun& run : g_sweep) {
    ContextSet context = refex_testing::context_of(run.instance);
    std::optional<std::vector<Description>> minimal;
    try {
      minimal = refex::naive_oracle(run.instance.referent, context,
                                    run.instance.kb);
    } catch (const Error& error) {
      if (error.code() != ErrorCode::NoDistinguishingDescription) throw;
    }
    g_oracle.push_back(minimal);
    if (run.fb.ndd) continue;
    ++successes;
    if (!minimal.has_value() || minimal->empty()) {
      ++cardinality_mismatches;
      continue;
    }
    if (run.fb.description.size() != (*minimal)[0].size()) {
      ++cardinality_mismatches;
    }
    if (std::find(minimal->begin(), minimal->end(), run.fb.description) ==
        minimal->end()) {
      ++membership_misses;
    }
  }
  std::ostringstream detail;
  detail << successes
         << " solvable instances, cardinality mismatches: "
         << cardinality_mismatches
         << ", minimal-set membership misses: " << membership_misses;
  return {cardinality_mismatches == 0 && membership_misses == 0,
          detail.str()};
}

Outcome criterion_greedy_nonminimality() {
  KnowledgeBase kb = refex::load_kb_file(data_path("kb/greedy_trap.json"));
  ContextSet context({"d1", "d2", "d3", "d4", "d5", "d6", "target"}, kb);
  Description minimal = refex::full_brevity("target", context, kb);
  auto greedy = refex::greedy_heuristic("target", context, kb);
  bool fixture_exact =
      minimal.items() ==
          std::vector<AttributeValue>{{"alpha", "yes"}, {"beta", "yes"}} &&
      greedy.description.size() == 3 && minimal.size() == 2;

  // The sweep must exhibit the gap somewhere too; report the seed that
  // reproduces the first gapped instance.
  std::optional<std::uint32_t> gap_seed;
  int gapped = 0;
  for (std::size_t i = 0; i < g_sweep.size(); ++i) {
    const InstanceRun& run = g_sweep[i];
    if (run.fb.ndd || run.greedy.ndd) continue;
    if (run.greedy.description.size() > run.fb.description.size()) {
      ++gapped;
      if (!gap_seed) gap_seed = kBaseSeed + static_cast<std::uint32_t>(i);
    }
  }
  for (std::uint32_t extra = 0; !gap_seed && extra < 100000; ++extra) {
    std::uint32_t seed = kBaseSeed + kSweepCount + extra;
    std::mt19937 rng(seed);
    auto instance = refex_testing::random_instance(rng);
    ContextSet extra_context = refex_testing::context_of(instance);
    try {
      Description fb =
          refex::full_brevity(instance.referent, extra_context, instance.kb);
      auto g = refex::greedy_heuristic(instance.referent, extra_context,
                                       instance.kb);
      if (g.description.size() > fb.size()) gap_seed = seed;
    } catch (const Error&) {
      continue;
    }
  }

  std::ostringstream detail;
  detail << "trap fixture greedy=" << greedy.description.size()
         << " vs minimal=" << minimal.size() << "; sweep gap on " << gapped
         << " instances";
  if (gap_seed) detail << ", first at seed " << *gap_seed;
  return {fixture_exact && gap_seed.has_value(), detail.str()};
}

Outcome criterion_failure_agreement() {
  int disagreements = 0;
  int joint_failures = 0;
  for (std::size_t i = 0; i < g_sweep.size(); ++i) {
    const InstanceRun& run = g_sweep[i];
    bool oracle_ndd = !g_oracle[i].has_value();
    if (run.fb.ndd != run.greedy.ndd || run.fb.ndd != run.incr.ndd ||
        run.fb.ndd != oracle_ndd) {
      ++disagreements;
    } else if (run.fb.ndd) {
      ++joint_failures;
    }
  }
  std::ostringstream detail;
  detail << g_sweep.size() << " instances, " << joint_failures
         << " joint failures, " << disagreements << " disagreements";
  return {disagreements == 0, detail.str()};
}

Outcome criterion_reference_fixtures() {
  std::vector<std::string> misses;

  KnowledgeBase pens = refex::load_kb_file(data_path("kb/pens.json"));
  ContextSet pen_context({"pen1", "pen2"}, pens);
  auto greedy = refex::greedy_heuristic("pen1", pen_context, pens);
  if (greedy.description.items() !=
      std::vector<AttributeValue>{{"colour", "red"}}) {
    misses.push_back("red/green pen");
  }

  KnowledgeBase brands =
      refex::load_kb_file(data_path("kb/pens_manufacturer.json"));
  ContextSet brand_context({"pen1", "pen2"}, brands);
  auto casual = refex::incremental("pen1", brand_context, brands,
                                   *refex::builtin_genre("casual"));
  bool casual_ok =
      casual.description.contains({"manufacturer", "staedtler"}) &&
      casual.warnings.size() == 1 &&
      casual.warnings[0] ==
          refex::ImplicatureWarning{
              {"manufacturer", "staedtler"},
              refex::ImplicatureReason::NotGenrePreferred};
  auto inventory = refex::incremental("pen1", brand_context, brands,
                                      *refex::builtin_genre("inventory"));
  if (!casual_ok || !inventory.warnings.empty() ||
      inventory.description != casual.description) {
    misses.push_back("staedtler genres");
  }

  KnowledgeBase table = refex::load_kb_file(data_path("kb/table.json"));
  ContextSet table_context({"table1"}, table);
  GoalAgenda agenda({Goal::identify("table1"),
                     Goal::convey("table1", {"condition", "newly-painted"})});
  auto plan =
      refex::plan_description(agenda, table_context, table,
                              *refex::builtin_genre("casual"),
                              Strategy::Greedy);
  bool table_ok =
      plan.description.contains({"condition", "newly-painted"}) &&
      plan.verification.classifications.at({"condition", "newly-painted"}) ==
          refex::DescriptorPurpose::Surplus &&
      plan.goals.size() == 2 && plan.goals[1].satisfied;
  if (!table_ok) misses.push_back("newly-painted table");

  std::ostringstream detail;
  if (misses.empty()) {
    detail << "red/green pen, staedtler genres, newly-painted table "
              "reproduce exactly";
  } else {
    detail << "mismatched:";
    for (const auto& miss : misses) detail << " " << miss << ";";
  }
  return {misses.empty(), detail.str()};
}

Outcome criterion_quality_gate() {
  const int kAgendas = 400;
  int rejected = 0;
  int generated_anyway = 0;
  for (int k = 0; k < kAgendas; ++k) {
    std::mt19937 rng(kBaseSeed + 600000 + static_cast<std::uint32_t>(k));
    refex_testing::RandomInstance instance;
    if (k % 5 == 0) {
      // An unsolvable instance: if the gate ran after generation, this
      // would surface as NoDistinguishingDescription instead.
      std::map<std::string, std::string> properties{{"type", "pebble"}};
      std::map<std::string, refex::Entity> entities;
      entities.emplace("r", refex::Entity("r", properties));
      entities.emplace("twin", refex::Entity("twin", properties));
      instance.kb = KnowledgeBase(std::move(entities));
      instance.context_ids = {"r", "twin"};
      instance.referent = "r";
      instance.genre = *refex::builtin_genre("casual");
    } else {
      instance = refex_testing::random_instance(rng);
    }
    ContextSet context = refex_testing::context_of(instance);

    std::vector<Goal> goals{Goal::identify(instance.referent)};
    if (k % 3 == 0) {
      // Mixing in a true payload must not soften the gate.
      const auto& properties =
          instance.kb.entity(instance.referent).properties();
      if (!properties.empty()) {
        goals.push_back(Goal::convey(instance.referent, properties.front()));
      }
    }
    goals.push_back(
        Goal::convey(instance.referent, {"provenance", "counterfeit"}));
    GoalAgenda agenda(goals);

    try {
      refex::plan_description(agenda, context, instance.kb, instance.genre,
                              static_cast<Strategy>(k % 3));
      ++generated_anyway;
    } catch (const Error& error) {
      if (error.code() == ErrorCode::QualityViolation) {
        ++rejected;
      } else {
        ++generated_anyway;  // wrong failure mode counts against the gate
      }
    }
  }
  std::ostringstream detail;
  detail << rejected << "/" << kAgendas
         << " false-payload agendas rejected with QualityViolation";
  return {rejected == kAgendas && generated_anyway == 0, detail.str()};
}

Outcome criterion_attribution_audit() {
  int plans = 0;
  int unattributed = 0;
  for (std::size_t i = 0; i < g_sweep.size(); ++i) {
    const InstanceRun& run = g_sweep[i];
    std::mt19937 rng(kBaseSeed + 700000 + static_cast<std::uint32_t>(i));
    const auto& properties =
        run.instance.kb.entity(run.instance.referent).properties();

    std::vector<Goal> goals{Goal::identify(run.instance.referent)};
    std::uniform_int_distribution<std::size_t> payload_count(
        0, std::min<std::size_t>(2, properties.size()));
    for (std::size_t n = payload_count(rng); n > 0; --n) {
      std::uniform_int_distribution<std::size_t> pick(0,
                                                      properties.size() - 1);
      goals.push_back(
          Goal::convey(run.instance.referent, properties[pick(rng)]));
    }

    ContextSet context = refex_testing::context_of(run.instance);
    try {
      auto plan = refex::plan_description(
          GoalAgenda(goals), context, run.instance.kb, run.instance.genre,
          static_cast<Strategy>(i % 3));
      ++plans;
      if (plan.attributions.size() != plan.description.size())
        ++unattributed;
      for (const auto& attribution : plan.attributions) {
        if (attribution.sources.empty()) ++unattributed;
      }
    } catch (const Error& error) {
      if (error.code() != ErrorCode::NoDistinguishingDescription) throw;
    }
  }
  std::ostringstream detail;
  detail << plans << " plans audited, " << unattributed
         << " unattributed items";
  return {plans > 0 && unattributed == 0, detail.str()};
}

KnowledgeBase twin_kb(std::size_t property_count, int variant) {
  std::map<std::string, std::string> properties;
  for (std::size_t i = 0; i < property_count; ++i) {
    char name[32];
    std::snprintf(name, sizeof(name), "p%02zu", i);
    properties[name] = "v" + std::to_string(variant);
  }
  std::map<std::string, refex::Entity> entities;
  entities.emplace("r", refex::Entity("r", properties));
  entities.emplace("twin", refex::Entity("twin", properties));
  return KnowledgeBase(std::move(entities));
}

double median(std::vector<double> samples) {
  std::sort(samples.begin(), samples.end());
  return samples[samples.size() / 2];
}

Outcome criterion_exponential_cost() {
  // Identical twins force full brevity through its entire enumeration
  // (every subset fails) while greedy gives up after one linear scan.
  const std::vector<std::size_t> sizes{12, 16, 20};
  const int kVariants = 5;
  std::map<std::size_t, double> fb_us;
  std::map<std::size_t, double> greedy_us;

  for (std::size_t n : sizes) {
    std::vector<double> fb_samples;
    std::vector<double> greedy_samples;
    for (int variant = 0; variant < kVariants; ++variant) {
      KnowledgeBase kb = twin_kb(n, variant);
      ContextSet context({"r", "twin"}, kb);

      double best = 0;
      for (int rep = 0; rep < 3; ++rep) {
        auto start = std::chrono::steady_clock::now();
        try {
          refex::full_brevity("r", context, kb);
          return {false, "full brevity unexpectedly succeeded on twins"};
        } catch (const Error& error) {
          if (error.code() != ErrorCode::NoDistinguishingDescription) throw;
        }
        double elapsed = seconds_since(start) * 1e6;
        if (rep == 0 || elapsed < best) best = elapsed;
      }
      fb_samples.push_back(best);

      const int kReps = 1000;
      auto start = std::chrono::steady_clock::now();
      for (int rep = 0; rep < kReps; ++rep) {
        try {
          refex::greedy_heuristic("r", context, kb);
          return {false, "greedy unexpectedly succeeded on twins"};
        } catch (const Error& error) {
          if (error.code() != ErrorCode::NoDistinguishingDescription) throw;
        }
      }
      greedy_samples.push_back(seconds_since(start) * 1e6 / kReps);
    }
    fb_us[n] = median(fb_samples);
    greedy_us[n] = median(greedy_samples);
  }

  double fb_step1 = fb_us[16] / fb_us[12];
  double fb_step2 = fb_us[20] / fb_us[16];
  double greedy_step1 = greedy_us[16] / greedy_us[12];
  double greedy_step2 = greedy_us[20] / greedy_us[16];
  bool pass = fb_step1 >= 4.0 && fb_step2 >= 4.0 && greedy_step1 < 1.5 &&
              greedy_step2 < 1.5;

  std::ostringstream detail;
  detail.precision(1);
  detail << std::fixed << "full-brevity medians " << fb_us[12] << "/"
         << fb_us[16] << "/" << fb_us[20] << " us (x" << fb_step1 << ", x"
         << fb_step2 << "); greedy " << greedy_us[12] << "/" << greedy_us[16]
         << "/" << greedy_us[20] << " us (x";
  detail.precision(2);
  detail << greedy_step1 << ", x" << greedy_step2 << ")";
  return {pass, detail.str()};
}

Outcome criterion_incremental_contribution() {
  int steps_checked = 0;
  int violations = 0;
  for (const InstanceRun& run : g_sweep) {
    if (run.incr.ndd) continue;
    const auto& steps = run.incr.trace.steps;
    for (std::size_t s = 0; s < steps.size(); ++s) {
      ++steps_checked;
      if (steps[s].ruled_out.empty()) {
        // Only the final always-include-type append may be inert.
        bool type_option = steps[s].property.attribute ==
                               refex::kTypeAttribute &&
                           s + 1 == steps.size();
        if (!type_option) ++violations;
      }
    }
  }

  // With the type option off, no inert step may appear at all.
  refex::IncrementalOptions bare;
  bare.always_include_type = false;
  for (int i = 0; i < 200; ++i) {
    std::mt19937 rng(kBaseSeed + 900000 + static_cast<std::uint32_t>(i));
    auto instance = refex_testing::random_instance(rng);
    ContextSet context = refex_testing::context_of(instance);
    try {
      auto result = refex::incremental(instance.referent, context,
                                       instance.kb, instance.genre, bare);
      for (const auto& step : result.trace.steps) {
        ++steps_checked;
        if (step.ruled_out.empty()) ++violations;
      }
    } catch (const Error& error) {
      if (error.code() != ErrorCode::NoDistinguishingDescription) throw;
    }
  }

  std::ostringstream detail;
  detail << steps_checked << " inclusion steps checked, " << violations
         << " inert non-type inclusions";
  return {steps_checked > 0 && violations == 0, detail.str()};
}

}  // namespace

int main() {
  struct Criterion {
    int number;
    const char* title;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria{
      {1, "soundness sweep", criterion_soundness},
      {2, "oracle equivalence", criterion_oracle_equivalence},
      {3, "greedy non-minimality", criterion_greedy_nonminimality},
      {4, "failure agreement", criterion_failure_agreement},
      {5, "reference fixtures", criterion_reference_fixtures},
      {6, "quality gate", criterion_quality_gate},
      {7, "attribution audit", criterion_attribution_audit},
      {8, "exponential full-brevity cost", criterion_exponential_cost},
      {9, "incremental contribution", criterion_incremental_contribution},
  };

  int failures = 0;
  for (const Criterion& criterion : criteria) {
    Outcome outcome;
    try {
      outcome = criterion.run();
    } catch (const std::exception& error) {
      outcome = {false, std::string("unexpected error: ") + error.what()};
    }
    if (!outcome.pass) ++failures;
    std::printf("criterion %d (%s): %s - %s\n", criterion.number,
                criterion.title, outcome.pass ? "PASS" : "FAIL",
                outcome.detail.c_str());
  }
  return failures;
}
