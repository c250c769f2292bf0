#pragma once

// Per-event timing of incremental witness/family maintenance against full
// recomputation of the positive region and related family.

#include <algorithm>
#include <chrono>
#include <cstddef>
#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "covred/document.hpp"
#include "covred/dynamic.hpp"
#include "covred/generate.hpp"

namespace covred {

struct BenchEvent {
  std::size_t trial = 0;
  std::string op;
  std::size_t universe_size = 0;
  std::int64_t incremental_ns = 0;
  std::int64_t full_ns = 0;
  std::size_t family_size = 0;
  std::size_t clause_count = 0;
  std::size_t reduct_count = 0;
  bool identical = false;
};

struct BenchReport {
  std::vector<BenchEvent> events;
  double median_incremental_ns = 0;
  double median_full_ns = 0;
  /// median_full_ns / median_incremental_ns
  double speedup = 0;
  bool identical = true;

  bool ok() const { return identical && !events.empty(); }
  const char* status() const { return ok() ? "OK" : "FAILED"; }
};

namespace detail {

inline double median(std::vector<std::int64_t> v) {
  if (v.empty()) return 0;
  std::sort(v.begin(), v.end());
  const auto mid = v.size() / 2;
  return v.size() % 2 ? static_cast<double>(v[mid]) : (static_cast<double>(v[mid - 1]) + static_cast<double>(v[mid])) / 2.0;
}

template <class F>
std::int64_t time_ns(F&& f) {
  const auto t0 = std::chrono::steady_clock::now();
  f();
  const auto t1 = std::chrono::steady_clock::now();
  return std::chrono::duration_cast<std::chrono::nanoseconds>(t1 - t0).count();
}

}  // namespace detail

/// Applies one event to state both ways, timing only the witness/family
/// step of each, and checks that family and reducts agree.
inline BenchEvent bench_event(IncrementalState& state, const UpdateSpec& spec, const ReductOptions& options) {
  BenchEvent ev;
  WitnessBlocks full_witness;
  RelatedFamily full_family;
  if (const auto* add = std::get_if<AddSpec>(&spec)) {
    ev.op = "add";
    auto after = added_system(state.system, *add);
    ev.incremental_ns = detail::time_ns([&] { maintain_after_add(state.witness, state.family, after, *add); });
    ev.full_ns = detail::time_ns([&] {
      full_witness = witness_blocks(after);
      full_family = related_family(after, full_witness);
    });
    state.system = std::move(after);
  } else {
    ev.op = "delete";
    auto deletion = deleted_system(state.system, std::get<DeleteSpec>(spec));
    ev.incremental_ns =
        detail::time_ns([&] { maintain_after_delete(state.witness, state.family, state.system, deletion); });
    ev.full_ns = detail::time_ns([&] {
      full_witness = witness_blocks(deletion.system);
      full_family = related_family(deletion.system, full_witness);
    });
    state.system = std::move(deletion.system);
  }
  state.reducts = implicants_of(state.family, options);
  const auto full_reducts = implicants_of(full_family, options);
  ev.identical = state.witness == full_witness && state.family == full_family && state.reducts == full_reducts;
  ev.universe_size = state.system.universe_size();
  ev.family_size = state.family.positive().count();
  ev.clause_count = ev.family_size ? related_function(state.family).clauses.size() : 0;
  ev.reduct_count = state.reducts ? state.reducts->implicants.size() : 0;
  return ev;
}

inline void summarize(BenchReport& report) {
  std::vector<std::int64_t> inc, full;
  report.identical = true;
  for (const auto& e : report.events) {
    inc.push_back(e.incremental_ns);
    full.push_back(e.full_ns);
    report.identical = report.identical && e.identical;
  }
  report.median_incremental_ns = detail::median(inc);
  report.median_full_ns = detail::median(full);
  report.speedup = report.median_incremental_ns > 0 ? report.median_full_ns / report.median_incremental_ns : 0;
}

struct SyntheticBenchOptions {
  SyntheticParams system{};
  std::size_t adds = 100;
  std::size_t deletes = 100;
  std::size_t trials = 1;
  std::uint64_t seed = 1;
  ReductOptions reduct{};
};

/// Each trial draws a synthetic system and a shuffled sequence of random
/// insertions and deletions.
inline BenchReport run_synthetic_bench(const SyntheticBenchOptions& options) {
  BenchReport report;
  for (std::size_t t = 0; t < options.trials; ++t) {
    Rng rng(options.seed + t);
    auto state = rebuild(synthetic_system(rng, options.system), options.reduct);
    std::vector<char> kinds(options.adds, 'a');
    kinds.insert(kinds.end(), options.deletes, 'd');
    std::shuffle(kinds.begin(), kinds.end(), rng);
    for (auto kind : kinds) {
      UpdateSpec spec;
      if (kind == 'a' || state.system.universe_size() < 2)
        spec = random_add_spec(rng, state.system, state.witness);
      else
        spec = random_delete_spec(rng, state.system);
      auto ev = bench_event(state, spec, options.reduct);
      ev.trial = t;
      report.events.push_back(std::move(ev));
    }
  }
  summarize(report);
  return report;
}

/// Replays a recorded event stream over a given system.
inline BenchReport run_replay_bench(const CoveringSystem& system, const std::vector<EventRecord>& events,
                                    const ReductOptions& options = {}) {
  BenchReport report;
  auto state = rebuild(system, options);
  for (const auto& e : events) report.events.push_back(bench_event(state, resolve_event(state.system, e), options));
  summarize(report);
  return report;
}

}  // namespace covred
