#pragma once

// Random and synthetic covering systems and update events, for property
// tests and benchmarks.

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <random>
#include <vector>

#include "covred/approx.hpp"
#include "covred/dynamic.hpp"
#include "covred/related.hpp"
#include "covred/system.hpp"

namespace covred {

using Rng = std::mt19937_64;

namespace detail {

inline std::size_t uniform(Rng& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

inline bool coin(Rng& rng, double p) { return std::bernoulli_distribution(p)(rng); }

/// Decision partition with exactly k non-empty classes.
inline DecisionPartition random_partition(Rng& rng, std::size_t n, std::size_t k) {
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::shuffle(order.begin(), order.end(), rng);
  std::vector<ObjectSet> classes(k, ObjectSet(n));
  for (std::size_t i = 0; i < n; ++i) classes[i < k ? i : uniform(rng, 0, k - 1)].set(order[i]);
  return DecisionPartition(n, std::move(classes));
}

inline std::vector<ObjectSet> groups_of(std::size_t n, const std::vector<std::size_t>& label, std::size_t labels) {
  std::vector<ObjectSet> groups(labels, ObjectSet(n));
  for (std::size_t x = 0; x < n; ++x) groups[label[x]].set(x);
  std::erase_if(groups, [](const ObjectSet& g) { return g.none(); });
  return groups;
}

}  // namespace detail

struct RandomSystemParams {
  std::size_t min_objects = 1;
  std::size_t max_objects = 10;
  std::size_t max_coverings = 5;
  std::size_t max_blocks = 8;
  std::size_t max_classes = 4;
  bool consistent = false;
};

/// Small random system. Each covering is a random partition, half the time
/// refining the decision classes, with a few extra overlapping blocks.
/// With params.consistent set, draws until the system is consistent.
inline CoveringSystem random_system(Rng& rng, const RandomSystemParams& params = {}) {
  using detail::uniform;
  while (true) {
    const auto n = uniform(rng, params.min_objects, params.max_objects);
    const auto k = uniform(rng, 1, std::min(n, params.max_classes));
    auto decision = detail::random_partition(rng, n, k);
    const auto m = uniform(rng, 1, params.max_coverings);
    std::vector<Covering> coverings;
    for (std::size_t c = 0; c < m; ++c) {
      std::vector<std::size_t> label(n);
      std::size_t labels = 0;
      if (detail::coin(rng, 0.5)) {
        const auto per_class = std::max<std::size_t>(1, std::min<std::size_t>(2, params.max_blocks / k));
        labels = k * per_class;
        for (std::size_t x = 0; x < n; ++x) label[x] = decision.class_of(x) * per_class + uniform(rng, 0, per_class - 1);
        // Occasionally fuse two parts, usually producing a straddling block.
        if (labels > 1 && detail::coin(rng, 0.5)) {
          const auto a = uniform(rng, 0, labels - 1);
          const auto b = uniform(rng, 0, labels - 1);
          for (auto& l : label)
            if (l == b) l = a;
        }
      } else {
        labels = uniform(rng, 1, std::min(n, params.max_blocks));
        for (auto& l : label) l = uniform(rng, 0, labels - 1);
      }
      auto blocks = detail::groups_of(n, label, labels);
      while (blocks.size() > params.max_blocks) {
        blocks[blocks.size() - 2] |= blocks.back();
        blocks.pop_back();
      }
      const auto room = params.max_blocks - blocks.size();
      const auto extras = room ? uniform(rng, 0, std::min<std::size_t>(room, 2)) : 0;
      for (std::size_t e = 0; e < extras; ++e) {
        ObjectSet extra(n);
        for (std::size_t x = 0; x < n; ++x)
          if (detail::coin(rng, 0.35)) extra.set(x);
        if (extra.none()) extra.set(uniform(rng, 0, n - 1));
        blocks.push_back(std::move(extra));
      }
      std::shuffle(blocks.begin(), blocks.end(), rng);
      coverings.emplace_back("C" + std::to_string(c + 1), n, std::move(blocks));
    }
    CoveringSystem system(n, std::move(coverings), std::move(decision));
    if (!params.consistent || classify_consistency(system) == Consistency::consistent) return system;
  }
}

/// Random valid insertion: a random class, and per covering one absorbing
/// block (sometimes two), chosen half the time among the witness blocks of
/// the new object's class so that witnesses survive.
inline AddSpec random_add_spec(Rng& rng, const CoveringSystem& system, const WitnessBlocks& witness) {
  using detail::uniform;
  AddSpec spec;
  spec.decision_class = uniform(rng, 0, system.decision().size() - 1);
  for (std::size_t c = 0; c < system.covering_count(); ++c) {
    const auto blocks = system.covering(c).size();
    const auto& same_class = witness.by_class[c][spec.decision_class];
    std::vector<std::size_t> chosen;
    if (!same_class.empty() && detail::coin(rng, 0.5))
      chosen.push_back(same_class[uniform(rng, 0, same_class.size() - 1)]);
    else
      chosen.push_back(uniform(rng, 0, blocks - 1));
    if (blocks > 1 && detail::coin(rng, 0.25)) {
      const auto extra = uniform(rng, 0, blocks - 1);
      if (extra != chosen.front()) chosen.push_back(extra);
    }
    spec.absorbing.push_back(std::move(chosen));
  }
  return spec;
}

inline AddSpec random_add_spec(Rng& rng, const CoveringSystem& system) {
  return random_add_spec(rng, system, witness_blocks(system));
}

inline DeleteSpec random_delete_spec(Rng& rng, const CoveringSystem& system) {
  return DeleteSpec{detail::uniform(rng, 0, system.universe_size() - 1)};
}

struct SyntheticParams {
  std::size_t objects = 5000;
  std::size_t coverings = 10;
  std::size_t classes = 5;
  /// Mean size of the class fragments blocks are built from.
  std::size_t fragment_size = 8;
  /// Probability that a fragment is fused with a fragment of another class.
  double straddle = 0.3;
  /// Extra overlapping blocks per covering, as a fraction of its fragments.
  double overlap = 0.05;
};

/// Large consistent system. Each covering cuts every decision class into
/// fragments, fuses some fragments across classes into straddling blocks and
/// adds a few overlapping unions. Objects left without any witness get their
/// own fragment back in one random covering.
inline CoveringSystem synthetic_system(Rng& rng, const SyntheticParams& params) {
  using detail::uniform;
  const auto n = params.objects;
  const auto k = std::min(params.classes, n);
  auto decision = detail::random_partition(rng, n, k);
  std::vector<std::vector<ObjectSet>> all_blocks(params.coverings);
  std::vector<std::vector<ObjectSet>> fragment_of(params.coverings, std::vector<ObjectSet>());
  std::vector<std::size_t> witnessed(n, 0);

  for (std::size_t c = 0; c < params.coverings; ++c) {
    std::vector<ObjectSet> fragments;
    std::vector<std::size_t> fragment_class;
    for (std::size_t j = 0; j < k; ++j) {
      auto members = decision[j].indices();
      std::shuffle(members.begin(), members.end(), rng);
      std::size_t i = 0;
      while (i < members.size()) {
        const auto len = std::min(members.size() - i, uniform(rng, 1, 2 * params.fragment_size - 1));
        ObjectSet f(n);
        for (std::size_t t = 0; t < len; ++t) f.set(members[i + t]);
        fragments.push_back(std::move(f));
        fragment_class.push_back(j);
        i += len;
      }
    }
    std::vector<char> fused(fragments.size(), 0);
    auto& blocks = all_blocks[c];
    for (std::size_t f = 0; f < fragments.size(); ++f) {
      if (fused[f]) continue;
      if (k > 1 && detail::coin(rng, params.straddle)) {
        const auto g = uniform(rng, 0, fragments.size() - 1);
        if (!fused[g] && g != f && fragment_class[g] != fragment_class[f]) {
          fused[f] = fused[g] = 1;
          blocks.push_back(fragments[f] | fragments[g]);
          continue;
        }
      }
      blocks.push_back(fragments[f]);
      for (auto x : fragments[f]) ++witnessed[x];
    }
    const auto extras = static_cast<std::size_t>(params.overlap * static_cast<double>(fragments.size()));
    for (std::size_t e = 0; e < extras; ++e)
      blocks.push_back(fragments[uniform(rng, 0, fragments.size() - 1)] | fragments[uniform(rng, 0, fragments.size() - 1)]);
    fragment_of[c] = std::move(fragments);
  }
  for (std::size_t x = 0; x < n; ++x) {
    if (witnessed[x]) continue;
    const auto c = uniform(rng, 0, params.coverings - 1);
    for (const auto& f : fragment_of[c])
      if (f.test(x)) {
        all_blocks[c].push_back(f);
        for (auto y : f) ++witnessed[y];
        break;
      }
  }
  std::vector<Covering> coverings;
  for (std::size_t c = 0; c < params.coverings; ++c) {
    std::shuffle(all_blocks[c].begin(), all_blocks[c].end(), rng);
    coverings.emplace_back("C" + std::to_string(c + 1), n, std::move(all_blocks[c]));
  }
  return CoveringSystem(n, std::move(coverings), std::move(decision));
}

}  // namespace covred
