#pragma once

// Minimal descriptions, third-type lower/upper approximations, and the
// positive/boundary/negative regions they induce.

#include <cstddef>
#include <vector>

#include "covred/system.hpp"

namespace covred {

/// For each object, the ascending indices of the minimal blocks containing it.
class MinimalDescriptionTable {
 public:
  MinimalDescriptionTable() = default;
  explicit MinimalDescriptionTable(std::vector<std::vector<std::size_t>> rows) : rows_(std::move(rows)) {}

  const std::vector<std::size_t>& of(ObjectId x) const { return rows_.at(x); }
  std::size_t size() const noexcept { return rows_.size(); }

  friend bool operator==(const MinimalDescriptionTable&, const MinimalDescriptionTable&) = default;

 private:
  std::vector<std::vector<std::size_t>> rows_;
};

/// A block K is minimal for x in K iff no other block S with x in S is a
/// proper subset of K, so K is minimal exactly for the members of K outside
/// the union of its proper sub-blocks.
inline MinimalDescriptionTable minimal_descriptions(const Covering& covering) {
  const auto n = covering.universe_size();
  const auto& blocks = covering.blocks();
  std::vector<std::vector<std::size_t>> rows(n);
  for (std::size_t k = 0; k < blocks.size(); ++k) {
    ObjectSet dominated(n);
    for (std::size_t s = 0; s < blocks.size(); ++s)
      if (s != k && blocks[s].is_proper_subset_of(blocks[k])) dominated |= blocks[s];
    for (auto x : blocks[k] - dominated) rows[x].push_back(k);
  }
  return MinimalDescriptionTable(std::move(rows));
}

/// Union of all blocks contained in the target.
inline ObjectSet lower_approx(const Covering& covering, const ObjectSet& target) {
  ObjectSet out(covering.universe_size());
  for (const auto& block : covering.blocks())
    if (block.is_subset_of(target)) out |= block;
  return out;
}

/// Union of the minimal-description blocks of every member of the target.
inline ObjectSet upper_approx(const Covering& covering, const MinimalDescriptionTable& md, const ObjectSet& target) {
  ObjectSet out(covering.universe_size());
  std::vector<bool> used(covering.size(), false);
  for (auto x : target)
    for (auto k : md.of(x))
      if (!used[k]) {
        used[k] = true;
        out |= covering.block(k);
      }
  return out;
}

/// Regions of one target set X: lower = POS, upper, BND = upper \ lower,
/// NEG = U \ upper.
struct TargetRegions {
  ObjectSet lower;
  ObjectSet upper;
  ObjectSet boundary;
  ObjectSet negative;

  friend bool operator==(const TargetRegions&, const TargetRegions&) = default;
};

struct RegionReport {
  /// Union of the per-class lower approximations.
  ObjectSet positive;
  /// One entry per decision class, in partition order.
  std::vector<TargetRegions> per_class;
};

inline TargetRegions target_regions(const Covering& covering, const MinimalDescriptionTable& md,
                                    const ObjectSet& target) {
  TargetRegions r;
  r.lower = lower_approx(covering, target);
  r.upper = upper_approx(covering, md, target);
  r.boundary = r.upper - r.lower;
  r.negative = r.upper.complement();
  return r;
}

inline RegionReport regions(const CoveringSystem& system, const CoveringSet& selection) {
  const auto merged = union_covering(system, selection);
  const auto md = minimal_descriptions(merged);
  RegionReport report;
  report.positive = ObjectSet(system.universe_size());
  for (const auto& d : system.decision().classes()) {
    report.per_class.push_back(target_regions(merged, md, d));
    report.positive |= report.per_class.back().lower;
  }
  return report;
}

/// Positive region of the decision over the union of the selected coverings;
/// empty for an empty selection.
inline ObjectSet positive_region(const CoveringSystem& system, const CoveringSet& selection) {
  ObjectSet pos(system.universe_size());
  for (auto c : selection)
    for (const auto& block : system.covering(c).blocks())
      for (const auto& d : system.decision().classes())
        if (block.is_subset_of(d)) {
          pos |= block;
          break;
        }
  return pos;
}

enum class Consistency { consistent, inconsistent };

inline const char* to_string(Consistency c) {
  return c == Consistency::consistent ? "consistent" : "inconsistent";
}

inline Consistency classify_consistency(const CoveringSystem& system) {
  return positive_region(system, system.all_coverings()) == system.universe() ? Consistency::consistent
                                                                              : Consistency::inconsistent;
}

/// Blocks that belong to no object's minimal description.
inline std::vector<std::size_t> union_reducible_blocks(const Covering& covering) {
  const auto md = minimal_descriptions(covering);
  std::vector<bool> minimal(covering.size(), false);
  for (std::size_t x = 0; x < md.size(); ++x)
    for (auto k : md.of(x)) minimal[k] = true;
  std::vector<std::size_t> out;
  for (std::size_t k = 0; k < covering.size(); ++k)
    if (!minimal[k]) out.push_back(k);
  return out;
}

}  // namespace covred
