#pragma once

// Witness blocks (blocks lying inside one decision class) and the related
// family r(x): the coverings owning a witness block that contains x.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <unordered_set>
#include <vector>

#include "covred/system.hpp"

namespace covred {

struct WitnessEntry {
  std::size_t covering;
  std::size_t block;
  std::size_t decision_class;

  friend bool operator==(const WitnessEntry&, const WitnessEntry&) = default;
};

/// Witness status of every block, indexed both by (covering, block) and by
/// (covering, class).
struct WitnessBlocks {
  /// block_class[c][b]: the decision class containing block b of covering c,
  /// or npos when the block straddles classes.
  std::vector<std::vector<std::size_t>> block_class;
  /// by_class[c][j]: ascending indices of the witness blocks of covering c
  /// lying in class j.
  std::vector<std::vector<std::vector<std::size_t>>> by_class;

  bool is_witness(std::size_t c, std::size_t b) const { return block_class[c][b] != npos; }

  std::vector<WitnessEntry> entries() const {
    std::vector<WitnessEntry> out;
    for (std::size_t c = 0; c < block_class.size(); ++c)
      for (std::size_t b = 0; b < block_class[c].size(); ++b)
        if (block_class[c][b] != npos) out.push_back({c, b, block_class[c][b]});
    return out;
  }

  friend bool operator==(const WitnessBlocks&, const WitnessBlocks&) = default;
};

/// Class index containing the block, or npos. Decision classes are
/// disjoint, so the class of any member is the only candidate.
inline std::size_t containing_class(const ObjectSet& block, const DecisionPartition& decision) {
  const auto x = block.first();
  if (x == ObjectSet::npos) return npos;
  const auto j = decision.class_of(x);
  if (j == npos) return npos;
  return block.is_subset_of(decision[j]) ? j : npos;
}

inline WitnessBlocks witness_blocks(const CoveringSystem& system) {
  WitnessBlocks w;
  const auto k = system.decision().size();
  w.block_class.resize(system.covering_count());
  w.by_class.assign(system.covering_count(), std::vector<std::vector<std::size_t>>(k));
  for (std::size_t c = 0; c < system.covering_count(); ++c) {
    const auto& cov = system.covering(c);
    auto& classes = w.block_class[c];
    classes.resize(cov.size());
    for (std::size_t b = 0; b < cov.size(); ++b) {
      classes[b] = containing_class(cov.block(b), system.decision());
      if (classes[b] != npos) w.by_class[c][classes[b]].push_back(b);
    }
  }
  return w;
}

/// r(x) for every object, stored as a flat row-per-object bit matrix.
/// Objects with empty r(x) lie outside the positive region and are treated
/// as absent from the family.
class RelatedFamily {
 public:
  RelatedFamily() = default;
  RelatedFamily(std::size_t universe_size, std::size_t covering_count)
      : universe_size_(universe_size),
        covering_count_(covering_count),
        stride_((covering_count + 63) / 64),
        rows_(universe_size * stride_, 0) {}

  std::size_t universe_size() const noexcept { return universe_size_; }
  std::size_t covering_count() const noexcept { return covering_count_; }

  bool has(ObjectId x, std::size_t c) const { return (rows_[x * stride_ + c / 64] >> (c % 64)) & 1u; }
  void insert(ObjectId x, std::size_t c) { rows_[x * stride_ + c / 64] |= std::uint64_t{1} << (c % 64); }
  void erase(ObjectId x, std::size_t c) { rows_[x * stride_ + c / 64] &= ~(std::uint64_t{1} << (c % 64)); }

  /// x is in the family (equivalently, in the positive region).
  bool contains(ObjectId x) const {
    for (std::size_t k = 0; k < stride_; ++k)
      if (rows_[x * stride_ + k]) return true;
    return false;
  }

  CoveringSet of(ObjectId x) const {
    CoveringSet s(covering_count_);
    for (std::size_t c = 0; c < covering_count_; ++c)
      if (has(x, c)) s.set(c);
    return s;
  }

  ObjectSet positive() const {
    ObjectSet pos(universe_size_);
    for (std::size_t x = 0; x < universe_size_; ++x)
      if (contains(x)) pos.set(x);
    return pos;
  }

  /// Distinct non-empty r(x) values in canonical order.
  std::vector<CoveringSet> distinct() const {
    std::unordered_set<CoveringSet, BitSetHash<CoveringTag>> seen;
    for (std::size_t x = 0; x < universe_size_; ++x)
      if (contains(x)) seen.insert(of(x));
    std::vector<CoveringSet> out(seen.begin(), seen.end());
    std::sort(out.begin(), out.end(), canonical_less<CoveringTag>);
    return out;
  }

  /// Appends an object with empty r(x).
  void append_object() {
    ++universe_size_;
    rows_.resize(universe_size_ * stride_, 0);
  }

  /// Removes object x; higher ids shift down by one.
  void erase_object(ObjectId x) {
    rows_.erase(rows_.begin() + static_cast<std::ptrdiff_t>(x * stride_),
                rows_.begin() + static_cast<std::ptrdiff_t>((x + 1) * stride_));
    --universe_size_;
  }

  friend bool operator==(const RelatedFamily&, const RelatedFamily&) = default;

 private:
  std::size_t universe_size_ = 0;
  std::size_t covering_count_ = 0;
  std::size_t stride_ = 0;
  std::vector<std::uint64_t> rows_;
};

inline RelatedFamily related_family(const CoveringSystem& system, const WitnessBlocks& witness) {
  RelatedFamily family(system.universe_size(), system.covering_count());
  for (std::size_t c = 0; c < system.covering_count(); ++c) {
    const auto& cov = system.covering(c);
    for (std::size_t b = 0; b < cov.size(); ++b)
      if (witness.is_witness(c, b))
        for (auto x : cov.block(b)) family.insert(x, c);
  }
  return family;
}

inline RelatedFamily related_family(const CoveringSystem& system) {
  return related_family(system, witness_blocks(system));
}

}  // namespace covred
