#pragma once

// Domain types for covering decision information systems: object sets,
// coverings, decision partitions, and the (universe, coverings, decision)
// triple, plus structural validation.

#include <cstddef>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "covred/bitset.hpp"
#include "covred/error.hpp"

namespace covred {

struct ObjectTag {};
struct CoveringTag {};

using ObjectId = std::size_t;
/// Subset of the universe, indexed by object id.
using ObjectSet = BasicBitSet<ObjectTag>;
/// Subset of the covering family, indexed by covering position.
using CoveringSet = BasicBitSet<CoveringTag>;

inline constexpr std::size_t npos = static_cast<std::size_t>(-1);

/// Side channel for non-fatal normalization performed while building values
/// (duplicate blocks merged, empty blocks dropped, ...).
struct ConstructionReport {
  std::vector<std::string> notes;
  void note(std::string text) { notes.push_back(std::move(text)); }
};

/// A named family of blocks over a universe. Equal blocks are merged at
/// construction, keeping the first occurrence; block order is otherwise
/// preserved.
class Covering {
 public:
  Covering() = default;
  Covering(std::string name, std::size_t universe_size, std::vector<ObjectSet> blocks,
           ConstructionReport* report = nullptr)
      : name_(std::move(name)), universe_size_(universe_size) {
    std::unordered_map<ObjectSet, std::size_t, BitSetHash<ObjectTag>> seen;
    seen.reserve(blocks.size());
    blocks_.reserve(blocks.size());
    for (std::size_t i = 0; i < blocks.size(); ++i) {
      auto [it, inserted] = seen.emplace(blocks[i], blocks_.size());
      if (!inserted) {
        if (report)
          report->note("covering '" + name_ + "': block " + std::to_string(i) + " duplicates block " +
                       std::to_string(it->second) + "; merged");
        continue;
      }
      blocks_.push_back(std::move(blocks[i]));
    }
  }

  const std::string& name() const noexcept { return name_; }
  std::size_t universe_size() const noexcept { return universe_size_; }
  const std::vector<ObjectSet>& blocks() const noexcept { return blocks_; }
  const ObjectSet& block(std::size_t i) const { return blocks_.at(i); }
  std::size_t size() const noexcept { return blocks_.size(); }

  friend bool operator==(const Covering&, const Covering&) = default;

 private:
  std::string name_;
  std::size_t universe_size_ = 0;
  std::vector<ObjectSet> blocks_;
};

/// Decision classes. class_of() gives the first class containing an object,
/// or npos; validate() reports overlaps and gaps.
class DecisionPartition {
 public:
  DecisionPartition() = default;
  DecisionPartition(std::size_t universe_size, std::vector<ObjectSet> classes)
      : universe_size_(universe_size), classes_(std::move(classes)), class_of_(universe_size, npos) {
    for (std::size_t j = 0; j < classes_.size(); ++j)
      for (auto x : classes_[j])
        if (x < universe_size_ && class_of_[x] == npos) class_of_[x] = j;
  }

  std::size_t universe_size() const noexcept { return universe_size_; }
  const std::vector<ObjectSet>& classes() const noexcept { return classes_; }
  const ObjectSet& operator[](std::size_t j) const { return classes_.at(j); }
  std::size_t size() const noexcept { return classes_.size(); }
  std::size_t class_of(ObjectId x) const { return class_of_.at(x); }

  friend bool operator==(const DecisionPartition& a, const DecisionPartition& b) {
    return a.universe_size_ == b.universe_size_ && a.classes_ == b.classes_;
  }

 private:
  std::size_t universe_size_ = 0;
  std::vector<ObjectSet> classes_;
  std::vector<std::size_t> class_of_;
};

inline std::string default_label(ObjectId x) { return "x" + std::to_string(x + 1); }

/// Universe of dense ids 0..n-1 with external labels, the covering family,
/// and the decision partition.
class CoveringSystem {
 public:
  CoveringSystem() = default;
  CoveringSystem(std::size_t universe_size, std::vector<Covering> coverings, DecisionPartition decision,
                 std::vector<std::string> labels = {})
      : universe_size_(universe_size),
        labels_(std::move(labels)),
        coverings_(std::move(coverings)),
        decision_(std::move(decision)) {
    if (labels_.empty())
      for (std::size_t x = 0; x < universe_size_; ++x) labels_.push_back(default_label(x));
  }

  std::size_t universe_size() const noexcept { return universe_size_; }
  ObjectSet universe() const { return ObjectSet::full(universe_size_); }

  const std::vector<std::string>& labels() const noexcept { return labels_; }
  const std::string& label(ObjectId x) const { return labels_.at(x); }
  std::optional<ObjectId> find_label(const std::string& label) const {
    for (std::size_t x = 0; x < labels_.size(); ++x)
      if (labels_[x] == label) return x;
    return std::nullopt;
  }

  const std::vector<Covering>& coverings() const noexcept { return coverings_; }
  const Covering& covering(std::size_t i) const { return coverings_.at(i); }
  std::size_t covering_count() const noexcept { return coverings_.size(); }
  std::optional<std::size_t> find_covering(const std::string& name) const {
    for (std::size_t i = 0; i < coverings_.size(); ++i)
      if (coverings_[i].name() == name) return i;
    return std::nullopt;
  }
  CoveringSet all_coverings() const { return CoveringSet::full(coverings_.size()); }

  const DecisionPartition& decision() const noexcept { return decision_; }

  friend bool operator==(const CoveringSystem&, const CoveringSystem&) = default;

 private:
  std::size_t universe_size_ = 0;
  std::vector<std::string> labels_;
  std::vector<Covering> coverings_;
  DecisionPartition decision_;
};

enum class ViolationKind {
  no_coverings,
  size_mismatch,
  empty_block,
  duplicate_block,
  uncovered_object,
  empty_class,
  class_overlap,
  unclassified_object,
  label_mismatch,
};

inline const char* to_string(ViolationKind kind) {
  switch (kind) {
    case ViolationKind::no_coverings: return "no coverings";
    case ViolationKind::size_mismatch: return "size mismatch";
    case ViolationKind::empty_block: return "empty block";
    case ViolationKind::duplicate_block: return "duplicate block";
    case ViolationKind::uncovered_object: return "uncovered object";
    case ViolationKind::empty_class: return "empty class";
    case ViolationKind::class_overlap: return "overlap";
    case ViolationKind::unclassified_object: return "unclassified object";
    case ViolationKind::label_mismatch: return "label mismatch";
  }
  return "unknown";
}

struct Violation {
  ViolationKind kind;
  std::size_t covering = npos;  // covering index, or decision class index for class violations
  std::size_t block = npos;     // block index, or second class index for overlaps
  std::size_t object = npos;
  std::string message;
};

/// Every violated structural invariant of the system; empty when valid.
inline std::vector<Violation> validate(const CoveringSystem& system) {
  std::vector<Violation> out;
  const auto n = system.universe_size();
  auto add = [&](ViolationKind kind, std::size_t c, std::size_t b, std::size_t x, std::string msg) {
    out.push_back(Violation{kind, c, b, x, std::move(msg)});
  };

  if (system.labels().size() != n)
    add(ViolationKind::label_mismatch, npos, npos, npos,
        std::to_string(system.labels().size()) + " labels for " + std::to_string(n) + " objects");
  if (system.coverings().empty()) add(ViolationKind::no_coverings, npos, npos, npos, "covering family is empty");

  for (std::size_t c = 0; c < system.covering_count(); ++c) {
    const auto& cov = system.covering(c);
    const std::string where = "covering " + std::to_string(c) + " ('" + cov.name() + "')";
    if (cov.universe_size() != n) {
      add(ViolationKind::size_mismatch, c, npos, npos, where + " is over a universe of " +
                                                           std::to_string(cov.universe_size()) + " objects");
      continue;
    }
    ObjectSet covered(n);
    bool sizes_ok = true;
    for (std::size_t b = 0; b < cov.size(); ++b) {
      const auto& block = cov.block(b);
      if (block.size() != n) {
        add(ViolationKind::size_mismatch, c, b, npos, where + " block " + std::to_string(b) + " has wrong size");
        sizes_ok = false;
        continue;
      }
      if (block.none()) add(ViolationKind::empty_block, c, b, npos, where + " block " + std::to_string(b) + " is empty");
      for (std::size_t e = 0; e < b; ++e)
        if (cov.block(e) == block)
          add(ViolationKind::duplicate_block, c, b, npos,
              where + " block " + std::to_string(b) + " equals block " + std::to_string(e));
      covered |= block;
    }
    if (!sizes_ok) continue;
    for (auto x : covered.complement())
      add(ViolationKind::uncovered_object, c, npos, x,
          where + " does not cover object " + std::to_string(x) + " ('" + system.label(x) + "')");
  }

  const auto& d = system.decision();
  if (d.universe_size() != n) {
    add(ViolationKind::size_mismatch, npos, npos, npos, "decision partition is over a universe of " +
                                                            std::to_string(d.universe_size()) + " objects");
    return out;
  }
  ObjectSet classified(n);
  for (std::size_t j = 0; j < d.size(); ++j) {
    if (d[j].size() != n) {
      add(ViolationKind::size_mismatch, j, npos, npos, "decision class " + std::to_string(j) + " has wrong size");
      return out;
    }
    if (d[j].none()) add(ViolationKind::empty_class, j, npos, npos, "decision class " + std::to_string(j) + " is empty");
    for (std::size_t i = 0; i < j; ++i)
      if (d[i].intersects(d[j]))
        add(ViolationKind::class_overlap, i, j, npos,
            "decision classes " + std::to_string(i) + " and " + std::to_string(j) + " overlap");
    classified |= d[j];
  }
  for (auto x : classified.complement())
    add(ViolationKind::unclassified_object, npos, npos, x,
        "object " + std::to_string(x) + " ('" + system.label(x) + "') is in no decision class");
  return out;
}

/// Throws Error(validation) listing every violation.
inline void require_valid(const CoveringSystem& system) {
  const auto violations = validate(system);
  if (violations.empty()) return;
  std::string msg = "invalid covering system:";
  for (const auto& v : violations) msg += "\n  " + std::string(to_string(v.kind)) + ": " + v.message;
  throw Error(ErrorKind::validation, msg);
}

/// Deduplicated union of the blocks of the selected coverings, in selection
/// order.
inline Covering union_covering(const CoveringSystem& system, const CoveringSet& selection) {
  if (selection.size() != system.covering_count())
    throw Error(ErrorKind::validation, "covering selection has wrong size");
  if (selection.none()) throw Error(ErrorKind::validation, "empty covering selection");
  std::string name;
  std::vector<ObjectSet> blocks;
  for (auto c : selection) {
    const auto& cov = system.covering(c);
    if (!name.empty()) name += "+";
    name += cov.name();
    blocks.insert(blocks.end(), cov.blocks().begin(), cov.blocks().end());
  }
  return Covering(std::move(name), system.universe_size(), std::move(blocks));
}

}  // namespace covred
