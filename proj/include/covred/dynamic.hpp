#pragma once

// Single-object insertion and deletion: construction of the updated system
// and incremental maintenance of the witness cache, related family, and
// reducts.
//
// Insertion only ever grows blocks and classes, so a straddling block keeps
// straddling and r(x) can only shrink for existing objects; only coverings
// already in r(x) need re-examination. Deletion only ever shrinks them, so
// r(x) can only grow; only coverings outside r(x) need examination.

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <unordered_map>
#include <variant>
#include <vector>

#include "covred/reduct.hpp"
#include "covred/related.hpp"
#include "covred/system.hpp"

namespace covred {

/// Insertion of one new object.
struct AddSpec {
  /// absorbing[c]: indices of the blocks of covering c that receive the new
  /// object. Block counts never change.
  std::vector<std::vector<std::size_t>> absorbing;
  std::size_t decision_class = 0;
  /// External label; defaults to x<n+1>.
  std::string label;
};

struct DeleteSpec {
  ObjectId object = 0;
};

using UpdateSpec = std::variant<AddSpec, DeleteSpec>;

inline void check_add_spec(const CoveringSystem& system, const AddSpec& spec) {
  if (spec.absorbing.size() != system.covering_count())
    throw Error(ErrorKind::validation, "add spec lists " + std::to_string(spec.absorbing.size()) +
                                           " coverings, system has " + std::to_string(system.covering_count()));
  for (std::size_t c = 0; c < spec.absorbing.size(); ++c) {
    const auto& blocks = spec.absorbing[c];
    if (blocks.empty()) throw Error(ErrorKind::validation, "new object uncovered in covering " + std::to_string(c));
    for (std::size_t i = 0; i < blocks.size(); ++i) {
      if (blocks[i] >= system.covering(c).size())
        throw Error(ErrorKind::validation, "covering " + std::to_string(c) + " has no block " + std::to_string(blocks[i]));
      if (std::find(blocks.begin(), blocks.begin() + static_cast<std::ptrdiff_t>(i), blocks[i]) !=
          blocks.begin() + static_cast<std::ptrdiff_t>(i))
        throw Error(ErrorKind::validation, "covering " + std::to_string(c) + " lists block " +
                                               std::to_string(blocks[i]) + " twice");
    }
  }
  if (spec.decision_class >= system.decision().size())
    throw Error(ErrorKind::validation, "no decision class " + std::to_string(spec.decision_class));
  if (!spec.label.empty() && system.find_label(spec.label))
    throw Error(ErrorKind::validation, "label '" + spec.label + "' already in use");
}

/// The system over U + {x_new}. The new object takes id n.
inline CoveringSystem added_system(const CoveringSystem& system, const AddSpec& spec) {
  check_add_spec(system, spec);
  const auto n = system.universe_size();
  std::vector<Covering> coverings;
  coverings.reserve(system.covering_count());
  for (std::size_t c = 0; c < system.covering_count(); ++c) {
    const auto& cov = system.covering(c);
    std::vector<ObjectSet> blocks;
    blocks.reserve(cov.size());
    for (const auto& b : cov.blocks()) blocks.push_back(b.resized(n + 1));
    for (auto b : spec.absorbing[c]) blocks[b].set(n);
    coverings.emplace_back(cov.name(), n + 1, std::move(blocks));
  }
  std::vector<ObjectSet> classes;
  for (const auto& d : system.decision().classes()) classes.push_back(d.resized(n + 1));
  classes[spec.decision_class].set(n);
  auto labels = system.labels();
  labels.push_back(spec.label.empty() ? default_label(n) : spec.label);
  return CoveringSystem(n + 1, std::move(coverings), DecisionPartition(n + 1, std::move(classes)), std::move(labels));
}

/// Updated system after removing one object, with the index remappings.
struct Deletion {
  CoveringSystem system;
  ObjectId removed = 0;
  /// block_map[c][b]: new index of old block b of covering c, or npos when
  /// the block became empty.
  std::vector<std::vector<std::size_t>> block_map;
  /// class_map[j]: new index of old class j, or npos when it became empty.
  std::vector<std::size_t> class_map;

  /// Old id to new id; npos for the removed object.
  std::size_t object_map(ObjectId old_id) const {
    if (old_id == removed) return npos;
    return old_id > removed ? old_id - 1 : old_id;
  }
};

/// Every block and class sheds the object. Emptied blocks and classes are
/// dropped, blocks that become equal are merged; each is noted in report.
inline Deletion deleted_system(const CoveringSystem& system, const DeleteSpec& spec,
                               ConstructionReport* report = nullptr) {
  const auto n = system.universe_size();
  const auto d = spec.object;
  if (d >= n) throw Error(ErrorKind::validation, "no object with id " + std::to_string(d));
  const auto& who = system.label(d);

  Deletion out;
  out.removed = d;
  std::vector<Covering> coverings;
  coverings.reserve(system.covering_count());
  for (std::size_t c = 0; c < system.covering_count(); ++c) {
    const auto& cov = system.covering(c);
    std::vector<ObjectSet> blocks;
    std::vector<std::size_t> map(cov.size(), npos);
    bool any_shed = false;
    for (std::size_t b = 0; b < cov.size(); ++b) {
      const auto& old_block = cov.block(b);
      if (!old_block.test(d)) {
        // Blocks of a covering are distinct, so only shed blocks can collide.
        map[b] = blocks.size();
        blocks.push_back(old_block.without_index(d));
        continue;
      }
      auto shed = old_block.without_index(d);
      if (shed.none()) {
        if (report) report->note("covering '" + cov.name() + "': block " + std::to_string(b) + " emptied by deleting '" + who + "'; dropped");
        continue;
      }
      any_shed = true;
      map[b] = blocks.size();
      blocks.push_back(std::move(shed));
    }
    if (blocks.empty()) throw Error(ErrorKind::validation, "covering " + std::to_string(c) + " became empty");
    // Merge equal blocks, keeping the first occurrence.
    if (any_shed) {
      std::unordered_map<ObjectSet, std::size_t, BitSetHash<ObjectTag>> first;
      std::vector<ObjectSet> unique;
      std::vector<std::size_t> remap(blocks.size());
      for (std::size_t k = 0; k < blocks.size(); ++k) {
        auto [it, inserted] = first.emplace(blocks[k], unique.size());
        if (inserted) unique.push_back(blocks[k]);
        else if (report)
          report->note("covering '" + cov.name() + "': deleting '" + who + "' made two blocks equal; merged");
        remap[k] = it->second;
      }
      for (auto& m : map)
        if (m != npos) m = remap[m];
      blocks = std::move(unique);
    }
    out.block_map.push_back(std::move(map));
    coverings.emplace_back(cov.name(), n - 1, std::move(blocks));
  }

  std::vector<ObjectSet> classes;
  for (std::size_t j = 0; j < system.decision().size(); ++j) {
    auto shed = system.decision()[j].without_index(d);
    if (shed.none()) {
      if (report) report->note("decision class " + std::to_string(j) + " emptied by deleting '" + who + "'; dropped");
      out.class_map.push_back(npos);
      continue;
    }
    out.class_map.push_back(classes.size());
    classes.push_back(std::move(shed));
  }
  auto labels = system.labels();
  labels.erase(labels.begin() + static_cast<std::ptrdiff_t>(d));
  out.system = CoveringSystem(n - 1, std::move(coverings), DecisionPartition(n - 1, std::move(classes)), std::move(labels));
  return out;
}

/// Instrumentation of (object, covering) witness examinations during
/// maintenance of existing objects.
struct ExaminationLog {
  /// Examinations of coverings already in r(x).
  std::size_t inside = 0;
  /// Examinations of coverings not in r(x).
  std::size_t outside = 0;
  /// Examinations made for the inserted object.
  std::size_t fresh = 0;
};

/// Brings witness and family of the old system in line with after, the
/// result of added_system(old, spec).
inline void maintain_after_add(WitnessBlocks& witness, RelatedFamily& family, const CoveringSystem& after,
                               const AddSpec& spec, ExaminationLog* log = nullptr) {
  const ObjectId fresh = family.universe_size();
  const auto cls = spec.decision_class;
  family.append_object();
  for (std::size_t c = 0; c < after.covering_count(); ++c) {
    const auto& cov = after.covering(c);
    std::vector<std::size_t> lost;
    if (log) ++log->fresh;
    for (auto b : spec.absorbing[c]) {
      const auto old_cls = witness.block_class[c][b];
      if (old_cls == npos) continue;
      if (old_cls == cls) {
        family.insert(fresh, c);
        continue;
      }
      // The block now holds an object of another class.
      witness.block_class[c][b] = npos;
      auto& list = witness.by_class[c][old_cls];
      list.erase(std::lower_bound(list.begin(), list.end(), b));
      lost.push_back(b);
    }
    if (lost.empty()) continue;

    ObjectSet affected(after.universe_size());
    for (auto b : lost) affected |= cov.block(b);
    affected.reset(fresh);
    for (auto y : affected) {
      if (log) ++(family.has(y, c) ? log->inside : log->outside);
      const auto& candidates = witness.by_class[c][after.decision().class_of(y)];
      const bool still = std::any_of(candidates.begin(), candidates.end(),
                                     [&](std::size_t b) { return cov.block(b).test(y); });
      if (!still) family.erase(y, c);
    }
  }
}

/// Brings witness and family of before in line with deletion.system.
inline void maintain_after_delete(WitnessBlocks& witness, RelatedFamily& family, const CoveringSystem& before,
                                  const Deletion& deletion, ExaminationLog* log = nullptr) {
  const auto& after = deletion.system;
  const auto d = deletion.removed;
  family.erase_object(d);

  WitnessBlocks next;
  next.block_class.resize(after.covering_count());
  next.by_class.assign(after.covering_count(), std::vector<std::vector<std::size_t>>(after.decision().size()));
  for (std::size_t c = 0; c < after.covering_count(); ++c) {
    const auto& old_cov = before.covering(c);
    const auto& cov = after.covering(c);
    const auto& map = deletion.block_map[c];
    auto& classes = next.block_class[c];
    classes.assign(cov.size(), npos);
    std::vector<char> decided(cov.size(), 0);
    std::vector<char> was_witness(cov.size(), 0);
    for (std::size_t b = 0; b < old_cov.size(); ++b) {
      const auto nb = map[b];
      if (nb == npos) continue;
      const auto old_cls = witness.block_class[c][b];
      was_witness[nb] |= old_cls != npos;
      if (decided[nb]) continue;
      decided[nb] = 1;
      if (old_cls != npos)
        classes[nb] = deletion.class_map[old_cls];
      else if (old_cov.block(b).test(d))
        classes[nb] = containing_class(cov.block(nb), after.decision());
    }
    for (std::size_t nb = 0; nb < cov.size(); ++nb) {
      if (classes[nb] == npos) continue;
      next.by_class[c][classes[nb]].push_back(nb);
      if (was_witness[nb]) continue;
      // A block that became a witness by losing its only out-of-class member.
      for (auto y : cov.block(nb)) {
        if (family.has(y, c)) continue;
        if (log) ++log->outside;
        family.insert(y, c);
      }
    }
  }
  witness = std::move(next);
}

/// A system together with its maintained witness cache, related family,
/// and reducts.
struct IncrementalState {
  CoveringSystem system;
  WitnessBlocks witness;
  RelatedFamily family;
  /// Absent when no object is certainly classified.
  std::optional<ReductSet> reducts;

  Consistency consistency() const {
    return family.positive() == system.universe() ? Consistency::consistent : Consistency::inconsistent;
  }

  friend bool operator==(const IncrementalState&, const IncrementalState&) = default;
};

struct UpdateOptions {
  ReductOptions reduct{};
  ExaminationLog* log = nullptr;
  ConstructionReport* report = nullptr;
};

inline std::optional<ReductSet> implicants_of(const RelatedFamily& family, const ReductOptions& options) {
  const auto pos = family.positive();
  if (pos.none()) return std::nullopt;
  auto result = reduced_disjunctive_form(related_function(family), options);
  if (pos.count() != family.universe_size()) result.kind = ReductKind::pos_preserving_implicants;
  return result;
}

/// Non-incremental refresh: everything recomputed from the system.
inline IncrementalState rebuild(CoveringSystem system, const ReductOptions& options = {}) {
  IncrementalState s;
  s.witness = witness_blocks(system);
  s.family = related_family(system, s.witness);
  s.reducts = implicants_of(s.family, options);
  s.system = std::move(system);
  return s;
}

inline IncrementalState rebuild(const IncrementalState& state, const ReductOptions& options = {}) {
  return rebuild(state.system, options);
}

inline IncrementalState apply_add(IncrementalState state, const AddSpec& spec, const UpdateOptions& options = {}) {
  auto after = added_system(state.system, spec);
  maintain_after_add(state.witness, state.family, after, spec, options.log);
  state.system = std::move(after);
  state.reducts = implicants_of(state.family, options.reduct);
  return state;
}

inline IncrementalState apply_delete(IncrementalState state, const DeleteSpec& spec,
                                     const UpdateOptions& options = {}) {
  auto deletion = deleted_system(state.system, spec, options.report);
  maintain_after_delete(state.witness, state.family, state.system, deletion, options.log);
  state.system = std::move(deletion.system);
  state.reducts = implicants_of(state.family, options.reduct);
  return state;
}

inline IncrementalState apply(IncrementalState state, const UpdateSpec& spec, const UpdateOptions& options = {}) {
  if (const auto* add = std::get_if<AddSpec>(&spec)) return apply_add(std::move(state), *add, options);
  return apply_delete(std::move(state), std::get<DeleteSpec>(spec), options);
}

}  // namespace covred
