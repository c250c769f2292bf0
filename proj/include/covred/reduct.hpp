#pragma once

// Related function (a monotone CNF over covering indices), its reduced
// disjunctive form, and reduct enumeration with a definition-level oracle.

#include <algorithm>
#include <cstddef>
#include <string>
#include <vector>

#include "covred/approx.hpp"
#include "covred/related.hpp"
#include "covred/system.hpp"

namespace covred {

/// Drops duplicates and every set that contains another; canonical order.
inline std::vector<CoveringSet> absorb(std::vector<CoveringSet> sets) {
  std::sort(sets.begin(), sets.end(), canonical_less<CoveringTag>);
  sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
  std::vector<CoveringSet> kept;
  kept.reserve(sets.size());
  for (auto& s : sets) {
    const bool absorbed =
        std::any_of(kept.begin(), kept.end(), [&](const CoveringSet& k) { return k.is_subset_of(s); });
    if (!absorbed) kept.push_back(std::move(s));
  }
  return kept;
}

/// Conjunction of clauses, each clause a disjunction of covering indices.
struct MonotoneCNF {
  std::size_t covering_count = 0;
  std::vector<CoveringSet> clauses;

  static MonotoneCNF from_clauses(std::size_t covering_count, std::vector<CoveringSet> clauses) {
    for (const auto& c : clauses)
      if (c.none()) throw Error(ErrorKind::validation, "empty clause in related function");
    return MonotoneCNF{covering_count, absorb(std::move(clauses))};
  }

  friend bool operator==(const MonotoneCNF&, const MonotoneCNF&) = default;
};

enum class ReductKind {
  /// Minimal subfamilies of a consistent system keeping every object
  /// certainly classified.
  reducts,
  /// Same computation on an inconsistent system: minimal subfamilies that
  /// preserve the positive region.
  pos_preserving_implicants,
};

inline const char* to_string(ReductKind k) {
  return k == ReductKind::reducts ? "reducts" : "pos_preserving_implicants";
}

struct ReductSet {
  std::size_t covering_count = 0;
  /// Prime implicants in canonical order.
  std::vector<CoveringSet> implicants;
  ReductKind kind = ReductKind::reducts;

  friend bool operator==(const ReductSet&, const ReductSet&) = default;
};

struct ReductOptions {
  std::size_t implicant_cap = 100000;
};

inline MonotoneCNF related_function(const RelatedFamily& family) {
  auto clauses = family.distinct();
  if (clauses.empty()) throw Error(ErrorKind::validation, "empty related family");
  return MonotoneCNF::from_clauses(family.covering_count(), std::move(clauses));
}

/// Prime implicants of a monotone CNF (its minimal hitting sets).
///
/// Clauses are multiplied in one at a time, shortest first. Partial
/// implicants already hitting the clause pass through unchanged; the others
/// are extended by each literal of the clause, and the absorption law is
/// applied after every product.
inline ReductSet reduced_disjunctive_form(const MonotoneCNF& cnf, const ReductOptions& options = {}) {
  const auto m = cnf.covering_count;
  auto clauses = cnf.clauses;
  std::stable_sort(clauses.begin(), clauses.end(),
                   [](const CoveringSet& a, const CoveringSet& b) { return a.count() < b.count(); });

  std::vector<CoveringSet> partial{CoveringSet(m)};
  for (const auto& clause : clauses) {
    std::vector<CoveringSet> next;
    next.reserve(partial.size() * 2);
    for (const auto& p : partial) {
      if (p.intersects(clause)) {
        next.push_back(p);
        continue;
      }
      for (auto c : clause) {
        auto q = p;
        next.push_back(q.set(c));
      }
    }
    partial = absorb(std::move(next));
    if (partial.size() > options.implicant_cap)
      throw Error(ErrorKind::limit, "implicant cap exceeded: more than " + std::to_string(options.implicant_cap) +
                                        " partial implicants");
  }
  return ReductSet{m, std::move(partial), ReductKind::reducts};
}

/// Steps from positive region to prime implicants, on any valid system.
/// The result is labelled as reducts only when the system is consistent.
inline ReductSet pos_preserving_implicants(const CoveringSystem& system, const ReductOptions& options = {}) {
  const auto family = related_family(system);
  auto result = reduced_disjunctive_form(related_function(family), options);
  if (family.positive() != system.universe()) result.kind = ReductKind::pos_preserving_implicants;
  return result;
}

/// All attribute reducts of a consistent system.
inline ReductSet reducts(const CoveringSystem& system, const ReductOptions& options = {}) {
  if (classify_consistency(system) != Consistency::consistent)
    throw Error(ErrorKind::validation, "system inconsistent; positive region != U");
  return pos_preserving_implicants(system, options);
}

inline constexpr std::size_t default_oracle_guard = 16;

/// Positive region over the union of the selection, straight from the
/// lower-approximation definition.
inline ObjectSet definitional_positive_region(const CoveringSystem& system, const CoveringSet& selection) {
  if (selection.none()) return ObjectSet(system.universe_size());
  const auto merged = union_covering(system, selection);
  ObjectSet pos(system.universe_size());
  for (const auto& d : system.decision().classes()) pos |= lower_approx(merged, d);
  return pos;
}

/// Minimal subfamilies P with POS over P equal to POS over the whole family,
/// by exhaustive subset enumeration.
inline ReductSet oracle_reducts(const CoveringSystem& system, std::size_t guard = default_oracle_guard) {
  const auto m = system.covering_count();
  if (m > guard || m >= 63)
    throw Error(ErrorKind::limit, "oracle guard exceeded: " + std::to_string(m) + " coverings > " +
                                      std::to_string(guard));
  const auto target = definitional_positive_region(system, system.all_coverings());
  std::vector<CoveringSet> preserving;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
    CoveringSet p(m);
    for (std::size_t c = 0; c < m; ++c)
      if ((mask >> c) & 1u) p.set(c);
    if (definitional_positive_region(system, p) == target) preserving.push_back(std::move(p));
  }
  const auto kind =
      target == system.universe() ? ReductKind::reducts : ReductKind::pos_preserving_implicants;
  return ReductSet{m, absorb(std::move(preserving)), kind};
}

/// Removing covering c leaves the positive region unchanged.
inline bool is_superfluous(const CoveringSystem& system, std::size_t c) {
  auto rest = system.all_coverings();
  rest.reset(c);
  return definitional_positive_region(system, rest) == definitional_positive_region(system, system.all_coverings());
}

}  // namespace covred
