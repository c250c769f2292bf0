#pragma once

// Hand-built systems shared by the tests. Object and covering numbers in
// the helpers are 1-based to match the labels x1.. and C1..

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

#include "covred/dynamic.hpp"
#include "covred/system.hpp"

namespace fixtures {

using namespace covred;

inline ObjectSet objs(std::size_t n, std::initializer_list<std::size_t> one_based) {
  ObjectSet s(n);
  for (auto i : one_based) s.set(i - 1);
  return s;
}

inline CoveringSet covs(std::size_t m, std::initializer_list<std::size_t> one_based) {
  CoveringSet s(m);
  for (auto i : one_based) s.set(i - 1);
  return s;
}

inline std::vector<ObjectSet> blocks(std::size_t n, std::initializer_list<std::initializer_list<std::size_t>> bs) {
  std::vector<ObjectSet> out;
  for (auto b : bs) out.push_back(objs(n, b));
  return out;
}

inline DecisionPartition eight_decision() {
  return DecisionPartition(8, blocks(8, {{1, 2, 3}, {4, 5, 6}, {7, 8}}));
}

inline Covering eight_c1() {
  return Covering("C1", 8, blocks(8, {{1, 2}, {2, 3, 4}, {3}, {4}, {5, 6}, {6, 7, 8}}));
}

/// Eight objects, five coverings, three classes; consistent.
inline CoveringSystem eight_objects() {
  std::vector<Covering> c;
  c.push_back(eight_c1());
  c.emplace_back("C2", 8, blocks(8, {{1, 3, 4}, {2, 3}, {4, 5}, {5, 6}, {6}, {7, 8}}));
  c.emplace_back("C3", 8, blocks(8, {{1}, {1, 2, 3}, {2, 3}, {3, 4, 5, 6}, {5, 7, 8}}));
  c.emplace_back("C4", 8, blocks(8, {{1, 2, 4}, {2, 3}, {4, 5, 6}, {6}, {7, 8}}));
  c.emplace_back("C5", 8, blocks(8, {{1, 2, 3}, {4}, {5, 6}, {5, 6, 8}, {4, 7, 8}}));
  return CoveringSystem(8, std::move(c), eight_decision());
}

/// The first covering of eight_objects() alone; inconsistent.
inline CoveringSystem single_covering() {
  std::vector<Covering> c;
  c.push_back(eight_c1());
  return CoveringSystem(8, std::move(c), eight_decision());
}

/// x9 joins the third class and the last block of every covering.
inline AddSpec eight_objects_add() { return AddSpec{{{5}, {5}, {4}, {4}, {4}}, 2, "x9"}; }

/// The six pair reducts of eight_objects().
inline std::vector<CoveringSet> eight_objects_reducts(std::size_t m = 5) {
  return {covs(m, {1, 2}), covs(m, {1, 4}), covs(m, {2, 3}), covs(m, {2, 5}), covs(m, {3, 4}), covs(m, {4, 5})};
}

inline std::string data_path(const std::string& name) { return std::string(COVRED_DATA_DIR) + "/" + name; }

}  // namespace fixtures
