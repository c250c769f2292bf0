// Builds a small covering system, lists its reducts, then inserts and
// deletes an object while the related family is maintained incrementally.

#include <iostream>
#include <string>

#include "covred/covred.hpp"

using namespace covred;

namespace {

ObjectSet set_of(std::size_t n, std::initializer_list<std::size_t> members) { return ObjectSet(n, members); }

void show(const IncrementalState& s) {
  std::cout << s.system.universe_size() << " objects, " << to_string(s.consistency()) << "\n";
  for (std::size_t x = 0; x < s.system.universe_size(); ++x) {
    std::cout << "  r(" << s.system.label(x) << ") = {";
    bool first = true;
    for (auto c : s.family.of(x)) {
      std::cout << (first ? "" : ",") << s.system.covering(c).name();
      first = false;
    }
    std::cout << "}\n";
  }
  if (!s.reducts) return;
  std::cout << "  " << to_string(s.reducts->kind) << ":";
  for (const auto& r : s.reducts->implicants) {
    std::cout << " {";
    bool first = true;
    for (auto c : r) {
      std::cout << (first ? "" : ",") << s.system.covering(c).name();
      first = false;
    }
    std::cout << "}";
  }
  std::cout << "\n";
}

}  // namespace

int main() {
  const std::size_t n = 4;
  std::vector<Covering> coverings;
  coverings.emplace_back("colour", n, std::vector<ObjectSet>{set_of(n, {0, 1}), set_of(n, {2, 3})});
  coverings.emplace_back("size", n, std::vector<ObjectSet>{set_of(n, {0}), set_of(n, {1, 2}), set_of(n, {3})});
  coverings.emplace_back("shape", n, std::vector<ObjectSet>{set_of(n, {0, 1, 2}), set_of(n, {2, 3})});
  DecisionPartition decision(n, {set_of(n, {0, 1}), set_of(n, {2, 3})});
  CoveringSystem system(n, std::move(coverings), std::move(decision), {"a", "b", "c", "d"});
  require_valid(system);

  auto state = rebuild(system);
  show(state);

  // "e" joins the second class and one block of each covering.
  AddSpec add{{{1}, {1}, {1}}, 1, "e"};
  state = apply_add(std::move(state), add);
  std::cout << "\nafter inserting e: ";
  show(state);

  state = apply_delete(std::move(state), DeleteSpec{*state.system.find_label("b")});
  std::cout << "\nafter deleting b: ";
  show(state);
  return state == rebuild(state.system) ? 0 : 1;
}
