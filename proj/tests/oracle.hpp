#pragma once

// Brute-force reference implementations for cross-checking the library on
// small groups.  Everything here deliberately ignores efficiency.

#include <cstdint>
#include <map>
#include <queue>
#include <set>
#include <vector>

#include "ef/perm.hpp"

namespace oracle {

// All elements of <gens>, by breadth-first closure under right multiplication.
inline std::vector<ef::Permutation> closure(
    int degree, const std::vector<ef::Permutation>& gens) {
  std::set<ef::Permutation> seen;
  std::queue<ef::Permutation> work;
  const ef::Permutation id = ef::Permutation::identity(degree);
  seen.insert(id);
  work.push(id);
  while (!work.empty()) {
    const ef::Permutation cur = work.front();
    work.pop();
    for (const auto& g : gens) {
      ef::Permutation next = cur * g;
      if (seen.insert(next).second) work.push(next);
    }
  }
  return {seen.begin(), seen.end()};
}

// Elements of the group commuting with every target.
inline std::vector<ef::Permutation> centralizer_elements(
    int degree, const std::vector<ef::Permutation>& gens,
    const std::vector<ef::Permutation>& targets) {
  std::vector<ef::Permutation> out;
  for (const auto& e : closure(degree, gens)) {
    bool ok = true;
    for (const auto& t : targets)
      if (e * t != t * e) {
        ok = false;
        break;
      }
    if (ok) out.push_back(e);
  }
  return out;
}

// Normal closure of the seeds: group generated by every conjugate of a seed
// by every group element.
inline std::vector<ef::Permutation> normal_closure_elements(
    int degree, const std::vector<ef::Permutation>& gens,
    const std::vector<ef::Permutation>& seeds) {
  std::vector<ef::Permutation> conj;
  for (const auto& g : closure(degree, gens))
    for (const auto& s : seeds) conj.push_back(ef::conjugate(s, g));
  return closure(degree, conj);
}

// Group generated by all commutators [a, b], a and b running over whole
// groups.
inline std::vector<ef::Permutation> commutator_subgroup_elements(
    int degree, const std::vector<ef::Permutation>& agens,
    const std::vector<ef::Permutation>& bgens) {
  std::vector<ef::Permutation> comms;
  for (const auto& a : closure(degree, agens))
    for (const auto& b : closure(degree, bgens))
      comms.push_back(ef::commutator(a, b));
  return closure(degree, comms);
}

}  // namespace oracle
