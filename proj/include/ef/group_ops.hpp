#pragma once

#include <vector>

#include "ef/limits.hpp"
#include "ef/perm_group.hpp"

namespace ef {

/// Smallest subgroup of g containing the seed elements and closed under
/// conjugation by g.  Seeds must lie in g.
PermGroup normal_closure(const PermGroup& g,
                         const std::vector<Permutation>& seed);
PermGroup normal_closure(const PermGroup& g, const Permutation& x);

/// [a, b]: generated by all commutators; computed as the normal closure of
/// the generator commutators inside <a, b>.
PermGroup commutator_subgroup(const PermGroup& a, const PermGroup& b);

PermGroup join(const PermGroup& a, const PermGroup& b);
PermGroup conjugate_subgroup(const PermGroup& h, const Permutation& x);

/// Exact intersection by enumerating the smaller group (TooLarge beyond the
/// limit).
PermGroup intersect_enumerable(
    const PermGroup& a, const PermGroup& b,
    std::uint64_t limit = Limits::current().enumeration);

/// Elements of g commuting with x / with every element of s.  Backtrack
/// search over g's stabilizer chain; exact at any size.
PermGroup centralizer(const PermGroup& g, const Permutation& x);
PermGroup centralizer_of_subgroup(const PermGroup& g, const PermGroup& s);
PermGroup center(const PermGroup& g);

/// g >= g' >= g'' >= ...; the last entry is the first repeated (stable) term,
/// so the list ends either at the trivial group or at a perfect subgroup.
std::vector<PermGroup> derived_series(const PermGroup& g);
/// g >= [g,g] >= [[g,g],g] >= ...; same stabilization convention.
std::vector<PermGroup> lower_central_series(const PermGroup& g);

bool is_soluble(const PermGroup& g);
bool is_nilpotent(const PermGroup& g);

/// h <= g and every generator conjugate stays in h.
bool is_normal_in(const PermGroup& h, const PermGroup& g);
/// Subnormality via iterated normal closure descent: K <- <h^K> starting at
/// K = g; h is subnormal exactly when the chain bottoms out at h.
bool is_subnormal(const PermGroup& h, const PermGroup& g);

/// n, [n,<x>], [[n,<x>],<x>], ...; stops once the chain stabilizes, reaches
/// the trivial group, or performs `cap` steps.
std::vector<PermGroup> iterated_commutator_chain(const PermGroup& n,
                                                 const Permutation& x,
                                                 int cap = 64);

}  // namespace ef
