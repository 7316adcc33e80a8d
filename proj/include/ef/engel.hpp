#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "ef/perm.hpp"
#include "ef/perm_group.hpp"

namespace ef {

enum class EngelMode { Exact, Probabilistic };

/// Result of an Engel-type subgroup computation.  In Exact mode `subgroup` is
/// generated by the Engel values of every element of the ambient group; in
/// Probabilistic mode it is a certified lower bound obtained from random
/// sampling (always contained in the exact answer, since every generator is a
/// genuine Engel value).
struct EngelSubgroupResult {
  PermGroup subgroup = PermGroup::trivial(1);
  EngelMode mode = EngelMode::Exact;
  std::uint64_t samples_used = 0;
  int n = 0;
  Permutation g;
  std::string ambient_label;
};

/// The iterated commutator [y, n x]:
///   [y, 0 x] = y,   [y, i+1 x] = [[y, i x], x].
/// Throws InvalidInput for negative n or mismatched degrees.
Permutation engel_commutator(const Permutation& y, const Permutation& x, int n);

/// <[g, n x] : x in h>, for g normalizing h and n >= 1.  Exact when |h| fits
/// the enumeration limit; otherwise sampled until the stabilization window
/// W = 64 * ceil(log2 |h|) passes with no growth.  `label` feeds the sampling
/// seed so runs are reproducible.
EngelSubgroupResult right_engel_subgroup(const PermGroup& h, const Permutation& g,
                                         int n, std::uint64_t seed = 0,
                                         const std::string& label = "");

/// <[x, n g] : x in h>, same contract with the word's arguments swapped.
EngelSubgroupResult left_engel_subgroup(const PermGroup& h, const Permutation& g,
                                        int n, std::uint64_t seed = 0,
                                        const std::string& label = "");

/// Least n <= n_max with [g, n x] = 1 for every x in g_grp, or nullopt.
/// Requires |g_grp| within the enumeration limit (throws TooLarge).
std::optional<int> is_right_engel(const PermGroup& g_grp, const Permutation& g,
                                  int n_max);

/// Least n <= n_max with [x, n g] = 1 for every x in g_grp, or nullopt.
std::optional<int> is_left_engel(const PermGroup& g_grp, const Permutation& g,
                                 int n_max);

/// For abelian a_grp normalized by g and a in a_grp, checks the identity
///   [g, n (g a)] = [a^-1, n g]      (n >= 1).
/// Always true; a false return signals an implementation bug upstream.
bool abelian_cyclic_identity_check(const PermGroup& a_grp, const Permutation& g,
                                   const Permutation& a, int n);

}  // namespace ef
