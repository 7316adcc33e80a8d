#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ef/hom.hpp"
#include "ef/perm_group.hpp"

namespace ef {

/// One representative per conjugacy class, in a deterministic order (least
/// element of each class under the enumeration order).  Requires the group to
/// be enumerable; throws TooLarge otherwise.
std::vector<Permutation> conjugacy_class_representatives(const PermGroup& g);

/// Largest normal p-subgroup.  Works far beyond the enumeration limit by
/// peeling the action apart (orbit restrictions, block actions, kernels)
/// until an enumerable piece remains; throws TooLarge only when no reduction
/// applies (big primitive group of p-power degree, or an unrealizable
/// quotient).  p must be prime.
PermGroup p_core(const PermGroup& g, std::uint64_t p);

/// Largest nilpotent normal subgroup: the join of the p-cores over the primes
/// dividing the order.
PermGroup fitting_subgroup(const PermGroup& g);

/// Largest soluble normal subgroup (the stable term of the ascending series
/// of nilpotent-over-previous-term subgroups).
PermGroup soluble_radical(const PermGroup& g);

enum class SeriesKind { Fitting, GeneralizedFitting, Nonsoluble };

/// An ascending normal series together with how it ended.
struct SeriesRecord {
  SeriesKind kind = SeriesKind::Fitting;
  /// Labelled terms from the trivial group upward.
  std::vector<std::pair<std::string, PermGroup>> terms;
  /// Fitting/GeneralizedFitting: number of steps taken (the height when the
  /// series reaches the whole group).  Nonsoluble: the nonsoluble length.
  int height_or_length = 0;
  /// True when the last term is the whole group.
  bool stabilized_at_g = false;
  /// True when any stage relied on sampling rather than a certified result.
  bool probabilistic = false;

  /// terms[i], clamped to the last term for indices past the end.
  /// Negative indices are rejected with InvalidInput.
  const PermGroup& term_clamped(int i) const;
  /// For a Nonsoluble record: the i-th term of the soluble-radical sublist
  /// (D-terms), clamped to the last one.  Negative indices are rejected.
  const PermGroup& d_term_clamped(int i) const;
};

/// Ascending series 1 <= F1 <= F2 <= ... with F_{i+1}/F_i the Fitting
/// subgroup of G/F_i.  Stops at G (soluble case) or at the stable term, which
/// is always the soluble radical.
SeriesRecord fitting_series(const PermGroup& g);
/// Number of steps for the series above to reach G; throws NotSoluble when it
/// stalls below G.
int fitting_height(const PermGroup& g);

struct SocleResult {
  PermGroup socle = PermGroup::trivial(1);
  /// The minimal normal subgroups; their join is the socle.
  std::vector<PermGroup> minimal_normals;
  bool probabilistic = false;
};

/// Socle and minimal normal subgroups.  Exact for enumerable groups.  For
/// larger groups uses randomized normal-closure descent plus an independent
/// certificate (trivial centralizer + verified semisimple splitting); when
/// the certificate is obtained the result is exact and `probabilistic` stays
/// false.  Throws TooLarge when no certificate can be established.
SocleResult socle_of(const PermGroup& g);
std::vector<PermGroup> minimal_normal_subgroups(const PermGroup& g);

struct SemisimpleSplit {
  std::vector<PermGroup> factors;
  bool probabilistic = false;
};

/// Splits a group that is a direct product of nonabelian simple groups into
/// those factors.  Throws InvalidInput if the input visibly is not such a
/// product, TooLarge if it cannot decide.
SemisimpleSplit split_semisimple(const PermGroup& n);

struct ComponentsResult {
  /// The subnormal quasisimple subgroups.
  std::vector<PermGroup> components;
  /// Their join (the product of all components).
  PermGroup layer = PermGroup::trivial(1);
  bool probabilistic = false;
};
ComponentsResult components_and_layer(const PermGroup& g);

/// Join of the Fitting subgroup and the layer.  Self-centralizing, and
/// nontrivial in every nontrivial group.
PermGroup generalized_fitting_subgroup(const PermGroup& g);
/// Ascending series built like the Fitting series but with the generalized
/// Fitting subgroup at each step; always reaches G.
SeriesRecord generalized_fitting_series(const PermGroup& g);
int generalized_fitting_height(const PermGroup& g);

/// Alternating series 1 = B0 <= D0 <= B1 <= D1 <= ... where D_i is the
/// preimage of the soluble radical of G/B_i and B_{i+1} the preimage of the
/// socle of G/D_i.  Ends at the first D-term equal to G; the number of
/// socle steps taken is the nonsoluble length (0 exactly for soluble G).
SeriesRecord nonsoluble_series(const PermGroup& g);
int nonsoluble_length(const PermGroup& g);

/// The simple factors of one semisimple section U = B_level / D_{level-1} of
/// the series above, pulled back to the ambient group, together with the
/// conjugation action of the group on the list of factors.
struct SimpleFactorDecomposition {
  PermGroup group = PermGroup::trivial(1);
  int level = 1;
  /// Full preimages in `group` of the simple factors of U; all contain
  /// `below`, and pairwise intersect in it.
  std::vector<PermGroup> factors;
  /// Preimage of D_{level-1}: the subgroup the factors sit over.
  PermGroup below = PermGroup::trivial(1);
  /// Kernel of `factor_action` (elements mapping every factor to itself).
  PermGroup action_kernel = PermGroup::trivial(1);
  /// Conjugation action of `group` on {0, ..., factors.size()-1}.
  std::optional<GroupHom> factor_action;
  bool probabilistic = false;
};

/// Decomposition at the given series level (1-based; level <= nonsoluble
/// length required, so the group must be insoluble).
SimpleFactorDecomposition simple_factor_decomposition(const PermGroup& g,
                                                      int level);

/// Cycles of x's induced permutation of the factor list, each cycle starting
/// at its least index, ordered by least index.  Fixed factors appear as
/// singletons.
std::vector<std::vector<int>> factor_orbits_of(
    const SimpleFactorDecomposition& dec, const Permutation& x);

/// Whether x moves the listed factor orbit "purely": the least divisor t of
/// the order of x for which x^t centralizes (modulo `below`) every factor in
/// the orbit equals the orbit length.  `orbit` must be one cycle of x's
/// action on the factors, in cycle order.
bool orbit_purity(const SimpleFactorDecomposition& dec, const Permutation& x,
                  const std::vector<int>& orbit);

}  // namespace ef
