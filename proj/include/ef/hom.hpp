#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "ef/limits.hpp"
#include "ef/perm_group.hpp"

namespace ef {

/// Homomorphism from a permutation group into Sym(action_degree), given by
/// one image per domain generator (aligned with domain.generators()).
///
/// Internally each generator is paired with its image as a permutation of the
/// disjoint union {domain points} + {action points}; the group those pairs
/// generate is the graph of the map.  Two stabilizer chains over that graph
/// group drive everything:
///  - domain-points-first: sifting (g, id) leaves (id, apply(g)^-1), and any
///    chain level based at an action point witnesses that the generator
///    images do not extend to a homomorphism (checked at construction);
///  - action-points-first: generators stored past the action levels are
///    exactly (k, id) for k in the kernel, and partial sifting of (id, h)
///    through the action levels produces a preimage of h.
class GroupHom {
 public:
  GroupHom(PermGroup domain, int action_degree,
           std::vector<Permutation> gen_images);

  const PermGroup& domain() const { return domain_; }
  int action_degree() const { return action_degree_; }
  const PermGroup& image() const { return image_; }
  const PermGroup& kernel() const { return kernel_; }
  const std::vector<Permutation>& gen_images() const { return gen_images_; }

  /// phi(g); throws InvalidInput if g is not in the domain group.
  Permutation apply(const Permutation& g) const;
  /// Subgroup generated by the images of s's generators (s <= domain).
  PermGroup image_of(const PermGroup& s) const;
  /// Some preimage of h, or nullopt if h is not in the image.
  std::optional<Permutation> lift(const Permutation& h) const;
  /// Full preimage of a subgroup of the image.
  PermGroup preimage(const PermGroup& s) const;

 private:
  PermGroup domain_;
  int action_degree_;
  std::vector<Permutation> gen_images_;
  PermGroup image_;
  PermGroup kernel_;
  std::shared_ptr<const StabilizerChain> domain_first_;
  std::shared_ptr<const StabilizerChain> action_first_;
};

/// Action of g on the right cosets of h by right multiplication, cosets
/// numbered in deterministic discovery order (coset h itself is 0).
/// Throws TooLarge if the index exceeds max_index.
GroupHom coset_action(
    const PermGroup& g, const PermGroup& h,
    std::uint64_t max_index = Limits::current().quotient_degree);

/// Quotient map G -> G/N for normal N, realized as the coset action (or the
/// identity map when N is trivial).  The kernel of the result is N.
GroupHom quotient_by(
    const PermGroup& g, const PermGroup& n,
    std::uint64_t max_index = Limits::current().quotient_degree);

/// Restriction of g to an invariant point set, renumbered by position.
GroupHom restriction_hom(const PermGroup& g, const std::vector<int>& points);

/// Action of g on the blocks of an invariant partition (of part of the
/// domain); block i of the action is blocks[i].
GroupHom block_hom(const PermGroup& g,
                   const std::vector<std::vector<int>>& blocks);

}  // namespace ef
