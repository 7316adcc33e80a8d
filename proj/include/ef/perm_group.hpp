#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "ef/limits.hpp"
#include "ef/perm.hpp"

namespace ef {

/// Base-and-strong-generating-set chain built by deterministic incremental
/// Schreier-Sims.  Base points are chosen smallest-moved-point-first; ties in
/// construction order are fixed, so two builds from the same generator list
/// produce identical chains.
///
/// An optional `preferred` mask marks points whose levels must precede all
/// others in the chain.  Generators stored at non-preferred levels then move
/// no preferred point at all, which makes the pointwise stabilizer of the
/// preferred set (and hence kernels of actions) directly readable off the
/// chain.
class StabilizerChain {
 public:
  struct Level {
    int base_point;
    // Strong generators first stored at this level.  The set actually acting
    // at level i (fixing all earlier base points) is the union of `gens` over
    // levels i, i+1, ...; orbits and transversals are built from that union.
    std::vector<Permutation> gens;
    std::vector<int> orbit;             // discovery order; orbit[0] == base_point
    std::vector<int> orbit_pos;         // point -> index into orbit, or -1
    std::vector<Permutation> transversal;  // transversal[i](base_point) == orbit[i]
  };

  StabilizerChain(int degree, const std::vector<Permutation>& gens,
                  std::vector<char> preferred = {});

  int degree() const { return degree_; }
  std::uint64_t order() const;
  const std::vector<Level>& levels() const { return levels_; }

  void add_generator(const Permutation& g);
  bool contains(const Permutation& p) const;
  /// Residue after sifting through the whole chain (identity iff member).
  Permutation sift(const Permutation& p) const;

  /// Generators stored at levels whose base point is not preferred; they
  /// generate the pointwise stabilizer of the preferred set.
  std::vector<Permutation> non_preferred_level_gens() const;

 private:
  int degree_;
  std::vector<char> preferred_;
  std::vector<Level> levels_;
  // Set when place() splices a new preferred-base level into the middle of
  // the chain (ripping out and re-inserting everything below it); tells the
  // verification sweep to restart from the bottom.
  bool spliced_ = false;
  // Level at which to resume the sweep after verify_level reports a change.
  std::size_t resume_ = 0;

  bool is_preferred(int p) const {
    return !preferred_.empty() && preferred_[p];
  }
  int smallest_preferred_moved(const Permutation& p) const;
  std::pair<Permutation, std::size_t> sift_from(Permutation p,
                                                std::size_t lvl) const;
  std::vector<Permutation> acting_gens(std::size_t lvl) const;
  void place(Permutation r, std::size_t lvl);
  void insert_preferred_level(std::size_t pos, int base, Permutation r);
  void rebuild_orbit(std::size_t lvl);
  bool verify_level(std::size_t lvl);
};

/// A finite permutation group with an immutable stabilizer chain.
/// Copies share the chain, so passing groups by value is cheap.
class PermGroup {
 public:
  /// Builds the chain for <gens> acting on {0..degree-1}.
  PermGroup(int degree, std::vector<Permutation> gens);
  static PermGroup trivial(int degree);
  /// Wrap an already-built chain (gens must generate it).
  static PermGroup from_chain(int degree, std::vector<Permutation> gens,
                              std::shared_ptr<const StabilizerChain> chain);

  int degree() const { return degree_; }
  std::uint64_t order() const { return chain_->order(); }
  bool is_trivial() const { return order() == 1; }
  const std::vector<Permutation>& generators() const { return gens_; }
  const StabilizerChain& chain() const { return *chain_; }
  std::shared_ptr<const StabilizerChain> chain_ptr() const { return chain_; }

  bool contains(const Permutation& p) const;

  /// Stream the elements in a fixed deterministic order; stop early if the
  /// callback returns false.  Throws TooLarge if |G| exceeds the limit.
  void for_each_element(const std::function<bool(const Permutation&)>& fn,
                        std::uint64_t limit = Limits::current().enumeration) const;
  std::vector<Permutation> elements(
      std::uint64_t limit = Limits::current().enumeration) const;

  /// Uniformly random element (independent transversal picks).
  Permutation random_element(std::mt19937_64& rng) const;

 private:
  PermGroup() = default;
  int degree_ = 0;
  std::vector<Permutation> gens_;
  std::shared_ptr<const StabilizerChain> chain_;
};

/// Equal as subgroups of Sym(degree).
bool equal_groups(const PermGroup& a, const PermGroup& b);
/// Every generator of h lies in g.
bool is_subgroup_of(const PermGroup& h, const PermGroup& g);

/// Orbits of the generator set on {0..degree-1}, each sorted, ordered by
/// least point.  Fixed points yield singleton orbits.
std::vector<std::vector<int>> point_orbits(const std::vector<Permutation>& gens,
                                           int degree);
/// Orbits with more than one point.
std::vector<std::vector<int>> moved_orbits(const PermGroup& g);

/// Finest G-invariant partition of `orbit` in which p and q share a block.
/// Blocks are sorted, ordered by least point.  G must act transitively on
/// `orbit`.
std::vector<std::vector<int>> block_system_containing(const PermGroup& g,
                                                      const std::vector<int>& orbit,
                                                      int p, int q);
/// A nontrivial block system of smallest block size on the given transitive
/// orbit, or nullopt if the action is primitive there.
std::optional<std::vector<std::vector<int>>> minimal_block_system(
    const PermGroup& g, const std::vector<int>& orbit);

/// Subgroup of g fixing every listed point.
PermGroup pointwise_stabilizer(const PermGroup& g, const std::vector<int>& points);

/// Cross-platform deterministic uniform draw from [0, n).
std::uint64_t bounded_random(std::mt19937_64& rng, std::uint64_t n);

/// Derive an independent RNG seed from a label (stable across platforms).
std::uint64_t seed_from(std::uint64_t seed, const std::string& label);

}  // namespace ef
