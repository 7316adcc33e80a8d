#include "ef/engel.hpp"

#include <bit>
#include <random>
#include <vector>

#include "ef/errors.hpp"
#include "ef/limits.hpp"

namespace ef {

namespace {

bool normalizes(const PermGroup& h, const Permutation& g) {
  for (const Permutation& s : h.generators())
    if (!h.contains(conjugate(s, g))) return false;
  return true;
}

// Accumulates Engel values into a subgroup, rebuilding the stabilizer chain
// only when a value falls outside the group built so far.
struct GrowingSubgroup {
  int degree;
  std::vector<Permutation> gens;
  PermGroup current;

  explicit GrowingSubgroup(int d) : degree(d), current(PermGroup::trivial(d)) {}

  bool add(const Permutation& w) {
    if (w.is_identity() || current.contains(w)) return false;
    gens.push_back(w);
    current = PermGroup(degree, gens);
    return true;
  }
};

// Sampling stops after this many consecutive draws add nothing; at least
// 64 * ceil(log2 |h|).
std::uint64_t stabilization_window(std::uint64_t order) {
  return 64ull * std::bit_width(order);
}

EngelSubgroupResult engel_subgroup_impl(const PermGroup& h, const Permutation& g,
                                        int n, bool right, std::uint64_t seed,
                                        const std::string& label) {
  if (n < 1) throw InvalidInput("Engel subgroup requires n >= 1");
  if (g.degree() != h.degree())
    throw InvalidInput("element degree does not match the ambient group");
  if (!normalizes(h, g))
    throw InvalidInput("the element does not normalize the ambient group");

  EngelSubgroupResult res;
  res.n = n;
  res.g = g;
  res.ambient_label = label;

  GrowingSubgroup grow(h.degree());
  auto word = [&](const Permutation& x) {
    return right ? engel_commutator(g, x, n) : engel_commutator(x, g, n);
  };

  // Every Engel value lies in h (g normalizes h), so growth stops at |h|.
  const std::uint64_t h_order = h.order();
  if (h_order <= Limits::current().enumeration) {
    res.mode = EngelMode::Exact;
    std::uint64_t seen = 0;
    h.for_each_element([&](const Permutation& x) {
      ++seen;
      grow.add(word(x));
      return grow.current.order() < h_order;
    });
    res.samples_used = seen;
  } else {
    res.mode = EngelMode::Probabilistic;
    std::mt19937_64 rng(seed_from(
        seed, "engel:" + label + ":" + std::to_string(n) +
                  (right ? ":r:" : ":l:") + std::to_string(hash_value(g))));
    const std::uint64_t window = stabilization_window(h_order);
    std::uint64_t stagnant = 0;
    std::uint64_t used = 0;
    while (stagnant < window && grow.current.order() < h_order) {
      ++used;
      if (grow.add(word(h.random_element(rng))))
        stagnant = 0;
      else
        ++stagnant;
    }
    res.samples_used = used;
  }
  res.subgroup = grow.current;
  return res;
}

std::optional<int> is_engel_impl(const PermGroup& grp, const Permutation& g,
                                 int n_max, bool right) {
  if (n_max < 1) throw InvalidInput("n_max must be >= 1");
  if (g.degree() != grp.degree())
    throw InvalidInput("element degree does not match the group");
  if (grp.order() > Limits::current().enumeration)
    throw TooLarge("Engel predicate requires full enumeration");
  for (int n = 1; n <= n_max; ++n) {
    bool all = true;
    grp.for_each_element([&](const Permutation& x) {
      const Permutation w =
          right ? engel_commutator(g, x, n) : engel_commutator(x, g, n);
      if (!w.is_identity()) {
        all = false;
        return false;
      }
      return true;
    });
    if (all) return n;
  }
  return std::nullopt;
}

}  // namespace

Permutation engel_commutator(const Permutation& y, const Permutation& x, int n) {
  if (n < 0) throw InvalidInput("Engel index must be nonnegative");
  if (y.degree() != x.degree()) throw InvalidInput("degree mismatch");
  Permutation w = y;
  for (int i = 0; i < n; ++i) w = commutator(w, x);
  return w;
}

EngelSubgroupResult right_engel_subgroup(const PermGroup& h, const Permutation& g,
                                         int n, std::uint64_t seed,
                                         const std::string& label) {
  return engel_subgroup_impl(h, g, n, /*right=*/true, seed, label);
}

EngelSubgroupResult left_engel_subgroup(const PermGroup& h, const Permutation& g,
                                        int n, std::uint64_t seed,
                                        const std::string& label) {
  return engel_subgroup_impl(h, g, n, /*right=*/false, seed, label);
}

std::optional<int> is_right_engel(const PermGroup& g_grp, const Permutation& g,
                                  int n_max) {
  return is_engel_impl(g_grp, g, n_max, /*right=*/true);
}

std::optional<int> is_left_engel(const PermGroup& g_grp, const Permutation& g,
                                 int n_max) {
  return is_engel_impl(g_grp, g, n_max, /*right=*/false);
}

bool abelian_cyclic_identity_check(const PermGroup& a_grp, const Permutation& g,
                                   const Permutation& a, int n) {
  if (n < 1) throw InvalidInput("the identity is stated for n >= 1");
  if (g.degree() != a_grp.degree() || a.degree() != a_grp.degree())
    throw InvalidInput("degree mismatch");
  const std::vector<Permutation>& gens = a_grp.generators();
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = i + 1; j < gens.size(); ++j)
      if (gens[i] * gens[j] != gens[j] * gens[i])
        throw InvalidInput("the ambient subgroup is not abelian");
  if (!a_grp.contains(a))
    throw InvalidInput("a must lie in the abelian subgroup");
  if (!normalizes(a_grp, g))
    throw InvalidInput("g does not normalize the abelian subgroup");
  return engel_commutator(g, g * a, n) == engel_commutator(a.inverse(), g, n);
}

}  // namespace ef
