#include "ef/group_ops.hpp"

#include <algorithm>
#include <deque>
#include <optional>

#include "ef/errors.hpp"

namespace ef {

PermGroup normal_closure(const PermGroup& g,
                         const std::vector<Permutation>& seed) {
  for (const Permutation& x : seed)
    if (!g.contains(x))
      throw InvalidInput("normal closure seed lies outside the group");
  auto chain = std::make_shared<StabilizerChain>(g.degree(),
                                                 std::vector<Permutation>{});
  std::vector<Permutation> gens;
  std::vector<Permutation> work;
  auto add = [&](const Permutation& x) {
    if (x.is_identity() || chain->contains(x)) return;
    chain->add_generator(x);
    gens.push_back(x);
    work.push_back(x);
  };
  for (const Permutation& x : seed) add(x);
  for (std::size_t i = 0; i < work.size(); ++i)
    for (const Permutation& c : g.generators()) add(conjugate(work[i], c));
  return PermGroup::from_chain(g.degree(), std::move(gens), std::move(chain));
}

PermGroup normal_closure(const PermGroup& g, const Permutation& x) {
  return normal_closure(g, std::vector<Permutation>{x});
}

PermGroup commutator_subgroup(const PermGroup& a, const PermGroup& b) {
  if (a.degree() != b.degree())
    throw InvalidInput("degree mismatch in commutator subgroup");
  PermGroup j = join(a, b);
  std::vector<Permutation> comms;
  for (const Permutation& x : a.generators())
    for (const Permutation& y : b.generators())
      comms.push_back(commutator(x, y));
  return normal_closure(j, comms);
}

PermGroup join(const PermGroup& a, const PermGroup& b) {
  if (a.degree() != b.degree()) throw InvalidInput("degree mismatch in join");
  std::vector<Permutation> gens = a.generators();
  gens.insert(gens.end(), b.generators().begin(), b.generators().end());
  return PermGroup(a.degree(), std::move(gens));
}

PermGroup conjugate_subgroup(const PermGroup& h, const Permutation& x) {
  if (h.degree() != x.degree())
    throw InvalidInput("degree mismatch in conjugation");
  std::vector<Permutation> gens;
  gens.reserve(h.generators().size());
  for (const Permutation& y : h.generators()) gens.push_back(conjugate(y, x));
  return PermGroup(h.degree(), std::move(gens));
}

PermGroup intersect_enumerable(const PermGroup& a, const PermGroup& b,
                               std::uint64_t limit) {
  if (a.degree() != b.degree())
    throw InvalidInput("degree mismatch in intersection");
  const PermGroup& small = a.order() <= b.order() ? a : b;
  const PermGroup& big = a.order() <= b.order() ? b : a;
  std::vector<Permutation> gens;
  small.for_each_element(
      [&](const Permutation& p) {
        if (big.contains(p)) gens.push_back(p);
        return true;
      },
      limit);
  return PermGroup(a.degree(), std::move(gens));
}

namespace {

// Backtrack over g's stabilizer chain for the subgroup commuting with every
// target.  Partial assignments are propagated through the targets (knowing
// e(p) = q forces e(t(p)) = t(q)), and the first base image is restricted to
// minima of the orbits of the subgroup found so far, so each successful leaf
// strictly enlarges it.
class CentralizerSearch {
 public:
  CentralizerSearch(const PermGroup& g, std::vector<Permutation> targets)
      : g_(g),
        targets_(std::move(targets)),
        degree_(g.degree()),
        img_(degree_, -1),
        pre_(degree_, -1) {}

  PermGroup run() {
    auto chain = std::make_shared<StabilizerChain>(
        degree_, std::vector<Permutation>{});
    std::vector<Permutation> found;
    auto admit = [&](const Permutation& x) {
      if (x.is_identity() || chain->contains(x) || !commutes_with_all(x))
        return;
      chain->add_generator(x);
      found.push_back(x);
    };
    // Cheap seeds: generators and targets that already centralize.
    for (const Permutation& x : g_.generators()) admit(x);
    for (const Permutation& t : targets_)
      if (t.degree() == degree_ && g_.contains(t)) admit(t);

    for (;;) {
      known_ = chain.get();
      refresh_orbit_minima(found);
      found_one_.reset();
      dfs(0, Permutation::identity(degree_));
      unwind(0);  // the success path leaves its constraints on the trail
      if (!found_one_) break;
      chain->add_generator(*found_one_);
      found.push_back(std::move(*found_one_));
    }
    return PermGroup::from_chain(degree_, std::move(found), std::move(chain));
  }

 private:
  bool commutes_with_all(const Permutation& e) const {
    for (const Permutation& t : targets_)
      if (compose(e, t) != compose(t, e)) return false;
    return true;
  }

  void refresh_orbit_minima(const std::vector<Permutation>& gens) {
    orbit_min_.assign(degree_, 0);
    for (const auto& orb : point_orbits(gens, degree_))
      for (int p : orb) orbit_min_[p] = orb.front();
  }

  // Record e(a) = b plus everything the targets force; false on conflict.
  // Entries are pushed onto trail_ for unwinding either way.
  bool push_constraint(int a, int b) {
    std::deque<std::pair<int, int>> queue;
    auto set = [&](int p, int v) {
      if (img_[p] == v) return true;
      if (img_[p] != -1 || pre_[v] != -1) return false;
      img_[p] = v;
      pre_[v] = p;
      trail_.push_back(p);
      queue.emplace_back(p, v);
      return true;
    };
    if (!set(a, b)) return false;
    while (!queue.empty()) {
      const auto [p, v] = queue.front();
      queue.pop_front();
      for (const Permutation& t : targets_)
        if (!set(t(p), t(v))) return false;
    }
    return true;
  }

  void unwind(std::size_t mark) {
    while (trail_.size() > mark) {
      const int p = trail_.back();
      trail_.pop_back();
      pre_[img_[p]] = -1;
      img_[p] = -1;
    }
  }

  bool dfs(std::size_t lvl, const Permutation& partial) {
    const auto& lvls = g_.chain().levels();
    if (lvl == lvls.size()) {
      if (!known_->contains(partial) && commutes_with_all(partial)) {
        found_one_ = partial;
        return true;
      }
      return false;
    }
    const auto& lv = lvls[lvl];
    for (std::size_t i = 0; i < lv.orbit.size(); ++i) {
      const int y = partial(lv.orbit[i]);
      if (img_[lv.base_point] != -1 && img_[lv.base_point] != y) continue;
      if (pre_[y] != -1 && pre_[y] != lv.base_point) continue;
      if (lvl == 0 && orbit_min_[y] != y) continue;
      const std::size_t mark = trail_.size();
      if (push_constraint(lv.base_point, y) &&
          dfs(lvl + 1, compose(lv.transversal[i], partial)))
        return true;
      unwind(mark);
    }
    return false;
  }

  const PermGroup& g_;
  std::vector<Permutation> targets_;
  int degree_;
  std::vector<int> img_, pre_;
  std::vector<int> trail_;
  std::vector<int> orbit_min_;
  const StabilizerChain* known_ = nullptr;
  std::optional<Permutation> found_one_;
};

}  // namespace

PermGroup centralizer(const PermGroup& g, const Permutation& x) {
  if (x.degree() != g.degree())
    throw InvalidInput("degree mismatch in centralizer");
  if (x.is_identity()) return g;  // no constraint: the search would walk all of g
  return CentralizerSearch(g, {x}).run();
}

PermGroup centralizer_of_subgroup(const PermGroup& g, const PermGroup& s) {
  if (s.degree() != g.degree())
    throw InvalidInput("degree mismatch in centralizer");
  if (s.is_trivial()) return g;
  return CentralizerSearch(g, s.generators()).run();
}

PermGroup center(const PermGroup& g) {
  return centralizer_of_subgroup(g, g);
}

std::vector<PermGroup> derived_series(const PermGroup& g) {
  std::vector<PermGroup> series{g};
  for (;;) {
    PermGroup next = commutator_subgroup(series.back(), series.back());
    if (next.order() == series.back().order()) break;
    const bool done = next.is_trivial();
    series.push_back(std::move(next));
    if (done) break;
  }
  return series;
}

std::vector<PermGroup> lower_central_series(const PermGroup& g) {
  std::vector<PermGroup> series{g};
  for (;;) {
    PermGroup next = commutator_subgroup(series.back(), g);
    if (next.order() == series.back().order()) break;
    const bool done = next.is_trivial();
    series.push_back(std::move(next));
    if (done) break;
  }
  return series;
}

bool is_soluble(const PermGroup& g) {
  return derived_series(g).back().is_trivial();
}

bool is_nilpotent(const PermGroup& g) {
  return lower_central_series(g).back().is_trivial();
}

bool is_normal_in(const PermGroup& h, const PermGroup& g) {
  if (!is_subgroup_of(h, g)) return false;
  for (const Permutation& x : g.generators())
    for (const Permutation& y : h.generators())
      if (!h.contains(conjugate(y, x))) return false;
  return true;
}

bool is_subnormal(const PermGroup& h, const PermGroup& g) {
  if (!is_subgroup_of(h, g)) return false;
  PermGroup k = g;
  for (;;) {
    if (k.order() == h.order()) return true;
    PermGroup next = normal_closure(k, h.generators());
    if (next.order() == k.order()) return false;
    k = std::move(next);
  }
}

std::vector<PermGroup> iterated_commutator_chain(const PermGroup& n,
                                                 const Permutation& x,
                                                 int cap) {
  PermGroup xgrp(n.degree(), {x});
  std::vector<PermGroup> chain{n};
  for (int i = 0; i < cap; ++i) {
    PermGroup next = commutator_subgroup(chain.back(), xgrp);
    if (equal_groups(next, chain.back())) break;
    const bool done = next.is_trivial();
    chain.push_back(std::move(next));
    if (done) break;
  }
  return chain;
}

}  // namespace ef
