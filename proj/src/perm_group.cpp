#include "ef/perm_group.hpp"

#include <algorithm>
#include <numeric>

#include "ef/errors.hpp"

namespace ef {

// ---------------------------------------------------------------------------
// StabilizerChain

StabilizerChain::StabilizerChain(int degree, const std::vector<Permutation>& gens,
                                 std::vector<char> preferred)
    : degree_(degree), preferred_(std::move(preferred)) {
  if (degree < 0) throw InvalidInput("negative degree");
  if (!preferred_.empty() && static_cast<int>(preferred_.size()) != degree)
    throw InvalidInput("preferred mask size mismatch");
  for (const Permutation& g : gens) add_generator(g);
}

std::uint64_t StabilizerChain::order() const {
  std::uint64_t n = 1;
  for (const Level& lv : levels_) {
    std::uint64_t next;
    if (__builtin_mul_overflow(n, static_cast<std::uint64_t>(lv.orbit.size()),
                               &next))
      throw TooLarge("group order overflows 64 bits");
    n = next;
  }
  return n;
}

int StabilizerChain::smallest_preferred_moved(const Permutation& p) const {
  if (preferred_.empty()) return -1;
  for (int i = 0; i < degree_; ++i)
    if (preferred_[i] && p(i) != i) return i;
  return -1;
}

std::pair<Permutation, std::size_t> StabilizerChain::sift_from(
    Permutation p, std::size_t lvl) const {
  for (; lvl < levels_.size(); ++lvl) {
    const Level& lv = levels_[lvl];
    const int delta = p(lv.base_point);
    if (delta == lv.base_point) continue;
    const int pos = lv.orbit_pos[delta];
    if (pos < 0) return {std::move(p), lvl};
    p = compose(p, lv.transversal[pos].inverse());
    if (p.is_identity()) return {std::move(p), levels_.size()};
  }
  return {std::move(p), levels_.size()};
}

Permutation StabilizerChain::sift(const Permutation& p) const {
  return sift_from(p, 0).first;
}

bool StabilizerChain::contains(const Permutation& p) const {
  if (p.degree() != degree_) return false;
  return sift(p).is_identity();
}

void StabilizerChain::add_generator(const Permutation& g) {
  if (g.degree() != degree_) throw InvalidInput("generator degree mismatch");
  auto [res, lvl] = sift_from(g, 0);
  if (res.is_identity()) return;
  spliced_ = false;
  place(std::move(res), lvl);
  // Placing a generator at some level changes the acting sets of that level
  // and every level above it, so re-verify the strong-generator condition
  // from there upward.  Whenever verification itself places a residue, jump
  // back down to its level and sweep up again.
  std::size_t i = spliced_ ? levels_.size() - 1 : lvl;
  for (;;) {
    if (verify_level(i)) {
      if (i == 0) break;
      --i;
    } else {
      i = resume_;
    }
  }
}

std::vector<Permutation> StabilizerChain::acting_gens(std::size_t lvl) const {
  std::vector<Permutation> out;
  for (std::size_t j = lvl; j < levels_.size(); ++j)
    for (const Permutation& g : levels_[j].gens) out.push_back(g);
  return out;
}

void StabilizerChain::place(Permutation r, std::size_t lvl) {
  const int pref = smallest_preferred_moved(r);
  if (pref >= 0) {
    // r belongs at a preferred-base level; those must precede all others.
    std::size_t p = 0;
    while (p < levels_.size() && is_preferred(levels_[p].base_point)) ++p;
    if (p < lvl || (p == lvl && lvl < levels_.size())) {
      insert_preferred_level(p, pref, std::move(r));
      return;
    }
  }
  if (lvl == levels_.size()) {
    Level lv;
    lv.base_point = pref >= 0 ? pref : r.smallest_moved_point();
    levels_.push_back(std::move(lv));
  }
  levels_[lvl].gens.push_back(std::move(r));
  rebuild_orbit(lvl);
}

void StabilizerChain::insert_preferred_level(std::size_t pos, int base,
                                             Permutation r) {
  // All preferred-base levels precede all others; `pos` is where the block of
  // non-preferred levels starts.  Rip those out, put a fresh level for `base`
  // there, and re-insert everything that lived below.
  spliced_ = true;
  std::vector<Permutation> pool;
  pool.push_back(std::move(r));
  for (std::size_t j = pos; j < levels_.size(); ++j)
    for (Permutation& g : levels_[j].gens) pool.push_back(std::move(g));
  levels_.resize(pos);
  Level lv;
  lv.base_point = base;
  levels_.push_back(std::move(lv));
  rebuild_orbit(pos);
  for (Permutation& g : pool) {
    auto [res, at] = sift_from(std::move(g), pos);
    if (!res.is_identity()) place(std::move(res), at);
  }
}

void StabilizerChain::rebuild_orbit(std::size_t lvl) {
  const std::vector<Permutation> acting = acting_gens(lvl);
  Level& lv = levels_[lvl];
  lv.orbit.assign(1, lv.base_point);
  lv.orbit_pos.assign(degree_, -1);
  lv.orbit_pos[lv.base_point] = 0;
  lv.transversal.assign(1, Permutation::identity(degree_));
  for (std::size_t i = 0; i < lv.orbit.size(); ++i) {
    for (const Permutation& s : acting) {
      const int img = s(lv.orbit[i]);
      if (lv.orbit_pos[img] < 0) {
        lv.orbit_pos[img] = static_cast<int>(lv.orbit.size());
        lv.orbit.push_back(img);
        lv.transversal.push_back(compose(lv.transversal[i], s));
      }
    }
  }
}

bool StabilizerChain::verify_level(std::size_t lvl) {
  // Check that every Schreier generator of this level sifts to the identity
  // through the deeper levels.  On the first one that does not, install its
  // residue as a new strong generator and report where the sweep must resume.
  rebuild_orbit(lvl);
  const std::vector<Permutation> acting = acting_gens(lvl);
  const std::size_t orbit_size = levels_[lvl].orbit.size();
  for (std::size_t i = 0; i < orbit_size; ++i) {
    for (const Permutation& s : acting) {
      const Level& lv = levels_[lvl];
      const int img = s(lv.orbit[i]);
      const Permutation schreier =
          compose(compose(lv.transversal[i], s),
                  lv.transversal[lv.orbit_pos[img]].inverse());
      if (schreier.is_identity()) continue;
      auto [res, at] = sift_from(schreier, lvl + 1);
      if (res.is_identity()) continue;
      spliced_ = false;
      place(std::move(res), at);
      resume_ = spliced_ ? levels_.size() - 1 : at;
      return false;
    }
  }
  return true;
}

std::vector<Permutation> StabilizerChain::non_preferred_level_gens() const {
  std::vector<Permutation> out;
  for (const Level& lv : levels_)
    if (!is_preferred(lv.base_point))
      for (const Permutation& g : lv.gens) out.push_back(g);
  return out;
}

// ---------------------------------------------------------------------------
// PermGroup

PermGroup::PermGroup(int degree, std::vector<Permutation> gens)
    : degree_(degree) {
  for (Permutation& g : gens) {
    if (g.degree() != degree) throw InvalidInput("generator degree mismatch");
    if (!g.is_identity()) gens_.push_back(std::move(g));
  }
  chain_ = std::make_shared<StabilizerChain>(degree, gens_);
}

PermGroup PermGroup::trivial(int degree) { return PermGroup(degree, {}); }

PermGroup PermGroup::from_chain(int degree, std::vector<Permutation> gens,
                                std::shared_ptr<const StabilizerChain> chain) {
  PermGroup g;
  g.degree_ = degree;
  for (Permutation& p : gens)
    if (!p.is_identity()) g.gens_.push_back(std::move(p));
  g.chain_ = std::move(chain);
  return g;
}

bool PermGroup::contains(const Permutation& p) const {
  return chain_->contains(p);
}

void PermGroup::for_each_element(
    const std::function<bool(const Permutation&)>& fn,
    std::uint64_t limit) const {
  if (order() > limit)
    throw TooLarge("group of order " + std::to_string(order()) +
                   " exceeds enumeration limit " + std::to_string(limit));
  const auto& lvls = chain_->levels();
  if (lvls.empty()) {
    fn(Permutation::identity(degree_));
    return;
  }
  // Element = t_{k} * ... * t_1 over per-level transversal picks; the level-1
  // pick varies fastest.
  const std::size_t k = lvls.size();
  std::vector<Permutation> partial(k + 1);
  partial[k] = Permutation::identity(degree_);
  std::vector<std::size_t> pick(k, 0);
  // partial[ℓ] = product of picks at levels k-1 .. ℓ (applied first-to-last).
  for (std::size_t l = k; l-- > 0;)
    partial[l] = compose(partial[l + 1], lvls[l].transversal[0]);
  for (;;) {
    if (!fn(partial[0])) return;
    // odometer increment
    std::size_t l = 0;
    while (l < k && pick[l] + 1 == lvls[l].transversal.size()) {
      pick[l] = 0;
      ++l;
    }
    if (l == k) return;
    ++pick[l];
    for (std::size_t j = l + 1; j-- > 0;)
      partial[j] = compose(partial[j + 1], lvls[j].transversal[pick[j]]);
  }
}

std::vector<Permutation> PermGroup::elements(std::uint64_t limit) const {
  std::vector<Permutation> out;
  out.reserve(std::min(order(), limit));
  for_each_element(
      [&](const Permutation& p) {
        out.push_back(p);
        return true;
      },
      limit);
  return out;
}

Permutation PermGroup::random_element(std::mt19937_64& rng) const {
  Permutation x = Permutation::identity(degree_);
  const auto& lvls = chain_->levels();
  for (std::size_t l = lvls.size(); l-- > 0;) {
    const auto& tv = lvls[l].transversal;
    x = compose(x, tv[bounded_random(rng, tv.size())]);
  }
  return x;
}

bool equal_groups(const PermGroup& a, const PermGroup& b) {
  if (a.degree() != b.degree() || a.order() != b.order()) return false;
  return is_subgroup_of(a, b);
}

bool is_subgroup_of(const PermGroup& h, const PermGroup& g) {
  if (h.degree() != g.degree()) return false;
  for (const Permutation& x : h.generators())
    if (!g.contains(x)) return false;
  return true;
}

std::vector<std::vector<int>> point_orbits(const std::vector<Permutation>& gens,
                                           int degree) {
  std::vector<int> root(degree, -1);
  std::vector<std::vector<int>> orbits;
  for (int p = 0; p < degree; ++p) {
    if (root[p] >= 0) continue;
    std::vector<int> orb{p};
    root[p] = p;
    for (std::size_t i = 0; i < orb.size(); ++i)
      for (const Permutation& s : gens) {
        const int q = s(orb[i]);
        if (root[q] < 0) {
          root[q] = p;
          orb.push_back(q);
        }
      }
    std::sort(orb.begin(), orb.end());
    orbits.push_back(std::move(orb));
  }
  return orbits;
}

std::vector<std::vector<int>> moved_orbits(const PermGroup& g) {
  std::vector<std::vector<int>> out;
  for (auto& orb : point_orbits(g.generators(), g.degree()))
    if (orb.size() > 1) out.push_back(std::move(orb));
  return out;
}

std::vector<std::vector<int>> block_system_containing(
    const PermGroup& g, const std::vector<int>& orbit, int p, int q) {
  // Atkinson's algorithm: union-find refinement of the seed pair.
  const int degree = g.degree();
  std::vector<int> parent(degree);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  std::vector<std::pair<int, int>> queue;
  auto unite = [&](int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (a > b) std::swap(a, b);
    parent[b] = a;
    queue.emplace_back(a, b);
  };
  unite(p, q);
  for (std::size_t i = 0; i < queue.size(); ++i) {
    const auto [a, b] = queue[i];
    for (const Permutation& s : g.generators()) unite(s(a), s(b));
  }
  std::vector<std::vector<int>> blocks;
  std::vector<int> index(degree, -1);
  for (int x : orbit) {
    const int r = find(x);
    if (index[r] < 0) {
      index[r] = static_cast<int>(blocks.size());
      blocks.emplace_back();
    }
    blocks[index[r]].push_back(x);
  }
  for (auto& b : blocks) std::sort(b.begin(), b.end());
  std::sort(blocks.begin(), blocks.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });
  return blocks;
}

std::optional<std::vector<std::vector<int>>> minimal_block_system(
    const PermGroup& g, const std::vector<int>& orbit) {
  if (orbit.size() < 2) return std::nullopt;
  const int p0 = orbit.front();
  std::optional<std::vector<std::vector<int>>> best;
  for (int w : orbit) {
    if (w == p0) continue;
    auto blocks = block_system_containing(g, orbit, p0, w);
    const std::size_t bs = blocks.front().size();
    if (bs == orbit.size() || bs == 1) continue;
    if (!best || bs < best->front().size()) best = std::move(blocks);
  }
  return best;
}

PermGroup pointwise_stabilizer(const PermGroup& g,
                               const std::vector<int>& points) {
  std::vector<char> mask(g.degree(), 0);
  for (int p : points) {
    if (p < 0 || p >= g.degree()) throw InvalidInput("point out of range");
    mask[p] = 1;
  }
  StabilizerChain chain(g.degree(), g.generators(), mask);
  std::vector<Permutation> gens = chain.non_preferred_level_gens();
  return PermGroup(g.degree(), std::move(gens));
}

std::uint64_t bounded_random(std::mt19937_64& rng, std::uint64_t n) {
  if (n == 0) throw InvalidInput("empty range");
  if (n == 1) return 0;
  const std::uint64_t reject_below = (0 - n) % n;  // 2^64 mod n
  for (;;) {
    const std::uint64_t v = rng();
    if (v >= reject_below) return v % n;
  }
}

std::uint64_t seed_from(std::uint64_t seed, const std::string& label) {
  std::uint64_t h = seed ^ 0x9e3779b97f4a7c15ULL;
  for (unsigned char c : label) {
    h ^= c;
    h *= 0x100000001b3ULL;
    h ^= h >> 29;
  }
  // splitmix finalizer
  h += 0x9e3779b97f4a7c15ULL;
  h = (h ^ (h >> 30)) * 0xbf58476d1ce4e5b9ULL;
  h = (h ^ (h >> 27)) * 0x94d049bb133111ebULL;
  return h ^ (h >> 31);
}

}  // namespace ef
