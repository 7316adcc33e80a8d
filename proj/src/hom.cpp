#include "ef/hom.hpp"

#include <algorithm>
#include <string>
#include <unordered_map>

#include "ef/errors.hpp"

namespace ef {

namespace {

Permutation pair_perm(const Permutation& d, const Permutation& a) {
  std::vector<int> img(d.degree() + a.degree());
  for (int i = 0; i < d.degree(); ++i) img[i] = d(i);
  for (int j = 0; j < a.degree(); ++j) img[d.degree() + j] = d.degree() + a(j);
  return Permutation(std::move(img));
}

Permutation domain_part(const Permutation& p, int dg) {
  std::vector<int> img(dg);
  for (int i = 0; i < dg; ++i) img[i] = p(i);
  return Permutation(std::move(img));
}

Permutation action_part(const Permutation& p, int dg, int adeg) {
  std::vector<int> img(adeg);
  for (int j = 0; j < adeg; ++j) img[j] = p(dg + j) - dg;
  return Permutation(std::move(img));
}

}  // namespace

GroupHom::GroupHom(PermGroup domain, int action_degree,
                   std::vector<Permutation> gen_images)
    : domain_(std::move(domain)),
      action_degree_(action_degree),
      gen_images_(std::move(gen_images)),
      image_(PermGroup::trivial(0)),
      kernel_(PermGroup::trivial(0)) {
  if (action_degree_ < 0) throw InvalidInput("negative action degree");
  if (gen_images_.size() != domain_.generators().size())
    throw InvalidInput("need exactly one image per domain generator");
  for (const Permutation& h : gen_images_)
    if (h.degree() != action_degree_)
      throw InvalidInput("generator image degree mismatch");

  const int dg = domain_.degree();
  std::vector<Permutation> pair_gens;
  pair_gens.reserve(gen_images_.size());
  for (std::size_t i = 0; i < gen_images_.size(); ++i)
    pair_gens.push_back(pair_perm(domain_.generators()[i], gen_images_[i]));

  auto mapper =
      std::make_shared<StabilizerChain>(dg + action_degree_, pair_gens);
  for (const auto& lv : mapper->levels())
    if (lv.base_point >= dg)
      throw InvalidInput("generator images do not define a homomorphism");
  domain_first_ = std::move(mapper);

  std::vector<char> mask(dg + action_degree_, 0);
  for (int j = 0; j < action_degree_; ++j) mask[dg + j] = 1;
  auto split = std::make_shared<StabilizerChain>(dg + action_degree_,
                                                 pair_gens, std::move(mask));
  std::vector<Permutation> kernel_gens;
  for (const Permutation& p : split->non_preferred_level_gens())
    kernel_gens.push_back(domain_part(p, dg));
  action_first_ = std::move(split);

  kernel_ = PermGroup(dg, std::move(kernel_gens));
  image_ = PermGroup(action_degree_, gen_images_);
}

Permutation GroupHom::apply(const Permutation& g) const {
  if (g.degree() != domain_.degree())
    throw InvalidInput("degree mismatch in apply");
  const int dg = domain_.degree();
  const Permutation res = domain_first_->sift(
      pair_perm(g, Permutation::identity(action_degree_)));
  for (int i = 0; i < dg; ++i)
    if (res(i) != i) throw InvalidInput("element is outside the domain group");
  return action_part(res, dg, action_degree_).inverse();
}

PermGroup GroupHom::image_of(const PermGroup& s) const {
  std::vector<Permutation> imgs;
  imgs.reserve(s.generators().size());
  for (const Permutation& x : s.generators()) imgs.push_back(apply(x));
  return PermGroup(action_degree_, std::move(imgs));
}

std::optional<Permutation> GroupHom::lift(const Permutation& h) const {
  if (h.degree() != action_degree_)
    throw InvalidInput("degree mismatch in lift");
  const int dg = domain_.degree();
  Permutation p = pair_perm(Permutation::identity(dg), h);
  for (const auto& lv : action_first_->levels()) {
    if (lv.base_point < dg) break;  // past the action-point prefix
    const int delta = p(lv.base_point);
    if (delta == lv.base_point) continue;
    const int pos = lv.orbit_pos[delta];
    if (pos < 0) return std::nullopt;
    p = compose(p, lv.transversal[pos].inverse());
  }
  for (int j = 0; j < action_degree_; ++j)
    if (p(dg + j) != dg + j) return std::nullopt;
  return domain_part(p, dg).inverse();
}

PermGroup GroupHom::preimage(const PermGroup& s) const {
  if (s.degree() != action_degree_)
    throw InvalidInput("degree mismatch in preimage");
  std::vector<Permutation> gens = kernel_.generators();
  for (const Permutation& h : s.generators()) {
    std::optional<Permutation> x = lift(h);
    if (!x) throw InvalidInput("subgroup is not contained in the image");
    gens.push_back(std::move(*x));
  }
  return PermGroup(domain_.degree(), std::move(gens));
}

GroupHom coset_action(const PermGroup& g, const PermGroup& h,
                      std::uint64_t max_index) {
  if (h.degree() != g.degree())
    throw InvalidInput("coset action subgroup degree mismatch");
  if (!is_subgroup_of(h, g))
    throw InvalidInput("coset action requires a subgroup");
  const std::uint64_t index = g.order() / h.order();
  if (index > max_index)
    throw TooLarge("coset space of size " + std::to_string(index) +
                   " exceeds limit " + std::to_string(max_index));

  // Identify cosets Ht by a cheap invariant first (the family of images of
  // the H-orbits under t), falling back to membership tests only within a
  // hash bucket.
  const auto orbits = point_orbits(h.generators(), g.degree());
  auto sig_hash = [&](const Permutation& t) {
    std::uint64_t acc = 1469598103934665603ULL;
    auto mix = [&](int v) {
      acc ^= static_cast<std::uint64_t>(static_cast<std::uint32_t>(v));
      acc *= 1099511628211ULL;
    };
    std::vector<int> img;
    for (const auto& orb : orbits) {
      img.clear();
      for (int p : orb) img.push_back(t(p));
      std::sort(img.begin(), img.end());
      for (int v : img) mix(v);
      mix(-1);
    }
    return acc;
  };

  std::vector<Permutation> reps{Permutation::identity(g.degree())};
  std::unordered_map<std::uint64_t, std::vector<int>> buckets;
  buckets[sig_hash(reps[0])].push_back(0);
  auto locate = [&](const Permutation& t) {
    const auto it = buckets.find(sig_hash(t));
    if (it == buckets.end()) return -1;
    for (int j : it->second)
      if (h.contains(t * reps[j].inverse())) return j;
    return -1;
  };

  const auto& gens = g.generators();
  std::vector<std::vector<int>> table(gens.size());
  for (std::size_t i = 0; i < reps.size(); ++i) {
    for (std::size_t gi = 0; gi < gens.size(); ++gi) {
      Permutation t = reps[i] * gens[gi];
      int j = locate(t);
      if (j < 0) {
        j = static_cast<int>(reps.size());
        buckets[sig_hash(t)].push_back(j);
        reps.push_back(std::move(t));
      }
      table[gi].push_back(j);
    }
  }
  if (reps.size() != index) throw Error("coset enumeration out of step");

  std::vector<Permutation> gen_images;
  gen_images.reserve(table.size());
  for (auto& row : table) gen_images.emplace_back(std::move(row));
  return GroupHom(g, static_cast<int>(index), std::move(gen_images));
}

GroupHom quotient_by(const PermGroup& g, const PermGroup& n,
                     std::uint64_t max_index) {
  if (!is_subgroup_of(n, g)) throw InvalidInput("quotient requires a subgroup");
  for (const Permutation& x : g.generators())
    for (const Permutation& y : n.generators())
      if (!n.contains(conjugate(y, x)))
        throw InvalidInput("quotient requires a normal subgroup");
  if (n.is_trivial())
    return GroupHom(g, g.degree(), g.generators());  // identity map
  // Cheap route first: G permutes the orbits of N, and when the kernel of
  // that action is exactly N it realizes G/N on #orbits points -- far fewer
  // than the coset count for big imprimitive groups.
  const auto orbits = point_orbits(n.generators(), g.degree());
  if (orbits.size() >= 2 && orbits.size() < static_cast<std::size_t>(g.degree())) {
    GroupHom onto_orbits = block_hom(g, orbits);
    if (onto_orbits.kernel().order() == n.order()) return onto_orbits;
  }
  return coset_action(g, n, max_index);
}

GroupHom restriction_hom(const PermGroup& g, const std::vector<int>& points) {
  std::vector<int> idx(g.degree(), -1);
  for (std::size_t i = 0; i < points.size(); ++i) {
    const int p = points[i];
    if (p < 0 || p >= g.degree() || idx[p] >= 0)
      throw InvalidInput("bad restriction point set");
    idx[p] = static_cast<int>(i);
  }
  std::vector<Permutation> gen_images;
  for (const Permutation& x : g.generators()) {
    std::vector<int> img(points.size());
    for (std::size_t i = 0; i < points.size(); ++i) {
      const int q = x(points[i]);
      if (idx[q] < 0) throw InvalidInput("point set is not invariant");
      img[i] = idx[q];
    }
    gen_images.emplace_back(std::move(img));
  }
  return GroupHom(g, static_cast<int>(points.size()), std::move(gen_images));
}

GroupHom block_hom(const PermGroup& g,
                   const std::vector<std::vector<int>>& blocks) {
  std::vector<int> blk(g.degree(), -1);
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    if (blocks[b].empty()) throw InvalidInput("empty block");
    for (int p : blocks[b]) {
      if (p < 0 || p >= g.degree() || blk[p] >= 0)
        throw InvalidInput("blocks must be disjoint and in range");
      blk[p] = static_cast<int>(b);
    }
  }
  std::vector<Permutation> gen_images;
  for (const Permutation& x : g.generators()) {
    std::vector<int> img(blocks.size());
    for (std::size_t b = 0; b < blocks.size(); ++b) {
      const int target = blk[x(blocks[b][0])];
      if (target < 0) throw InvalidInput("partition is not invariant");
      for (int p : blocks[b])
        if (blk[x(p)] != target)
          throw InvalidInput("partition is not a block system");
      img[b] = target;
    }
    gen_images.emplace_back(std::move(img));
  }
  return GroupHom(g, static_cast<int>(blocks.size()), std::move(gen_images));
}

}  // namespace ef
