#include "ef/structure.hpp"

#include <algorithm>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "ef/errors.hpp"
#include "ef/group_ops.hpp"

namespace ef {

namespace {

bool is_prime_u64(std::uint64_t p) {
  if (p < 2) return false;
  for (std::uint64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

bool is_p_power(std::uint64_t n, std::uint64_t p) {
  while (n % p == 0) n /= p;
  return n == 1;
}

std::vector<std::uint64_t> prime_factors_u64(std::uint64_t n) {
  std::vector<std::uint64_t> ps;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) {
      ps.push_back(d);
      while (n % d == 0) n /= d;
    }
  if (n > 1) ps.push_back(n);
  return ps;
}

std::vector<std::uint64_t> divisors_sorted(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 1; d * d <= n; ++d)
    if (n % d == 0) {
      out.push_back(d);
      if (d != n / d) out.push_back(n / d);
    }
  std::sort(out.begin(), out.end());
  return out;
}

// a^-1 mod m for coprime a, m (values small enough for int64 arithmetic).
std::uint64_t inv_mod(std::uint64_t a, std::uint64_t m) {
  std::int64_t t = 0, nt = 1;
  std::int64_t r = static_cast<std::int64_t>(m),
               nr = static_cast<std::int64_t>(a % m);
  while (nr != 0) {
    std::int64_t q = r / nr;
    t = std::exchange(nt, t - q * nt);
    r = std::exchange(nr, r - q * nr);
  }
  if (t < 0) t += static_cast<std::int64_t>(m);
  return static_cast<std::uint64_t>(t);
}

bool is_perfect(const PermGroup& g) {
  return !g.is_trivial() && commutator_subgroup(g, g).order() == g.order();
}

PermGroup perfect_core(const PermGroup& g) { return derived_series(g).back(); }

// Some element of prime order: a power of the first non-identity generator.
Permutation prime_order_element(const PermGroup& h) {
  for (const Permutation& x : h.generators()) {
    if (x.is_identity()) continue;
    std::uint64_t o = x.order();
    return x.power(o / prime_factors_u64(o).front());
  }
  return Permutation::identity(h.degree());
}

// ---- p-core, enumerable case ----------------------------------------------
//
// Climb to a Sylow p-subgroup greedily (while P is below a Sylow S, the
// normalizer of P in S is strictly bigger, so some p-element outside P
// normalizes P and <P, x> = P<x> is again a p-group), then cut the Sylow
// down to its normal core: repeatedly discard elements with a generator
// conjugate outside the surviving set.  The fixed point is the largest
// subset invariant under all generators, which is still a subgroup, i.e.
// the largest normal p-subgroup.
PermGroup p_core_enum(const PermGroup& g, std::uint64_t p) {
  const std::vector<Permutation> elems = g.elements();
  std::vector<char> p_elem(elems.size(), 0);
  for (std::size_t i = 0; i < elems.size(); ++i)
    p_elem[i] = !elems[i].is_identity() && is_p_power(elems[i].order(), p);

  std::vector<Permutation> sylow_gens;
  std::unordered_set<Permutation, PermHash> in_p;
  in_p.insert(Permutation::identity(g.degree()));
  bool grew = true;
  while (grew) {
    grew = false;
    for (std::size_t i = 0; i < elems.size(); ++i) {
      if (!p_elem[i] || in_p.count(elems[i])) continue;
      bool normalizes = true;
      for (const Permutation& t : sylow_gens)
        if (!in_p.count(conjugate(t, elems[i]))) {
          normalizes = false;
          break;
        }
      if (!normalizes) continue;
      sylow_gens.push_back(elems[i]);
      in_p.clear();
      for (const Permutation& e : PermGroup(g.degree(), sylow_gens).elements())
        in_p.insert(e);
      grew = true;
      break;
    }
  }

  std::unordered_set<Permutation, PermHash> core = std::move(in_p);
  bool changed = true;
  while (changed) {
    changed = false;
    std::unordered_set<Permutation, PermHash> next;
    for (const Permutation& x : core) {
      bool keep = true;
      for (const Permutation& s : g.generators())
        if (!core.count(conjugate(x, s))) {
          keep = false;
          break;
        }
      if (keep)
        next.insert(x);
      else
        changed = true;
    }
    core = std::move(next);
  }
  std::vector<Permutation> gens(core.begin(), core.end());
  std::sort(gens.begin(), gens.end());
  return PermGroup(g.degree(), std::move(gens));
}

}  // namespace

std::vector<Permutation> conjugacy_class_representatives(const PermGroup& g) {
  const std::vector<Permutation> elems = g.elements();
  std::unordered_set<Permutation, PermHash> seen;
  seen.reserve(elems.size() * 2);
  std::vector<Permutation> reps;
  for (const Permutation& e : elems) {
    if (seen.count(e)) continue;
    reps.push_back(e);
    std::vector<Permutation> queue{e};
    seen.insert(e);
    while (!queue.empty()) {
      Permutation cur = std::move(queue.back());
      queue.pop_back();
      for (const Permutation& s : g.generators()) {
        Permutation c = conjugate(cur, s);
        if (seen.insert(c).second) queue.push_back(std::move(c));
      }
    }
  }
  return reps;
}

// Reduction strategy for the p-core of a group too big to enumerate.  Every
// branch hands the problem to a strictly smaller instance (smaller order, or
// the same order on fewer points), so the recursion terminates:
//
//  - intransitive: sweep the orbits, replacing the candidate N (initially G)
//    by the preimage in N of the p-core of its restriction to each orbit.
//    Each sweep keeps N normal in G; at the end N restricted to every orbit
//    is a p-group, hence N itself is one, and it still contains O_p(G).
//  - transitive imprimitive, block image B not a p-group: O_p(G) = O_p(M)
//    for M the preimage of O_p(B), and M is proper in G.
//  - transitive imprimitive, B a p-group: work inside the block kernel K.
//    With c = O_p(K) nontrivial, grow c against the kernel of the action on
//    c's orbits until stable, then finish in G/c (the preimage of O_p(G/c)
//    is a p-group over a p-group, hence O_p(G) exactly).  With c trivial,
//    O_p(G) centralizes K, so pass to the centralizer; if even that is all
//    of G, the group is nilpotent with central p'-part K, and the p-parts
//    of the generators generate O_p.
//  - transitive primitive: a nontrivial normal subgroup of a primitive group
//    is transitive, so a nontrivial p-core forces p-power degree.
PermGroup p_core(const PermGroup& g, std::uint64_t p) {
  if (!is_prime_u64(p))
    throw InvalidInput("p-core requires a prime, got " + std::to_string(p));
  const std::uint64_t ord = g.order();
  if (ord % p != 0) return PermGroup::trivial(g.degree());
  if (is_p_power(ord, p)) return g;
  if (ord <= Limits::current().enumeration) return p_core_enum(g, p);

  const auto orbits = point_orbits(g.generators(), g.degree());
  if (orbits.size() >= 2) {
    PermGroup n = g;
    for (const auto& o : orbits) {
      if (o.size() < 2) continue;
      GroupHom rho = restriction_hom(n, o);
      n = rho.preimage(p_core(rho.image(), p));
      if (n.is_trivial()) return n;
    }
    return n;
  }

  const std::vector<int>& orbit = orbits.front();
  auto blocks = minimal_block_system(g, orbit);
  if (!blocks) {
    if (!is_p_power(static_cast<std::uint64_t>(g.degree()), p))
      return PermGroup::trivial(g.degree());
    throw TooLarge(
        "p-core of a primitive group of p-power degree needs enumeration "
        "(order " +
        std::to_string(ord) + ")");
  }

  GroupHom psi = block_hom(g, *blocks);
  const PermGroup& b = psi.image();
  if (!is_p_power(b.order(), p))
    return p_core(psi.preimage(p_core(b, p)), p);

  const PermGroup& k = psi.kernel();
  PermGroup c = p_core(k, p);
  if (c.is_trivial()) {
    PermGroup cent = centralizer_of_subgroup(g, k);
    if (cent.order() < g.order()) return p_core(cent, p);
    // K is central with p-free order and G/K is a p-group, so G is nilpotent
    // and O_p is its Sylow p-subgroup, generated by the generator p-parts.
    std::vector<Permutation> pparts;
    for (const Permutation& x : g.generators()) {
      std::uint64_t o = x.order(), pk = 1;
      while (o % p == 0) {
        pk *= p;
        o /= p;
      }
      if (pk == 1) continue;
      // exponent that is 0 mod the p'-part and 1 mod the p-part
      std::uint64_t m = o * inv_mod(o % pk, pk);
      pparts.push_back(x.power(m));
    }
    return PermGroup(g.degree(), std::move(pparts));
  }

  for (;;) {
    GroupHom psic = block_hom(g, point_orbits(c.generators(), g.degree()));
    const PermGroup& ic = psic.image();
    if (!is_p_power(ic.order(), p))
      return p_core(psic.preimage(p_core(ic, p)), p);
    PermGroup c2 = p_core(psic.kernel(), p);
    if (c2.order() > c.order()) {
      c = std::move(c2);
      continue;
    }
    GroupHom q = quotient_by(g, c);
    return q.preimage(p_core(q.image(), p));
  }
}

PermGroup fitting_subgroup(const PermGroup& g) {
  PermGroup f = PermGroup::trivial(g.degree());
  for (std::uint64_t p : prime_factors_u64(g.order())) f = join(f, p_core(g, p));
  return f;
}

SeriesRecord fitting_series(const PermGroup& g) {
  SeriesRecord rec;
  rec.kind = SeriesKind::Fitting;
  rec.terms.emplace_back("F0", PermGroup::trivial(g.degree()));
  for (;;) {
    const PermGroup& last = rec.terms.back().second;
    if (last.order() == g.order()) {
      rec.stabilized_at_g = true;
      break;
    }
    GroupHom q = quotient_by(g, last);
    PermGroup next = q.preimage(fitting_subgroup(q.image()));
    if (next.order() == last.order()) break;  // stalled: `last` is the radical
    rec.terms.emplace_back("F" + std::to_string(rec.terms.size()),
                           std::move(next));
  }
  rec.height_or_length = static_cast<int>(rec.terms.size()) - 1;
  return rec;
}

PermGroup soluble_radical(const PermGroup& g) {
  // The stable term of the ascending Fitting series: a soluble normal
  // subgroup sticking out above a stalled term would contribute a nontrivial
  // abelian normal subgroup to the quotient, contradicting the stall.
  return fitting_series(g).terms.back().second;
}

int fitting_height(const PermGroup& g) {
  SeriesRecord rec = fitting_series(g);
  if (!rec.stabilized_at_g)
    throw NotSoluble("Fitting series stalls at a proper subgroup of order " +
                     std::to_string(rec.terms.back().second.order()));
  return rec.height_or_length;
}

const PermGroup& SeriesRecord::term_clamped(int i) const {
  if (i < 0) throw InvalidInput("negative series index");
  if (terms.empty()) throw InvalidInput("series has no terms");
  return terms[std::min<std::size_t>(i, terms.size() - 1)].second;
}

const PermGroup& SeriesRecord::d_term_clamped(int i) const {
  if (i < 0) throw InvalidInput("negative series index");
  const PermGroup* last = nullptr;
  int seen = 0;
  for (const auto& t : terms)
    if (!t.first.empty() && t.first.front() == 'D') {
      if (seen == i) return t.second;
      ++seen;
      last = &t.second;
    }
  if (!last) throw InvalidInput("series has no D-terms");
  return *last;
}

namespace {

// Exact minimal normal subgroups of an enumerable group: among the normal
// closures of prime-order class representatives (closures are constant on
// classes, and every minimal normal subgroup is such a closure), keep the
// inclusion-minimal ones.
std::vector<PermGroup> minimal_normals_enum(const PermGroup& g) {
  std::vector<PermGroup> closures;
  for (const Permutation& r : conjugacy_class_representatives(g)) {
    if (r.is_identity() || !is_prime_u64(r.order())) continue;
    PermGroup c = normal_closure(g, r);
    bool dup = false;
    for (const PermGroup& e : closures)
      if (e.order() == c.order() && equal_groups(e, c)) {
        dup = true;
        break;
      }
    if (!dup) closures.push_back(std::move(c));
  }
  std::vector<PermGroup> mins;
  for (const PermGroup& c : closures) {
    bool minimal = true;
    for (const PermGroup& d : closures)
      if (d.order() < c.order() && is_subgroup_of(d, c)) {
        minimal = false;
        break;
      }
    if (minimal) mins.push_back(c);
  }
  return mins;
}

bool is_simple_enum(const PermGroup& g) {
  if (g.is_trivial()) return false;
  for (const Permutation& r : conjugacy_class_representatives(g)) {
    if (r.is_identity()) continue;
    if (normal_closure(g, r).order() != g.order()) return false;
  }
  return true;
}

}  // namespace

SemisimpleSplit split_semisimple(const PermGroup& n) {
  SemisimpleSplit out;
  if (n.is_trivial()) return out;

  if (n.order() <= Limits::current().enumeration) {
    std::vector<PermGroup> mins = minimal_normals_enum(n);
    __uint128_t prod = 1;
    for (const PermGroup& m : mins) {
      if (!is_perfect(m) || !is_simple_enum(m))
        throw InvalidInput(
            "group is not a direct product of nonabelian simple groups");
      prod *= m.order();
    }
    if (prod != n.order())
      throw InvalidInput(
          "group is not a direct product of nonabelian simple groups");
    out.factors = std::move(mins);
    return out;
  }

  // Beyond enumeration the factors must separate along orbit supports: the
  // pointwise stabilizer of everything outside one orbit is the product of
  // the factors living on it.
  __uint128_t prod = 1;
  for (const auto& o : point_orbits(n.generators(), n.degree())) {
    if (o.size() < 2) continue;
    std::vector<char> inside(n.degree(), 0);
    for (int pt : o) inside[pt] = 1;
    std::vector<int> complement;
    for (int pt = 0; pt < n.degree(); ++pt)
      if (!inside[pt]) complement.push_back(pt);
    PermGroup part =
        complement.empty() ? n : pointwise_stabilizer(n, complement);

    if (part.order() <= Limits::current().enumeration) {
      SemisimpleSplit sub = split_semisimple(part);
      out.probabilistic = out.probabilistic || sub.probabilistic;
      for (PermGroup& f : sub.factors) {
        prod *= f.order();
        out.factors.push_back(std::move(f));
      }
      continue;
    }

    // One big factor on this orbit: require a transitive primitive perfect
    // piece and back its simplicity with random full-closure tests.
    std::size_t nonsingleton = 0;
    bool covers = false;
    for (const auto& po : point_orbits(part.generators(), part.degree()))
      if (po.size() >= 2) {
        ++nonsingleton;
        covers = (po == o);
      }
    if (nonsingleton != 1 || !covers)
      throw TooLarge("cannot split a non-enumerable factor along its orbit");
    if (minimal_block_system(part, o))
      throw TooLarge(
          "cannot certify simplicity of a non-enumerable imprimitive factor");
    if (!is_perfect(part))
      throw InvalidInput(
          "group is not a direct product of nonabelian simple groups");
    std::mt19937_64 rng(seed_from(
        0x51A73ULL, std::to_string(part.order()) + ":" +
                        std::to_string(part.degree()) + ":" +
                        std::to_string(part.generators().size())));
    int tested = 0, draws = 0;
    while (tested < 8) {
      if (++draws > 200)
        throw TooLarge("could not sample nontrivial factor elements");
      Permutation x = part.random_element(rng);
      if (x.is_identity()) continue;
      std::uint64_t xo = x.order();
      Permutation y = x.power(xo / prime_factors_u64(xo).front());
      if (normal_closure(part, y).order() != part.order())
        throw TooLarge("a non-enumerable factor has a proper normal closure");
      ++tested;
    }
    out.probabilistic = true;
    prod *= part.order();
    out.factors.push_back(std::move(part));
  }
  if (prod != n.order())
    throw TooLarge("orbit supports do not split the group");
  return out;
}

SocleResult socle_of(const PermGroup& g) {
  if (g.is_trivial())
    return SocleResult{PermGroup::trivial(g.degree()), {}, false};

  if (g.order() <= Limits::current().enumeration) {
    std::vector<PermGroup> mins = minimal_normals_enum(g);
    PermGroup s = PermGroup::trivial(g.degree());
    for (const PermGroup& m : mins) s = join(s, m);
    return SocleResult{std::move(s), std::move(mins), false};
  }

  // Beyond the enumeration limit: find a candidate by randomized
  // normal-closure descent, then certify it.  Once certified the result is
  // exact, so the sampling alone does not make it probabilistic.
  std::mt19937_64 rng(seed_from(
      0x50C1E5EEDULL, std::to_string(g.order()) + ":" +
                          std::to_string(g.degree()) + ":" +
                          std::to_string(g.generators().size())));
  std::optional<PermGroup> best;
  auto consider = [&](PermGroup t) {
    if (!best || t.order() < best->order()) {
      best = std::move(t);
      return true;
    }
    return false;
  };
  auto sample_closures = [&]() {
    Permutation x = g.random_element(rng);
    if (x.is_identity()) return false;
    bool improved = false;
    std::uint64_t xo = x.order();
    for (std::uint64_t p : prime_factors_u64(xo))
      improved = consider(normal_closure(g, x.power(xo / p))) || improved;
    return improved;
  };

  int stagnant = 0;
  for (int sample = 0; sample < 400 && stagnant < 24; ++sample)
    stagnant = sample_closures() ? 0 : stagnant + 1;
  if (!best) throw TooLarge("could not sample a nontrivial normal closure");

  // Deterministic descent: a candidate with a nontrivial Fitting subgroup
  // contains a smaller normal closure inside that subgroup.
  for (;;) {
    PermGroup f = fitting_subgroup(*best);
    if (f.is_trivial()) break;
    Permutation z = prime_order_element(f);
    if (z.is_identity()) break;
    if (!consider(normal_closure(g, z))) break;
  }

  // Certificates: (1) the candidate splits into nonabelian simple factors,
  // so every factor is subnormal-simple and the candidate lies inside the
  // socle; (2) the candidate's centralizer is trivial, so no minimal normal
  // subgroup survives outside it and the socle lies inside the candidate.
  std::vector<PermGroup> factors;
  bool factors_probabilistic = false;
  bool certified = false;
  for (int attempt = 0; attempt < 64 && !certified; ++attempt) {
    std::optional<SemisimpleSplit> split;
    try {
      split = split_semisimple(*best);
    } catch (const Error&) {
      split = std::nullopt;
    }
    if (!split) {
      sample_closures();  // move the candidate and retry
      continue;
    }
    PermGroup cz = centralizer_of_subgroup(g, *best);
    if (cz.is_trivial()) {
      factors = std::move(split->factors);
      factors_probabilistic = split->probabilistic;
      certified = true;
      break;
    }
    // Missing minimal normal subgroups lie inside the centralizer (which is
    // itself normal); join one in and retry.
    Permutation z = prime_order_element(cz);
    if (z.is_identity())
      throw TooLarge("socle centralizer certificate failed");
    best = join(*best, normal_closure(g, z));
  }
  if (!certified) throw TooLarge("socle candidate could not be certified");

  // Group the simple factors into conjugation orbits; each orbit joins into
  // one minimal normal subgroup.
  const int v = static_cast<int>(factors.size());
  std::vector<Permutation> witness;
  witness.reserve(v);
  for (const PermGroup& f : factors) witness.push_back(prime_order_element(f));
  std::vector<int> parent(v);
  for (int i = 0; i < v; ++i) parent[i] = i;
  auto find = [&](int a) {
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
  };
  for (const Permutation& s : g.generators())
    for (int i = 0; i < v; ++i) {
      Permutation w = conjugate(witness[i], s);
      int target = -1;
      for (int j = 0; j < v; ++j)
        if (factors[j].contains(w)) {
          target = j;
          break;
        }
      if (target < 0)
        throw TooLarge("conjugation does not permute the socle factors");
      int a = find(i), b = find(target);
      if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
  std::vector<PermGroup> mins;
  for (int root = 0; root < v; ++root) {
    if (find(root) != root) continue;
    PermGroup m = PermGroup::trivial(g.degree());
    for (int i = 0; i < v; ++i)
      if (find(i) == root) m = join(m, factors[i]);
    mins.push_back(std::move(m));
  }
  return SocleResult{*best, std::move(mins), factors_probabilistic};
}

std::vector<PermGroup> minimal_normal_subgroups(const PermGroup& g) {
  return socle_of(g).minimal_normals;
}

ComponentsResult components_and_layer(const PermGroup& g) {
  // The layer centralizes the Fitting subgroup, so it survives intact inside
  // C = C_G(F).  There Z = F(C) is the centre of C, C/Z has trivial Fitting
  // subgroup, and the components of G map onto the simple factors of the
  // socle of C/Z; pulling the socle back and taking the perfect core strips
  // the central soluble part again.
  PermGroup f = fitting_subgroup(g);
  PermGroup c = f.is_trivial() ? g : centralizer_of_subgroup(g, f);
  PermGroup z = fitting_subgroup(c);
  GroupHom q = quotient_by(c, z);
  SocleResult s = socle_of(q.image());
  PermGroup e = perfect_core(q.preimage(s.socle));
  bool prob = s.probabilistic;

  std::vector<PermGroup> comps;
  if (!e.is_trivial()) {
    PermGroup ze = center(e);
    if (ze.is_trivial()) {
      SemisimpleSplit sp = split_semisimple(e);
      prob = prob || sp.probabilistic;
      comps = std::move(sp.factors);
    } else {
      GroupHom q2 = quotient_by(e, ze);
      SemisimpleSplit sp = split_semisimple(q2.image());
      prob = prob || sp.probabilistic;
      for (const PermGroup& part : sp.factors)
        comps.push_back(perfect_core(q2.preimage(part)));
    }
    for (const PermGroup& comp : comps)
      if (!is_perfect(comp))
        throw Error("component fails the perfect-group check");
  }
  return ComponentsResult{std::move(comps), std::move(e), prob};
}

PermGroup generalized_fitting_subgroup(const PermGroup& g) {
  return join(fitting_subgroup(g), components_and_layer(g).layer);
}

SeriesRecord generalized_fitting_series(const PermGroup& g) {
  SeriesRecord rec;
  rec.kind = SeriesKind::GeneralizedFitting;
  rec.terms.emplace_back("F*0", PermGroup::trivial(g.degree()));
  for (;;) {
    const PermGroup& last = rec.terms.back().second;
    if (last.order() == g.order()) {
      rec.stabilized_at_g = true;
      break;
    }
    GroupHom q = quotient_by(g, last);
    ComponentsResult cl = components_and_layer(q.image());
    rec.probabilistic = rec.probabilistic || cl.probabilistic;
    PermGroup fstar = join(fitting_subgroup(q.image()), cl.layer);
    if (fstar.is_trivial())
      throw Error(
          "generalized Fitting subgroup of a nontrivial group came out "
          "trivial");
    rec.terms.emplace_back("F*" + std::to_string(rec.terms.size()),
                           q.preimage(fstar));
  }
  rec.height_or_length = static_cast<int>(rec.terms.size()) - 1;
  return rec;
}

int generalized_fitting_height(const PermGroup& g) {
  return generalized_fitting_series(g).height_or_length;
}

SeriesRecord nonsoluble_series(const PermGroup& g) {
  SeriesRecord rec;
  rec.kind = SeriesKind::Nonsoluble;
  rec.terms.emplace_back("B0", PermGroup::trivial(g.degree()));
  PermGroup d = soluble_radical(g);
  rec.terms.emplace_back("D0", d);
  int lambda = 0;
  while (d.order() != g.order()) {
    ++lambda;
    GroupHom qd = quotient_by(g, d);
    SocleResult s = socle_of(qd.image());
    rec.probabilistic = rec.probabilistic || s.probabilistic;
    PermGroup b = qd.preimage(s.socle);
    if (b.order() <= d.order())
      throw Error("socle step failed to grow the series");
    rec.terms.emplace_back("B" + std::to_string(lambda), b);
    GroupHom qb = quotient_by(g, b);
    d = qb.preimage(soluble_radical(qb.image()));
    rec.terms.emplace_back("D" + std::to_string(lambda), d);
  }
  rec.height_or_length = lambda;
  rec.stabilized_at_g = true;
  return rec;
}

int nonsoluble_length(const PermGroup& g) {
  return nonsoluble_series(g).height_or_length;
}

SimpleFactorDecomposition simple_factor_decomposition(const PermGroup& g,
                                                      int level) {
  SeriesRecord rec = nonsoluble_series(g);
  if (level < 1 || level > rec.height_or_length)
    throw InvalidInput("level must be between 1 and the nonsoluble length (" +
                       std::to_string(rec.height_or_length) + ")");
  // terms: B0, D0, B1, D1, ...; B_j at index 2j, D_j at index 2j+1
  const PermGroup& dprev = rec.terms[2 * level - 1].second;
  const PermGroup& bj = rec.terms[2 * level].second;
  const PermGroup& dj = rec.terms[2 * level + 1].second;

  GroupHom q = quotient_by(g, dprev);
  SocleResult s = socle_of(q.image());
  if (q.preimage(s.socle).order() != bj.order())
    throw Error("socle recomputation disagrees with the series");
  SemisimpleSplit sp = split_semisimple(s.socle);
  bool prob = rec.probabilistic || s.probabilistic || sp.probabilistic;

  std::vector<PermGroup> factors;
  std::vector<Permutation> witness;  // one element of each factor, not below
  factors.reserve(sp.factors.size());
  for (const PermGroup& t : sp.factors) {
    factors.push_back(q.preimage(t));
    Permutation w = prime_order_element(t);
    auto lifted = q.lift(w);
    if (!lifted) throw Error("factor witness has no preimage");
    witness.push_back(std::move(*lifted));
  }

  // Conjugation action on the factor list: the image of factor i under a
  // generator is the unique factor containing the conjugated witness.
  const int v = static_cast<int>(factors.size());
  std::vector<Permutation> gen_images;
  gen_images.reserve(g.generators().size());
  for (const Permutation& sgen : g.generators()) {
    std::vector<int> img(v, -1);
    for (int i = 0; i < v; ++i) {
      Permutation w = conjugate(witness[i], sgen);
      int target = -1;
      for (int j = 0; j < v; ++j)
        if (factors[j].contains(w)) {
          target = j;
          break;
        }
      if (target < 0)
        throw Error("conjugate of a factor witness escaped the factor list");
      img[i] = target;
    }
    gen_images.emplace_back(std::move(img));
  }
  GroupHom action(g, v, std::move(gen_images));
  PermGroup kernel = action.kernel();
  if (!is_subgroup_of(bj, kernel) || !is_subgroup_of(kernel, dj))
    throw Error("factor action kernel fell outside the expected sandwich");

  SimpleFactorDecomposition dec;
  dec.group = g;
  dec.level = level;
  dec.factors = std::move(factors);
  dec.below = q.kernel();
  dec.action_kernel = std::move(kernel);
  dec.factor_action = std::move(action);
  dec.probabilistic = prob;
  return dec;
}

std::vector<std::vector<int>> factor_orbits_of(
    const SimpleFactorDecomposition& dec, const Permutation& x) {
  if (!dec.factor_action)
    throw InvalidInput("decomposition carries no factor action");
  Permutation sigma = dec.factor_action->apply(x);
  const int v = sigma.degree();
  std::vector<char> seen(v, 0);
  std::vector<std::vector<int>> out;
  for (int i = 0; i < v; ++i) {
    if (seen[i]) continue;
    std::vector<int> cyc;
    int j = i;
    do {
      cyc.push_back(j);
      seen[j] = 1;
      j = sigma(j);
    } while (j != i);
    out.push_back(std::move(cyc));
  }
  return out;
}

bool orbit_purity(const SimpleFactorDecomposition& dec, const Permutation& x,
                  const std::vector<int>& orbit) {
  if (!dec.factor_action)
    throw InvalidInput("decomposition carries no factor action");
  if (orbit.empty()) throw InvalidInput("empty factor orbit");
  Permutation sigma = dec.factor_action->apply(x);
  const int v = static_cast<int>(dec.factors.size());
  std::vector<char> used(v, 0);
  for (std::size_t i = 0; i < orbit.size(); ++i) {
    int a = orbit[i];
    if (a < 0 || a >= v) throw InvalidInput("factor index out of range");
    if (used[a]) throw InvalidInput("factor orbit repeats an index");
    used[a] = 1;
    if (sigma(a) != orbit[(i + 1) % orbit.size()])
      throw InvalidInput(
          "orbit is not a single cycle of the element's factor action");
  }

  // Least divisor t of |x| for which x^t centralizes, modulo `below`, every
  // factor in the orbit.  Powers that still move a factor fail automatically
  // (a generator conjugate would have to lie in two distinct factors), so
  // the answer is a multiple of the orbit length; purity means equality.
  const std::uint64_t xo = x.order();
  for (std::uint64_t t : divisors_sorted(xo)) {
    Permutation xt = x.power(t);
    bool central = true;
    for (int idx : orbit) {
      for (const Permutation& w : dec.factors[idx].generators()) {
        if (dec.below.contains(w)) continue;
        if (!dec.below.contains(w.inverse() * conjugate(w, xt))) {
          central = false;
          break;
        }
      }
      if (!central) break;
    }
    if (central) return t == orbit.size();
  }
  throw Error("no power of the element centralized the orbit factors");
}

}  // namespace ef
