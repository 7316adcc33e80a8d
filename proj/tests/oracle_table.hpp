#pragma once

// Brute-force Cayley-table model of a small group, used as an independent
// oracle for the structural operations.  Nothing in here touches stabilizer
// chains, homomorphisms, or the library's series code: subgroups are sorted
// index vectors, quotients are coset tables, and every characteristic
// subgroup is computed straight from its definition.

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>
#include <stdexcept>
#include <vector>

#include "ef/perm.hpp"

namespace oracle {

using Sub = std::vector<int>;  // sorted element indices forming a subgroup

struct Table {
  int n = 0;
  int id = 0;
  std::vector<int> mul_;  // n*n, row-major
  std::vector<int> inv_;

  int mul(int a, int b) const {
    return mul_[static_cast<std::size_t>(a) * n + b];
  }
  int inv(int a) const { return inv_[a]; }
  int conj(int x, int s) const { return mul(mul(inv_[s], x), s); }  // x^s
  int comm(int x, int y) const {  // [x,y] = x^-1 y^-1 x y
    return mul(mul(inv_[x], inv_[y]), mul(x, y));
  }
  int order_of(int x) const {
    int o = 1;
    for (int c = x; c != id; c = mul(c, x)) ++o;
    return o;
  }
};

inline Table table_of(const std::vector<ef::Permutation>& elems) {
  Table t;
  t.n = static_cast<int>(elems.size());
  std::map<ef::Permutation, int> idx;
  for (int i = 0; i < t.n; ++i) idx[elems[i]] = i;
  if (static_cast<int>(idx.size()) != t.n)
    throw std::runtime_error("duplicate elements");
  t.mul_.resize(static_cast<std::size_t>(t.n) * t.n);
  t.inv_.resize(t.n);
  for (int i = 0; i < t.n; ++i) {
    if (elems[i].is_identity()) t.id = i;
    auto inv_it = idx.find(elems[i].inverse());
    if (inv_it == idx.end()) throw std::runtime_error("set not closed");
    t.inv_[i] = inv_it->second;
    for (int j = 0; j < t.n; ++j) {
      auto it = idx.find(elems[i] * elems[j]);
      if (it == idx.end()) throw std::runtime_error("set not closed");
      t.mul_[static_cast<std::size_t>(i) * t.n + j] = it->second;
    }
  }
  return t;
}

inline bool sub_contains(const Sub& s, int x) {
  return std::binary_search(s.begin(), s.end(), x);
}

inline Sub closure(const Table& t, std::vector<int> seed) {
  std::vector<char> in(t.n, 0);
  std::vector<int> queue;
  auto push = [&](int x) {
    if (!in[x]) {
      in[x] = 1;
      queue.push_back(x);
    }
  };
  push(t.id);
  for (int s : seed) push(s);
  for (std::size_t q = 0; q < queue.size(); ++q)
    for (int s : seed) {
      push(t.mul(queue[q], s));
      push(t.mul(s, queue[q]));
    }
  Sub out;
  for (int i = 0; i < t.n; ++i)
    if (in[i]) out.push_back(i);
  return out;
}

// <seed^amb>: smallest subgroup containing seed and closed under conjugation
// by every element of amb.
inline Sub normal_closure_in(const Table& t, const Sub& amb,
                             std::vector<int> seed) {
  for (;;) {
    Sub cur = closure(t, seed);
    bool grew = false;
    for (int x : cur) {
      for (int s : amb) {
        int c = t.conj(x, s);
        if (!sub_contains(cur, c)) {
          seed.push_back(c);
          grew = true;
        }
      }
      if (grew) break;
    }
    if (!grew) return cur;
  }
}

inline bool is_normal_in(const Table& t, const Sub& h, const Sub& amb) {
  for (int x : h)
    for (int s : amb)
      if (!sub_contains(h, t.conj(x, s))) return false;
  return true;
}

inline Sub derived(const Table& t, const Sub& s) {
  std::vector<int> seed;
  for (int x : s)
    for (int y : s) seed.push_back(t.comm(x, y));
  std::sort(seed.begin(), seed.end());
  seed.erase(std::unique(seed.begin(), seed.end()), seed.end());
  return closure(t, seed);
}

inline bool is_soluble(const Table& t, Sub s) {
  for (;;) {
    Sub d = derived(t, s);
    if (d.size() == s.size()) return s.size() == 1;
    s = d;
  }
}

inline bool is_nilpotent(const Table& t, const Sub& s) {
  Sub gamma = s;
  for (;;) {
    std::vector<int> seed;
    for (int x : gamma)
      for (int y : s) seed.push_back(t.comm(x, y));
    std::sort(seed.begin(), seed.end());
    seed.erase(std::unique(seed.begin(), seed.end()), seed.end());
    Sub next = closure(t, seed);
    if (next.size() == gamma.size()) return gamma.size() == 1;
    gamma = next;
  }
}

inline std::vector<long> prime_factors(long n) {
  std::vector<long> ps;
  for (long p = 2; p * p <= n; ++p)
    if (n % p == 0) {
      ps.push_back(p);
      while (n % p == 0) n /= p;
    }
  if (n > 1) ps.push_back(n);
  return ps;
}

inline bool is_power_of(long n, long p) {
  while (n % p == 0) n /= p;
  return n == 1;
}

// O_p(amb) = <x in amb : <x^amb> is a p-group>, straight from the fact that
// O_p is the product of the subnormal p-subgroups.
inline Sub p_core(const Table& t, const Sub& amb, long p) {
  std::vector<int> seed;
  for (int x : amb) {
    if (x == t.id || !is_power_of(t.order_of(x), p)) continue;
    Sub ncl = normal_closure_in(t, amb, {x});
    if (is_power_of(static_cast<long>(ncl.size()), p)) seed.push_back(x);
  }
  return closure(t, seed);
}

inline Sub fitting(const Table& t, const Sub& amb) {
  std::vector<int> seed;
  for (long p : prime_factors(static_cast<long>(amb.size()))) {
    Sub c = p_core(t, amb, p);
    seed.insert(seed.end(), c.begin(), c.end());
  }
  return closure(t, seed);
}

// Largest soluble normal subgroup = product of all <x^amb> that are soluble.
inline Sub radical(const Table& t, const Sub& amb) {
  std::vector<int> seed;
  for (int x : amb) {
    if (x == t.id) continue;
    if (is_soluble(t, normal_closure_in(t, amb, {x}))) seed.push_back(x);
  }
  return closure(t, seed);
}

// Minimal normal subgroups = inclusion-minimal elements of
// { <x^amb> : x != 1 }.
inline std::vector<Sub> minimal_normals(const Table& t, const Sub& amb) {
  std::vector<Sub> closures;
  for (int x : amb) {
    if (x == t.id) continue;
    Sub c = normal_closure_in(t, amb, {x});
    if (std::find(closures.begin(), closures.end(), c) == closures.end())
      closures.push_back(c);
  }
  std::vector<Sub> out;
  for (const Sub& c : closures) {
    bool minimal = true;
    for (const Sub& d : closures)
      if (d.size() < c.size() &&
          std::includes(c.begin(), c.end(), d.begin(), d.end())) {
        minimal = false;
        break;
      }
    if (minimal) out.push_back(c);
  }
  return out;
}

inline Sub socle(const Table& t, const Sub& amb) {
  std::vector<int> seed;
  for (const Sub& m : minimal_normals(t, amb))
    seed.insert(seed.end(), m.begin(), m.end());
  return closure(t, seed);
}

inline Sub center_of(const Table& t, const Sub& s) {
  Sub out;
  for (int x : s) {
    bool central = true;
    for (int y : s)
      if (t.mul(x, y) != t.mul(y, x)) {
        central = false;
        break;
      }
    if (central) out.push_back(x);
  }
  return out;
}

inline bool is_subnormal_in(const Table& t, const Sub& h, Sub amb) {
  for (;;) {
    Sub next = normal_closure_in(t, amb, h);
    if (next.size() == amb.size()) break;
    amb = next;
  }
  return amb == h;
}

inline Sub whole(const Table& t) {
  Sub s(t.n);
  for (int i = 0; i < t.n; ++i) s[i] = i;
  return s;
}

// Table of the subgroup s in its own right (indices renumbered by position).
inline Table sub_table(const Table& t, const Sub& s) {
  Table out;
  out.n = static_cast<int>(s.size());
  out.mul_.resize(static_cast<std::size_t>(out.n) * out.n);
  out.inv_.resize(out.n);
  auto pos = [&](int x) {
    return static_cast<int>(std::lower_bound(s.begin(), s.end(), x) -
                            s.begin());
  };
  for (int i = 0; i < out.n; ++i) {
    if (s[i] == t.id) out.id = i;
    out.inv_[i] = pos(t.inv(s[i]));
    for (int j = 0; j < out.n; ++j)
      out.mul_[static_cast<std::size_t>(i) * out.n + j] =
          pos(t.mul(s[i], s[j]));
  }
  return out;
}

// Coset table of t modulo the normal subgroup n (right cosets, numbered in
// order of least representative).
inline Table quotient_table(const Table& t, const Sub& n) {
  std::vector<int> coset(t.n, -1);
  std::vector<int> reps;
  for (int x = 0; x < t.n; ++x) {
    if (coset[x] >= 0) continue;
    int c = static_cast<int>(reps.size());
    reps.push_back(x);
    for (int k : n) coset[t.mul(k, x)] = c;
  }
  Table q;
  q.n = static_cast<int>(reps.size());
  q.mul_.resize(static_cast<std::size_t>(q.n) * q.n);
  q.inv_.resize(q.n);
  q.id = coset[t.id];
  for (int i = 0; i < q.n; ++i) {
    q.inv_[i] = coset[t.inv(reps[i])];
    for (int j = 0; j < q.n; ++j)
      q.mul_[static_cast<std::size_t>(i) * q.n + j] =
          coset[t.mul(reps[i], reps[j])];
  }
  return q;
}

inline bool is_simple(const Table& t, const Sub& s) {
  if (s.size() == 1) return false;
  for (int x : s) {
    if (x == t.id) continue;
    if (normal_closure_in(t, s, {x}).size() != s.size()) return false;
  }
  return true;
}

inline bool is_quasisimple(const Table& t, const Sub& h) {
  if (h.size() == 1) return false;
  if (derived(t, h) != h) return false;  // must be perfect
  Table ht = sub_table(t, h);
  Sub z = center_of(ht, whole(ht));
  Table q = quotient_table(ht, z);
  return is_simple(q, whole(q));
}

// Layer E(t) = product of the subnormal quasisimple subgroups.  Quasisimple
// groups are 2-generated, so scanning closures of element pairs finds them
// all.  Quadratic in |G|; keep to groups of order a few hundred.
inline Sub layer(const Table& t) {
  Sub amb = whole(t);
  std::set<Sub> seen;  // each distinct 2-generated subgroup is tested once
  std::vector<int> seed;
  for (int i = 0; i < t.n; ++i)
    for (int j = i; j < t.n; ++j) {
      Sub h = closure(t, {i, j});
      if (!seen.insert(h).second) continue;
      if (!is_quasisimple(t, h) || !is_subnormal_in(t, h, amb)) continue;
      seed.insert(seed.end(), h.begin(), h.end());
    }
  return closure(t, seed);
}

inline Sub gen_fitting(const Table& t) {
  Sub f = fitting(t, whole(t));
  Sub e = layer(t);
  std::vector<int> seed(f.begin(), f.end());
  seed.insert(seed.end(), e.begin(), e.end());
  return closure(t, seed);
}

inline int fitting_height(const Table& t) {  // -1 when not soluble
  Table cur = t;
  int h = 0;
  while (cur.n > 1) {
    Sub f = fitting(cur, whole(cur));
    if (f.size() == 1) return -1;
    cur = quotient_table(cur, f);
    ++h;
  }
  return h;
}

inline int gen_fitting_height(const Table& t) {
  Table cur = t;
  int h = 0;
  while (cur.n > 1) {
    Sub f = gen_fitting(cur);
    if (f.size() == 1) throw std::runtime_error("generalized Fitting stalled");
    cur = quotient_table(cur, f);
    ++h;
  }
  return h;
}

inline int nonsoluble_length(const Table& t) {
  Table cur = t;
  int l = 0;
  for (;;) {
    Sub rad = radical(cur, whole(cur));
    if (static_cast<int>(rad.size()) == cur.n) return l;
    Table above_rad = quotient_table(cur, rad);
    Sub soc = socle(above_rad, whole(above_rad));
    cur = quotient_table(above_rad, soc);
    ++l;
  }
}

}  // namespace oracle
