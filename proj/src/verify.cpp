#include "ef/verify.hpp"

#include <json.hpp>

#include <algorithm>
#include <atomic>
#include <chrono>
#include <functional>
#include <map>
#include <memory>
#include <numeric>
#include <thread>
#include <tuple>
#include <utility>
#include <vector>

#include "ef/construct.hpp"
#include "ef/cycles.hpp"
#include "ef/engel.hpp"
#include "ef/errors.hpp"
#include "ef/group_ops.hpp"
#include "ef/limits.hpp"
#include "ef/structure.hpp"

namespace ef {

int omega(std::uint64_t n) {
  if (n == 0) throw InvalidInput("omega is defined on positive integers");
  int count = 0;
  for (std::uint64_t p = 2; p * p <= n; ++p)
    while (n % p == 0) {
      n /= p;
      ++count;
    }
  if (n > 1) ++count;
  return count;
}

long long bound_f(long long k, long long m) {
  if (k < 0 || m < 0) throw InvalidInput("bound arguments must be nonnegative");
  // (k+1) m (m+1) + 2 is even, so the division is exact.
  return ((k + 1) * m * (m + 1) + 2) * (k + 3) / 2;
}

long long bound_f1(long long k, long long m) {
  if (k < 0 || m < 0) throw InvalidInput("bound arguments must be nonnegative");
  return (k + 1) * m * (m + 1) / 2;
}

PrecOrder prec_compare(std::uint64_t a, std::uint64_t b) {
  if (a == 0 || b == 0)
    throw InvalidInput("the exponent order is defined on positive integers");
  std::map<std::uint64_t, std::pair<int, int>> exps;
  auto factor = [&exps](std::uint64_t v, bool first) {
    for (std::uint64_t p = 2; p * p <= v; ++p)
      while (v % p == 0) {
        v /= p;
        (first ? exps[p].first : exps[p].second) += 1;
      }
    if (v > 1) (first ? exps[v].first : exps[v].second) += 1;
  };
  factor(a, true);
  factor(b, false);
  for (const auto& [p, e] : exps) {
    if (e.first != e.second)
      return e.first < e.second ? PrecOrder::Less : PrecOrder::Greater;
  }
  return PrecOrder::Equal;
}

std::string report_json(const VerificationReport& r) {
  nlohmann::ordered_json j;
  j["check_id"] = r.check_id;
  j["group"] = r.group_id;
  if (!r.element.empty()) j["element"] = r.element;
  if (r.n >= 0) j["n"] = r.n;
  nlohmann::ordered_json computed = nlohmann::ordered_json::object();
  for (const auto& [key, value] : r.computed) computed[key] = value;
  j["computed"] = computed;
  j["verdict"] = r.verdict;
  j["mode"] = r.mode;
  j["seed"] = r.seed;
  j["runtime_ms"] = r.runtime_ms;
  return j.dump();
}

namespace {

VerificationReport base_report(const VerifyConfig& cfg, std::string check,
                               std::string group, std::string element = "",
                               int n = -1) {
  VerificationReport r;
  r.check_id = std::move(check);
  r.group_id = std::move(group);
  r.element = std::move(element);
  r.n = n;
  r.seed = cfg.seed;
  return r;
}

void set_verdict(VerificationReport& r, bool ok) {
  r.verdict = ok ? "pass" : "fail";
}

void set_skip(VerificationReport& r, const std::string& reason) {
  r.verdict = "skipped(" + reason + ")";
}

// ---------------------------------------------------------------------------
// Precomputed per-group data shared read-only by all of the group's checks.

struct GroupContext {
  std::string name;
  PermGroup group = PermGroup::trivial(1);
  std::uint64_t order = 1;
  bool no_enum = false;
  bool soluble = false;
  bool class_reps = false;
  SeriesRecord fitting_rec;
  SeriesRecord gen_fitting_rec;
  SeriesRecord nonsol_rec;
  PermGroup fitting_sub = PermGroup::trivial(1);
  std::vector<Permutation> sweep;
};

std::shared_ptr<GroupContext> build_context(const CorpusEntry& e,
                                            const VerifyConfig& cfg) {
  auto ctx = std::make_shared<GroupContext>();
  ctx->name = e.name;
  ctx->group = e.group;
  ctx->order = e.group.order();
  const bool tagged =
      std::find(e.tags.begin(), e.tags.end(), "no-enumeration") != e.tags.end();
  ctx->no_enum = tagged || ctx->order > Limits::current().enumeration;
  if (ctx->no_enum) return ctx;
  ctx->fitting_rec = fitting_series(e.group);
  ctx->soluble = ctx->fitting_rec.stabilized_at_g;
  ctx->gen_fitting_rec = generalized_fitting_series(e.group);
  ctx->nonsol_rec = nonsoluble_series(e.group);
  ctx->fitting_sub = fitting_subgroup(e.group);
  if (ctx->order <= cfg.full_sweep_limit) {
    ctx->sweep = e.group.elements();
  } else {
    ctx->sweep = conjugacy_class_representatives(e.group);
    ctx->class_reps = true;
  }
  return ctx;
}

int least_term_containing(const SeriesRecord& rec, const Permutation& g) {
  for (int i = 0; i < static_cast<int>(rec.terms.size()); ++i)
    if (rec.terms[i].second.contains(g)) return i;
  return -1;
}

int least_d_term_containing(const SeriesRecord& rec, const Permutation& g) {
  int index = 0;
  for (const auto& [label, grp] : rec.terms) {
    if (label.front() != 'D') continue;
    if (grp.contains(g)) return index;
    ++index;
  }
  return -1;
}

// ---------------------------------------------------------------------------
// Element-level bound checks.  `r_sub` is the exact Engel subgroup R_n(g).

VerificationReport check_t11(const GroupContext& ctx, const Permutation& g,
                             const std::string& elt, int n, int m,
                             const PermGroup& r_sub, const VerifyConfig& cfg) {
  auto rep = base_report(cfg, "T1.1", ctx.name, elt, n);
  const int k = fitting_height(r_sub);
  const long long bound = k + 1;
  rep.computed["k"] = k;
  rep.computed["m"] = m;
  rep.computed["bound"] = bound;
  rep.computed["min_index"] = least_term_containing(ctx.fitting_rec, g);
  if (ctx.class_reps) rep.computed["class_reps"] = 1;
  set_verdict(rep, ctx.fitting_rec.term_clamped(static_cast<int>(bound)).contains(g));
  return rep;
}

VerificationReport check_t12(const GroupContext& ctx, const Permutation& g,
                             const std::string& elt, int n, int m,
                             const PermGroup& r_sub, const VerifyConfig& cfg) {
  auto rep = base_report(cfg, "T1.2", ctx.name, elt, n);
  const int k = generalized_fitting_height(r_sub);
  const long long bound = bound_f(k, m);
  bool ok = ctx.gen_fitting_rec.term_clamped(static_cast<int>(
                                    std::min<long long>(bound, 1 << 20)))
                .contains(g);
  rep.computed["k"] = k;
  rep.computed["m"] = m;
  rep.computed["bound"] = bound;
  rep.computed["min_index"] = least_term_containing(ctx.gen_fitting_rec, g);
  if (ctx.class_reps) rep.computed["class_reps"] = 1;
  if (ctx.soluble) {
    // For soluble groups the generalized and ordinary Fitting heights agree.
    rep.computed["h"] = ctx.fitting_rec.height_or_length;
    rep.computed["hstar"] = ctx.gen_fitting_rec.height_or_length;
    ok = ok && ctx.fitting_rec.height_or_length ==
                   ctx.gen_fitting_rec.height_or_length;
  }
  set_verdict(rep, ok);
  return rep;
}

VerificationReport check_t13(const GroupContext& ctx, const Permutation& g,
                             const std::string& elt, int n, int m,
                             const PermGroup& r_sub, const VerifyConfig& cfg) {
  auto rep = base_report(cfg, "T1.3", ctx.name, elt, n);
  const int k = nonsoluble_length(r_sub);
  const long long bound = bound_f1(k, m) - (cfg.weaken_f1 ? 1 : 0);
  rep.computed["k"] = k;
  rep.computed["m"] = m;
  rep.computed["bound"] = bound;
  rep.computed["min_index"] = least_d_term_containing(ctx.nonsol_rec, g);
  if (ctx.class_reps) rep.computed["class_reps"] = 1;
  // A negative index names no series term at all, so it can never contain g.
  const bool ok =
      bound >= 0 &&
      ctx.nonsol_rec.d_term_clamped(static_cast<int>(bound)).contains(g);
  set_verdict(rep, ok);
  return rep;
}

// ---------------------------------------------------------------------------
// Shared small constructions.

Permutation power_map_perm(int m, int k) {
  std::vector<int> img(m);
  for (int i = 0; i < m; ++i) img[i] = (k * i) % m;
  return Permutation(std::move(img));
}

Permutation full_cycle(int m) {
  std::vector<int> img(m);
  for (int i = 0; i < m; ++i) img[i] = (i + 1) % m;
  return Permutation(std::move(img));
}

// The 9 points are F_3 x F_3 with (i, j) at index 3i + j.
Permutation affine9_map(const std::function<std::pair<int, int>(int, int)>& f) {
  std::vector<int> img(9);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      auto [a, b] = f(i, j);
      img[3 * i + j] = 3 * ((a % 3 + 3) % 3) + ((b % 3 + 3) % 3);
    }
  return Permutation(std::move(img));
}

struct Affine9 {
  PermGroup translations = PermGroup::trivial(9);
  PermGroup whole = PermGroup::trivial(9);
  Permutation alpha;  // (i, j) -> (-j, i), fixed-point-free of order 4
};

Affine9 make_affine9() {
  Affine9 a;
  Permutation t1 = affine9_map([](int i, int j) { return std::pair{i + 1, j}; });
  Permutation t2 = affine9_map([](int i, int j) { return std::pair{i, j + 1}; });
  a.alpha = affine9_map([](int i, int j) { return std::pair{-j, i}; });
  a.translations = PermGroup(9, {t1, t2});
  a.whole = PermGroup(9, {t1, t2, a.alpha});
  return a;
}

PermGroup wreath_base_of(const PermGroup& s, int r) {
  const int d = s.degree();
  std::vector<Permutation> gens;
  for (int b = 0; b < r; ++b)
    for (const Permutation& gen : s.generators()) {
      std::vector<int> img(d * r);
      for (int i = 0; i < d * r; ++i) img[i] = i;
      for (int i = 0; i < d; ++i) img[b * d + i] = b * d + gen(i);
      gens.emplace_back(std::move(img));
    }
  return PermGroup(d * r, gens);
}

Permutation wreath_top_cycle(int d, int r) {
  std::vector<int> img(d * r);
  for (int b = 0; b < r; ++b)
    for (int i = 0; i < d; ++i) img[b * d + i] = ((b + 1) % r) * d + i;
  return Permutation(std::move(img));
}

bool generators_commute(const PermGroup& g) {
  const auto& gens = g.generators();
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = i + 1; j < gens.size(); ++j)
      if (gens[i] * gens[j] != gens[j] * gens[i]) return false;
  return true;
}

bool is_prime_int(int n) {
  if (n < 2) return false;
  for (int p = 2; p * p <= n; ++p)
    if (n % p == 0) return false;
  return true;
}

// ---------------------------------------------------------------------------
// Task plumbing.

struct Task {
  std::string group;
  std::vector<std::string> checks;
  std::function<std::vector<VerificationReport>()> run;
};

std::vector<VerificationReport> run_tasks(const std::vector<Task>& tasks,
                                          const VerifyConfig& cfg) {
  std::vector<std::vector<VerificationReport>> slots(tasks.size());
  std::vector<std::exception_ptr> errors(tasks.size());
  std::atomic<std::size_t> next{0};
  auto work = [&]() {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= tasks.size()) return;
      const auto start = std::chrono::steady_clock::now();
      try {
        slots[i] = tasks[i].run();
      } catch (...) {
        errors[i] = std::current_exception();
        continue;
      }
      if (cfg.timings) {
        const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                            std::chrono::steady_clock::now() - start)
                            .count();
        for (auto& r : slots[i]) r.runtime_ms = ms;
      }
    }
  };
  const int jobs = std::max(1, cfg.jobs);
  if (jobs == 1 || tasks.size() <= 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    const int count = std::min<std::size_t>(jobs, tasks.size());
    pool.reserve(count);
    for (int t = 0; t < count; ++t) pool.emplace_back(work);
    for (auto& t : pool) t.join();
  }
  for (const auto& e : errors)
    if (e) std::rethrow_exception(e);
  std::vector<VerificationReport> out;
  for (auto& s : slots)
    for (auto& r : s) out.push_back(std::move(r));
  return out;
}

// ---------------------------------------------------------------------------
// Corpus sweeps: T1.1 / T1.2 / T1.3 / BAER / P4.1.

void add_group_tasks(std::vector<Task>& tasks,
                     const std::shared_ptr<GroupContext>& ctx,
                     const VerifyConfig& cfg) {
  if (ctx->no_enum) {
    tasks.push_back({ctx->name,
                     {"T1.1", "T1.2", "T1.3", "BAER", "P4.1"},
                     [ctx, cfg]() {
                       std::vector<VerificationReport> out;
                       for (const char* id :
                            {"T1.1", "T1.2", "T1.3", "BAER", "P4.1"}) {
                         auto rep = base_report(cfg, id, ctx->name);
                         set_skip(rep,
                                  "no-enumeration group: exact Engel sweep "
                                  "unavailable");
                         out.push_back(rep);
                       }
                       return out;
                     }});
    return;
  }

  if (!ctx->soluble) {
    tasks.push_back({ctx->name, {"T1.1"}, [ctx, cfg]() {
                       auto rep = base_report(cfg, "T1.1", ctx->name);
                       set_skip(rep, "group is not soluble");
                       return std::vector<VerificationReport>{rep};
                     }});
  }

  for (const Permutation& g : ctx->sweep) {
    std::string elt = print_cycles(g);
    tasks.push_back(
        {ctx->name, {"T1.1", "T1.2", "T1.3"}, [ctx, cfg, g, elt]() {
           std::vector<VerificationReport> out;
           const int m = omega(g.order());
           const int n_max = ctx->soluble
                                 ? std::max(cfg.t11_n_max, cfg.t1x_n_max)
                                 : cfg.t1x_n_max;
           for (int n = 1; n <= n_max; ++n) {
             EngelSubgroupResult r = right_engel_subgroup(
                 ctx->group, g, n, cfg.seed, ctx->name + ":" + elt);
             if (ctx->soluble && n <= cfg.t11_n_max)
               out.push_back(check_t11(*ctx, g, elt, n, m, r.subgroup, cfg));
             if (n <= cfg.t1x_n_max) {
               out.push_back(check_t12(*ctx, g, elt, n, m, r.subgroup, cfg));
               out.push_back(check_t13(*ctx, g, elt, n, m, r.subgroup, cfg));
             }
           }
           return out;
         }});

    tasks.push_back({ctx->name, {"BAER"}, [ctx, cfg, g, elt]() {
                       auto rep = base_report(cfg, "BAER", ctx->name, elt);
                       const auto witness =
                           is_left_engel(ctx->group, g, cfg.baer_n_max);
                       const bool in_fitting = ctx->fitting_sub.contains(g);
                       rep.computed["witness_n"] = witness ? *witness : -1;
                       rep.computed["in_fitting"] = in_fitting ? 1 : 0;
                       if (ctx->class_reps) rep.computed["class_reps"] = 1;
                       set_verdict(rep, witness.has_value() == in_fitting);
                       return std::vector<VerificationReport>{rep};
                     }});
  }

  // Kernel-avoidance lower bound on the nonsoluble length of R_n(g); needs
  // elements whose order is a product of m > 1 primes and a group with
  // nonsoluble length at least m, so it rarely fires at this scale.
  tasks.push_back({ctx->name, {"P4.1"}, [ctx, cfg]() {
                     std::vector<VerificationReport> out;
                     const int lambda = ctx->nonsol_rec.height_or_length;
                     if (lambda < 2) {
                       auto rep = base_report(cfg, "P4.1", ctx->name);
                       set_skip(rep, "nonsoluble length below 2");
                       out.push_back(rep);
                       return out;
                     }
                     for (const Permutation& g : ctx->sweep) {
                       const std::uint64_t g_order = g.order();
                       const int m = omega(g_order);
                       if (m < 2) continue;
                       for (int s = 1; m * s <= lambda; ++s) {
                         PermGroup kernel = PermGroup::trivial(1);
                         try {
                           kernel = simple_factor_decomposition(ctx->group,
                                                                m * s)
                                        .action_kernel;
                         } catch (const Error& ex) {
                           auto rep = base_report(cfg, "P4.1", ctx->name,
                                                  print_cycles(g));
                           set_skip(rep, std::string("error: ") + ex.what());
                           out.push_back(rep);
                           continue;
                         }
                         // <g> meets the kernel iff some prime-order power
                         // of g lies in it.
                         bool meets = false;
                         std::uint64_t rest = g_order;
                         for (std::uint64_t p = 2; p * p <= rest; ++p)
                           if (rest % p == 0) {
                             if (kernel.contains(g.power(g_order / p)))
                               meets = true;
                             while (rest % p == 0) rest /= p;
                           }
                         if (rest > 1 && kernel.contains(g.power(g_order / rest)))
                           meets = true;
                         for (int n = 1; n <= cfg.t1x_n_max; ++n) {
                           auto rep = base_report(cfg, "P4.1", ctx->name,
                                                  print_cycles(g), n);
                           rep.computed["m"] = m;
                           rep.computed["s"] = s;
                           if (meets) {
                             set_skip(rep, "the cyclic group of g meets the "
                                           "kernel");
                             out.push_back(rep);
                             continue;
                           }
                           EngelSubgroupResult r = right_engel_subgroup(
                               ctx->group, g, n, cfg.seed,
                               ctx->name + ":p41:" + print_cycles(g));
                           const int lr = nonsoluble_length(r.subgroup);
                           rep.computed["lambda_r"] = lr;
                           set_verdict(rep, lr >= s);
                           out.push_back(rep);
                         }
                       }
                     }
                     if (out.empty()) {
                       auto rep = base_report(cfg, "P4.1", ctx->name);
                       set_skip(rep, "no element satisfies the hypotheses");
                       out.push_back(rep);
                     }
                     return out;
                   }});
}

// ---------------------------------------------------------------------------
// Subnormal-subgroup parameter checks.

struct SubnormalPair {
  const char* group_name;
  const char* label;
  std::function<PermGroup(const PermGroup&)> make;
};

std::vector<SubnormalPair> subnormal_pairs() {
  auto gens = [](int degree, std::vector<const char*> strs) {
    return [degree, strs](const PermGroup&) {
      std::vector<Permutation> ps;
      for (const char* s : strs) ps.push_back(parse_cycles(s, degree));
      return PermGroup(degree, ps);
    };
  };
  return {
      {"s4", "v4", gens(4, {"(1,2)(3,4)", "(1,3)(2,4)"})},
      {"s4", "a4", gens(4, {"(1,2,3)", "(2,3,4)"})},
      {"s4", "c2-double", gens(4, {"(1,2)(3,4)"})},
      {"s4", "c2-transposition", gens(4, {"(1,2)"})},  // not subnormal
      {"s3", "a3", gens(3, {"(1,2,3)"})},
      {"a5", "whole", [](const PermGroup& g) { return g; }},
      {"d8", "center", [](const PermGroup& g) { return center(g); }},
      {"sl2_3", "o2", [](const PermGroup& g) { return p_core(g, 2); }},
      {"sl2_5", "center", [](const PermGroup& g) { return center(g); }},
      {"c3wrc3", "first-coordinate", gens(9, {"(1,2,3)"})},
      {"a5xa5", "left-factor", gens(10, {"(1,2,3)", "(3,4,5)"})},
      {"a5wrc2", "base", gens(10, {"(1,2,3)", "(3,4,5)", "(6,7,8)", "(8,9,10)"})},
      {"a5wrc2", "first-factor", gens(10, {"(1,2,3)", "(3,4,5)"})},
      {"s4xa5", "s4-part", gens(9, {"(1,2)", "(1,2,3,4)"})},
      {"s4xa5", "a5-part", gens(9, {"(5,6,7)", "(7,8,9)"})},
      {"s4xa5", "v4-part", gens(9, {"(1,2)(3,4)", "(1,3)(2,4)"})},
  };
}

VerificationReport check_l21(const GroupContext& ctx, const std::string& label,
                             const PermGroup& sub, const VerifyConfig& cfg) {
  auto rep = base_report(cfg, "L2.1", ctx.name + ":" + label);
  if (!is_subnormal(sub, ctx.group)) {
    set_skip(rep, "the subgroup is not subnormal");
    return rep;
  }
  SeriesRecord nf = fitting_series(sub);
  SeriesRecord nfs = generalized_fitting_series(sub);
  SeriesRecord nns = nonsoluble_series(sub);

  bool ok = true;
  long long identities = 0;
  auto check_terms = [&](const SeriesRecord& small, const SeriesRecord& big) {
    const int top = static_cast<int>(
        std::max(small.terms.size(), big.terms.size()));
    for (int i = 0; i <= top; ++i) {  // one past the end exercises clamping
      ok = ok && equal_groups(small.term_clamped(i),
                              intersect_enumerable(sub, big.term_clamped(i)));
      ++identities;
    }
  };
  check_terms(nf, ctx.fitting_rec);
  check_terms(nfs, ctx.gen_fitting_rec);
  const int d_top = std::max(nns.height_or_length,
                             ctx.nonsol_rec.height_or_length) + 1;
  for (int i = 0; i <= d_top; ++i) {
    ok = ok &&
         equal_groups(nns.d_term_clamped(i),
                      intersect_enumerable(sub, ctx.nonsol_rec.d_term_clamped(i)));
    ++identities;
  }

  // (a) the parameters of a subnormal subgroup never exceed the group's.
  const bool sub_soluble = nf.stabilized_at_g;
  if (sub_soluble && ctx.soluble)
    ok = ok && nf.height_or_length <= ctx.fitting_rec.height_or_length;
  ok = ok && nfs.height_or_length <= ctx.gen_fitting_rec.height_or_length;
  ok = ok && nns.height_or_length <= ctx.nonsol_rec.height_or_length;

  // (b) the normal closure has exactly the parameters of the subgroup.
  PermGroup closure = normal_closure(ctx.group, sub.generators());
  ok = ok && generalized_fitting_series(closure).height_or_length ==
                 nfs.height_or_length;
  ok = ok &&
       nonsoluble_series(closure).height_or_length == nns.height_or_length;
  if (sub_soluble) {
    SeriesRecord cf = fitting_series(closure);
    ok = ok && cf.stabilized_at_g &&
         cf.height_or_length == nf.height_or_length;
  }

  rep.computed["order_n"] = static_cast<long long>(sub.order());
  rep.computed["order_closure"] = static_cast<long long>(closure.order());
  rep.computed["identities"] = identities;
  rep.computed["hstar_n"] = nfs.height_or_length;
  rep.computed["lambda_n"] = nns.height_or_length;
  set_verdict(rep, ok);
  return rep;
}

void add_l21_tasks(std::vector<Task>& tasks,
                   const std::vector<std::shared_ptr<GroupContext>>& contexts,
                   const VerifyConfig& cfg) {
  for (const SubnormalPair& pair : subnormal_pairs()) {
    auto it = std::find_if(contexts.begin(), contexts.end(),
                           [&](const auto& c) {
                             return c->name == pair.group_name && !c->no_enum;
                           });
    if (it == contexts.end()) continue;
    std::shared_ptr<GroupContext> ctx = *it;
    std::string label = pair.label;
    auto make = pair.make;
    tasks.push_back({ctx->name + ":" + label, {"L2.1"}, [ctx, label, make, cfg]() {
                       return std::vector<VerificationReport>{
                           check_l21(*ctx, label, make(ctx->group), cfg)};
                     }});
  }
}

// ---------------------------------------------------------------------------
// Soluble-commutator reproduction: G = R_{G<alpha>,n}(alpha) when [G,alpha]=G.

struct P31Instance {
  std::string label;
  PermGroup sub = PermGroup::trivial(1);
  PermGroup whole = PermGroup::trivial(1);
  Permutation alpha;
};

std::vector<P31Instance> p31_instances() {
  std::vector<P31Instance> out;
  PermGroup c7(7, {full_cycle(7)});
  out.push_back({"c7:pow2", c7, semidirect_power(7, 2), power_map_perm(7, 2)});
  Affine9 aff = make_affine9();
  out.push_back({"affine9:c4", aff.translations, aff.whole, aff.alpha});
  out.push_back({"c7:identity", c7, c7, Permutation::identity(7)});
  return out;
}

void add_p31_tasks(std::vector<Task>& tasks, const VerifyConfig& cfg) {
  for (const P31Instance& inst : p31_instances()) {
    for (int n = 1; n <= 3; ++n) {
      tasks.push_back({inst.label, {"P3.1"}, [inst, n, cfg]() {
                         auto rep = base_report(cfg, "P3.1", inst.label,
                                                print_cycles(inst.alpha), n);
                         if (!is_soluble(inst.sub)) {
                           set_skip(rep, "G is not soluble");
                           return std::vector<VerificationReport>{rep};
                         }
                         PermGroup a(inst.sub.degree(), {inst.alpha});
                         PermGroup comm = commutator_subgroup(inst.sub, a);
                         if (!equal_groups(comm, inst.sub)) {
                           set_skip(rep, "[G,alpha] is not all of G");
                           return std::vector<VerificationReport>{rep};
                         }
                         EngelSubgroupResult r = right_engel_subgroup(
                             inst.whole, inst.alpha, n, cfg.seed, inst.label);
                         rep.computed["order_g"] =
                             static_cast<long long>(inst.sub.order());
                         rep.computed["order_r"] =
                             static_cast<long long>(r.subgroup.order());
                         set_verdict(rep,
                                     equal_groups(r.subgroup, inst.sub));
                         return std::vector<VerificationReport>{rep};
                       }});
    }
  }
}

// ---------------------------------------------------------------------------
// Randomized identity [g, n (g a)] = [a^-1, n g] over abelian normal subgroups.

struct L22Setting {
  std::string label;
  PermGroup ambient = PermGroup::trivial(1);
  PermGroup abelian = PermGroup::trivial(1);
};

std::vector<L22Setting> l22_settings() {
  std::vector<L22Setting> out;
  out.push_back({"s3:a3", symmetric_group(3),
                 PermGroup(3, {parse_cycles("(1,2,3)", 3)})});
  out.push_back({"s4:v4", symmetric_group(4),
                 PermGroup(4, {parse_cycles("(1,2)(3,4)", 4),
                               parse_cycles("(1,3)(2,4)", 4)})});
  out.push_back({"c7c3:c7", semidirect_power(7, 2), PermGroup(7, {full_cycle(7)})});
  out.push_back({"c3wrc3:base",
                 wreath_product(cyclic_group(3), cyclic_group(3)),
                 PermGroup(9, {parse_cycles("(1,2,3)", 9),
                               parse_cycles("(4,5,6)", 9),
                               parse_cycles("(7,8,9)", 9)})});
  out.push_back({"d12:rotations", dihedral_group(12),
                 PermGroup(12, {full_cycle(12)})});
  Affine9 aff = make_affine9();
  out.push_back({"affine9:translations", aff.whole, aff.translations});
  return out;
}

void add_l22_tasks(std::vector<Task>& tasks, const VerifyConfig& cfg) {
  for (const L22Setting& setting : l22_settings()) {
    tasks.push_back({setting.label, {"L2.2"}, [setting, cfg]() {
                       auto rep = base_report(cfg, "L2.2", setting.label);
                       std::mt19937_64 rng(
                           seed_from(cfg.seed, "L2.2:" + setting.label));
                       const int instances = 20;
                       long long failures = 0;
                       for (int i = 0; i < instances; ++i) {
                         Permutation g = setting.ambient.random_element(rng);
                         Permutation a = setting.abelian.random_element(rng);
                         const int n =
                             1 + static_cast<int>(bounded_random(rng, 3));
                         try {
                           if (!abelian_cyclic_identity_check(setting.abelian,
                                                              g, a, n))
                             ++failures;
                         } catch (const Error&) {
                           ++failures;
                         }
                       }
                       rep.computed["instances"] = instances;
                       rep.computed["failures"] = failures;
                       set_verdict(rep, failures == 0);
                       return std::vector<VerificationReport>{rep};
                     }});
  }
}

// ---------------------------------------------------------------------------
// Coprime abelian action: G = [G,alpha] x C_G(alpha) and [G,alpha] stability.

struct CoprimeInstance {
  std::string label;
  PermGroup grp = PermGroup::trivial(1);
  Permutation alpha;
};

std::vector<CoprimeInstance> coprime_instances() {
  std::vector<CoprimeInstance> out;
  auto cyclic_on_points = [](int m) { return PermGroup(m, {full_cycle(m)}); };
  auto add_power = [&](int m, int k) {
    out.push_back({"c" + std::to_string(m) + ":pow" + std::to_string(k),
                   cyclic_on_points(m), power_map_perm(m, k)});
  };
  add_power(15, 14);
  add_power(15, 2);
  add_power(7, 2);
  add_power(7, 3);
  add_power(7, 6);
  add_power(9, 2);    // order 6 vs |G| = 9: skipped as non-coprime
  add_power(9, 8);
  add_power(5, 2);
  add_power(5, 4);
  add_power(11, 2);
  add_power(11, 10);
  add_power(12, 11);  // inversion of C12: skipped as non-coprime
  add_power(13, 2);
  add_power(13, 12);
  add_power(17, 3);
  add_power(19, 18);
  add_power(21, 2);   // order 6 vs |G| = 21: skipped as non-coprime
  add_power(21, 20);
  add_power(23, 22);
  add_power(25, 24);
  add_power(27, 26);
  out.push_back({"c5:identity", cyclic_on_points(5), Permutation::identity(5)});

  PermGroup c3c3 = direct_product(cyclic_group(3), cyclic_group(3));
  out.push_back({"c3c3:invert-first", c3c3, Permutation({0, 2, 1, 3, 4, 5})});
  out.push_back({"c3c3:invert-both", c3c3, Permutation({0, 2, 1, 3, 5, 4})});
  // (x, y) -> (-y, x): fixed-point-free of order 4 on C3 x C3.
  out.push_back({"c3c3:order4", c3c3, Permutation({3, 5, 4, 0, 1, 2})});
  return out;
}

void add_coprime_tasks(std::vector<Task>& tasks, const VerifyConfig& cfg) {
  for (const CoprimeInstance& inst : coprime_instances()) {
    tasks.push_back(
        {inst.label, {"COPRIME"}, [inst, cfg]() {
           auto rep = base_report(cfg, "COPRIME", inst.label,
                                  print_cycles(inst.alpha));
           if (!generators_commute(inst.grp)) {
             set_skip(rep, "the acted-on group is not abelian");
             return std::vector<VerificationReport>{rep};
           }
           for (const Permutation& s : inst.grp.generators())
             if (!inst.grp.contains(conjugate(s, inst.alpha))) {
               set_skip(rep, "alpha does not normalize the group");
               return std::vector<VerificationReport>{rep};
             }
           const std::uint64_t action_order = inst.alpha.order();
           if (std::gcd(action_order, inst.grp.order()) != 1) {
             set_skip(rep, "the action order shares a factor with |G|");
             return std::vector<VerificationReport>{rep};
           }
           PermGroup a(inst.grp.degree(), {inst.alpha});
           PermGroup k = commutator_subgroup(inst.grp, a);
           PermGroup c = centralizer(inst.grp, inst.alpha);
           bool ok = intersect_enumerable(k, c).is_trivial();
           ok = ok && k.order() * c.order() == inst.grp.order();
           ok = ok && equal_groups(join(k, c), inst.grp);
           ok = ok && equal_groups(commutator_subgroup(k, a), k);
           rep.computed["order_k"] = static_cast<long long>(k.order());
           rep.computed["order_c"] = static_cast<long long>(c.order());
           set_verdict(rep, ok);
           return std::vector<VerificationReport>{rep};
         }});
  }
}

// ---------------------------------------------------------------------------
// Properties of the prime-exponent order.

void add_prec_task(std::vector<Task>& tasks, const VerifyConfig& cfg) {
  tasks.push_back({"integers", {"PREC"}, [cfg]() {
    auto rep = base_report(cfg, "PREC", "integers");
    bool ok = prec_compare(6, 12) == PrecOrder::Less &&
              prec_compare(18, 12) == PrecOrder::Less &&
              prec_compare(12, 18) == PrecOrder::Greater &&
              prec_compare(30, 30) == PrecOrder::Equal;
    std::mt19937_64 rng(seed_from(cfg.seed, "PREC"));
    const int pair_samples = 300;
    for (int i = 0; i < pair_samples; ++i) {
      const std::uint64_t u = 2 + bounded_random(rng, 4999);
      std::vector<std::uint64_t> divisors;
      for (std::uint64_t d = 1; d * d <= u; ++d)
        if (u % d == 0) {
          divisors.push_back(d);
          if (d != 1 && d * d != u) divisors.push_back(u / d);
        }
      const std::uint64_t d =
          divisors[bounded_random(rng, divisors.size())];
      ok = ok && prec_compare(d, u) == PrecOrder::Less;  // proper divisor
      ok = ok && prec_compare(u, u) == PrecOrder::Equal;
    }
    const int triple_samples = 300;
    long long transitive_hits = 0;
    for (int i = 0; i < triple_samples; ++i) {
      const std::uint64_t a = 1 + bounded_random(rng, 5000);
      const std::uint64_t b = 1 + bounded_random(rng, 5000);
      const std::uint64_t c = 1 + bounded_random(rng, 5000);
      if (prec_compare(a, b) == PrecOrder::Less &&
          prec_compare(b, c) == PrecOrder::Less) {
        ok = ok && prec_compare(a, c) == PrecOrder::Less;
        ++transitive_hits;
      }
    }
    rep.computed["pairs"] = pair_samples;
    rep.computed["triples"] = triple_samples;
    rep.computed["transitive_hits"] = transitive_hits;
    set_verdict(rep, ok);
    return std::vector<VerificationReport>{rep};
  }});
}

}  // namespace

// ---------------------------------------------------------------------------
// Wreath-product lemmas, exposed for direct use and reused by the suite.

std::vector<VerificationReport> verify_wreath_lemmas(const PermGroup& s_template,
                                                     int r, int n,
                                                     const VerifyConfig& cfg) {
  const std::string gid = "wreath:o" +
                          std::to_string(s_template.order()) + ":r" +
                          std::to_string(r);
  auto l23 = base_report(cfg, "L2.3", gid, "", n);
  auto l24 = base_report(cfg, "L2.4", gid, "", n);
  if (r < 2) {
    set_skip(l23, "the cycling automorphism is trivial");
    set_skip(l24, "the cycling automorphism is trivial");
    return {l23, l24};
  }
  if (generators_commute(s_template)) {
    set_skip(l23, "the template must be nonabelian simple");
    set_skip(l24, "the template must be nonabelian simple");
    return {l23, l24};
  }

  const int d = s_template.degree();
  PermGroup base = wreath_base_of(s_template, r);
  Permutation phi = wreath_top_cycle(d, r);

  // Coordinate-restricted generation: values [x, n phi] with x running over
  // the r coordinate copies only.  Valid as an equality with the full base
  // for prime r.
  if (!is_prime_int(r)) {
    set_skip(l23, "the coordinate-restricted statement needs prime r");
  } else {
    std::vector<Permutation> values;
    for (int b = 0; b < r; ++b) {
      std::vector<Permutation> block_gens;
      for (const Permutation& gen : s_template.generators()) {
        std::vector<int> img(d * r);
        for (int i = 0; i < d * r; ++i) img[i] = i;
        for (int i = 0; i < d; ++i) img[b * d + i] = b * d + gen(i);
        block_gens.emplace_back(std::move(img));
      }
      PermGroup copy(d * r, block_gens);
      copy.for_each_element([&](const Permutation& x) {
        Permutation w = engel_commutator(x, phi, n);
        if (!w.is_identity()) values.push_back(w);
        return true;
      });
    }
    PermGroup f(d * r, values);
    l23.computed["order_base"] = static_cast<long long>(base.order());
    l23.computed["order_f"] = static_cast<long long>(f.order());
    set_verdict(l23, equal_groups(f, base));
  }

  // Full Engel subgroup over base<phi>; only runs when that group can be
  // enumerated.
  std::vector<Permutation> whole_gens = base.generators();
  whole_gens.push_back(phi);
  PermGroup whole(d * r, whole_gens);
  if (whole.order() > Limits::current().enumeration) {
    set_skip(l24, "too-large: the extension exceeds the enumeration limit");
  } else {
    EngelSubgroupResult res =
        right_engel_subgroup(whole, phi, n, cfg.seed, gid);
    l24.computed["order_base"] = static_cast<long long>(base.order());
    l24.computed["order_r"] = static_cast<long long>(res.subgroup.order());
    set_verdict(l24, equal_groups(res.subgroup, base));
  }
  return {l23, l24};
}

namespace {

void add_wreath_tasks(std::vector<Task>& tasks, const VerifyConfig& cfg) {
  for (int r : {2, 3}) {
    for (int n = 1; n <= 2; ++n) {
      const std::string gid = "wreath:o60:r" + std::to_string(r);
      tasks.push_back({gid, {"L2.3", "L2.4"}, [r, n, cfg]() {
                         return verify_wreath_lemmas(alternating_group(5), r,
                                                     n, cfg);
                       }});
    }
  }
}

}  // namespace

std::vector<VerificationReport> run_suite(const std::vector<CorpusEntry>& corpus,
                                          const VerifyConfig& cfg) {
  if (corpus.empty()) return {};

  std::vector<std::shared_ptr<GroupContext>> contexts;
  contexts.reserve(corpus.size());
  for (const CorpusEntry& entry : corpus)
    contexts.push_back(build_context(entry, cfg));

  std::vector<Task> tasks;
  for (const auto& ctx : contexts) add_group_tasks(tasks, ctx, cfg);
  add_l21_tasks(tasks, contexts, cfg);
  add_p31_tasks(tasks, cfg);
  add_wreath_tasks(tasks, cfg);
  add_l22_tasks(tasks, cfg);
  add_coprime_tasks(tasks, cfg);
  add_prec_task(tasks, cfg);

  if (!cfg.only_check.empty() || !cfg.only_group.empty()) {
    std::vector<Task> kept;
    for (Task& t : tasks) {
      if (!cfg.only_group.empty() && t.group != cfg.only_group) continue;
      if (!cfg.only_check.empty() &&
          std::find(t.checks.begin(), t.checks.end(), cfg.only_check) ==
              t.checks.end())
        continue;
      kept.push_back(std::move(t));
    }
    tasks = std::move(kept);
  }

  std::vector<VerificationReport> reports = run_tasks(tasks, cfg);

  auto matches = [&cfg](const VerificationReport& r) {
    if (!cfg.only_check.empty() && r.check_id != cfg.only_check) return false;
    if (!cfg.only_group.empty() && r.group_id != cfg.only_group) return false;
    if (!cfg.only_element.empty() && r.element != cfg.only_element) return false;
    if (cfg.only_n >= 0 && r.n != cfg.only_n) return false;
    return true;
  };
  std::erase_if(reports, [&](const VerificationReport& r) { return !matches(r); });

  std::stable_sort(reports.begin(), reports.end(),
                   [](const VerificationReport& a, const VerificationReport& b) {
                     return std::tie(a.check_id, a.group_id, a.element, a.n) <
                            std::tie(b.check_id, b.group_id, b.element, b.n);
                   });
  return reports;
}

SuiteSummary summarize(const std::vector<VerificationReport>& reports) {
  SuiteSummary s;
  for (const VerificationReport& r : reports) {
    if (r.verdict == "pass") {
      ++s.passes;
    } else if (r.verdict == "fail") {
      ++s.fails;
    } else {
      ++s.skips;
      continue;
    }
    ++s.exercised[r.check_id];
    if (r.verdict == "pass" && r.computed.count("bound") &&
        r.computed.count("min_index")) {
      const long long slack =
          r.computed.at("bound") - r.computed.at("min_index");
      ++s.slack_histogram[r.check_id][slack];
    }
  }
  return s;
}

}  // namespace ef
