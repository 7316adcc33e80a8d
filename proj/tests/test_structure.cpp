#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <map>
#include <vector>

#include "ef/construct.hpp"
#include "ef/cycles.hpp"
#include "ef/errors.hpp"
#include "ef/group_ops.hpp"
#include "ef/structure.hpp"
#include "oracle_table.hpp"

using namespace ef;

namespace {

// Pairs a group with its Cayley-table model so library results can be
// compared element-by-element against the brute-force oracle.
struct Model {
  PermGroup g;
  std::vector<Permutation> elems;
  oracle::Table t;
  std::map<Permutation, int> index;

  explicit Model(PermGroup grp)
      : g(std::move(grp)), elems(g.elements()), t(oracle::table_of(elems)) {
    for (int i = 0; i < static_cast<int>(elems.size()); ++i)
      index[elems[i]] = i;
  }

  oracle::Sub to_sub(const PermGroup& h) const {
    oracle::Sub s;
    for (const Permutation& e : h.elements()) s.push_back(index.at(e));
    std::sort(s.begin(), s.end());
    return s;
  }
};

std::vector<PermGroup> oracle_corpus() {
  return {
      symmetric_group(3),
      symmetric_group(4),
      alternating_group(4),
      dihedral_group(4),
      special_linear_2(3),
      semidirect_power(7, 2),
      wreath_product(symmetric_group(3), cyclic_group(2)),
      wreath_product(cyclic_group(3), cyclic_group(3)),
      alternating_group(5),
      symmetric_group(5),
      special_linear_2(5),
  };
}

Permutation non_identity_generator(const PermGroup& g) {
  for (const Permutation& gen : g.generators())
    if (!gen.is_identity()) return gen;
  return Permutation::identity(g.degree());
}

}  // namespace

TEST_CASE("p-core matches the table model") {
  for (const PermGroup& g : oracle_corpus()) {
    Model m(g);
    for (long p : oracle::prime_factors(static_cast<long>(g.order()))) {
      CAPTURE(g.order());
      CAPTURE(p);
      PermGroup lib = p_core(g, static_cast<std::uint64_t>(p));
      CHECK(m.to_sub(lib) == oracle::p_core(m.t, oracle::whole(m.t), p));
    }
  }

  PermGroup s4 = symmetric_group(4);
  PermGroup v4(4,
               {parse_cycles("(1,2)(3,4)", 4), parse_cycles("(1,3)(2,4)", 4)});
  CHECK(equal_groups(p_core(s4, 2), v4));
  CHECK(p_core(s4, 3).is_trivial());
  CHECK(p_core(symmetric_group(8), 2).is_trivial());
  CHECK(p_core(s4, 5).is_trivial());  // p does not divide the order
  CHECK_THROWS_AS(p_core(s4, 6), InvalidInput);
  CHECK_THROWS_AS(p_core(s4, 1), InvalidInput);
}

TEST_CASE("Fitting subgroup, soluble radical, and socle match the table model") {
  for (const PermGroup& g : oracle_corpus()) {
    Model m(g);
    CAPTURE(g.order());
    oracle::Sub amb = oracle::whole(m.t);
    CHECK(m.to_sub(fitting_subgroup(g)) == oracle::fitting(m.t, amb));
    CHECK(m.to_sub(soluble_radical(g)) == oracle::radical(m.t, amb));

    SocleResult s = socle_of(g);
    CHECK_FALSE(s.probabilistic);
    CHECK(m.to_sub(s.socle) == oracle::socle(m.t, amb));
    std::vector<oracle::Sub> lib_mins;
    for (const PermGroup& mn : s.minimal_normals)
      lib_mins.push_back(m.to_sub(mn));
    std::vector<oracle::Sub> oracle_mins = oracle::minimal_normals(m.t, amb);
    std::sort(lib_mins.begin(), lib_mins.end());
    std::sort(oracle_mins.begin(), oracle_mins.end());
    CHECK(lib_mins == oracle_mins);
  }
}

TEST_CASE("Fitting series and height") {
  for (const PermGroup& g : oracle_corpus()) {
    Model m(g);
    CAPTURE(g.order());
    int oracle_h = oracle::fitting_height(m.t);
    if (oracle_h < 0) {
      CHECK_THROWS_AS(fitting_height(g), NotSoluble);
      CHECK_FALSE(fitting_series(g).stabilized_at_g);
    } else {
      CHECK(fitting_height(g) == oracle_h);
      CHECK(fitting_series(g).stabilized_at_g);
    }
  }

  SeriesRecord s4 = fitting_series(symmetric_group(4));
  REQUIRE(s4.terms.size() == 4);
  CHECK(s4.terms[0].first == "F0");
  CHECK(s4.terms[3].first == "F3");
  CHECK(s4.terms[0].second.order() == 1);
  CHECK(s4.terms[1].second.order() == 4);
  CHECK(s4.terms[2].second.order() == 12);
  CHECK(s4.terms[3].second.order() == 24);
  CHECK(s4.height_or_length == 3);
  CHECK(fitting_height(symmetric_group(3)) == 2);
  CHECK(fitting_height(dihedral_group(4)) == 1);

  // Insoluble direct product: the series stalls exactly at the radical.
  PermGroup s4xa5 = direct_product(symmetric_group(4), alternating_group(5));
  SeriesRecord stalled = fitting_series(s4xa5);
  CHECK_FALSE(stalled.stabilized_at_g);
  PermGroup rad = soluble_radical(s4xa5);
  CHECK(rad.order() == 24);
  PermGroup s4_copy(9,
                    {parse_cycles("(1,2)", 9), parse_cycles("(1,2,3,4)", 9)});
  CHECK(equal_groups(rad, s4_copy));
  CHECK_THROWS_AS(fitting_height(s4xa5), NotSoluble);
}

TEST_CASE("layer and components match the table model") {
  std::vector<PermGroup> groups = {
      symmetric_group(4),
      alternating_group(4),
      special_linear_2(3),
      special_linear_2(5),
      alternating_group(5),
      symmetric_group(5),
      wreath_product(symmetric_group(3), cyclic_group(2)),
      direct_product(alternating_group(5), cyclic_group(6)),
  };
  std::vector<std::size_t> expected_comps = {0, 0, 0, 1, 1, 1, 0, 1};
  for (std::size_t i = 0; i < groups.size(); ++i) {
    Model m(groups[i]);
    CAPTURE(m.g.order());
    ComponentsResult cl = components_and_layer(m.g);
    CHECK_FALSE(cl.probabilistic);
    CHECK(cl.components.size() == expected_comps[i]);
    CHECK(m.to_sub(cl.layer) == oracle::layer(m.t));
    CHECK(m.to_sub(generalized_fitting_subgroup(m.g)) ==
          oracle::gen_fitting(m.t));
  }

  // A quasisimple group is its own single component.
  PermGroup sl25 = special_linear_2(5);
  ComponentsResult cl = components_and_layer(sl25);
  REQUIRE(cl.components.size() == 1);
  CHECK(equal_groups(cl.components[0], sl25));
  CHECK(equal_groups(cl.layer, sl25));

  // In A5 x C6 the layer is the A5 factor.
  PermGroup a5xc6 = direct_product(alternating_group(5), cyclic_group(6));
  ComponentsResult cl2 = components_and_layer(a5xc6);
  REQUIRE(cl2.components.size() == 1);
  CHECK(cl2.components[0].order() == 60);
  CHECK(equal_groups(cl2.components[0], cl2.layer));
}

TEST_CASE("generalized Fitting height and nonsoluble length match the table model") {
  std::vector<PermGroup> groups = {
      symmetric_group(4),
      alternating_group(4),
      special_linear_2(3),
      symmetric_group(5),
      special_linear_2(5),
      alternating_group(5),
      wreath_product(symmetric_group(3), cyclic_group(2)),
  };
  for (const PermGroup& g : groups) {
    Model m(g);
    CAPTURE(g.order());
    CHECK(generalized_fitting_height(g) == oracle::gen_fitting_height(m.t));
    CHECK(nonsoluble_length(g) == oracle::nonsoluble_length(m.t));
  }
  CHECK(generalized_fitting_height(symmetric_group(5)) == 2);
  CHECK(generalized_fitting_height(special_linear_2(5)) == 1);
  CHECK(nonsoluble_length(symmetric_group(4)) == 0);
  CHECK(nonsoluble_length(symmetric_group(5)) == 1);
  CHECK(nonsoluble_length(special_linear_2(5)) == 1);
}

TEST_CASE("nonsoluble series terms and clamped access") {
  SeriesRecord s5 = nonsoluble_series(symmetric_group(5));
  REQUIRE(s5.terms.size() == 4);
  CHECK(s5.terms[0].first == "B0");
  CHECK(s5.terms[1].first == "D0");
  CHECK(s5.terms[2].first == "B1");
  CHECK(s5.terms[3].first == "D1");
  CHECK(s5.terms[0].second.order() == 1);
  CHECK(s5.terms[1].second.order() == 1);
  CHECK(s5.terms[2].second.order() == 60);
  CHECK(s5.terms[3].second.order() == 120);
  CHECK(s5.height_or_length == 1);
  CHECK(s5.stabilized_at_g);
  CHECK_FALSE(s5.probabilistic);
  CHECK(s5.term_clamped(2).order() == 60);
  CHECK(s5.term_clamped(9).order() == 120);
  CHECK(s5.d_term_clamped(0).order() == 1);
  CHECK(s5.d_term_clamped(1).order() == 120);
  CHECK(s5.d_term_clamped(7).order() == 120);
  CHECK_THROWS_AS(s5.term_clamped(-1), InvalidInput);
  CHECK_THROWS_AS(s5.d_term_clamped(-2), InvalidInput);

  SeriesRecord sl25 = nonsoluble_series(special_linear_2(5));
  REQUIRE(sl25.terms.size() == 4);
  CHECK(sl25.terms[1].second.order() == 2);    // D0 = centre
  CHECK(sl25.terms[2].second.order() == 120);  // B1 = whole group
  CHECK(sl25.height_or_length == 1);

  SeriesRecord s4 = nonsoluble_series(symmetric_group(4));
  REQUIRE(s4.terms.size() == 2);
  CHECK(s4.terms[1].second.order() == 24);
  CHECK(s4.height_or_length == 0);

  PermGroup a5xa5 =
      direct_product(alternating_group(5), alternating_group(5));
  CHECK(nonsoluble_length(a5xa5) == 1);

  PermGroup s4xa5 = direct_product(symmetric_group(4), alternating_group(5));
  SeriesRecord mixed = nonsoluble_series(s4xa5);
  REQUIRE(mixed.terms.size() == 4);
  CHECK(mixed.terms[1].second.order() == 24);
  CHECK(mixed.terms[2].second.order() == 1440);
  CHECK(mixed.height_or_length == 1);
}

TEST_CASE("socle and minimal normal subgroups of products") {
  PermGroup a5xa5 =
      direct_product(alternating_group(5), alternating_group(5));
  SocleResult s = socle_of(a5xa5);
  CHECK_FALSE(s.probabilistic);
  CHECK(s.socle.order() == 3600);
  REQUIRE(s.minimal_normals.size() == 2);
  CHECK(s.minimal_normals[0].order() == 60);
  CHECK(s.minimal_normals[1].order() == 60);
  CHECK(equal_groups(join(s.minimal_normals[0], s.minimal_normals[1]), a5xa5));
  CHECK(generalized_fitting_height(a5xa5) == 1);

  PermGroup a5wrc2 = wreath_product(alternating_group(5), cyclic_group(2));
  SocleResult sw = socle_of(a5wrc2);
  CHECK_FALSE(sw.probabilistic);
  CHECK(sw.socle.order() == 3600);
  CHECK(sw.minimal_normals.size() == 1);
  CHECK(generalized_fitting_height(a5wrc2) == 2);
  CHECK(nonsoluble_length(a5wrc2) == 1);

  ComponentsResult cw = components_and_layer(a5wrc2);
  CHECK(cw.components.size() == 2);
  CHECK(equal_groups(cw.layer, sw.socle));

  CHECK(equal_groups(socle_of(dihedral_group(4)).socle,
                     center(dihedral_group(4))));
  CHECK(equal_groups(socle_of(special_linear_2(5)).socle,
                     center(special_linear_2(5))));

  PermGroup s4xa5 = direct_product(symmetric_group(4), alternating_group(5));
  CHECK(generalized_fitting_height(s4xa5) == 3);
  SeriesRecord gf = generalized_fitting_series(s4xa5);
  REQUIRE(gf.terms.size() == 4);
  CHECK(gf.terms[1].second.order() == 240);
  CHECK(gf.terms[2].second.order() == 720);
  CHECK(gf.terms[3].second.order() == 1440);
}

TEST_CASE("simple factor decomposition and the factor action") {
  PermGroup s5 = symmetric_group(5);
  SimpleFactorDecomposition dec = simple_factor_decomposition(s5, 1);
  CHECK(dec.level == 1);
  REQUIRE(dec.factors.size() == 1);
  CHECK(dec.factors[0].order() == 60);
  CHECK(dec.below.is_trivial());
  CHECK(dec.action_kernel.order() == 120);
  CHECK_FALSE(dec.probabilistic);
  CHECK_THROWS_AS(simple_factor_decomposition(s5, 0), InvalidInput);
  CHECK_THROWS_AS(simple_factor_decomposition(s5, 2), InvalidInput);
  CHECK_THROWS_AS(simple_factor_decomposition(symmetric_group(4), 1),
                  InvalidInput);

  Permutation id5 = Permutation::identity(5);
  auto orbits_id = factor_orbits_of(dec, id5);
  REQUIRE(orbits_id.size() == 1);
  CHECK(orbits_id[0] == std::vector<int>{0});
  CHECK(orbit_purity(dec, id5, {0}));
  // No nontrivial element of S5 centralizes A5.
  CHECK_FALSE(orbit_purity(dec, parse_cycles("(1,2)", 5), {0}));
  CHECK_FALSE(orbit_purity(dec, parse_cycles("(1,2,3)", 5), {0}));

  // The central involution of SL(2,5) is pure on its single factor.
  PermGroup sl25 = special_linear_2(5);
  SimpleFactorDecomposition dsl = simple_factor_decomposition(sl25, 1);
  REQUIRE(dsl.factors.size() == 1);
  CHECK(dsl.factors[0].order() == 120);
  CHECK(dsl.below.order() == 2);
  CHECK(dsl.action_kernel.order() == 120);
  Permutation minus_i = non_identity_generator(center(sl25));
  REQUIRE_FALSE(minus_i.is_identity());
  CHECK(orbit_purity(dsl, minus_i, {0}));

  PermGroup a5wrc2 = wreath_product(alternating_group(5), cyclic_group(2));
  SimpleFactorDecomposition dw = simple_factor_decomposition(a5wrc2, 1);
  REQUIRE(dw.factors.size() == 2);
  CHECK(dw.factors[0].order() == 60);
  CHECK(dw.factors[1].order() == 60);
  CHECK(dw.below.is_trivial());
  CHECK(dw.action_kernel.order() == 3600);
  CHECK(dw.factor_action->image().order() == 2);

  Permutation swap = parse_cycles("(1,6)(2,7)(3,8)(4,9)(5,10)", 10);
  REQUIRE(a5wrc2.contains(swap));
  auto sworbs = factor_orbits_of(dw, swap);
  REQUIRE(sworbs.size() == 1);
  CHECK(sworbs[0] == std::vector<int>{0, 1});
  // The bare swap squares to the identity, so it is pure on the 2-orbit...
  CHECK(orbit_purity(dw, swap, {0, 1}));
  // ...while twisting it by a 5-cycle in one coordinate gives order 10.
  Permutation twisted = parse_cycles("(1,2,3,4,5)", 10) * swap;
  REQUIRE(a5wrc2.contains(twisted));
  CHECK(twisted.order() == 10);
  CHECK_FALSE(orbit_purity(dw, twisted, {0, 1}));

  CHECK_THROWS_AS(orbit_purity(dw, swap, {0}), InvalidInput);
  CHECK_THROWS_AS(orbit_purity(dw, Permutation::identity(10), {0, 0}),
                  InvalidInput);
  CHECK_THROWS_AS(orbit_purity(dw, swap, {0, 5}), InvalidInput);
  CHECK_THROWS_AS(factor_orbits_of(dw, parse_cycles("(1,2)", 10)),
                  InvalidInput);
}

TEST_CASE("structure functions beyond the enumeration limit") {
  // |A5 wr C3| = 648000 exceeds the enumeration limit; every structural
  // question must go through the reduction paths.
  PermGroup a5wrc3 = wreath_product(alternating_group(5), cyclic_group(3));
  REQUIRE(a5wrc3.order() == 648000);
  CHECK(soluble_radical(a5wrc3).is_trivial());
  SocleResult s3 = socle_of(a5wrc3);
  CHECK_FALSE(s3.probabilistic);
  CHECK(s3.socle.order() == 216000);
  CHECK(s3.minimal_normals.size() == 1);
  CHECK(nonsoluble_length(a5wrc3) == 1);
  CHECK(generalized_fitting_height(a5wrc3) == 2);

  GroupHom q3 = quotient_by(a5wrc3, s3.socle);
  CHECK(q3.action_degree() == 3);  // realized on the base orbits
  CHECK(q3.image().order() == 3);

  SimpleFactorDecomposition d3 = simple_factor_decomposition(a5wrc3, 1);
  REQUIRE(d3.factors.size() == 3);
  CHECK(d3.factors[0].order() == 60);
  CHECK(d3.action_kernel.order() == 216000);
  CHECK(d3.factor_action->image().order() == 3);

  // |A5 wr A5| = 60^6; the nonsoluble length is 2 and all of it is certified.
  PermGroup a5wra5 = wreath_product(alternating_group(5), alternating_group(5));
  REQUIRE(a5wra5.order() == 46656000000ULL);
  CHECK(soluble_radical(a5wra5).is_trivial());

  SocleResult sb = socle_of(a5wra5);
  CHECK_FALSE(sb.probabilistic);
  CHECK(sb.socle.order() == 777600000ULL);
  CHECK(sb.minimal_normals.size() == 1);

  GroupHom qb = quotient_by(a5wra5, sb.socle);
  CHECK(qb.action_degree() == 5);
  CHECK(qb.image().order() == 60);

  SeriesRecord big = nonsoluble_series(a5wra5);
  CHECK(big.height_or_length == 2);
  CHECK_FALSE(big.probabilistic);
  CHECK(big.d_term_clamped(0).order() == 1);
  CHECK(big.d_term_clamped(1).order() == 777600000ULL);
  CHECK(big.d_term_clamped(2).order() == 46656000000ULL);

  ComponentsResult cb = components_and_layer(a5wra5);
  CHECK_FALSE(cb.probabilistic);
  CHECK(cb.components.size() == 5);
  for (const PermGroup& comp : cb.components) CHECK(comp.order() == 60);
  CHECK(cb.layer.order() == 777600000ULL);

  CHECK(generalized_fitting_height(a5wra5) == 2);

  SimpleFactorDecomposition d1 = simple_factor_decomposition(a5wra5, 1);
  REQUIRE(d1.factors.size() == 5);
  CHECK(d1.below.is_trivial());
  CHECK(d1.action_kernel.order() == 777600000ULL);
  CHECK(d1.factor_action->image().order() == 60);

  Permutation top5 = parse_cycles(
      "(1,6,11,16,21)(2,7,12,17,22)(3,8,13,18,23)(4,9,14,19,24)(5,10,15,20,25)",
      25);
  REQUIRE(a5wra5.contains(top5));
  auto t5orbs = factor_orbits_of(d1, top5);
  REQUIRE(t5orbs.size() == 1);
  CHECK(t5orbs[0].size() == 5);
  CHECK(orbit_purity(d1, top5, t5orbs[0]));

  Permutation twisted = parse_cycles("(1,2,3,4,5)", 25) * top5;
  REQUIRE(a5wra5.contains(twisted));
  CHECK(twisted.order() == 25);
  CHECK_FALSE(orbit_purity(d1, twisted, factor_orbits_of(d1, twisted)[0]));

  SimpleFactorDecomposition d2 = simple_factor_decomposition(a5wra5, 2);
  REQUIRE(d2.factors.size() == 1);
  CHECK(d2.factors[0].order() == 46656000000ULL);
  CHECK(d2.below.order() == 777600000ULL);
  CHECK(d2.action_kernel.order() == 46656000000ULL);
}
