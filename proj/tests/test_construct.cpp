#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ef/construct.hpp"
#include "ef/cycles.hpp"
#include "ef/errors.hpp"
#include "ef/group_ops.hpp"

using namespace ef;

TEST_CASE("basic families") {
  CHECK(symmetric_group(1).order() == 1);
  CHECK(symmetric_group(2).order() == 2);
  CHECK(symmetric_group(5).order() == 120);
  CHECK(symmetric_group(8).order() == 40320);

  CHECK(alternating_group(2).order() == 1);
  CHECK(alternating_group(3).order() == 3);
  CHECK(alternating_group(4).order() == 12);
  CHECK(alternating_group(5).order() == 60);
  CHECK(alternating_group(6).order() == 360);
  // Even case really is the even permutations.
  PermGroup a6 = alternating_group(6);
  CHECK(!a6.contains(parse_cycles("(1,2)", 6)));
  CHECK(a6.contains(parse_cycles("(1,2,3)", 6)));

  CHECK(cyclic_group(1).order() == 1);
  CHECK(cyclic_group(12).order() == 12);
  CHECK(dihedral_group(3).order() == 6);
  CHECK(dihedral_group(6).order() == 12);
  CHECK_THROWS_AS(dihedral_group(2), InvalidInput);
  CHECK_THROWS_AS(symmetric_group(0), InvalidInput);
}

TEST_CASE("direct products") {
  PermGroup g = direct_product(symmetric_group(4), alternating_group(5));
  CHECK(g.degree() == 9);
  CHECK(g.order() == 1440);
  // Factors commute.
  Permutation a = parse_cycles("(1,2)", 9);
  Permutation b = parse_cycles("(5,6,7)", 9);
  CHECK(g.contains(a));
  CHECK(g.contains(b));
  CHECK(a * b == b * a);

  CHECK(direct_product(cyclic_group(2), cyclic_group(3)).order() == 6);
}

TEST_CASE("power-map semidirect products") {
  // ord(2 mod 7) = 3, so this is the nonabelian group of order 21.
  PermGroup g = semidirect_power(7, 2);
  CHECK(g.degree() == 7);
  CHECK(g.order() == 21);
  CHECK(!is_nilpotent(g));
  CHECK(is_soluble(g));

  CHECK(semidirect_power(7, 3).order() == 42);   // ord(3 mod 7) = 6
  CHECK(semidirect_power(5, 4).order() == 10);   // inversion: dihedral D5
  CHECK(semidirect_power(8, 3).order() == 16);
  CHECK(semidirect_power(9, 1).order() == 9);    // trivial twist: just C9
  CHECK_THROWS_AS(semidirect_power(6, 2), InvalidInput);  // 2 not a unit
  CHECK_THROWS_AS(semidirect_power(6, 3), InvalidInput);
}

TEST_CASE("wreath products") {
  PermGroup w = wreath_product(alternating_group(5), cyclic_group(2));
  CHECK(w.degree() == 10);
  CHECK(w.order() == 7200);  // 60^2 * 2

  CHECK(wreath_product(symmetric_group(3), cyclic_group(2)).order() == 72);
  CHECK(wreath_product(cyclic_group(3), cyclic_group(3)).order() == 81);
  CHECK(wreath_product(cyclic_group(2), cyclic_group(2)).order() == 8);

  // The big one used elsewhere: A5 wr A5 on 25 points.
  PermGroup big = wreath_product(alternating_group(5), alternating_group(5));
  CHECK(big.degree() == 25);
  CHECK(big.order() == 46656000000ULL);  // 60^5 * 60

  // Intransitive tops are refused.
  CHECK_THROWS_AS(
      wreath_product(cyclic_group(2),
                     PermGroup(4, {parse_cycles("(1,2)", 4)})),
      InvalidInput);
}

TEST_CASE("SL(2, p)") {
  PermGroup sl25 = special_linear_2(5);
  CHECK(sl25.degree() == 24);
  CHECK(sl25.order() == 120);
  // Not isomorphic to S5: its center is nontrivial (-I).
  CHECK(center(sl25).order() == 2);
  CHECK(!is_soluble(sl25));

  CHECK(special_linear_2(2).order() == 6);    // SL(2,2) = S3
  CHECK(special_linear_2(3).order() == 24);
  CHECK(special_linear_2(7).order() == 336);
  CHECK_THROWS_AS(special_linear_2(6), InvalidInput);
}

TEST_CASE("constructor expressions") {
  CHECK(build_construction("Sym(5)").order() == 120);
  CHECK(build_construction(" DirectProduct( Sym(4), Alt(5) ) ").order() ==
        1440);
  CHECK(build_construction("Wreath(Alt(5),Cyclic(2))").order() == 7200);
  CHECK(build_construction("SemidirectPower(7,2)").order() == 21);
  CHECK(build_construction("SL(2,5)").order() == 120);
  CHECK(build_construction("Wreath(Sym(3), Cyclic(3))").order() == 648);
  CHECK(build_construction("DirectProduct(Cyclic(2), DirectProduct(Cyclic(3), Cyclic(5)))")
            .order() == 30);

  CHECK_THROWS_AS(build_construction("Frob(20)"), ParseError);
  CHECK_THROWS_AS(build_construction("Sym(5"), ParseError);
  CHECK_THROWS_AS(build_construction("Sym(5))"), ParseError);
  CHECK_THROWS_AS(build_construction("Sym()"), ParseError);
  CHECK_THROWS_AS(build_construction("Dihedral(1)"), ParseError);
  CHECK_THROWS_AS(build_construction("SL(3,5)"), ParseError);
}
