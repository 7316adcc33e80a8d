#pragma once

#include <string>

#include "ef/perm_group.hpp"

namespace ef {

PermGroup symmetric_group(int n);
PermGroup alternating_group(int n);
PermGroup cyclic_group(int n);
/// Dihedral group of order 2n acting on the n-gon, n >= 3.
PermGroup dihedral_group(int n);

/// a acting on the first block of points, b on the second.
PermGroup direct_product(const PermGroup& a, const PermGroup& b);

/// C_n extended by the power automorphism x -> x^k (so k must be a unit
/// mod n); the result has order n * ord_n(k) and acts on n points.
PermGroup semidirect_power(int n, int k);

/// base wr top on (base degree) * (top degree) points: independent copies of
/// base on the blocks, permuted by top.  top must be transitive (otherwise
/// the copies outside the orbit of block 0 would be missing).
PermGroup wreath_product(const PermGroup& base, const PermGroup& top);

/// SL(2, p) for a prime p, acting on the p^2 - 1 nonzero vectors of F_p^2.
PermGroup special_linear_2(int p);

/// Build a group from a constructor expression such as
///   "Sym(5)", "DirectProduct(Sym(4), Alt(5))", "Wreath(Alt(5), Cyclic(2))",
///   "SemidirectPower(7, 2)", "SL(2, 5)", "Dihedral(6)".
/// Throws ParseError on malformed input.
PermGroup build_construction(const std::string& spec);

}  // namespace ef
