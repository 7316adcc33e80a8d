#pragma once

#include <string>

#include "ef/perm.hpp"

namespace ef {

/// Parse disjoint cycle notation with 1-based points, e.g. "(1,2,3)(4,5)".
/// Whitespace is ignored anywhere.  "()" and "" denote the identity.
/// Throws ParseError (with byte position) on malformed input, points outside
/// 1..degree, or a repeated point.
Permutation parse_cycles(const std::string& text, int degree);

/// Canonical cycle form: cycles sorted by least point, each cycle starting at
/// its least point, points comma-separated and 1-based; identity prints "()".
std::string print_cycles(const Permutation& p);

}  // namespace ef
