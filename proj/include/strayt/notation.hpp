#pragma once

#include <cstddef>
#include <string>
#include <string_view>

#include "strayt/core.hpp"

namespace strayt {

/// Text formats for transformations.
///
/// Linear notation extends cycle notation to arbitrary maps. The functional
/// graph of a map splits into components, each a cycle with trees hanging
/// off it. A tree feeding a point p is written "[s1,...,sk;p]", where each
/// source si is either a bare point or, if it has sources itself, another
/// bracket. A cycle of length >= 2 is written "(e1,...,ek)" and maps the
/// target of each entry to the target of the next. Fixed points with no
/// incoming edges are left out, so "[3;1]" on three states is 1->1, 2->2,
/// 3->1.
///
///   form      = component*
///   component = "(" [entry ("," entry)*] ")" | entry
///   entry     = point | "[" entry ("," entry)* ";" point "]"
///
/// Whitespace between tokens is ignored.

/// Parses linear notation on n states. Throws ParseError on bad syntax, a
/// point outside {1..n} or a point used twice.
Transformation parse_linear(std::string_view text, std::size_t n);

/// Canonical linear form: cycles rotated to start at their smallest target,
/// sources in ascending order of their root point, components in ascending
/// order of their smallest point. The identity prints as "()".
std::string print_linear(const Transformation& s);

/// Parses a whitespace-separated image list "i1 i2 ... in".
Transformation parse_images(std::string_view text);

/// "i1 i2 ... in"
std::string print_images(const Transformation& s);

}  // namespace strayt
