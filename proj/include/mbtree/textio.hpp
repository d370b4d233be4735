#pragma once

#include <array>
#include <string>

#include "mbtree/slope.hpp"

namespace mbt {

// Text grammars used by the command line:
//   slope   "u/v" or "(u,v)"      parsed through reduce_slope
//   curve   "u/v" or "(u,v)"      must already be primitive
//   vertex  "p:q"
//   matrix  "a,b;c,d"             row-major, rows split by ';'
// Signs are optional, surrounding whitespace is ignored, anything else is a
// ParseError carrying the byte offset.

BoundarySlope parse_slope(const std::string& text);
Curve parse_curve(const std::string& text);
TreeVertex parse_vertex(const std::string& text);
std::array<Int, 4> parse_matrix(const std::string& text);

std::string format_slope(const BoundarySlope& s);   // "u/v"
std::string format_vertex(const TreeVertex& v);     // "p:q"
std::string format_curve(const Curve& c);           // "(x,y)"

}  // namespace mbt
