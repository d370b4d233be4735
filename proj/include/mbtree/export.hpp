#pragma once

#include <optional>
#include <string>

#include "mbtree/tree.hpp"

namespace mbt {

enum class ExportFormat { Dot, Json, Svg };

// Either a box window (|p| <= p_bound, q <= q_bound) or the Stern-Brocot
// truncation at the given mediant depth, restricted to tree vertices.
struct RenderSpec {
    std::optional<Int> p_bound;
    std::optional<Int> q_bound;
    std::optional<Int> depth;
    ExportFormat format = ExportFormat::Dot;
};

// Renders the selected finite part of the tree. DOT lists one node per
// vertex labelled "p/q"; JSON carries {vertices:[{p,q,genus}],edges:[[i,j]]};
// SVG draws the disc model with edges as geodesic chords/arcs. Output is
// byte-deterministic. Throws BoundsTooLargeError above the configured caps.
std::string export_tree(const RenderSpec& spec);

}  // namespace mbt
