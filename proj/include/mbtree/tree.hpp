#pragma once

#include <cstddef>
#include <map>
#include <vector>

#include "mbtree/slope.hpp"

namespace mbt {

// The unique minimal vertex sequence between two tree vertices. Consecutive
// entries satisfy |det| = 1; no vertex repeats.
struct GeodesicPath {
    std::vector<TreeVertex> vertices;

    std::size_t length() const { return vertices.size() - 1; }  // edge count

    friend bool operator==(const GeodesicPath&, const GeodesicPath&) = default;
};

enum class BranchLabel { Meridional, Central, Longitudinal };

const char* to_string(BranchLabel label);

// Which of the three anchor vertices 0/1, +-1/1, +-2/1 the vertex is nearest
// to under the path metric. The anchor carries the sign of p.
struct BranchClass {
    TreeVertex anchor;
    BranchLabel label;

    friend bool operator==(const BranchClass&, const BranchClass&) = default;
};

// Finite window of the tree: all vertices with |p| <= p_bound, q <= q_bound,
// with every |det| = 1 edge found by brute force and BFS distances from 0/1.
// Serves as the independent oracle for the descent-based operations.
// Parent-closed: parents have strictly smaller |p| and no larger q.
struct TreeBox {
    Int p_bound;
    Int q_bound;
    std::vector<TreeVertex> vertices;             // sorted canonically
    std::vector<std::vector<int>> adjacency;      // index lists, sorted
    std::vector<std::pair<int, int>> edges;       // i < j, sorted
    std::vector<long long> root_distance;         // BFS from 0/1, -1 if unreachable
    std::map<TreeVertex, int> index;

    std::size_t vertex_count() const { return vertices.size(); }
    std::size_t edge_count() const { return edges.size(); }
};

struct TreeReport {
    bool connected;
    bool acyclic;
    bool odd_parent_unique;

    bool all() const { return connected && acyclic && odd_parent_unique; }
};

// The unique neighbour of v with odd denominator in its largest ideal
// triangle; |p| strictly decreases. Throws RootHasNoParentError for 0/1.
TreeVertex parent(const TreeVertex& v);

// [v, parent(v), parent^2(v), ..., 0/1].
GeodesicPath path_to_root(const TreeVertex& v);

// Edge distance from the slope's vertex to 0/1; the nonorientable genus of
// the surface the slope bounds.
Int genus(const BoundarySlope& s);

// Unique minimal path, built by splicing the two root paths at their deepest
// common vertex.
GeodesicPath path_between(const TreeVertex& u, const TreeVertex& v);

Int distance(const TreeVertex& u, const TreeVertex& v);

// All tree vertices w with |det(v,w)| = 1 and max(|w.p|, w.q) <= bound,
// sorted canonically. Solved as two one-parameter families, not by scanning.
std::vector<TreeVertex> neighbors(const TreeVertex& v, const Int& bound);

// Threshold rule: Longitudinal if |p|/q > 3/2, Central if 1/2 < |p|/q < 3/2,
// Meridional if |p|/q < 1/2. Equality cannot occur since q is odd.
BranchClass classify(const TreeVertex& v);

// Throws InvalidBoundsError unless p_bound >= 1 and q_bound is odd >= 1;
// BoundsTooLargeError when the vertex count would exceed max_vertices.
TreeBox build_box_graph(const Int& p_bound, const Int& q_bound,
                        std::size_t max_vertices = 2'000'000);

// connected: every vertex reaches 0/1; acyclic: edge count = vertex count - 1
// (valid for parent-closed boxes); odd_parent_unique: each non-root vertex
// has exactly one neighbour with smaller |p|.
TreeReport verify_tree(const TreeBox& box);

}  // namespace mbt
