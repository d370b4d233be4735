#include "mbtree/tree.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <sstream>

namespace mbt {

const char* to_string(BranchLabel label) {
    switch (label) {
        case BranchLabel::Meridional: return "Meridional";
        case BranchLabel::Central: return "Central";
        case BranchLabel::Longitudinal: return "Longitudinal";
    }
    return "?";
}

TreeVertex parent(const TreeVertex& v) {
    if (v == TreeVertex(0, 1)) throw RootHasNoParentError();
    auto [a, b] = farey_parents(v);
    // Exactly one of the two parents has odd denominator: the denominators
    // sum to an odd q (or are 1 and 0 for integer vertices).
    const FareyVertex& odd = ((a.q() & 1) == 1) ? a : b;
    return TreeVertex(odd.p(), odd.q());
}

GeodesicPath path_to_root(const TreeVertex& v) {
    GeodesicPath path;
    path.vertices.push_back(v);
    TreeVertex cur = v;
    const TreeVertex root(0, 1);
    while (!(cur == root)) {
        cur = parent(cur);
        path.vertices.push_back(cur);
    }
    return path;
}

Int genus(const BoundarySlope& s) {
    TreeVertex cur = vertex_of_slope(s);
    const TreeVertex root(0, 1);
    Int g = 0;
    while (!(cur == root)) {
        cur = parent(cur);
        ++g;
    }
    return g;
}

GeodesicPath path_between(const TreeVertex& u, const TreeVertex& v) {
    GeodesicPath from_u = path_to_root(u);
    GeodesicPath from_v = path_to_root(v);

    std::map<TreeVertex, std::size_t> seen;
    for (std::size_t i = 0; i < from_u.vertices.size(); ++i)
        seen.emplace(from_u.vertices[i], i);

    // First vertex of v's root chain that also lies on u's chain is the
    // deepest common vertex.
    std::size_t meet_v = 0;
    while (!seen.count(from_v.vertices[meet_v])) ++meet_v;
    std::size_t meet_u = seen.at(from_v.vertices[meet_v]);

    GeodesicPath path;
    path.vertices.assign(from_u.vertices.begin(),
                         from_u.vertices.begin() + meet_u + 1);
    for (std::size_t i = meet_v; i-- > 0;)
        path.vertices.push_back(from_v.vertices[i]);
    return path;
}

Int distance(const TreeVertex& u, const TreeVertex& v) {
    return Int(path_between(u, v).length());
}

std::vector<TreeVertex> neighbors(const TreeVertex& v, const Int& bound) {
    if (bound < 1) throw InvalidBoundsError("neighbor bound must be >= 1");
    const Int& p = v.p();
    const Int& q = v.q();

    // det(v, w) = p*y - q*x = eps has solutions (x,y) = (x0,y0) + k(p,q).
    ExtendedGcd e = extended_gcd(p, q);  // p*e.x + q*e.y = 1

    std::vector<TreeVertex> out;
    for (int eps : {1, -1}) {
        Int x0 = eps * -e.y;
        Int y0 = eps * e.x;
        // Shift so y lands in [1, bound]; q >= 1 so k is well-defined.
        Int k_lo = (1 - y0 + q - 1) / q;
        while (y0 + k_lo * q < 1) ++k_lo;   // guard against floor/ceil slips
        while (y0 + (k_lo - 1) * q >= 1) --k_lo;
        for (Int k = k_lo;; ++k) {
            Int y = y0 + k * q;
            if (y > bound) break;
            if ((y & 1) == 0) continue;  // every second value; q is odd
            Int x = x0 + k * p;
            if (abs(x) > bound) continue;
            out.emplace_back(x, y);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

BranchClass classify(const TreeVertex& v) {
    Int ap2 = 2 * abs(v.p());  // compare |p|/q with 1/2 and 3/2 exactly
    int s = v.p() < 0 ? -1 : 1;
    if (ap2 > 3 * v.q())
        return {TreeVertex(2 * s, 1), BranchLabel::Longitudinal};
    if (ap2 > v.q()) return {TreeVertex(s, 1), BranchLabel::Central};
    return {TreeVertex(0, 1), BranchLabel::Meridional};
}

TreeBox build_box_graph(const Int& p_bound, const Int& q_bound,
                        std::size_t max_vertices) {
    if (p_bound < 1) throw InvalidBoundsError("p_bound must be >= 1");
    if (q_bound < 1 || (q_bound & 1) == 0)
        throw InvalidBoundsError("q_bound must be odd and >= 1");

    TreeBox box;
    box.p_bound = p_bound;
    box.q_bound = q_bound;

    for (Int q = 1; q <= q_bound; q += 2) {
        for (Int p = -p_bound; p <= p_bound; ++p) {
            if (gcd(abs(p), q) != 1) continue;
            box.vertices.emplace_back(p, q);
            if (box.vertices.size() > max_vertices)
                throw BoundsTooLargeError(
                    "box exceeds the configured vertex cap");
        }
    }
    std::sort(box.vertices.begin(), box.vertices.end());

    const std::size_t n = box.vertices.size();
    for (std::size_t i = 0; i < n; ++i)
        box.index.emplace(box.vertices[i], static_cast<int>(i));

    // Bounds are capped, so the coordinates fit comfortably in 64 bits and
    // the brute-force determinant scan is exact in machine words.
    std::vector<std::pair<long long, long long>> small(n);
    for (std::size_t i = 0; i < n; ++i)
        small[i] = {box.vertices[i].p().convert_to<long long>(),
                    box.vertices[i].q().convert_to<long long>()};

    box.adjacency.assign(n, {});
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            long long d = small[i].first * small[j].second -
                          small[j].first * small[i].second;
            if (d == 1 || d == -1) {
                box.adjacency[i].push_back(static_cast<int>(j));
                box.adjacency[j].push_back(static_cast<int>(i));
                box.edges.emplace_back(static_cast<int>(i),
                                       static_cast<int>(j));
            }
        }
    }
    std::sort(box.edges.begin(), box.edges.end());

    box.root_distance.assign(n, -1);
    int root = box.index.at(TreeVertex(0, 1));
    std::deque<int> queue{root};
    box.root_distance[root] = 0;
    while (!queue.empty()) {
        int cur = queue.front();
        queue.pop_front();
        for (int next : box.adjacency[cur]) {
            if (box.root_distance[next] >= 0) continue;
            box.root_distance[next] = box.root_distance[cur] + 1;
            queue.push_back(next);
        }
    }
    return box;
}

TreeReport verify_tree(const TreeBox& box) {
    TreeReport report{};
    report.connected = std::all_of(box.root_distance.begin(),
                                   box.root_distance.end(),
                                   [](long long d) { return d >= 0; });
    report.acyclic =
        report.connected && box.edge_count() == box.vertex_count() - 1;

    report.odd_parent_unique = true;
    for (std::size_t i = 0; i < box.vertex_count(); ++i) {
        const TreeVertex& v = box.vertices[i];
        if (v == TreeVertex(0, 1)) continue;
        int smaller = 0;
        for (int j : box.adjacency[i])
            if (abs(box.vertices[j].p()) < abs(v.p())) ++smaller;
        if (smaller != 1) {
            report.odd_parent_unique = false;
            break;
        }
    }
    return report;
}

}  // namespace mbt
