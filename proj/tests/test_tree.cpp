#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <deque>
#include <set>

#include "mbtree/tree.hpp"

using namespace mbt;

namespace {

// Independent BFS path inside a box, for cross-checking path_between.
std::vector<TreeVertex> bfs_path(const TreeBox& box, const TreeVertex& from,
                                 const TreeVertex& to) {
    int s = box.index.at(from), t = box.index.at(to);
    std::vector<int> prev(box.vertex_count(), -2);
    std::deque<int> queue{s};
    prev[s] = -1;
    while (!queue.empty()) {
        int cur = queue.front();
        queue.pop_front();
        if (cur == t) break;
        for (int next : box.adjacency[cur])
            if (prev[next] == -2) {
                prev[next] = cur;
                queue.push_back(next);
            }
    }
    std::vector<TreeVertex> path;
    for (int cur = t; cur != -1; cur = prev[cur])
        path.push_back(box.vertices[cur]);
    std::reverse(path.begin(), path.end());
    return path;
}

}  // namespace

TEST_CASE("parent descends to the odd-denominator neighbour") {
    CHECK(parent(TreeVertex(5, 3)) == TreeVertex(2, 1));
    CHECK(parent(TreeVertex(1, 1)) == TreeVertex(0, 1));
    CHECK(parent(TreeVertex(-5, 3)) == TreeVertex(-2, 1));
    CHECK(parent(TreeVertex(7, 1)) == TreeVertex(6, 1));
    CHECK(parent(TreeVertex(-3, 1)) == TreeVertex(-2, 1));
    CHECK(parent(TreeVertex(1, 3)) == TreeVertex(0, 1));
    CHECK_THROWS_AS(parent(TreeVertex(0, 1)), RootHasNoParentError);
}

TEST_CASE("parent strictly shrinks |p| and is adjacent") {
    for (int p = -50; p <= 50; ++p)
        for (int q = 1; q <= 49; q += 2) {
            if (!is_tree_vertex(p, q)) continue;
            TreeVertex v(p, q);
            if (v == TreeVertex(0, 1)) continue;
            TreeVertex w = parent(v);
            CHECK(abs(w.p()) < abs(v.p()));
            CHECK(abs(det(v, w)) == 1);
        }
}

TEST_CASE("path_to_root") {
    GeodesicPath path = path_to_root(TreeVertex(5, 3));
    std::vector<TreeVertex> want{{5, 3}, {2, 1}, {1, 1}, {0, 1}};
    CHECK(path.vertices == want);

    CHECK(path_to_root(TreeVertex(0, 1)).vertices ==
          std::vector<TreeVertex>{{0, 1}});
    CHECK(path_to_root(TreeVertex(1, 3)).vertices ==
          std::vector<TreeVertex>{{1, 3}, {0, 1}});
}

TEST_CASE("genus") {
    CHECK(genus(BoundarySlope(0, 1)) == 0);
    CHECK(genus(BoundarySlope(10, 3)) == 3);
    CHECK(genus(BoundarySlope(2, 1)) == 1);
}

TEST_CASE("path_between examples") {
    GeodesicPath p1 = path_between(TreeVertex(1, 3), TreeVertex(1, 1));
    CHECK(p1.vertices == std::vector<TreeVertex>{{1, 3}, {0, 1}, {1, 1}});

    TreeVertex v(7, 5);
    CHECK(path_between(v, v).vertices == std::vector<TreeVertex>{v});

    GeodesicPath p2 = path_between(TreeVertex(5, 3), TreeVertex(2, 1));
    CHECK(p2.vertices == std::vector<TreeVertex>{{5, 3}, {2, 1}});
}

TEST_CASE("path_between reverses and matches the BFS oracle") {
    TreeBox box = build_box_graph(8, 9);
    for (std::size_t i = 0; i < box.vertex_count(); i += 7)
        for (std::size_t j = 0; j < box.vertex_count(); j += 5) {
            const TreeVertex& u = box.vertices[i];
            const TreeVertex& v = box.vertices[j];
            GeodesicPath forward = path_between(u, v);
            GeodesicPath backward = path_between(v, u);
            std::reverse(backward.vertices.begin(), backward.vertices.end());
            CHECK(forward.vertices == backward.vertices);
            // Tree paths are unique, so BFS must find the same one.
            CHECK(forward.vertices == bfs_path(box, u, v));
        }
}

TEST_CASE("distance") {
    CHECK(distance(TreeVertex(5, 3), TreeVertex(0, 1)) == 3);
    CHECK(distance(TreeVertex(4, 7), TreeVertex(4, 7)) == 0);
    CHECK(distance(TreeVertex(1, 1), TreeVertex(-1, 1)) == 2);
}

TEST_CASE("neighbors") {
    std::vector<TreeVertex> around_root{{-1, 1}, {1, 1},  {-1, 3},
                                        {1, 3},  {-1, 5}, {1, 5}};
    std::sort(around_root.begin(), around_root.end());
    CHECK(neighbors(TreeVertex(0, 1), 5) == around_root);

    std::vector<TreeVertex> around_one{{0, 1}, {2, 1}, {2, 3}, {4, 3}, {4, 5}};
    std::sort(around_one.begin(), around_one.end());
    CHECK(neighbors(TreeVertex(1, 1), 5) == around_one);

    CHECK_THROWS_AS(TreeVertex(1, 0), NotTreeVertexError);
}

TEST_CASE("neighbors agree with a brute-force scan") {
    for (int p = -7; p <= 7; ++p)
        for (int q = 1; q <= 7; q += 2) {
            if (!is_tree_vertex(p, q)) continue;
            TreeVertex v(p, q);
            std::vector<TreeVertex> scan;
            for (int x = -9; x <= 9; ++x)
                for (int y = 1; y <= 9; y += 2) {
                    if (!is_tree_vertex(x, y)) continue;
                    TreeVertex w(x, y);
                    if (abs(det(v, w)) == 1) scan.push_back(w);
                }
            std::sort(scan.begin(), scan.end());
            CHECK(neighbors(v, 9) == scan);
        }
}

TEST_CASE("neighbors contains the parent; all others are children") {
    for (int p = -9; p <= 9; ++p)
        for (int q = 1; q <= 9; q += 2) {
            if (!is_tree_vertex(p, q)) continue;
            TreeVertex v(p, q);
            bool root = v == TreeVertex(0, 1);
            for (const TreeVertex& w : neighbors(v, 25)) {
                if (!root && w == parent(v)) continue;
                CHECK(parent(w) == v);
            }
            if (!root) {
                TreeVertex pv = parent(v);
                auto list = neighbors(v, 25);
                bool fits = abs(pv.p()) <= 25 && pv.q() <= 25;
                CHECK(fits == (std::find(list.begin(), list.end(), pv) !=
                               list.end()));
            }
        }
}

TEST_CASE("classify") {
    CHECK(classify(TreeVertex(5, 3)) ==
          BranchClass{TreeVertex(2, 1), BranchLabel::Longitudinal});
    CHECK(classify(TreeVertex(1, 3)) ==
          BranchClass{TreeVertex(0, 1), BranchLabel::Meridional});
    CHECK(classify(TreeVertex(4, 5)) ==
          BranchClass{TreeVertex(1, 1), BranchLabel::Central});
    // Anchors classify as themselves.
    CHECK(classify(TreeVertex(0, 1)).label == BranchLabel::Meridional);
    CHECK(classify(TreeVertex(1, 1)) ==
          BranchClass{TreeVertex(1, 1), BranchLabel::Central});
    CHECK(classify(TreeVertex(-1, 1)) ==
          BranchClass{TreeVertex(-1, 1), BranchLabel::Central});
    CHECK(classify(TreeVertex(2, 1)) ==
          BranchClass{TreeVertex(2, 1), BranchLabel::Longitudinal});
    CHECK(classify(TreeVertex(-2, 1)) ==
          BranchClass{TreeVertex(-2, 1), BranchLabel::Longitudinal});
    // The sign of p picks the anchor side.
    CHECK(classify(TreeVertex(-5, 3)).anchor == TreeVertex(-2, 1));
    CHECK(classify(TreeVertex(-4, 5)).anchor == TreeVertex(-1, 1));
}

TEST_CASE("box graph basics") {
    TreeBox tiny = build_box_graph(1, 1);
    CHECK(tiny.vertex_count() == 3);
    CHECK(tiny.edge_count() == 2);
    std::vector<TreeVertex> want{{-1, 1}, {0, 1}, {1, 1}};
    std::sort(want.begin(), want.end());
    CHECK(tiny.vertices == want);
    // det(1/1, -1/1) = 2: the two units are not adjacent.
    int i = tiny.index.at(TreeVertex(1, 1));
    int j = tiny.index.at(TreeVertex(-1, 1));
    CHECK(std::find(tiny.adjacency[i].begin(), tiny.adjacency[i].end(), j) ==
          tiny.adjacency[i].end());

    TreeBox box = build_box_graph(2, 3);
    CHECK(box.root_distance[box.index.at(TreeVertex(1, 3))] == 1);
    CHECK(box.root_distance[box.index.at(TreeVertex(2, 3))] == 2);

    CHECK_THROWS_AS(build_box_graph(0, 1), InvalidBoundsError);
    CHECK_THROWS_AS(build_box_graph(3, 4), InvalidBoundsError);
    CHECK_THROWS_AS(build_box_graph(100, 101, 10), BoundsTooLargeError);
}

TEST_CASE("verify_tree") {
    CHECK(verify_tree(build_box_graph(1, 1)).all());
    CHECK(verify_tree(build_box_graph(10, 9)).all());
    CHECK(verify_tree(build_box_graph(20, 21)).all());
}

TEST_CASE("descent distance equals BFS distance in a box") {
    TreeBox box = build_box_graph(12, 13);
    for (std::size_t i = 0; i < box.vertex_count(); ++i) {
        CAPTURE(box.vertices[i]);
        CHECK(Int(path_to_root(box.vertices[i]).length()) ==
              box.root_distance[i]);
    }
}

TEST_CASE("|p| strictly increases root-outward along rooted paths") {
    TreeBox box = build_box_graph(12, 13);
    for (const TreeVertex& v : box.vertices) {
        GeodesicPath path = path_to_root(v);
        for (std::size_t k = 0; k + 1 < path.vertices.size(); ++k)
            CHECK(abs(path.vertices[k].p()) > abs(path.vertices[k + 1].p()));
    }
}

TEST_CASE("threshold classification equals nearest anchor by distance") {
    TreeBox box = build_box_graph(10, 11);
    const std::vector<TreeVertex> anchors = {
        {0, 1}, {1, 1}, {-1, 1}, {2, 1}, {-2, 1}};
    for (const TreeVertex& v : box.vertices) {
        Int best = -1;
        std::size_t arg = 0;
        bool tie = false;
        for (std::size_t a = 0; a < anchors.size(); ++a) {
            Int d = distance(v, anchors[a]);
            if (best < 0 || d < best) {
                best = d;
                arg = a;
                tie = false;
            } else if (d == best) {
                tie = true;
            }
        }
        CAPTURE(v);
        CHECK_FALSE(tie);
        CHECK(anchors[arg] == classify(v).anchor);
    }
}

TEST_CASE("edges pair slopes of intersection number two") {
    TreeBox box = build_box_graph(9, 9);
    for (const auto& [i, j] : box.edges)
        CHECK(intersection_number(slope_of_vertex(box.vertices[i]),
                                  slope_of_vertex(box.vertices[j])) == 2);
}

TEST_CASE("mirror symmetry of the path metric") {
    std::vector<TreeVertex> sample{{1, 3}, {5, 3}, {4, 7},  {7, 5},
                                   {2, 9}, {9, 1}, {11, 7}, {0, 1}};
    for (const TreeVertex& u : sample)
        for (const TreeVertex& v : sample) {
            TreeVertex mu(-u.p(), u.q()), mv(-v.p(), v.q());
            CHECK(distance(u, v) == distance(mu, mv));
        }
}

TEST_CASE("splicing: distances add along a geodesic") {
    std::vector<TreeVertex> sample{{7, 5}, {-4, 9}, {11, 3}, {1, 9}, {8, 5}};
    for (const TreeVertex& u : sample)
        for (const TreeVertex& v : sample) {
            GeodesicPath path = path_between(u, v);
            for (const TreeVertex& w : path.vertices)
                CHECK(distance(u, v) == distance(u, w) + distance(w, v));
        }
}

TEST_CASE("geodesics have unit-determinant steps and no repeats") {
    std::vector<TreeVertex> sample{{7, 5}, {-4, 9}, {11, 3}, {1, 9}, {29, 17}};
    for (const TreeVertex& u : sample)
        for (const TreeVertex& v : sample) {
            GeodesicPath path = path_between(u, v);
            std::set<TreeVertex> seen;
            for (const TreeVertex& w : path.vertices)
                CHECK(seen.insert(w).second);
            for (std::size_t k = 0; k + 1 < path.vertices.size(); ++k)
                CHECK(abs(det(path.vertices[k], path.vertices[k + 1])) == 1);
        }
}
