#include "mbtree/export.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <sstream>

#include <nlohmann/json.hpp>

#include "mbtree/collar.hpp"

namespace mbt {

namespace {

constexpr int kMaxDepth = 16;

struct Graph {
    std::vector<TreeVertex> vertices;          // canonical order
    std::vector<std::pair<int, int>> edges;    // index pairs, i < j, sorted
};

void enumerate_mediants(const Int& lp, const Int& lq, const Int& rp,
                        const Int& rq, int depth_left,
                        std::vector<std::pair<Int, Int>>& out) {
    if (depth_left == 0) return;
    Int mp = lp + rp;
    Int mq = lq + rq;
    out.emplace_back(mp, mq);
    enumerate_mediants(lp, lq, mp, mq, depth_left - 1, out);
    enumerate_mediants(mp, mq, rp, rq, depth_left - 1, out);
}

Graph depth_graph(const Int& depth) {
    if (depth < 0) throw InvalidBoundsError("depth must be >= 0");
    if (depth > kMaxDepth)
        throw BoundsTooLargeError("depth " + depth.str() +
                                  " exceeds the cap " +
                                  std::to_string(kMaxDepth));
    int d = depth.convert_to<int>();

    std::vector<std::pair<Int, Int>> raw{{0, 1}};
    enumerate_mediants(0, 1, 1, 0, d, raw);    // right half of the disc
    enumerate_mediants(-1, 0, 0, 1, d, raw);   // mirror half

    Graph g;
    for (const auto& [p, q] : raw)
        if ((q & 1) == 1) g.vertices.emplace_back(p, q);
    std::sort(g.vertices.begin(), g.vertices.end());

    std::map<TreeVertex, int> index;
    for (std::size_t i = 0; i < g.vertices.size(); ++i)
        index.emplace(g.vertices[i], static_cast<int>(i));

    // Every tree edge joins a vertex to its parent, and parents have
    // strictly smaller mediant depth, so linking upward is complete.
    const TreeVertex root(0, 1);
    for (std::size_t i = 0; i < g.vertices.size(); ++i) {
        if (g.vertices[i] == root) continue;
        int j = index.at(parent(g.vertices[i]));
        g.edges.emplace_back(std::min<int>(i, j), std::max<int>(i, j));
    }
    std::sort(g.edges.begin(), g.edges.end());
    return g;
}

Graph box_graph(const Int& p_bound, const Int& q_bound) {
    TreeBox box = build_box_graph(p_bound, q_bound, 500'000);
    return {box.vertices, box.edges};
}

std::string vertex_label(const TreeVertex& v) {
    std::ostringstream os;
    os << v.p() << "/" << v.q();
    return os.str();
}

std::string to_dot(const Graph& g) {
    std::ostringstream os;
    os << "graph moebius_band_tree {\n";
    os << "  node [shape=circle];\n";
    for (const TreeVertex& v : g.vertices)
        os << "  \"" << vertex_label(v) << "\";\n";
    for (const auto& [i, j] : g.edges)
        os << "  \"" << vertex_label(g.vertices[i]) << "\" -- \""
           << vertex_label(g.vertices[j]) << "\";\n";
    os << "}\n";
    return os.str();
}

std::string to_json(const Graph& g) {
    nlohmann::ordered_json doc;
    doc["vertices"] = nlohmann::ordered_json::array();
    for (const TreeVertex& v : g.vertices) {
        nlohmann::ordered_json jv;
        jv["p"] = v.p().convert_to<long long>();
        jv["q"] = v.q().convert_to<long long>();
        jv["genus"] = genus(slope_of_vertex(v)).convert_to<long long>();
        doc["vertices"].push_back(jv);
    }
    doc["edges"] = nlohmann::ordered_json::array();
    for (const auto& [i, j] : g.edges)
        doc["edges"].push_back(nlohmann::ordered_json::array({i, j}));
    return doc.dump(2) + "\n";
}

std::string fixed(double value) {
    char buffer[64];
    std::snprintf(buffer, sizeof(buffer), "%.4f", value + 0.0);  // kill -0
    return buffer;
}

// Boundary angle of the disc model: 2*atan(p/q), rotated so 0/1 sits at the
// bottom and the excluded vertex 1/0 would sit at the top.
double disc_angle(const TreeVertex& v) {
    double p = v.p().convert_to<double>();
    double q = v.q().convert_to<double>();
    return 2.0 * std::atan2(p, q) - std::acos(-1.0) / 2.0;
}

std::string to_svg(const Graph& g) {
    const double radius = 280.0;
    std::ostringstream os;
    os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"-330 -330 "
          "660 660\">\n";
    os << "  <circle cx=\"0\" cy=\"0\" r=\"" << fixed(radius)
       << "\" fill=\"none\" stroke=\"#cccccc\"/>\n";

    std::vector<std::pair<double, double>> points;  // SVG coords, y down
    points.reserve(g.vertices.size());
    for (const TreeVertex& v : g.vertices) {
        double angle = disc_angle(v);
        points.emplace_back(radius * std::cos(angle),
                            -radius * std::sin(angle));
    }

    for (const auto& [i, j] : g.edges) {
        auto [ux, uy] = points[i];
        auto [vx, vy] = points[j];
        // Circle orthogonal to the boundary through both ideal points:
        // solve u.c = v.c = R^2 (scaled disc).
        double cross = ux * vy - uy * vx;
        if (std::abs(cross) < 1e-9 * radius * radius) {
            os << "  <line x1=\"" << fixed(ux) << "\" y1=\"" << fixed(uy)
               << "\" x2=\"" << fixed(vx) << "\" y2=\"" << fixed(vy)
               << "\" stroke=\"#1f4e99\" fill=\"none\"/>\n";
            continue;
        }
        double r2 = radius * radius;
        double cx = r2 * (vy - uy) / cross;
        double cy = r2 * (ux - vx) / cross;
        double arc_r = std::sqrt(cx * cx + cy * cy - r2);
        // The geodesic is the minor arc; pick the sweep that follows the
        // rotation direction from u to v around the arc centre.
        int sweep = ((ux - cx) * (vy - cy) - (uy - cy) * (vx - cx)) > 0 ? 1 : 0;
        os << "  <path d=\"M " << fixed(ux) << " " << fixed(uy) << " A "
           << fixed(arc_r) << " " << fixed(arc_r) << " 0 0 " << sweep << " "
           << fixed(vx) << " " << fixed(vy)
           << "\" stroke=\"#1f4e99\" fill=\"none\"/>\n";
    }

    for (std::size_t i = 0; i < g.vertices.size(); ++i) {
        os << "  <circle cx=\"" << fixed(points[i].first) << "\" cy=\""
           << fixed(points[i].second)
           << "\" r=\"2.5\" fill=\"#222222\"/>\n";
        double angle = disc_angle(g.vertices[i]);
        double lx = (radius + 22.0) * std::cos(angle);
        double ly = -(radius + 22.0) * std::sin(angle);
        os << "  <text x=\"" << fixed(lx) << "\" y=\"" << fixed(ly)
           << "\" font-size=\"10\" text-anchor=\"middle\" "
              "dominant-baseline=\"middle\">"
           << vertex_label(g.vertices[i]) << "</text>\n";
    }
    os << "</svg>\n";
    return os.str();
}

}  // namespace

std::string export_tree(const RenderSpec& spec) {
    Graph g;
    if (spec.depth) {
        g = depth_graph(*spec.depth);
    } else if (spec.p_bound && spec.q_bound) {
        g = box_graph(*spec.p_bound, *spec.q_bound);
    } else {
        throw InvalidBoundsError(
            "render spec needs either a depth or both box bounds");
    }

    switch (spec.format) {
        case ExportFormat::Dot: return to_dot(g);
        case ExportFormat::Json: return to_json(g);
        case ExportFormat::Svg: return to_svg(g);
    }
    throw std::logic_error("unreachable export format");
}

}  // namespace mbt
