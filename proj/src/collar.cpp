#include "mbtree/collar.hpp"

#include <algorithm>
#include <sstream>

namespace mbt {

std::ostream& operator<<(std::ostream& os, const BandDescriptor& b) {
    return os << "(" << b.a << "," << b.b << ")";
}

BoundarySlope compress(const BoundarySlope& s) {
    if (s == BoundarySlope(0, 1)) throw BoundaryIncompressibleError();
    return slope_of_vertex(parent(vertex_of_slope(s)));
}

std::vector<BoundarySlope> add_band(const BoundarySlope& s, const Int& bound) {
    TreeVertex v = vertex_of_slope(s);
    std::vector<BoundarySlope> out;
    bool is_root = v == TreeVertex(0, 1);
    for (const TreeVertex& w : neighbors(v, bound)) {
        if (!is_root && w == parent(v)) continue;
        out.push_back(slope_of_vertex(w));
    }
    return out;
}

std::vector<BandDescriptor> band_decomposition(const BoundarySlope& s) {
    GeodesicPath path = path_to_root(vertex_of_slope(s));
    std::vector<BandDescriptor> bands;
    // Root-outward: walk the root path backwards.
    for (std::size_t i = path.vertices.size() - 1; i-- > 0;) {
        BoundarySlope outer = slope_of_vertex(path.vertices[i]);
        BoundarySlope inner = slope_of_vertex(path.vertices[i + 1]);
        bands.push_back({outer.u() - inner.u(), outer.v() - inner.v()});
    }
    return bands;
}

RegionDecomposition region_decomposition(const Curve& inner, const Curve& outer) {
    UnimodularMatrix m = matrix_sending_to_meridian(inner);
    Curve moved = apply_matrix(m, outer);

    // After normalising the inner curve to (0,1), the intersection number of
    // the pair is |first coordinate of the moved outer curve|.
    if ((moved.x & 1) != 0) {
        std::ostringstream os;
        os << "curves " << inner << " and " << outer
           << " have odd intersection number "
           << abs(inner.x * outer.y - outer.x * inner.y);
        throw NotZ2CompatibleError(os.str());
    }

    // Matrices sending inner to (0,1) differ by the meridian stabilizer
    // [[1,0],[k,1]], which shifts the second coordinate by k*first. Reduce it
    // into (0,|first|) to make the result independent of the Euclid branch
    // taken inside matrix_sending_to_meridian.
    if (moved.x != 0) {
        Int y = moved.y % abs(moved.x);
        if (y <= 0) y += abs(moved.x);
        Int k = (y - moved.y) / moved.x;
        m = UnimodularMatrix(1, 0, k, 1) * m;
        moved = {moved.x, y};
    } else if (moved.y < 0) {
        moved = {moved.x, -moved.y};  // outer = -inner as a vector
    }

    RegionDecomposition out{inner, outer, m, {}, {}, 0};
    BoundarySlope target(moved.x, moved.y);
    GeodesicPath path = path_between(TreeVertex(0, 1), vertex_of_slope(target));
    for (const TreeVertex& v : path.vertices)
        out.slopes.push_back(slope_of_vertex(v));
    for (std::size_t i = 0; i + 1 < out.slopes.size(); ++i)
        out.bands.push_back({out.slopes[i + 1].u() - out.slopes[i].u(),
                             out.slopes[i + 1].v() - out.slopes[i].v()});
    out.genus = Int(path.length());
    return out;
}

}  // namespace mbt
