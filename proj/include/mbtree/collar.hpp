#pragma once

#include <vector>

#include "mbtree/tree.hpp"

namespace mbt {

// One Moebius band, described as the componentwise difference of two
// consecutive boundary slopes along a geodesic. Both components are even.
struct BandDescriptor {
    Int a;
    Int b;

    friend bool operator==(const BandDescriptor&, const BandDescriptor&) = default;
};

std::ostream& operator<<(std::ostream& os, const BandDescriptor& b);

// Concentric decomposition of the region between two curves, reported in the
// coordinates where the inner curve is the meridian (0,1). The normalizer
// pulls results back: normalizer * inner = (0,1).
struct RegionDecomposition {
    Curve inner;
    Curve outer;
    UnimodularMatrix normalizer;
    std::vector<BoundarySlope> slopes;  // (0,1) first, normalized outer last
    std::vector<BandDescriptor> bands;  // consecutive differences
    Int genus;
};

// Slope of the parent vertex; drops the genus by exactly one. The result is
// unique even though the compressed band need not be. Throws
// BoundaryIncompressibleError for (0,1).
BoundarySlope compress(const BoundarySlope& s);

// Slopes of all children of the slope's vertex with max(|p|,q) <= bound.
// compress of every result returns s.
std::vector<BoundarySlope> add_band(const BoundarySlope& s, const Int& bound);

// Consecutive differences of the slope sequence along the root path, listed
// root-outward; (0,1) plus the telescoping sum reconstructs s.
std::vector<BandDescriptor> band_decomposition(const BoundarySlope& s);

// Both curves must be primitive and nonzero with even intersection number
// (NotZ2CompatibleError otherwise). The normalized outer slope is made
// canonical in the residual meridian-stabilizer freedom, so the slope
// sequence depends only on the pair of curves and is unchanged by a
// simultaneous unimodular change of both.
RegionDecomposition region_decomposition(const Curve& inner, const Curve& outer);

}  // namespace mbt
