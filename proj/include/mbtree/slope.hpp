#pragma once

#include <compare>
#include <ostream>
#include <utility>

#include "mbtree/errors.hpp"
#include "mbtree/integer.hpp"

namespace mbt {

// A primitive integer pair (x,y), no sign normalisation. Used for raw curve
// classes on the torus before any slope interpretation is attached.
struct Curve {
    Int x;
    Int y;

    friend bool operator==(const Curve&, const Curve&) = default;
};

std::ostream& operator<<(std::ostream& os, const Curve& c);

// Reduced fraction p/q with q > 0, or the single vertex 1/0 (q = 0, p = 1).
// (p,q) and (-p,-q) denote the same vertex; the constructor folds the sign
// into the numerator. Non-coprime input is rejected, not reduced.
class FareyVertex {
public:
    FareyVertex(Int p, Int q);

    const Int& p() const { return p_; }
    const Int& q() const { return q_; }

    bool is_infinity() const { return q_ == 0; }

    friend bool operator==(const FareyVertex& a, const FareyVertex& b) {
        return a.p_ == b.p_ && a.q_ == b.q_;
    }
    // Canonical order: (q, p) lexicographic.
    friend std::strong_ordering operator<=>(const FareyVertex& a,
                                            const FareyVertex& b) {
        if (a.q_ < b.q_) return std::strong_ordering::less;
        if (b.q_ < a.q_) return std::strong_ordering::greater;
        if (a.p_ < b.p_) return std::strong_ordering::less;
        if (b.p_ < a.p_) return std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }

private:
    Int p_;
    Int q_;
};

std::ostream& operator<<(std::ostream& os, const FareyVertex& v);

// Vertex of the Moebius band tree: reduced p/q with q odd, q >= 1.
class TreeVertex {
public:
    TreeVertex(Int p, Int q);

    const Int& p() const { return p_; }
    const Int& q() const { return q_; }

    operator FareyVertex() const { return FareyVertex(p_, q_); }

    friend bool operator==(const TreeVertex& a, const TreeVertex& b) {
        return a.p_ == b.p_ && a.q_ == b.q_;
    }
    friend std::strong_ordering operator<=>(const TreeVertex& a,
                                            const TreeVertex& b) {
        if (a.q_ < b.q_) return std::strong_ordering::less;
        if (b.q_ < a.q_) return std::strong_ordering::greater;
        if (a.p_ < b.p_) return std::strong_ordering::less;
        if (b.p_ < a.p_) return std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }

private:
    Int p_;
    Int q_;
};

std::ostream& operator<<(std::ostream& os, const TreeVertex& v);

// Boundary slope (u,v) of a one-sided surface: u even, v odd positive,
// gcd(|u|,v) = 1. Bijective with TreeVertex via (u,v) <-> (u/2, v).
class BoundarySlope {
public:
    BoundarySlope(Int u, Int v);

    const Int& u() const { return u_; }
    const Int& v() const { return v_; }

    Curve curve() const { return {u_, v_}; }

    friend bool operator==(const BoundarySlope& a, const BoundarySlope& b) {
        return a.u_ == b.u_ && a.v_ == b.v_;
    }
    friend std::strong_ordering operator<=>(const BoundarySlope& a,
                                            const BoundarySlope& b) {
        if (a.v_ < b.v_) return std::strong_ordering::less;
        if (b.v_ < a.v_) return std::strong_ordering::greater;
        if (a.u_ < b.u_) return std::strong_ordering::less;
        if (b.u_ < a.u_) return std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }

private:
    Int u_;
    Int v_;
};

std::ostream& operator<<(std::ostream& os, const BoundarySlope& s);

// 2x2 integer matrix of determinant exactly 1.
class UnimodularMatrix {
public:
    UnimodularMatrix(Int a, Int b, Int c, Int d);

    static UnimodularMatrix identity() { return {1, 0, 0, 1}; }

    const Int& a() const { return a_; }
    const Int& b() const { return b_; }
    const Int& c() const { return c_; }
    const Int& d() const { return d_; }

    UnimodularMatrix inverse() const { return {d_, -b_, -c_, a_}; }

    friend UnimodularMatrix operator*(const UnimodularMatrix& m,
                                      const UnimodularMatrix& n) {
        return {m.a_ * n.a_ + m.b_ * n.c_, m.a_ * n.b_ + m.b_ * n.d_,
                m.c_ * n.a_ + m.d_ * n.c_, m.c_ * n.b_ + m.d_ * n.d_};
    }

    friend bool operator==(const UnimodularMatrix&,
                           const UnimodularMatrix&) = default;

private:
    Int a_, b_, c_, d_;
};

std::ostream& operator<<(std::ostream& os, const UnimodularMatrix& m);

// Divides out the gcd and normalises the sign so the second coordinate is
// positive. Throws ZeroCurveError for (0,0) and NotOneSidedSlopeError when
// the reduced first coordinate is odd (such a slope bounds an orientable
// surface, not a vertex of the tree).
BoundarySlope reduce_slope(const Int& u, const Int& v);

TreeVertex vertex_of_slope(const BoundarySlope& s);
BoundarySlope slope_of_vertex(const TreeVertex& v);

// p_x*q_y - p_y*q_x.
Int det(const FareyVertex& x, const FareyVertex& y);

// |u1*v2 - u2*v1| of the two slopes; 2 exactly when the vertices span an
// edge of the tree.
Int intersection_number(const BoundarySlope& s1, const BoundarySlope& s2);

// True iff (p,q) names a vertex of the tree: coprime with odd denominator
// after sign normalisation. Never throws.
bool is_tree_vertex(const Int& p, const Int& q);

// The two vertices of the unique largest ideal triangle containing v in the
// Farey tessellation (its Stern-Brocot parents). For positive v they come
// back as (smaller, larger); negative vertices mirror the positive case.
// Throws NoParentsError for 0/1 and 1/0.
std::pair<FareyVertex, FareyVertex> farey_parents(const FareyVertex& v);

// Matrix-vector product. The input must be primitive; unimodularity keeps
// the output primitive. No sign normalisation is applied.
Curve apply_matrix(const UnimodularMatrix& m, const Curve& c);

// A determinant-1 matrix taking the given primitive curve to the meridian
// (0,1), built with extended Euclid. Deterministic.
UnimodularMatrix matrix_sending_to_meridian(const Curve& c);

}  // namespace mbt
