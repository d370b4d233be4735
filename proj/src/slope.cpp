#include "mbtree/slope.hpp"

#include <sstream>

namespace mbt {

namespace {

std::string pair_text(const Int& a, const Int& b) {
    std::ostringstream os;
    os << "(" << a << "," << b << ")";
    return os.str();
}

}  // namespace

std::ostream& operator<<(std::ostream& os, const Curve& c) {
    return os << "(" << c.x << "," << c.y << ")";
}

FareyVertex::FareyVertex(Int p, Int q) : p_(std::move(p)), q_(std::move(q)) {
    if (p_ == 0 && q_ == 0) throw ZeroCurveError();
    if (gcd(abs(p_), abs(q_)) != 1)
        throw NotReducedError("vertex " + pair_text(p_, q_) + " is not reduced");
    if (q_ < 0 || (q_ == 0 && p_ < 0)) {
        p_ = -p_;
        q_ = -q_;
    }
}

std::ostream& operator<<(std::ostream& os, const FareyVertex& v) {
    return os << v.p() << "/" << v.q();
}

TreeVertex::TreeVertex(Int p, Int q) : p_(std::move(p)), q_(std::move(q)) {
    FareyVertex f(p_, q_);  // validates and normalises
    p_ = f.p();
    q_ = f.q();
    if ((q_ & 1) == 0)
        throw NotTreeVertexError("vertex " + pair_text(p_, q_) +
                                 " has even denominator and is not in the tree");
}

std::ostream& operator<<(std::ostream& os, const TreeVertex& v) {
    return os << v.p() << "/" << v.q();
}

BoundarySlope::BoundarySlope(Int u, Int v) : u_(std::move(u)), v_(std::move(v)) {
    if (u_ == 0 && v_ == 0) throw ZeroCurveError();
    if (gcd(abs(u_), abs(v_)) != 1)
        throw NotReducedError("slope " + pair_text(u_, v_) + " is not reduced");
    if (v_ < 0) {
        u_ = -u_;
        v_ = -v_;
    }
    if ((u_ & 1) != 0)
        throw NotOneSidedSlopeError("slope " + pair_text(u_, v_) +
                                    " has odd first coordinate and bounds an "
                                    "orientable surface");
}

std::ostream& operator<<(std::ostream& os, const BoundarySlope& s) {
    return os << s.u() << "/" << s.v();
}

UnimodularMatrix::UnimodularMatrix(Int a, Int b, Int c, Int d)
    : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)), d_(std::move(d)) {
    if (a_ * d_ - b_ * c_ != 1)
        throw NotUnimodularError("matrix [[" + a_.str() + "," + b_.str() +
                                 "],[" + c_.str() + "," + d_.str() +
                                 "]] does not have determinant 1");
}

std::ostream& operator<<(std::ostream& os, const UnimodularMatrix& m) {
    return os << "[[" << m.a() << "," << m.b() << "],[" << m.c() << ","
              << m.d() << "]]";
}

BoundarySlope reduce_slope(const Int& u, const Int& v) {
    if (u == 0 && v == 0) throw ZeroCurveError();
    Int g = gcd(abs(u), abs(v));
    Int ru = u / g;
    Int rv = v / g;
    if (rv < 0 || (rv == 0 && ru < 0)) {
        ru = -ru;
        rv = -rv;
    }
    if ((ru & 1) != 0)
        throw NotOneSidedSlopeError("slope " + pair_text(u, v) +
                                    " reduces to " + pair_text(ru, rv) +
                                    " with odd first coordinate");
    return BoundarySlope(ru, rv);
}

TreeVertex vertex_of_slope(const BoundarySlope& s) {
    return TreeVertex(s.u() / 2, s.v());
}

BoundarySlope slope_of_vertex(const TreeVertex& v) {
    return BoundarySlope(2 * v.p(), v.q());
}

Int det(const FareyVertex& x, const FareyVertex& y) {
    return x.p() * y.q() - y.p() * x.q();
}

Int intersection_number(const BoundarySlope& s1, const BoundarySlope& s2) {
    return abs(s1.u() * s2.v() - s2.u() * s1.v());
}

bool is_tree_vertex(const Int& p, const Int& q) {
    if (p == 0 && q == 0) return false;
    if (gcd(abs(p), abs(q)) != 1) return false;
    return (abs(q) & 1) == 1;
}

std::pair<FareyVertex, FareyVertex> farey_parents(const FareyVertex& v) {
    if (v == FareyVertex(0, 1) || v.is_infinity())
        throw NoParentsError("vertex " + pair_text(v.p(), v.q()) +
                             " spans no largest ideal triangle");

    // Mirror symmetry: compute for |p|/q and negate the numerators after.
    bool mirrored = v.p() < 0;
    Int p = abs(v.p());
    Int q = v.q();

    Int p1, q1, p2, q2;
    if (q == 1) {
        // Integer vertices n/1 sit in the triangle {(n-1)/1, 1/0, n/1}.
        p1 = p - 1;
        q1 = 1;
        p2 = 1;
        q2 = 0;
    } else {
        // Unique solution of p*y - q*x = 1 with 0 < y < q gives the smaller
        // neighbour; the larger one is the complement.
        ExtendedGcd e = extended_gcd(p, q);  // p*e.x + q*e.y = 1
        Int y = e.x % q;
        if (y <= 0) y += q;
        Int x = (p * y - 1) / q;
        p1 = x;
        q1 = y;
        p2 = p - x;
        q2 = q - y;
    }
    if (mirrored) {
        p1 = -p1;
        p2 = -p2;
    }
    return {FareyVertex(p1, q1), FareyVertex(p2, q2)};
}

Curve apply_matrix(const UnimodularMatrix& m, const Curve& c) {
    if (c.x == 0 && c.y == 0) throw ZeroCurveError();
    if (gcd(abs(c.x), abs(c.y)) != 1)
        throw NotReducedError("curve " + pair_text(c.x, c.y) + " is not reduced");
    return {m.a() * c.x + m.b() * c.y, m.c() * c.x + m.d() * c.y};
}

UnimodularMatrix matrix_sending_to_meridian(const Curve& c) {
    if (c.x == 0 && c.y == 0) throw ZeroCurveError();
    if (gcd(abs(c.x), abs(c.y)) != 1)
        throw NotReducedError("curve " + pair_text(c.x, c.y) + " is not reduced");
    // Rows (y,-x) and (s,t) with s*x + t*y = 1: the first kills the curve,
    // the second completes it to determinant s*x + t*y = 1.
    ExtendedGcd e = extended_gcd(c.x, c.y);
    return UnimodularMatrix(c.y, -c.x, e.x, e.y);
}

}  // namespace mbt
