#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace mbt {

// All arithmetic in the library is exact. cpp_int never overflows, so the
// operations below cannot silently wrap.
using Int = boost::multiprecision::cpp_int;

inline Int abs(const Int& a) { return boost::multiprecision::abs(a); }

// gcd(0,0) = 0 by convention.
inline Int gcd(const Int& a, const Int& b) {
    return boost::multiprecision::gcd(a, b);
}

// Floor square root of a nonnegative integer.
inline Int isqrt(const Int& a) { return boost::multiprecision::sqrt(a); }

inline int sign(const Int& a) { return a.sign(); }

struct ExtendedGcd {
    Int g;  // gcd(a, b), nonnegative
    Int x;  // a*x + b*y = g
    Int y;
};

// Classic recursive extended Euclid, iterative form.
inline ExtendedGcd extended_gcd(Int a, Int b) {
    Int x0 = 1, y0 = 0;
    Int x1 = 0, y1 = 1;
    bool neg_a = a < 0, neg_b = b < 0;
    if (neg_a) a = -a;
    if (neg_b) b = -b;
    while (b != 0) {
        Int q = a / b;
        Int r = a - q * b;
        a = b;
        b = r;
        Int x2 = x0 - q * x1;
        Int y2 = y0 - q * y1;
        x0 = x1;
        x1 = x2;
        y0 = y1;
        y1 = y2;
    }
    if (neg_a) x0 = -x0;
    if (neg_b) y0 = -y0;
    return {a, x0, y0};
}

}  // namespace mbt
