#pragma once

#include <optional>
#include <vector>

#include "mbtree/slope.hpp"

namespace mbt {

// Action of a once-punctured torus bundle's monodromy on first homology:
// an SL(2,Z) matrix.
class Monodromy {
public:
    Monodromy(Int a, Int b, Int c, Int d);

    static Monodromy identity() { return {1, 0, 0, 1}; }

    const Int& a() const { return a_; }
    const Int& b() const { return b_; }
    const Int& c() const { return c_; }
    const Int& d() const { return d_; }

    Int trace() const { return a_ + d_; }
    bool is_identity_mod_2() const;
    bool is_plus_minus_identity() const;

    friend bool operator==(const Monodromy&, const Monodromy&) = default;

private:
    Int a_, b_, c_, d_;
};

std::ostream& operator<<(std::ostream& os, const Monodromy& m);

// The binary quadratic form A x^2 + B xy + C y^2 whose values at primitive
// (x,y) decide disc existence: (A,B,C) = (-c, a-d, b), disc = trace^2 - 4.
struct DiscForm {
    Int A;
    Int B;
    Int C;
    Int disc;

    Int eval(const Int& x, const Int& y) const {
        return A * x * x + B * x * y + C * y * y;
    }

    friend bool operator==(const DiscForm&, const DiscForm&) = default;
};

struct Witness {
    Curve pair;   // canonical sign: y > 0, or y = 0 and x = 1
    Int value;    // in {0, 1, -1}

    friend bool operator==(const Witness&, const Witness&) = default;
};

enum class VerdictKind { Exists, NotExists, Unknown };
enum class DecisionMethod {
    BruteForce,
    Eigenvector,
    Parity,
    DefiniteEnumeration,
    RiverCycle,
};

const char* to_string(VerdictKind kind);
const char* to_string(DecisionMethod method);

// Exact answer to quadrilateral-disc existence. Unknown is produced only by
// the height-limited brute-force mode; decide() never returns it.
struct DiscVerdict {
    VerdictKind kind;
    DecisionMethod method;
    std::optional<Witness> witness;       // set when kind == Exists
    std::optional<Int> search_height;     // set when kind == Unknown
};

// (ax+by)y - (cx+dy)x at a primitive pair; equals form_of(A).eval(x,y).
Int disc_value(const Monodromy& m, const Int& x, const Int& y);

DiscForm form_of(const Monodromy& m);

// Scans primitive pairs with max(|x|,|y|) <= height in the canonical sign
// class, ordered by (y, x); returns the first with value in {0,1,-1}.
std::optional<Witness> brute_search(const Monodromy& m, const Int& height);

// True iff a,d odd, b,c even and |trace| != 2. Then the form is even-valued
// and 0 would need an integer eigenvalue, which |trace| != 2 excludes.
bool no_disc_criterion(const Monodromy& m);

// Exact, terminating decision. Case split on t = trace:
//   |t| <= 1  definite form, finite enumeration of |value| <= 1;
//   |t|  = 2  integer eigenvector gives value 0;
//   |t| >= 3  disc = t^2-4 is positive nonsquare, so 0 is never hit and
//             representability of +-1 is read off the river of the form
//             (parity shortcut when the matrix is I mod 2).
// Exists verdicts carry the (y,x)-lexicographically smallest witness.
DiscVerdict decide(const Monodromy& m);

// P * A * P^{-1}, exact.
Monodromy conjugate(const Monodromy& m, const UnimodularMatrix& p);

struct ScanReport {
    Int entry_bound;
    long long total = 0;
    long long exists_count = 0;
    long long not_exists_count = 0;
    long long criterion_count = 0;
    std::vector<Monodromy> disagreements;  // criterion true, decide != NotExists
};

// Enumerates every det-1 matrix with entries in [-bound, bound], runs decide
// and no_disc_criterion on each. Throws BoundsTooLargeError above the cap.
ScanReport scan_matrices(const Int& entry_bound, const Int& max_bound = 64);

namespace detail {
// One full period of the river of an indefinite form with positive nonsquare
// discriminant: the set of values adjacent to the river, which contains
// every primitively represented value m with |m| < sqrt(disc)/2. Exposed for
// tests; steps is the number of walk states visited.
struct RiverScan {
    bool represents_plus_one = false;
    bool represents_minus_one = false;
    long long steps = 0;
};
RiverScan scan_river(const DiscForm& form);
}  // namespace detail

}  // namespace mbt
