#include "mbtree/bundle.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <sstream>

namespace mbt {

namespace {

std::string matrix_text(const Int& a, const Int& b, const Int& c, const Int& d) {
    std::ostringstream os;
    os << "[[" << a << "," << b << "],[" << c << "," << d << "]]";
    return os.str();
}

bool lex_less(const Witness& lhs, const Witness& rhs) {
    if (lhs.pair.y != rhs.pair.y) return lhs.pair.y < rhs.pair.y;
    return lhs.pair.x < rhs.pair.x;
}

Int positive_mod(const Int& x, const Int& m) {
    Int r = x % m;
    if (r < 0) r += m;
    return r;
}

}  // namespace

Monodromy::Monodromy(Int a, Int b, Int c, Int d)
    : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)), d_(std::move(d)) {
    if (a_ * d_ - b_ * c_ != 1)
        throw NotUnimodularError("monodromy " + matrix_text(a_, b_, c_, d_) +
                                 " does not have determinant 1");
}

bool Monodromy::is_identity_mod_2() const {
    return (a_ & 1) == 1 && (d_ & 1) == 1 && (b_ & 1) == 0 && (c_ & 1) == 0;
}

bool Monodromy::is_plus_minus_identity() const {
    return (a_ == 1 && b_ == 0 && c_ == 0 && d_ == 1) ||
           (a_ == -1 && b_ == 0 && c_ == 0 && d_ == -1);
}

std::ostream& operator<<(std::ostream& os, const Monodromy& m) {
    return os << matrix_text(m.a(), m.b(), m.c(), m.d());
}

const char* to_string(VerdictKind kind) {
    switch (kind) {
        case VerdictKind::Exists: return "Exists";
        case VerdictKind::NotExists: return "NotExists";
        case VerdictKind::Unknown: return "Unknown";
    }
    return "?";
}

const char* to_string(DecisionMethod method) {
    switch (method) {
        case DecisionMethod::BruteForce: return "BruteForce";
        case DecisionMethod::Eigenvector: return "Eigenvector";
        case DecisionMethod::Parity: return "Parity";
        case DecisionMethod::DefiniteEnumeration: return "DefiniteEnumeration";
        case DecisionMethod::RiverCycle: return "RiverCycle";
    }
    return "?";
}

Int disc_value(const Monodromy& m, const Int& x, const Int& y) {
    if (x == 0 && y == 0) throw NotPrimitiveError("(0,0) is not a curve class");
    if (gcd(abs(x), abs(y)) != 1) {
        std::ostringstream os;
        os << "(" << x << "," << y << ") is not primitive";
        throw NotPrimitiveError(os.str());
    }
    return (m.a() * x + m.b() * y) * y - (m.c() * x + m.d() * y) * x;
}

DiscForm form_of(const Monodromy& m) {
    Int t = m.trace();
    return {-m.c(), m.a() - m.d(), m.b(), t * t - 4};
}

std::optional<Witness> brute_search(const Monodromy& m, const Int& height) {
    if (height < 1) throw InvalidBoundsError("search height must be >= 1");
    DiscForm f = form_of(m);

    // The y = 0 sign class is the single pair (1,0); it comes first in the
    // (y,x) order and evaluates to the leading coefficient.
    if (abs(f.A) <= 1) return Witness{{1, 0}, f.A};

    // Machine-word fast path; every intermediate stays below 2^62.
    Int worst = (abs(f.A) + abs(f.B) + abs(f.C) + 1) * height * height;
    if (height < (Int(1) << 30) && worst < (Int(1) << 62)) {
        const long long A = f.A.convert_to<long long>();
        const long long B = f.B.convert_to<long long>();
        const long long C = f.C.convert_to<long long>();
        const long long H = height.convert_to<long long>();
        for (long long y = 1; y <= H; ++y) {
            const long long by = B * y;
            const long long cy2 = C * y * y;
            for (long long x = -H; x <= H; ++x) {
                long long value = A * x * x + by * x + cy2;
                if (value > 1 || value < -1) continue;
                if (std::gcd(x < 0 ? -x : x, y) != 1) continue;
                return Witness{{Int(x), Int(y)}, Int(value)};
            }
        }
        return std::nullopt;
    }

    for (Int y = 1; y <= height; ++y) {
        for (Int x = -height; x <= height; ++x) {
            Int value = f.eval(x, y);
            if (value > 1 || value < -1) continue;
            if (gcd(abs(x), y) != 1) continue;
            return Witness{{x, y}, value};
        }
    }
    return std::nullopt;
}

bool no_disc_criterion(const Monodromy& m) {
    Int t = m.trace();
    return m.is_identity_mod_2() && t != 2 && t != -2;
}

namespace detail {

RiverScan scan_river(const DiscForm& form) {
    Int a = form.A, b = form.B, c = form.C;
    const Int& D = form.disc;
    const Int root = isqrt(D);

    // Reduce until the outer coefficients straddle zero. Each step is the
    // classic indefinite reduction (a,b,c) -> (c, b', (b'^2 - D)/(4c)).
    while (a * c > 0) {
        Int ac = abs(c);
        Int modulus = 2 * ac;
        Int bp;
        if (ac > root) {
            Int r = positive_mod(-b, modulus);
            bp = (r <= ac) ? r : r - modulus;
        } else {
            bp = root - positive_mod(root + b, modulus);
        }
        Int next = (bp * bp - D) / (4 * c);
        a = c;
        b = bp;
        c = next;
    }
    // Orient the edge so the positive bank comes first; flipping the second
    // basis vector negates the cross term.
    if (a < 0) {
        std::swap(a, c);
        b = -b;
    }

    RiverScan out;
    auto note = [&out](const Int& value) {
        if (value == 1) out.represents_plus_one = true;
        if (value == -1) out.represents_minus_one = true;
    };
    note(a);
    note(c);

    const Int a0 = a, b0 = b, c0 = c;
    do {
        Int w = a + b + c;  // value at the vertex ahead; nonzero, D nonsquare
        if (w > 0) {
            b += 2 * c;
            a = w;
        } else {
            b += 2 * a;
            c = w;
        }
        note(w);
        ++out.steps;
    } while (!(a == a0 && b == b0 && c == c0));
    return out;
}

}  // namespace detail

namespace {

DiscVerdict decide_definite(const DiscForm& f) {
    // disc in {-3,-4}: the form is definite and only sign(A)*1 is feasible.
    // 4|A| * |f| = (2Ax + By)^2 + |disc| y^2, so the solution region is tiny.
    const Int target = 4 * abs(f.A);
    const Int dp = -f.disc;
    const Int value = f.A > 0 ? 1 : -1;
    for (Int y = 0; dp * y * y <= target; ++y) {
        Int r2 = target - dp * y * y;
        Int k = isqrt(r2);
        if (k * k != r2) continue;
        std::optional<Int> best_x;
        for (int side : {1, -1}) {
            if (k == 0 && side < 0) break;
            Int numerator = side * k - f.B * y;
            if (numerator % (2 * f.A) != 0) continue;
            Int x = numerator / (2 * f.A);
            if (y == 0) {
                if (x != 1 && x != -1) continue;
                x = 1;
            }
            if (gcd(abs(x), y) != 1) continue;
            if (!best_x || x < *best_x) best_x = x;
        }
        if (best_x)
            return {VerdictKind::Exists, DecisionMethod::DefiniteEnumeration,
                    Witness{{*best_x, y}, value}, std::nullopt};
    }
    return {VerdictKind::NotExists, DecisionMethod::DefiniteEnumeration,
            std::nullopt, std::nullopt};
}

DiscVerdict decide_eigenvector(const DiscForm& f) {
    // disc = 0. With A = 0 the form is C y^2 and (1,0) is a zero.
    if (f.A == 0)
        return {VerdictKind::Exists, DecisionMethod::Eigenvector,
                Witness{{1, 0}, 0}, std::nullopt};

    // 4A f = (2Ax + By)^2. Zeros lie on the primitive eigenvector line;
    // +-1 needs 4|A| to be a perfect square.
    if (abs(f.A) == 1)
        return {VerdictKind::Exists, DecisionMethod::Eigenvector,
                Witness{{1, 0}, f.A}, std::nullopt};

    Int k = isqrt(4 * abs(f.A));
    bool k_square = (k * k == 4 * abs(f.A));
    Int unit = f.A > 0 ? 1 : -1;
    const Int y_cap = 2 * abs(f.A) + 1;  // primitive zero vector bound
    for (Int y = 1; y <= y_cap; ++y) {
        std::optional<Witness> best;
        auto consider = [&](const Int& numerator, const Int& value) {
            if (numerator % (2 * f.A) != 0) return;
            Int x = numerator / (2 * f.A);
            if (gcd(abs(x), y) != 1) return;
            Witness w{{x, y}, value};
            if (!best || lex_less(w, *best)) best = w;
        };
        consider(-f.B * y, 0);
        if (k_square) {
            consider(k - f.B * y, unit);
            consider(-k - f.B * y, unit);
        }
        if (best)
            return {VerdictKind::Exists, DecisionMethod::Eigenvector, best,
                    std::nullopt};
    }
    throw std::logic_error("eigenvector witness not found below its bound");
}

}  // namespace

DiscVerdict decide(const Monodromy& m) {
    if (m.is_plus_minus_identity())
        return {VerdictKind::Exists, DecisionMethod::Eigenvector,
                Witness{{1, 0}, 0}, std::nullopt};

    const DiscForm f = form_of(m);
    const Int at = abs(m.trace());

    if (at <= 1) return decide_definite(f);
    if (at == 2) return decide_eigenvector(f);

    // |trace| >= 3: disc is positive and strictly between (|t|-1)^2 and t^2,
    // hence nonsquare; 0 is never represented by a primitive pair.
    if (m.is_identity_mod_2())
        return {VerdictKind::NotExists, DecisionMethod::Parity, std::nullopt,
                std::nullopt};

    detail::RiverScan river = detail::scan_river(f);
    if (!river.represents_plus_one && !river.represents_minus_one)
        return {VerdictKind::NotExists, DecisionMethod::RiverCycle,
                std::nullopt, std::nullopt};

    // A witness exists; find the (y,x)-smallest one. Any witness bounds the
    // minimal y, and for y below that bound |x| is capped by the quadratic
    // formula, so one more bounded scan is complete.
    std::optional<Witness> found;
    for (Int h = 2; !found; h *= 2) found = brute_search(m, h);
    const Int y0 = found->pair.y;
    Int xcap =
        (abs(f.B) * y0 + isqrt(f.disc * y0 * y0 + 4 * abs(f.A))) /
            (2 * abs(f.A)) +
        2;
    Int refine = y0 > xcap ? y0 : xcap;
    if (refine < 1) refine = 1;
    found = brute_search(m, refine);
    return {VerdictKind::Exists, DecisionMethod::RiverCycle, found,
            std::nullopt};
}

Monodromy conjugate(const Monodromy& m, const UnimodularMatrix& p) {
    // A * P^{-1}
    Int r_a = m.a() * p.d() - m.b() * p.c();
    Int r_b = -m.a() * p.b() + m.b() * p.a();
    Int r_c = m.c() * p.d() - m.d() * p.c();
    Int r_d = -m.c() * p.b() + m.d() * p.a();
    // P * (A * P^{-1})
    return Monodromy(p.a() * r_a + p.b() * r_c, p.a() * r_b + p.b() * r_d,
                     p.c() * r_a + p.d() * r_c, p.c() * r_b + p.d() * r_d);
}

ScanReport scan_matrices(const Int& entry_bound, const Int& max_bound) {
    if (entry_bound < 1) throw InvalidBoundsError("entry bound must be >= 1");
    if (entry_bound > max_bound)
        throw BoundsTooLargeError("entry bound " + entry_bound.str() +
                                  " exceeds the configured cap " +
                                  max_bound.str());

    ScanReport report;
    report.entry_bound = entry_bound;
    const long long n = entry_bound.convert_to<long long>();

    auto handle = [&report](long long a, long long b, long long c,
                            long long d) {
        Monodromy m(a, b, c, d);
        DiscVerdict verdict = decide(m);
        bool criterion = no_disc_criterion(m);
        ++report.total;
        if (verdict.kind == VerdictKind::Exists) ++report.exists_count;
        if (verdict.kind == VerdictKind::NotExists) ++report.not_exists_count;
        if (criterion) {
            ++report.criterion_count;
            if (verdict.kind != VerdictKind::NotExists)
                report.disagreements.push_back(m);
        }
    };

    for (long long a = -n; a <= n; ++a) {
        for (long long d = -n; d <= n; ++d) {
            const long long bc = a * d - 1;
            if (bc == 0) {
                for (long long c = -n; c <= n; ++c) handle(a, 0, c, d);
                for (long long b = -n; b <= n; ++b)
                    if (b != 0) handle(a, b, 0, d);
            } else {
                for (long long b = -n; b <= n; ++b) {
                    if (b == 0 || bc % b != 0) continue;
                    long long c = bc / b;
                    if (c < -n || c > n) continue;
                    handle(a, b, c, d);
                }
            }
        }
    }

    std::sort(report.disagreements.begin(), report.disagreements.end(),
              [](const Monodromy& x, const Monodromy& y) {
                  auto key = [](const Monodromy& m) {
                      return std::array<Int, 4>{m.a(), m.b(), m.c(), m.d()};
                  };
                  return key(x) < key(y);
              });
    return report;
}

}  // namespace mbt
