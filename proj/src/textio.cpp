#include "mbtree/textio.hpp"

#include <cctype>
#include <sstream>

namespace mbt {

namespace {

class Cursor {
public:
    explicit Cursor(const std::string& text) : text_(text) {}

    void skip_ws() {
        while (pos_ < text_.size() &&
               std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
    }

    bool try_consume(char c) {
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    void expect(char c) {
        if (!try_consume(c))
            throw ParseError(std::string("expected '") + c + "'", pos_);
    }

    Int integer() {
        std::size_t start = pos_;
        bool neg = false;
        if (try_consume('-'))
            neg = true;
        else
            try_consume('+');
        std::string digits;
        while (pos_ < text_.size() &&
               std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            digits += text_[pos_];
            ++pos_;
        }
        if (digits.empty()) throw ParseError("expected an integer", start);
        Int value(digits);
        return neg ? -value : value;
    }

    void expect_end() {
        skip_ws();
        if (pos_ < text_.size())
            throw ParseError("unexpected trailing input", pos_);
    }

private:
    const std::string& text_;
    std::size_t pos_ = 0;
};

// "u/v" or "(u,v)".
std::pair<Int, Int> read_pair(const std::string& text) {
    Cursor cur(text);
    cur.skip_ws();
    Int first, second;
    if (cur.try_consume('(')) {
        cur.skip_ws();
        first = cur.integer();
        cur.skip_ws();
        cur.expect(',');
        cur.skip_ws();
        second = cur.integer();
        cur.skip_ws();
        cur.expect(')');
    } else {
        first = cur.integer();
        cur.skip_ws();
        cur.expect('/');
        cur.skip_ws();
        second = cur.integer();
    }
    cur.expect_end();
    return {first, second};
}

}  // namespace

BoundarySlope parse_slope(const std::string& text) {
    auto [u, v] = read_pair(text);
    return reduce_slope(u, v);
}

Curve parse_curve(const std::string& text) {
    auto [x, y] = read_pair(text);
    if (x == 0 && y == 0) throw ZeroCurveError();
    if (gcd(abs(x), abs(y)) != 1)
        throw NotReducedError("curve " + text + " is not primitive");
    return {x, y};
}

TreeVertex parse_vertex(const std::string& text) {
    Cursor cur(text);
    cur.skip_ws();
    Int p = cur.integer();
    cur.skip_ws();
    cur.expect(':');
    cur.skip_ws();
    Int q = cur.integer();
    cur.expect_end();
    return TreeVertex(p, q);
}

std::array<Int, 4> parse_matrix(const std::string& text) {
    Cursor cur(text);
    cur.skip_ws();
    Int a = cur.integer();
    cur.skip_ws();
    cur.expect(',');
    cur.skip_ws();
    Int b = cur.integer();
    cur.skip_ws();
    cur.expect(';');
    cur.skip_ws();
    Int c = cur.integer();
    cur.skip_ws();
    cur.expect(',');
    cur.skip_ws();
    Int d = cur.integer();
    cur.expect_end();
    return {a, b, c, d};
}

std::string format_slope(const BoundarySlope& s) {
    std::ostringstream os;
    os << s.u() << "/" << s.v();
    return os.str();
}

std::string format_vertex(const TreeVertex& v) {
    std::ostringstream os;
    os << v.p() << ":" << v.q();
    return os.str();
}

std::string format_curve(const Curve& c) {
    std::ostringstream os;
    os << "(" << c.x << "," << c.y << ")";
    return os.str();
}

}  // namespace mbt
