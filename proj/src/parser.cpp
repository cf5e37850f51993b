#include "logres/parser.hpp"

#include <cctype>

namespace logres {

namespace {

// Recursive-descent parser over a tiny trivariate polynomial ring. Internally
// everything is a (possibly inhomogeneous) map from exponent triples.
struct TriPoly {
    FieldPtr f;
    std::map<std::array<int, 3>, NFElem> t;

    static TriPoly constant(const FieldPtr& f, const NFElem& e) {
        TriPoly p{f, {}};
        if (!e.is_zero()) p.t[{0, 0, 0}] = e;
        return p;
    }
    static TriPoly variable(const FieldPtr& f, int var) {
        TriPoly p{f, {}};
        std::array<int, 3> k{0, 0, 0};
        k[var] = 1;
        p.t[k] = NFElem::one(f);
        return p;
    }
    TriPoly operator+(const TriPoly& o) const {
        TriPoly r = *this;
        for (const auto& [k, v] : o.t) {
            auto it = r.t.find(k);
            if (it == r.t.end()) r.t[k] = v;
            else {
                it->second += v;
                if (it->second.is_zero()) r.t.erase(it);
            }
        }
        return r;
    }
    TriPoly operator-() const {
        TriPoly r = *this;
        for (auto& [k, v] : r.t) v = -v;
        return r;
    }
    TriPoly operator*(const TriPoly& o) const {
        TriPoly r{f, {}};
        for (const auto& [ka, va] : t)
            for (const auto& [kb, vb] : o.t) {
                std::array<int, 3> k{ka[0] + kb[0], ka[1] + kb[1], ka[2] + kb[2]};
                NFElem prod = va * vb;
                auto it = r.t.find(k);
                if (it == r.t.end()) {
                    if (!prod.is_zero()) r.t[k] = prod;
                } else {
                    it->second += prod;
                    if (it->second.is_zero()) r.t.erase(it);
                }
            }
        return r;
    }
    TriPoly pow(long e, size_t pos) const {
        if (e < 0) throw ParseError("negative exponent", pos);
        TriPoly acc = constant(f, NFElem::one(f));
        TriPoly b = *this;
        while (e > 0) {
            if (e & 1) acc = acc * b;
            b = b * b;
            e >>= 1;
        }
        return acc;
    }
};

struct Parser {
    const std::string& s;
    const FieldPtr& f;
    size_t i = 0;

    void skip() {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    }
    bool eat(char c) {
        skip();
        if (i < s.size() && s[i] == c) { ++i; return true; }
        return false;
    }
    char peek() {
        skip();
        return i < s.size() ? s[i] : '\0';
    }

    TriPoly parse_expr() {
        TriPoly acc = parse_term();
        for (;;) {
            char c = peek();
            if (c == '+') { ++i; acc = acc + parse_term(); }
            else if (c == '-') { ++i; acc = acc + (-parse_term()); }
            else break;
        }
        return acc;
    }

    TriPoly parse_term() {
        TriPoly acc = parse_factor();
        for (;;) {
            char c = peek();
            if (c == '*') { ++i; acc = acc * parse_factor(); }
            else if (c == '(' || c == 'x' || c == 'y' || c == 'z' || c == 'a' ||
                     std::isdigit(static_cast<unsigned char>(c))) {
                // implicit multiplication, e.g. "2x" or "x(y+z)"
                acc = acc * parse_factor();
            } else break;
        }
        return acc;
    }

    TriPoly parse_factor() {
        TriPoly base = parse_atom();
        if (peek() == '^') {
            ++i;
            skip();
            size_t start = i;
            long e = parse_integer();
            base = base.pow(e, start);
        }
        return base;
    }

    long parse_integer() {
        skip();
        size_t start = i;
        bool neg = false;
        if (i < s.size() && (s[i] == '-' || s[i] == '+')) neg = (s[i++] == '-');
        if (i >= s.size() || !std::isdigit(static_cast<unsigned char>(s[i])))
            throw ParseError("expected integer", start);
        long v = 0;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i])))
            v = v * 10 + (s[i++] - '0');
        return neg ? -v : v;
    }

    Rational parse_rational() {
        Integer num = 0;
        size_t start = i;
        if (i >= s.size() || !std::isdigit(static_cast<unsigned char>(s[i])))
            throw ParseError("expected number", start);
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i])))
            num = num * 10 + (s[i++] - '0');
        if (i < s.size() && s[i] == '/') {
            size_t save = i;
            ++i;
            if (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
                Integer den = 0;
                while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i])))
                    den = den * 10 + (s[i++] - '0');
                if (den == 0) throw ParseError("division by zero", save);
                return Rational(num, den);
            }
            i = save;
        }
        return Rational(num);
    }

    TriPoly parse_atom() {
        skip();
        if (i >= s.size()) throw ParseError("unexpected end of input", i);
        char c = s[i];
        if (c == '(') {
            ++i;
            TriPoly e = parse_expr();
            if (!eat(')')) throw ParseError("expected ')'", i);
            return e;
        }
        if (c == '-') { ++i; return -parse_atom(); }
        if (c == '+') { ++i; return parse_atom(); }
        if (c == 'x') { ++i; return TriPoly::variable(f, 0); }
        if (c == 'y') { ++i; return TriPoly::variable(f, 1); }
        if (c == 'z') { ++i; return TriPoly::variable(f, 2); }
        if (c == 'a') {
            if (f->is_rational())
                throw ParseError("field generator 'a' used but field is Q", i);
            ++i;
            return TriPoly::constant(f, NFElem::generator(f));
        }
        if (std::isdigit(static_cast<unsigned char>(c)))
            return TriPoly::constant(f, NFElem(f, parse_rational()));
        throw ParseError(std::string("unexpected character '") + c + "'", i);
    }
};

TriPoly parse_tri(const std::string& text, const FieldPtr& field) {
    Parser p{text, field};
    TriPoly e = p.parse_expr();
    p.skip();
    if (p.i != text.size()) throw ParseError("trailing input", p.i);
    return e;
}

} // namespace

HPoly parse_homogeneous(const std::string& text, const FieldPtr& field) {
    TriPoly e = parse_tri(text, field);
    if (e.t.empty()) throw ParseError("polynomial is zero", 0);
    int deg = -1;
    for (const auto& [k, v] : e.t) {
        int d = k[0] + k[1] + k[2];
        if (deg < 0) deg = d;
        else if (deg != d) throw ParseError("polynomial is not homogeneous", 0);
    }
    HPoly h(field, deg);
    for (const auto& [k, v] : e.t) h.set(k[0], k[1], k[2], v);
    return h;
}

BiPoly parse_bivariate(const std::string& text, const FieldPtr& field) {
    TriPoly e = parse_tri(text, field);
    BiPoly b(field);
    for (const auto& [k, v] : e.t) {
        if (k[2] != 0) throw ParseError("variable z not allowed in local germ", 0);
        b.set(k[0], k[1], v);
    }
    return b;
}

NFElem parse_field_element(const std::string& text, const FieldPtr& field) {
    TriPoly e = parse_tri(text, field);
    NFElem out = NFElem::zero(field);
    for (const auto& [k, v] : e.t) {
        if (k[0] || k[1] || k[2]) throw ParseError("expected a constant", 0);
        out += v;
    }
    return out;
}

} // namespace logres
