#include "logres/numberfield.hpp"

#include <algorithm>
#include <sstream>

namespace logres {

namespace {

// Rational-coefficient polynomial helpers on bare vectors (constant term first).
std::vector<Rational> trim(std::vector<Rational> v) {
    while (!v.empty() && v.back() == 0) v.pop_back();
    return v;
}

std::vector<Rational> poly_rem(std::vector<Rational> a, const std::vector<Rational>& b) {
    a = trim(std::move(a));
    auto bb = trim(b);
    if (bb.empty()) throw std::runtime_error("poly_rem: division by zero polynomial");
    while (a.size() >= bb.size()) {
        Rational q = a.back() / bb.back();
        size_t off = a.size() - bb.size();
        for (size_t i = 0; i < bb.size(); ++i) a[off + i] -= q * bb[i];
        a = trim(std::move(a));
        if (a.empty()) break;
    }
    return a;
}

// Extended Euclid over Q[x]: returns (g, s, t) with s*a + t*b = g (g monic or zero).
struct XGcd {
    std::vector<Rational> g, s, t;
};

std::vector<Rational> poly_scale(std::vector<Rational> a, const Rational& c) {
    for (auto& x : a) x *= c;
    return a;
}

std::vector<Rational> poly_sub(std::vector<Rational> a, const std::vector<Rational>& b) {
    if (a.size() < b.size()) a.resize(b.size(), Rational(0));
    for (size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
    return trim(std::move(a));
}

std::vector<Rational> poly_mul(const std::vector<Rational>& a, const std::vector<Rational>& b) {
    if (a.empty() || b.empty()) return {};
    std::vector<Rational> r(a.size() + b.size() - 1, Rational(0));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    return trim(std::move(r));
}

std::pair<std::vector<Rational>, std::vector<Rational>>
poly_divmod(std::vector<Rational> a, const std::vector<Rational>& b) {
    a = trim(std::move(a));
    auto bb = trim(b);
    if (bb.empty()) throw std::runtime_error("poly_divmod: zero divisor");
    std::vector<Rational> q;
    if (a.size() >= bb.size()) q.assign(a.size() - bb.size() + 1, Rational(0));
    while (a.size() >= bb.size()) {
        Rational c = a.back() / bb.back();
        size_t off = a.size() - bb.size();
        q[off] = c;
        for (size_t i = 0; i < bb.size(); ++i) a[off + i] -= c * bb[i];
        a = trim(std::move(a));
        if (a.empty()) break;
    }
    return {trim(std::move(q)), std::move(a)};
}

XGcd poly_xgcd(std::vector<Rational> a, std::vector<Rational> b) {
    std::vector<Rational> r0 = trim(std::move(a)), r1 = trim(std::move(b));
    std::vector<Rational> s0 = {Rational(1)}, s1 = {};
    std::vector<Rational> t0 = {}, t1 = {Rational(1)};
    while (!r1.empty()) {
        auto [q, r] = poly_divmod(r0, r1);
        auto ns = poly_sub(s0, poly_mul(q, s1));
        auto nt = poly_sub(t0, poly_mul(q, t1));
        r0 = std::move(r1); r1 = std::move(r);
        s0 = std::move(s1); s1 = std::move(ns);
        t0 = std::move(t1); t1 = std::move(nt);
    }
    if (!r0.empty()) {
        Rational lead = r0.back();
        r0 = poly_scale(std::move(r0), 1 / lead);
        s0 = poly_scale(std::move(s0), 1 / lead);
        t0 = poly_scale(std::move(t0), 1 / lead);
    }
    return {std::move(r0), std::move(s0), std::move(t0)};
}

// Scales a rational polynomial to a primitive integer polynomial.
std::vector<Integer> to_primitive_int(const std::vector<Rational>& p) {
    Integer lcm = 1;
    for (const auto& c : p) {
        Integer d = denominator(c);
        lcm = boost::multiprecision::lcm(lcm, d);
    }
    std::vector<Integer> w;
    w.reserve(p.size());
    Integer g = 0;
    for (const auto& c : p) {
        Integer v = numerator(Rational(c * lcm));
        w.push_back(v);
        g = boost::multiprecision::gcd(g, v);
    }
    if (g > 1)
        for (auto& v : w) v /= g;
    return w;
}

std::vector<Integer> divisors_of(Integer n) {
    if (n < 0) n = -n;
    std::vector<Integer> ds;
    for (Integer i = 1; i * i <= n; ++i) {
        if (n % i == 0) {
            ds.push_back(i);
            if (i * i != n) ds.push_back(n / i);
        }
    }
    return ds;
}

bool has_rational_root(const std::vector<Rational>& p) {
    auto w = to_primitive_int(p);
    while (!w.empty() && w.front() == 0) return true; // root 0
    if (w.size() <= 1) return false;
    auto ps = divisors_of(w.front());
    auto qs = divisors_of(w.back());
    for (const auto& pn : ps)
        for (const auto& qd : qs)
            for (int s : {1, -1}) {
                Rational cand(pn * s, qd);
                Rational acc = 0, x = 1;
                for (const auto& c : p) { acc += c * x; x *= cand; }
                if (acc == 0) return true;
            }
    return false;
}

// Decides irreducibility over Q for degree <= 4 (after ruling out rational roots,
// checks the quadratic x quadratic split for quartics by divisor enumeration).
bool is_irreducible_deg_le4(const std::vector<Rational>& p) {
    int deg = static_cast<int>(p.size()) - 1;
    if (deg <= 0) return false;
    if (deg == 1) return true;
    if (has_rational_root(p)) return false;
    if (deg <= 3) return true;
    // quartic: monic over Q; try p = (x^2+a x+b)(x^2+c x+d) with rational a,b,c,d.
    // Scale to integer primitive; integral factorizations then have b*d = e0 with
    // bounded divisor search over Z after clearing denominators via substitution
    // x -> x/k is avoided: instead solve the resolvent-style system exactly.
    // p = x^4 + p3 x^3 + p2 x^2 + p1 x + p0 (monic by construction).
    Rational p3 = p[3] / p[4], p2 = p[2] / p[4], p1 = p[1] / p[4], p0 = p[0] / p[4];
    // a + c = p3 ; b + d + ac = p2 ; ad + bc = p1 ; bd = p0.
    // Eliminate: let s = a, then c = p3 - s; b+d = p2 - s(p3-s); and
    // s*d + b*(p3-s) = p1. For each rational root s of the resolvent sextic we
    // could decide; instead test the classical cubic resolvent for a rational root:
    // y^3 - p2 y^2 + (p1 p3 - 4 p0) y - (p1^2 + p0 p3^2 - 4 p0 p2) = 0.
    std::vector<Rational> res = {-(p1 * p1 + p0 * p3 * p3 - 4 * p0 * p2),
                                 p1 * p3 - 4 * p0, -p2, Rational(1)};
    if (!has_rational_root(res)) return true;
    // A rational resolvent root means a factorization over some quadratic
    // extension; a genuine Q-factorization into quadratics also requires the
    // accompanying square conditions. Enumerate resolvent roots and test.
    auto w = to_primitive_int(res);
    auto ps = divisors_of(w.front());
    auto qs = divisors_of(w.back());
    std::vector<Rational> roots;
    for (const auto& pn : ps)
        for (const auto& qd : qs)
            for (int sgn : {1, -1}) {
                Rational y(pn * sgn, qd);
                Rational acc = 0, x = 1;
                for (const auto& c : res) { acc += c * x; x *= y; }
                if (acc == 0) roots.push_back(y);
            }
    if (w.front() == 0) roots.push_back(0);
    for (const auto& y : roots) {
        // With resolvent root y: a^2 = p3^2/4 - p2 + y must be a rational square,
        // and then b,d follow. Check the two square conditions.
        Rational A2 = p3 * p3 / 4 - p2 + y;
        Rational B2 = y * y / 4 - p0;
        auto is_square = [](const Rational& r) {
            if (r < 0) return false;
            Integer n = numerator(r), d = denominator(r);
            Integer sn = boost::multiprecision::sqrt(n), sd = boost::multiprecision::sqrt(d);
            return sn * sn == n && sd * sd == d;
        };
        if (A2 == 0) {
            if (is_square(B2)) return false;
        } else if (is_square(A2)) {
            return false;
        }
    }
    return true;
}

} // namespace

FieldPtr NumberField::rationals() {
    static FieldPtr q = std::shared_ptr<const NumberField>(
        new NumberField(std::vector<Rational>{Rational(0), Rational(1)}));
    return q;
}

FieldPtr NumberField::make(std::vector<Rational> min_poly, bool attested) {
    min_poly = trim(std::move(min_poly));
    if (min_poly.size() < 2) throw std::runtime_error("number field: minimal polynomial must be nonconstant");
    if (min_poly.back() != 1) {
        Rational lead = min_poly.back();
        for (auto& c : min_poly) c /= lead;
    }
    int deg = static_cast<int>(min_poly.size()) - 1;
    if (deg <= 4) {
        if (!is_irreducible_deg_le4(min_poly))
            throw std::runtime_error("number field: minimal polynomial is reducible over Q");
    } else if (!attested) {
        throw std::runtime_error(
            "number field: degree > 4 requires an irreducibility attestation");
    }
    return std::shared_ptr<const NumberField>(new NumberField(std::move(min_poly)));
}

std::string NumberField::describe() const {
    if (is_rational()) return "Q";
    std::ostringstream os;
    os << "Q(a), ";
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        const Rational& c = min_poly_[i];
        if (c == 0) continue;
        if (!first && c > 0) os << " + ";
        if (c < 0) os << " - ";
        Rational ab = c < 0 ? Rational(-c) : c;
        if (i == 0 || ab != 1) os << to_string(ab) << (i > 0 ? "*" : "");
        if (i >= 1) os << "a";
        if (i >= 2) os << "^" << i;
        first = false;
    }
    os << " = 0";
    return os.str();
}

NFElem::NFElem(FieldPtr field, Rational constant) : field_(std::move(field)) {
    c_.assign(field_->degree(), Rational(0));
    c_[0] = std::move(constant);
}

NFElem::NFElem(FieldPtr field, std::vector<Rational> coeffs) : field_(std::move(field)), c_(std::move(coeffs)) {
    reduce();
}

NFElem NFElem::generator(const FieldPtr& f) {
    if (f->degree() < 2) throw std::runtime_error("generator: field is Q");
    std::vector<Rational> c(f->degree(), Rational(0));
    c[1] = 1;
    return NFElem(f, std::move(c));
}

void NFElem::reduce() {
    int n = field_->degree();
    if (static_cast<int>(c_.size()) <= n) {
        c_.resize(n, Rational(0));
        return;
    }
    auto rem = poly_rem(c_, field_->min_poly());
    rem.resize(n, Rational(0));
    c_ = std::move(rem);
}

bool NFElem::is_zero() const {
    return std::all_of(c_.begin(), c_.end(), [](const Rational& r) { return r == 0; });
}

bool NFElem::is_rational() const {
    for (size_t i = 1; i < c_.size(); ++i)
        if (c_[i] != 0) return false;
    return true;
}

Rational NFElem::rational_value() const {
    if (!is_rational()) throw std::runtime_error("rational_value: element not in Q");
    return c_.empty() ? Rational(0) : c_[0];
}

NFElem NFElem::operator-() const {
    NFElem r = *this;
    for (auto& x : r.c_) x = -x;
    return r;
}

NFElem NFElem::operator+(const NFElem& o) const {
    NFElem r = *this;
    for (size_t i = 0; i < o.c_.size(); ++i) r.c_[i] += o.c_[i];
    return r;
}

NFElem NFElem::operator-(const NFElem& o) const {
    NFElem r = *this;
    for (size_t i = 0; i < o.c_.size(); ++i) r.c_[i] -= o.c_[i];
    return r;
}

NFElem NFElem::operator*(const NFElem& o) const {
    std::vector<Rational> prod(c_.size() + o.c_.size() - 1, Rational(0));
    for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        for (size_t j = 0; j < o.c_.size(); ++j) {
            if (o.c_[j] == 0) continue;
            prod[i + j] += c_[i] * o.c_[j];
        }
    }
    return NFElem(field_, std::move(prod));
}

NFElem NFElem::inverse() const {
    if (is_zero()) throw std::runtime_error("NFElem: division by zero");
    if (field_->is_rational()) return NFElem(field_, 1 / c_[0]);
    auto x = poly_xgcd(c_, field_->min_poly());
    if (x.g.size() != 1)
        throw std::runtime_error("NFElem: non-invertible element (reducible modulus?)");
    auto s = poly_scale(x.s, 1 / x.g[0]);
    return NFElem(field_, std::move(s));
}

NFElem NFElem::operator/(const NFElem& o) const { return *this * o.inverse(); }

NFElem NFElem::pow(long e) const {
    if (e < 0) return inverse().pow(-e);
    NFElem acc = NFElem::one(field_);
    NFElem base = *this;
    while (e > 0) {
        if (e & 1) acc = acc * base;
        base = base * base;
        e >>= 1;
    }
    return acc;
}

bool NFElem::operator==(const NFElem& o) const { return c_ == o.c_; }

int NFElem::cmp(const NFElem& a, const NFElem& b) {
    for (size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i] < b.c_[i]) return -1;
        if (a.c_[i] > b.c_[i]) return 1;
    }
    return 0;
}

std::string NFElem::str(const std::string& gen) const {
    std::ostringstream os;
    bool first = true;
    for (int i = static_cast<int>(c_.size()) - 1; i >= 0; --i) {
        const Rational& c = c_[i];
        if (c == 0) continue;
        if (!first) os << (c > 0 ? " + " : " - ");
        else if (c < 0) os << "-";
        Rational ab = c < 0 ? Rational(-c) : c;
        if (i == 0 || ab != 1) {
            os << to_string(ab);
            if (i > 0) os << "*";
        }
        if (i >= 1) os << gen;
        if (i >= 2) os << "^" << i;
        first = false;
    }
    if (first) os << "0";
    return os.str();
}

NFElem operator*(const Rational& r, const NFElem& e) {
    std::vector<Rational> c = e.coeffs();
    for (auto& x : c) x *= r;
    return NFElem(e.field(), std::move(c));
}

} // namespace logres
