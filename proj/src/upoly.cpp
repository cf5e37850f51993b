#include "logres/poly.hpp"

#include <sstream>

namespace logres {

void UPoly::trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

UPoly UPoly::constant(const NFElem& e) {
    UPoly p(e.field());
    if (!e.is_zero()) p.c_ = {e};
    return p;
}

UPoly UPoly::monomial(const FieldPtr& f, int deg, const NFElem& c) {
    UPoly p(f);
    if (c.is_zero()) return p;
    p.c_.assign(deg + 1, NFElem::zero(f));
    p.c_[deg] = c;
    return p;
}

NFElem UPoly::operator[](int i) const {
    if (i < 0 || i >= static_cast<int>(c_.size())) return NFElem::zero(field_);
    return c_[i];
}

NFElem UPoly::lead() const {
    if (c_.empty()) return NFElem::zero(field_);
    return c_.back();
}

NFElem UPoly::eval(const NFElem& x) const {
    NFElem acc = NFElem::zero(field_);
    for (int i = degree(); i >= 0; --i) acc = acc * x + c_[i];
    return acc;
}

UPoly UPoly::operator+(const UPoly& o) const {
    UPoly r(field_);
    r.c_.resize(std::max(c_.size(), o.c_.size()), NFElem::zero(field_));
    for (size_t i = 0; i < c_.size(); ++i) r.c_[i] = c_[i];
    for (size_t i = 0; i < o.c_.size(); ++i) r.c_[i] += o.c_[i];
    r.trim();
    return r;
}

UPoly UPoly::operator-(const UPoly& o) const { return *this + (-o); }

UPoly UPoly::operator-() const {
    UPoly r = *this;
    for (auto& c : r.c_) c = -c;
    return r;
}

UPoly UPoly::operator*(const UPoly& o) const {
    if (is_zero() || o.is_zero()) return UPoly(field_);
    UPoly r(field_);
    r.c_.assign(c_.size() + o.c_.size() - 1, NFElem::zero(field_));
    for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i].is_zero()) continue;
        for (size_t j = 0; j < o.c_.size(); ++j) {
            if (o.c_[j].is_zero()) continue;
            r.c_[i + j] += c_[i] * o.c_[j];
        }
    }
    r.trim();
    return r;
}

UPoly UPoly::operator*(const NFElem& s) const {
    UPoly r(field_);
    if (s.is_zero()) return r;
    r.c_ = c_;
    for (auto& c : r.c_) c *= s;
    return r;
}

UPoly UPoly::derivative() const {
    UPoly r(field_);
    if (degree() < 1) return r;
    r.c_.assign(c_.size() - 1, NFElem::zero(field_));
    for (size_t i = 1; i < c_.size(); ++i)
        r.c_[i - 1] = Rational(static_cast<long>(i)) * c_[i];
    r.trim();
    return r;
}

std::pair<UPoly, UPoly> UPoly::divmod(const UPoly& a, const UPoly& b) {
    if (b.is_zero()) throw std::runtime_error("UPoly: division by zero");
    UPoly r = a;
    UPoly q(a.field_);
    if (r.degree() >= b.degree())
        q.c_.assign(r.degree() - b.degree() + 1, NFElem::zero(a.field_));
    NFElem binv = b.lead().inverse();
    while (!r.is_zero() && r.degree() >= b.degree()) {
        NFElem c = r.lead() * binv;
        int off = r.degree() - b.degree();
        q.c_[off] = c;
        for (int i = 0; i <= b.degree(); ++i) r.c_[off + i] -= c * b.c_[i];
        r.trim();
    }
    q.trim();
    return {std::move(q), std::move(r)};
}

UPoly UPoly::gcd(UPoly a, UPoly b) {
    while (!b.is_zero()) {
        auto [q, r] = divmod(a, b);
        (void)q;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

UPoly UPoly::monic() const {
    if (is_zero()) return *this;
    return *this * lead().inverse();
}

std::string UPoly::str(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        if (c_[i].is_zero()) continue;
        if (!first) os << " + ";
        os << "(" << c_[i].str() << ")";
        if (i >= 1) os << "*" << var;
        if (i >= 2) os << "^" << i;
        first = false;
    }
    return os.str();
}

namespace {

// Rational roots of a polynomial whose coefficients all lie in Q.
std::vector<NFElem> rational_roots_of(const UPoly& p) {
    const FieldPtr& f = p.field();
    std::vector<Rational> q;
    for (int i = 0; i <= p.degree(); ++i) q.push_back(p[i].rational_value());
    // primitive integer form
    Integer lcm = 1;
    for (const auto& c : q) lcm = boost::multiprecision::lcm(lcm, denominator(c));
    std::vector<Integer> w;
    for (const auto& c : q) w.push_back(numerator(Rational(c * lcm)));
    std::vector<NFElem> roots;
    size_t lo = 0;
    while (lo < w.size() && w[lo] == 0) ++lo;
    if (lo > 0) roots.push_back(NFElem::zero(f)); // multiplicity handled by caller
    if (lo >= w.size()) return roots;
    Integer a0 = w[lo], an = w.back();
    auto divisors = [](Integer n) {
        if (n < 0) n = -n;
        std::vector<Integer> ds;
        for (Integer i = 1; i * i <= n; ++i)
            if (n % i == 0) {
                ds.push_back(i);
                if (i * i != n) ds.push_back(n / i);
            }
        return ds;
    };
    for (const auto& pn : divisors(a0))
        for (const auto& qd : divisors(an))
            for (int s : {1, -1}) {
                Rational cand(pn * s, qd);
                NFElem x(f, cand);
                if (p.eval(x).is_zero()) roots.push_back(x);
            }
    // dedupe
    std::vector<NFElem> uniq;
    for (const auto& r : roots) {
        bool seen = false;
        for (const auto& u : uniq) seen = seen || u == r;
        if (!seen) uniq.push_back(r);
    }
    return uniq;
}

// Writes p as sum_i p_i(t) a^i with rational-coefficient components.
std::vector<UPoly> field_components(const UPoly& p) {
    const FieldPtr& f = p.field();
    const FieldPtr q = NumberField::rationals();
    int n = f->degree();
    std::vector<std::vector<NFElem>> comp(n);
    for (int i = 0; i <= p.degree(); ++i) {
        const NFElem pi = p[i];
        const auto& c = pi.coeffs();
        for (int k = 0; k < n; ++k) {
            comp[k].resize(p.degree() + 1, NFElem::zero(q));
            comp[k][i] = NFElem(q, c[k]);
        }
    }
    std::vector<UPoly> out;
    for (int k = 0; k < n; ++k) out.emplace_back(q, std::move(comp[k]));
    return out;
}

// One root in the field of a squarefree-ish polynomial, or nullopt.
std::optional<NFElem> find_one_root(const UPoly& p) {
    const FieldPtr& f = p.field();
    if (p.degree() < 1) return std::nullopt;
    if (p.degree() == 1) return -p[0] / p[1];
    if (f->is_rational()) {
        auto rs = rational_roots_of(p);
        if (!rs.empty()) return rs.front();
        return std::nullopt;
    }
    // Rational candidates first: common roots of all components.
    auto comps = field_components(p);
    UPoly g = comps[0];
    for (size_t i = 1; i < comps.size(); ++i) g = UPoly::gcd(g, comps[i]);
    if (g.degree() >= 1) {
        auto rs = rational_roots_of(g);
        if (!rs.empty()) return NFElem(f, rs.front().rational_value());
    }
    if (f->degree() != 2) return std::nullopt; // documented limitation
    // Degree-2 field: look for t0 = c0 + c1*a by eliminating c1.
    // p(c0 + c1 a) mod m(a) = E0(c0,c1) + a*E1(c0,c1); solve E0 = E1 = 0 over Q.
    const FieldPtr q = NumberField::rationals();
    // Represent E0,E1 as BiPoly in (c0, c1).
    BiPoly X = BiPoly::var_x(q), Y = BiPoly::var_y(q);
    // a^2 = -m1 a - m0
    Rational m0 = f->min_poly()[0], m1 = f->min_poly()[1];
    // value = A + B*a with A,B BiPoly; multiply through Horner.
    BiPoly A(q), B(q);
    for (int i = p.degree(); i >= 0; --i) {
        // (A + B a)(c0 + c1 a) = A c0 + (A c1 + B c0) a + B c1 a^2
        BiPoly nA = A * X - (B * Y) * NFElem(q, m0);
        BiPoly nB = A * Y + B * X - (B * Y) * NFElem(q, m1);
        const NFElem pi = p[i];
        const auto& ci = pi.coeffs();
        nA = nA + BiPoly::constant(NFElem(q, ci[0]));
        nB = nB + BiPoly::constant(NFElem(q, ci.size() > 1 ? ci[1] : Rational(0)));
        A = std::move(nA);
        B = std::move(nB);
    }
    // Solve A(c0,c1) = B(c0,c1) = 0 with c1 != 0.
    BiPoly res = BiPoly::resultant_y(A, B); // univariate in c0
    UPoly rc0 = res.eval_y(NFElem::zero(q));
    if (rc0.is_zero()) {
        // degenerate elimination; fall back to a slice of A
        rc0 = A.eval_y(NFElem::one(q));
    }
    for (const auto& c0 : rational_roots_of(rc0)) {
        UPoly Ac = A.eval_x(c0);
        UPoly Bc = B.eval_x(c0);
        UPoly gc = Ac.is_zero() ? Bc : (Bc.is_zero() ? Ac : UPoly::gcd(Ac, Bc));
        for (const auto& c1 : rational_roots_of(gc)) {
            if (c1.is_zero()) continue;
            std::vector<Rational> coeffs = {c0.rational_value(), c1.rational_value()};
            NFElem cand(f, coeffs);
            if (p.eval(cand).is_zero()) return cand;
        }
    }
    return std::nullopt;
}

} // namespace

RootReport field_roots(const UPoly& p) {
    RootReport rep;
    rep.nonsplit = UPoly::constant(NFElem::one(p.field()));
    UPoly cur = p.monic();
    if (cur.degree() < 0) {
        rep.nonsplit = p;
        return rep;
    }
    while (cur.degree() >= 1) {
        auto root = find_one_root(cur);
        if (!root) break;
        int mult = 0;
        UPoly lin(p.field(), {-*root, NFElem::one(p.field())});
        for (;;) {
            auto [q, r] = UPoly::divmod(cur, lin);
            if (!r.is_zero()) break;
            cur = q;
            ++mult;
        }
        rep.roots.emplace_back(*root, mult);
    }
    rep.nonsplit = cur;
    return rep;
}

} // namespace logres
