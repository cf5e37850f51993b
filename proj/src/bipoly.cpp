#include "logres/poly.hpp"

#include <sstream>

namespace logres {

BiPoly BiPoly::constant(const NFElem& e) {
    BiPoly p(e.field());
    if (!e.is_zero()) p.t_[{0, 0}] = e;
    return p;
}

BiPoly BiPoly::var_x(const FieldPtr& f) { return monomial(f, 1, 0, NFElem::one(f)); }
BiPoly BiPoly::var_y(const FieldPtr& f) { return monomial(f, 0, 1, NFElem::one(f)); }

BiPoly BiPoly::monomial(const FieldPtr& f, int i, int j, const NFElem& c) {
    BiPoly p(f);
    if (!c.is_zero()) p.t_[{i, j}] = c;
    return p;
}

void BiPoly::set(int i, int j, const NFElem& c) {
    if (c.is_zero()) t_.erase({i, j});
    else t_[{i, j}] = c;
}

NFElem BiPoly::coeff(int i, int j) const {
    auto it = t_.find({i, j});
    if (it == t_.end()) return NFElem::zero(field_);
    return it->second;
}

int BiPoly::total_degree() const {
    int d = -1;
    for (const auto& [k, v] : t_) d = std::max(d, k.first + k.second);
    return d;
}

int BiPoly::order_at_origin() const {
    int d = -1;
    for (const auto& [k, v] : t_) {
        int s = k.first + k.second;
        if (d < 0 || s < d) d = s;
    }
    return d;
}

int BiPoly::degree_x() const {
    int d = 0;
    for (const auto& [k, v] : t_) d = std::max(d, k.first);
    return t_.empty() ? -1 : d;
}

int BiPoly::degree_y() const {
    int d = 0;
    for (const auto& [k, v] : t_) d = std::max(d, k.second);
    return t_.empty() ? -1 : d;
}

BiPoly BiPoly::operator+(const BiPoly& o) const {
    BiPoly r = *this;
    for (const auto& [k, v] : o.t_) {
        auto it = r.t_.find(k);
        if (it == r.t_.end()) r.t_[k] = v;
        else {
            it->second += v;
            if (it->second.is_zero()) r.t_.erase(it);
        }
    }
    return r;
}

BiPoly BiPoly::operator-(const BiPoly& o) const { return *this + (-o); }

BiPoly BiPoly::operator-() const {
    BiPoly r = *this;
    for (auto& [k, v] : r.t_) v = -v;
    return r;
}

BiPoly BiPoly::operator*(const BiPoly& o) const {
    BiPoly r(field_);
    for (const auto& [ka, va] : t_)
        for (const auto& [kb, vb] : o.t_) {
            Key k{ka.first + kb.first, ka.second + kb.second};
            NFElem prod = va * vb;
            auto it = r.t_.find(k);
            if (it == r.t_.end()) {
                if (!prod.is_zero()) r.t_[k] = prod;
            } else {
                it->second += prod;
                if (it->second.is_zero()) r.t_.erase(it);
            }
        }
    return r;
}

BiPoly BiPoly::operator*(const NFElem& s) const {
    BiPoly r(field_);
    if (s.is_zero()) return r;
    for (const auto& [k, v] : t_) r.t_[k] = v * s;
    return r;
}

BiPoly BiPoly::dx() const {
    BiPoly r(field_);
    for (const auto& [k, v] : t_)
        if (k.first > 0) r.set(k.first - 1, k.second, Rational(k.first) * v);
    return r;
}

BiPoly BiPoly::dy() const {
    BiPoly r(field_);
    for (const auto& [k, v] : t_)
        if (k.second > 0) r.set(k.first, k.second - 1, Rational(k.second) * v);
    return r;
}

NFElem BiPoly::eval(const NFElem& x, const NFElem& y) const {
    NFElem acc = NFElem::zero(field_);
    for (const auto& [k, v] : t_) acc += v * x.pow(k.first) * y.pow(k.second);
    return acc;
}

UPoly BiPoly::eval_x(const NFElem& x) const {
    std::vector<NFElem> c(degree_y() + 1, NFElem::zero(field_));
    if (t_.empty()) return UPoly(field_);
    for (const auto& [k, v] : t_) c[k.second] += v * x.pow(k.first);
    return UPoly(field_, std::move(c));
}

UPoly BiPoly::eval_y(const NFElem& y) const {
    std::vector<NFElem> c(degree_x() + 1, NFElem::zero(field_));
    if (t_.empty()) return UPoly(field_);
    for (const auto& [k, v] : t_) c[k.first] += v * y.pow(k.second);
    return UPoly(field_, std::move(c));
}

BiPoly BiPoly::subst(const BiPoly& px, const BiPoly& py) const {
    // Horner-style over x powers, caching y powers.
    BiPoly r(field_);
    std::vector<BiPoly> xp = {BiPoly::constant(NFElem::one(field_))};
    std::vector<BiPoly> yp = {BiPoly::constant(NFElem::one(field_))};
    auto xpow = [&](int n) -> const BiPoly& {
        while (static_cast<int>(xp.size()) <= n) xp.push_back(xp.back() * px);
        return xp[n];
    };
    auto ypow = [&](int n) -> const BiPoly& {
        while (static_cast<int>(yp.size()) <= n) yp.push_back(yp.back() * py);
        return yp[n];
    };
    for (const auto& [k, v] : t_)
        r = r + xpow(k.first) * ypow(k.second) * v;
    return r;
}

BiPoly BiPoly::shift_down(int i, int j) const {
    BiPoly r(field_);
    for (const auto& [k, v] : t_) {
        if (k.first < i || k.second < j)
            throw std::runtime_error("shift_down: not divisible by monomial");
        r.t_[{k.first - i, k.second - j}] = v;
    }
    return r;
}

std::optional<BiPoly> BiPoly::try_div(const BiPoly& a, const BiPoly& b) {
    if (b.is_zero()) return std::nullopt;
    // Treat as univariate in y with UPoly coefficients and do pseudo-division,
    // requiring exactness over the field of fractions at each step.
    BiPoly rem = a;
    BiPoly quot(a.field_);
    int dby = b.degree_y();
    auto lead_in_y = [dby](const BiPoly& p) {
        // coefficient (in x) of y^deg_y(p)
        UPoly c(p.field());
        int dy = p.degree_y();
        std::vector<NFElem> cs(p.degree_x() + 1, NFElem::zero(p.field()));
        bool any = false;
        for (const auto& [k, v] : p.terms())
            if (k.second == dy) { cs[k.first] = v; any = true; }
        (void)any;
        return UPoly(p.field(), std::move(cs));
    };
    UPoly blead = lead_in_y(b);
    while (!rem.is_zero() && rem.degree_y() >= dby) {
        UPoly rlead = lead_in_y(rem);
        auto [q, r] = UPoly::divmod(rlead, blead);
        if (!r.is_zero()) return std::nullopt;
        // term = q(x) * y^(dy_rem - dby)
        BiPoly term(a.field_);
        int shift = rem.degree_y() - dby;
        for (int i = 0; i <= q.degree(); ++i)
            if (!q[i].is_zero()) term.set(i, shift, q[i]);
        if (term.is_zero()) return std::nullopt;
        quot = quot + term;
        rem = rem - term * b;
        if (!rem.is_zero() && rem.degree_y() == dby + shift) return std::nullopt;
    }
    if (!rem.is_zero()) return std::nullopt;
    return quot;
}

BiPoly BiPoly::exact_div(const BiPoly& a, const BiPoly& b) {
    auto q = try_div(a, b);
    if (!q) throw std::runtime_error("BiPoly::exact_div: not divisible");
    return *q;
}

BiPoly BiPoly::truncated(int bound) const {
    BiPoly r(field_);
    for (const auto& [k, v] : t_)
        if (k.first + k.second < bound) r.t_[k] = v;
    return r;
}

BiPoly BiPoly::lowest_part() const {
    BiPoly r(field_);
    int m = order_at_origin();
    if (m < 0) return r;
    for (const auto& [k, v] : t_)
        if (k.first + k.second == m) r.t_[k] = v;
    return r;
}

std::vector<UPoly> BiPoly::as_y_coeffs() const {
    std::vector<UPoly> out(degree_y() + 1, UPoly(field_));
    if (t_.empty()) return {};
    std::vector<std::vector<NFElem>> c(degree_y() + 1);
    for (auto& row : c) row.assign(degree_x() + 1, NFElem::zero(field_));
    for (const auto& [k, v] : t_) c[k.second][k.first] = v;
    for (size_t j = 0; j < c.size(); ++j) out[j] = UPoly(field_, std::move(c[j]));
    return out;
}

BiPoly BiPoly::from_y_coeffs(const FieldPtr& f, const std::vector<UPoly>& c) {
    BiPoly r(f);
    for (size_t j = 0; j < c.size(); ++j)
        for (int i = 0; i <= c[j].degree(); ++i)
            if (!c[j][i].is_zero()) r.set(i, static_cast<int>(j), c[j][i]);
    return r;
}

BiPoly BiPoly::resultant_y(const BiPoly& a, const BiPoly& b) {
    // Sylvester determinant with entries in K[x], expanded by fraction-free
    // Gaussian elimination (Bareiss) over the integral domain K[x].
    auto ac = a.as_y_coeffs();
    auto bc = b.as_y_coeffs();
    int m = static_cast<int>(ac.size()) - 1, n = static_cast<int>(bc.size()) - 1;
    const FieldPtr& f = a.field();
    if (m < 0 || n < 0) return BiPoly(f);
    if (m == 0 && n == 0) return BiPoly::constant(NFElem::one(f));
    int N = m + n;
    std::vector<std::vector<UPoly>> M(N, std::vector<UPoly>(N, UPoly(f)));
    for (int r = 0; r < n; ++r)
        for (int j = 0; j <= m; ++j) M[r][r + j] = ac[m - j];
    for (int r = 0; r < m; ++r)
        for (int j = 0; j <= n; ++j) M[n + r][r + j] = bc[n - j];
    // Bareiss
    UPoly denom = UPoly::constant(NFElem::one(f));
    int sign = 1;
    for (int k = 0; k < N - 1; ++k) {
        if (M[k][k].is_zero()) {
            int p = -1;
            for (int r = k + 1; r < N; ++r)
                if (!M[r][k].is_zero()) { p = r; break; }
            if (p < 0) return BiPoly(f); // det = 0
            std::swap(M[k], M[p]);
            sign = -sign;
        }
        for (int i = k + 1; i < N; ++i)
            for (int j = k + 1; j < N; ++j) {
                UPoly num = M[i][j] * M[k][k] - M[i][k] * M[k][j];
                auto [q, r] = UPoly::divmod(num, denom);
                if (!r.is_zero()) throw std::runtime_error("resultant: Bareiss division failure");
                M[i][j] = q;
            }
        denom = M[k][k];
    }
    UPoly det = M[N - 1][N - 1];
    if (sign < 0) det = -det;
    BiPoly out(f);
    for (int i = 0; i <= det.degree(); ++i)
        if (!det[i].is_zero()) out.set(i, 0, det[i]);
    return out;
}

namespace {

UPoly upoly_content(const std::vector<UPoly>& cs) {
    UPoly g(cs.empty() ? NumberField::rationals() : cs.front().field());
    for (const auto& c : cs) {
        if (c.is_zero()) continue;
        g = g.is_zero() ? c : UPoly::gcd(g, c);
    }
    return g;
}

} // namespace

BiPoly BiPoly::gcd(const BiPoly& a, const BiPoly& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    const FieldPtr& f = a.field();
    // Primitive PRS in y over K[x]: content/primitive split, then subresultant-free
    // pseudo-remainders with content stripping (fine at this scale).
    auto content = [&](const BiPoly& p) { return upoly_content(p.as_y_coeffs()); };
    auto primitive = [&](const BiPoly& p, const UPoly& cont) {
        if (cont.degree() <= 0) return p;
        std::vector<UPoly> cs = p.as_y_coeffs();
        for (auto& c : cs) {
            auto [q, r] = UPoly::divmod(c, cont);
            if (!r.is_zero()) throw std::runtime_error("gcd: content division failure");
            c = q;
        }
        return BiPoly::from_y_coeffs(f, cs);
    };
    if (a.degree_y() == 0 && b.degree_y() == 0) {
        UPoly g = UPoly::gcd(a.as_y_coeffs()[0], b.as_y_coeffs()[0]);
        BiPoly out(f);
        for (int i = 0; i <= g.degree(); ++i)
            if (!g[i].is_zero()) out.set(i, 0, g[i]);
        return out;
    }
    UPoly ca = content(a), cb = content(b);
    UPoly cg = UPoly::gcd(ca, cb);
    BiPoly A = primitive(a, ca), B = primitive(b, cb);
    if (A.degree_y() < B.degree_y()) std::swap(A, B);
    while (!B.is_zero() && B.degree_y() >= 1) {
        // pseudo-remainder of A by B in y
        auto bc = B.as_y_coeffs();
        UPoly blead = bc.back();
        BiPoly R = A;
        int steps = A.degree_y() - B.degree_y() + 1;
        BiPoly bl(f);
        for (int i = 0; i <= blead.degree(); ++i)
            if (!blead[i].is_zero()) bl.set(i, 0, blead[i]);
        for (int s = 0; s < steps && !R.is_zero() && R.degree_y() >= B.degree_y(); ++s) {
            auto rc = R.as_y_coeffs();
            UPoly rlead = rc.back();
            int shift = R.degree_y() - B.degree_y();
            BiPoly term(f);
            for (int i = 0; i <= rlead.degree(); ++i)
                if (!rlead[i].is_zero()) term.set(i, shift, rlead[i]);
            R = R * bl - term * B;
        }
        A = B;
        B = primitive(R, content(R));
        if (B.degree_y() > A.degree_y()) std::swap(A, B);
    }
    BiPoly gpart;
    if (B.is_zero()) {
        gpart = primitive(A, content(A));
    } else {
        // gcd is in K[x] only
        gpart = BiPoly::constant(NFElem::one(f));
    }
    BiPoly cgb(f);
    for (int i = 0; i <= cg.degree(); ++i)
        if (!cg[i].is_zero()) cgb.set(i, 0, cg[i]);
    return gpart * cgb;
}

bool BiPoly::is_squarefree() const {
    if (is_zero()) return false;
    BiPoly g = gcd(*this, dx());
    g = gcd(g, dy());
    return g.total_degree() <= 0;
}

std::string BiPoly::str(const std::string& vx, const std::string& vy) const {
    if (t_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, v] : t_) {
        if (!first) os << " + ";
        os << "(" << v.str() << ")";
        if (k.first) os << "*" << vx << (k.first > 1 ? "^" + std::to_string(k.first) : "");
        if (k.second) os << "*" << vy << (k.second > 1 ? "^" + std::to_string(k.second) : "");
        first = false;
    }
    return os.str();
}

} // namespace logres
