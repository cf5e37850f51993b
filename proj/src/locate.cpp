#include "logres/locate.hpp"
#include "logres/parser.hpp"

#include <algorithm>
#include <sstream>

namespace logres {

ProjPoint ProjPoint::normalized(NFElem X, NFElem Y, NFElem Z) {
    NFElem* last = nullptr;
    if (!X.is_zero()) last = &X;
    if (!Y.is_zero()) last = &Y;
    if (!Z.is_zero()) last = &Z;
    if (!last) throw std::runtime_error("ProjPoint: all coordinates zero");
    NFElem inv = last->inverse();
    return ProjPoint{X * inv, Y * inv, Z * inv};
}

bool ProjPoint::operator<(const ProjPoint& o) const {
    int c = NFElem::cmp(x, o.x);
    if (c) return c < 0;
    c = NFElem::cmp(y, o.y);
    if (c) return c < 0;
    return NFElem::cmp(z, o.z) < 0;
}

std::string ProjPoint::str() const {
    return "[" + x.str() + " : " + y.str() + " : " + z.str() + "]";
}

int ProjPoint::chart() const {
    if (!z.is_zero()) return 2;
    if (!y.is_zero()) return 1;
    return 0;
}

bool vanishes_at(const HPoly& F, const ProjPoint& P) { return F.eval(P.x, P.y, P.z).is_zero(); }

BiPoly local_equation(const HPoly& F, const ProjPoint& P) {
    int ch = P.chart();
    BiPoly f = F.dehomogenize(ch);
    const FieldPtr& K = F.field();
    NFElem a = NFElem::zero(K), b = NFElem::zero(K);
    if (ch == 2) { a = P.x; b = P.y; }
    else if (ch == 1) { a = P.x; b = P.z; }
    else { a = P.y; b = P.z; }
    BiPoly px = BiPoly::var_x(K) + BiPoly::constant(a);
    BiPoly py = BiPoly::var_y(K) + BiPoly::constant(b);
    return f.subst(px, py);
}

namespace {

// Restriction to z = 0 as a univariate polynomial in w = Y/X (coefficient of
// w^j is the X^{d-j} Y^j coefficient); second member is true when the
// direction [0:1] is a root (degree drop).
std::pair<UPoly, bool> infinity_slice(const HPoly& F) {
    const FieldPtr& K = F.field();
    int d = F.degree();
    std::vector<NFElem> cs(d + 1, NFElem::zero(K));
    for (const auto& [k, v] : F.terms()) {
        if (k[2] != 0) continue;
        cs[k[1]] = v;
    }
    UPoly p(K, std::move(cs));
    return {p, p.degree() < d};
}

// splits a univariate polynomial known to consist of genuine point data
std::vector<NFElem> split_or_throw(const UPoly& p, const std::string& what) {
    std::vector<NFElem> out;
    if (p.degree() < 1) return out;
    auto rep = field_roots(p);
    if (!rep.fully_split())
        throw FieldExtensionError("field extension required: " + what + " factor " +
                                  rep.nonsplit.str("w") + " does not split over " +
                                  p.field()->describe());
    for (const auto& [r, m] : rep.roots) out.push_back(r);
    return out;
}

} // namespace

std::vector<ProjPoint> intersection_points(const HPoly& F, const HPoly& G) {
    const FieldPtr& K = F.field();
    std::vector<ProjPoint> pts;
    auto push = [&](ProjPoint p) {
        for (const auto& q : pts)
            if (q == p) return;
        pts.push_back(p);
    };

    // affine chart z = 1
    BiPoly f = F.dehomogenize(2), g = G.dehomogenize(2);
    if (!f.is_zero() && !g.is_zero()) {
        BiPoly res = BiPoly::resultant_y(f, g);
        if (res.is_zero())
            throw std::runtime_error("intersection_points: inputs share a component");
        UPoly rx = res.eval_y(NFElem::zero(K));
        if (rx.degree() >= 1) {
            auto rep = field_roots(rx);
            if (!rep.fully_split())
                throw FieldExtensionError("field extension required: resultant factor " +
                                          rep.nonsplit.str("x") + " does not split over " +
                                          K->describe());
            for (const auto& [x0, m] : rep.roots) {
                UPoly fy = f.eval_x(x0), gy = g.eval_x(x0);
                UPoly common = fy.is_zero() ? gy : (gy.is_zero() ? fy : UPoly::gcd(fy, gy));
                if (common.degree() < 1) continue;
                auto yrep = field_roots(common);
                if (!yrep.fully_split())
                    throw FieldExtensionError("field extension required: fiber factor " +
                                              yrep.nonsplit.str("y") + " does not split over " +
                                              K->describe());
                for (const auto& [y0, n] : yrep.roots)
                    push(ProjPoint::normalized(x0, y0, NFElem::one(K)));
            }
        }
        // the resultant may be a nonzero constant (no affine solutions): fine.
        // It can also vanish on x-fibers shared entirely; excluded by coprimality.
    }

    // points at infinity (Z = 0): only the common factor must split
    auto [pf, fdrop] = infinity_slice(F);
    auto [pg, gdrop] = infinity_slice(G);
    if (pf.is_zero() && pg.is_zero())
        throw std::runtime_error("intersection_points: both curves contain the line z=0");
    UPoly common;
    bool drop;
    if (pf.is_zero()) { common = pg; drop = gdrop; }
    else if (pg.is_zero()) { common = pf; drop = fdrop; }
    else { common = UPoly::gcd(pf, pg); drop = fdrop && gdrop; }
    if (drop) push(ProjPoint::normalized(NFElem::zero(K), NFElem::one(K), NFElem::zero(K)));
    for (const auto& w0 : split_or_throw(common, "point at infinity"))
        push(ProjPoint::normalized(NFElem::one(K), w0, NFElem::zero(K)));
    std::sort(pts.begin(), pts.end());
    return pts;
}

std::vector<ProjPoint> singular_points_of(const HPoly& F) {
    const FieldPtr& K = F.field();
    std::vector<ProjPoint> out;
    if (F.degree() <= 1) return out;
    std::array<HPoly, 3> parts = {F.d(0), F.d(1), F.d(2)};

    // Affine chart z=1: eliminate y from (f, f_x) and (f, f_y); spurious
    // x-fibers (two different near-singular alignments) can make the gcd of
    // the two resultants fail to split even though no singular point is
    // irrational, so retry under rational shears before giving up.
    BiPoly f = F.dehomogenize(2);
    bool done = false;
    for (long lam : {0L, 1L, 2L, 3L, 5L, 7L}) {
        BiPoly fs = f;
        if (lam != 0) {
            BiPoly px = BiPoly::var_x(K) + BiPoly::var_y(K) * NFElem(K, Rational(lam));
            fs = f.subst(px, BiPoly::var_y(K));
        }
        BiPoly fx = fs.dx(), fy = fs.dy();
        if (fx.is_zero() && fy.is_zero()) { done = true; break; } // constant in the chart
        UPoly r1 = fx.is_zero() ? UPoly(K) : BiPoly::resultant_y(fs, fx).eval_y(NFElem::zero(K));
        UPoly r2 = fy.is_zero() ? UPoly(K) : BiPoly::resultant_y(fs, fy).eval_y(NFElem::zero(K));
        if (r1.is_zero() && r2.is_zero()) continue; // non-reduced; caller validates
        UPoly g = r1.is_zero() ? r2 : (r2.is_zero() ? r1 : UPoly::gcd(r1, r2));
        auto rep = field_roots(g);
        if (!rep.fully_split()) continue; // possibly spurious; try another shear
        for (const auto& [x0, m] : rep.roots) {
            UPoly a = fs.eval_x(x0), b = fx.eval_x(x0), c = fy.eval_x(x0);
            UPoly gy = UPoly::gcd(UPoly::gcd(a, b), c);
            if (gy.degree() < 1) continue; // spurious fiber
            for (const auto& y0 : split_or_throw(gy, "singular point fiber")) {
                NFElem X = x0 + NFElem(K, Rational(lam)) * y0;
                out.push_back(ProjPoint::normalized(X, y0, NFElem::one(K)));
            }
        }
        done = true;
        break;
    }
    if (!done)
        throw FieldExtensionError("field extension required: singular locus of the curve "
                                  "does not split over " + K->describe());

    // Points at infinity: singular iff all partials vanish; the candidates are
    // the common roots of the restricted binary forms, a genuine gcd.
    auto [p0, d0] = infinity_slice(parts[0]);
    auto [p1, d1] = infinity_slice(parts[1]);
    auto [p2, d2] = infinity_slice(parts[2]);
    UPoly g = UPoly::constant(NFElem::one(K));
    bool first = true;
    bool drop = d0 && d1 && d2;
    for (const UPoly* p : {&p0, &p1, &p2}) {
        if (p->is_zero()) continue; // that partial vanishes on z=0 entirely
        g = first ? *p : UPoly::gcd(g, *p);
        first = false;
    }
    if (first) {
        // all partials vanish identically on z=0: f divisible by z^2? excluded
        // for reduced input; treat the full line as smooth locus of z-factor.
        drop = false;
    }
    if (drop) {
        ProjPoint P = ProjPoint::normalized(NFElem::zero(K), NFElem::one(K), NFElem::zero(K));
        if (vanishes_at(F, P)) out.push_back(P);
    }
    if (!first)
        for (const auto& w0 : split_or_throw(g, "singular point at infinity")) {
            ProjPoint P = ProjPoint::normalized(NFElem::one(K), w0, NFElem::zero(K));
            bool sing = vanishes_at(F, P);
            for (int i = 0; i < 3; ++i) sing = sing && parts[i].eval(P.x, P.y, P.z).is_zero();
            if (sing) out.push_back(P);
        }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

bool coprime(const HPoly& F, const HPoly& G) {
    bool fz = true, gz = true;
    for (const auto& [k, v] : F.terms()) fz = fz && k[2] != 0;
    for (const auto& [k, v] : G.terms()) gz = gz && k[2] != 0;
    if (fz && gz) return false; // both divisible by z
    BiPoly f = F.dehomogenize(2), g = G.dehomogenize(2);
    if (f.is_zero() || g.is_zero()) return true; // one of them IS z (degree checked upstream)
    return BiPoly::gcd(f, g).total_degree() < 1;
}

ProjPoint parse_point(const std::string& text, const FieldPtr& field) {
    std::string s = text;
    auto strip = [](std::string v) {
        size_t a = v.find_first_not_of(" \t");
        size_t b = v.find_last_not_of(" \t");
        if (a == std::string::npos) return std::string();
        return v.substr(a, b - a + 1);
    };
    s = strip(s);
    if (s.size() < 2 || s.front() != '[' || s.back() != ']')
        throw std::runtime_error("point literal must look like [a : b : c]: " + text);
    s = s.substr(1, s.size() - 2);
    std::vector<std::string> parts;
    size_t pos = 0;
    while (true) {
        size_t c = s.find(':', pos);
        if (c == std::string::npos) { parts.push_back(strip(s.substr(pos))); break; }
        parts.push_back(strip(s.substr(pos, c - pos)));
        pos = c + 1;
    }
    if (parts.size() != 3) throw std::runtime_error("point literal needs three coordinates: " + text);
    return ProjPoint::normalized(parse_field_element(parts[0], field),
                                 parse_field_element(parts[1], field),
                                 parse_field_element(parts[2], field));
}

bool squarefree(const HPoly& F) {
    // z^2 | F?
    bool z2 = true;
    for (const auto& [k, v] : F.terms()) z2 = z2 && k[2] >= 2;
    if (z2) return false;
    BiPoly f = F.dehomogenize(2);
    if (f.total_degree() < 1) return true;
    return f.is_squarefree();
}

} // namespace logres
