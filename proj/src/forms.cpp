#include "logres/forms.hpp"

#include <sstream>

namespace logres {

NFElem RationalFn::eval(const NFElem& w) const {
    NFElem d = den.eval(w);
    if (d.is_zero()) throw std::runtime_error("RationalFn::eval at a pole");
    return num.eval(w) / d;
}

NFElem RationalFn::residue(const NFElem& w0) const {
    if (!den.eval(w0).is_zero()) return NFElem::zero(num.field());
    UPoly dd = den.derivative();
    NFElem d1 = dd.eval(w0);
    if (d1.is_zero()) throw std::runtime_error("RationalFn::residue: pole is not simple");
    return num.eval(w0) / d1;
}

TwoForm TwoForm::make(const DerivedArrangement& D, HPoly numerator,
                      std::vector<std::string> denominator) {
    int denom_deg = 0;
    for (const auto& c : denominator) denom_deg += D.equation_of(c).degree();
    if (numerator.degree() + 3 != denom_deg)
        throw std::runtime_error("TwoForm: numerator degree + 3 must equal the denominator degree");
    return TwoForm{std::move(numerator), std::move(denominator)};
}

// ---- LocalFormCore ----------------------------------------------------------

LocalFormCore::LocalFormCore(const Resolution& res, BiPoly numer, std::vector<BiPoly> denoms)
    : res_(res), numer_(std::move(numer)), denoms_(std::move(denoms)) {}

LocalFormCore::Pulled LocalFormCore::pull(const BiPoly& f, const BiPoly& cx, const BiPoly& cy,
                                          bool strip_s, bool strip_t) const {
    Pulled p;
    BiPoly g = f.subst(cx, cy);
    if (g.is_zero()) throw std::runtime_error("LocalFormCore: zero pullback");
    int as = 1 << 20, at = 1 << 20;
    for (const auto& [k, v] : g.terms()) {
        as = std::min(as, k.first);
        at = std::min(at, k.second);
    }
    // only exceptional axes are divided out; a strict transform that happens to
    // lie along a coordinate axis stays in `reduced`.
    if (!strip_s) as = 0;
    if (!strip_t) at = 0;
    p.reduced = g.shift_down(as, at);
    p.as = as;
    p.at = at;
    return p;
}

LocalFormCore::Pulled LocalFormCore::split_axes(const BiPoly& g, bool strip_s, bool strip_t) {
    Pulled p;
    if (g.is_zero()) throw std::runtime_error("LocalFormCore: zero polynomial");
    int as = 1 << 20, at = 1 << 20;
    for (const auto& [k, v] : g.terms()) {
        as = std::min(as, k.first);
        at = std::min(at, k.second);
    }
    if (!strip_s) as = 0;
    if (!strip_t) at = 0;
    p.reduced = g.shift_down(as, at);
    p.as = as;
    p.at = at;
    return p;
}

namespace {

BiPoly jacobian_det(const BiPoly& cx, const BiPoly& cy) {
    return cx.dx() * cy.dy() - cx.dy() * cy.dx();
}

} // namespace

long long LocalFormCore::form_order(int vertex) const {
    const auto& v = res_.vertex(vertex);
    if (!v.blown_up) throw std::runtime_error("form_order: vertex was not blown up");
    auto ordv = [&](const BiPoly& f) {
        BiPoly g = f.subst(v.chart_x, v.chart_y);
        int o = g.order_at_origin();
        if (o < 0) throw std::runtime_error("form_order: zero pullback");
        return static_cast<long long>(o);
    };
    long long o = ordv(numer_) + v.k_disc;
    for (const auto& d : denoms_) o -= ordv(d);
    return o;
}

std::optional<NFElem> LocalFormCore::child_direction(int vertex, int child) const {
    const auto& c = res_.vertex(child);
    if (c.parent != vertex) throw std::runtime_error("child_direction: not a child");
    if (c.at_infinity_dir) return std::nullopt;
    return c.direction;
}

RationalFn LocalFormCore::eta_along(int vertex) const {
    const auto& v = res_.vertex(vertex);
    if (!v.blown_up) throw std::runtime_error("eta_along: vertex was not blown up");
    const FieldPtr& K = numer_.field();
    // chart (u,w): (s,t)_v = (u, u w), composed with the vertex chart
    BiPoly U = BiPoly::var_x(K), W = BiPoly::var_y(K);
    BiPoly sub_s = U, sub_t = U * W;
    BiPoly cx = v.chart_x.subst(sub_s, sub_t);
    BiPoly cy = v.chart_y.subst(sub_s, sub_t);
    BiPoly J = jacobian_det(cx, cy);
    // in the (u,w) chart the u-axis is E_v; the w-axis is exceptional iff the
    // vertex lay on a {t=0} divisor
    const bool strip_w = v.div_y.has_value();
    Pulled pn = pull(numer_, cx, cy, true, strip_w);
    Pulled pj = split_axes(J, true, strip_w);
    long long o = pn.as + pj.as;
    std::vector<Pulled> pd;
    for (const auto& d : denoms_) {
        pd.push_back(pull(d, cx, cy, true, strip_w));
        o -= pd.back().as;
    }
    if (o > -1) return RationalFn{UPoly(K), UPoly::constant(NFElem::one(K))};
    if (o < -1) throw std::runtime_error("eta_along: pole of order >= 2 (form not logarithmic)");
    // eta(w) = -[numer*J / prod denoms]|_{u=0} as a function of w; t-axis powers
    // cancel globally or indicate poles at w=0 handled via den.
    UPoly num = (pn.reduced * pj.reduced).eval_x(NFElem::zero(K));
    UPoly den = UPoly::constant(NFElem::one(K));
    long long tpow = pn.at + pj.at;
    for (const auto& p : pd) {
        den = den * p.reduced.eval_x(NFElem::zero(K));
        tpow -= p.at;
    }
    // fold residual w-powers (t-axis through the chart maps) into num/den
    if (tpow > 0) num = num * UPoly::monomial(K, static_cast<int>(tpow), NFElem::one(K));
    if (tpow < 0) den = den * UPoly::monomial(K, static_cast<int>(-tpow), NFElem::one(K));
    return RationalFn{-num, den};
}

NFElem LocalFormCore::res2_at(int vertex, int divA, int divB) const {
    const auto& v = res_.vertex(vertex);
    const FieldPtr& K = numer_.field();
    const bool strip_s = v.div_x.has_value(), strip_t = v.div_y.has_value();
    BiPoly J = jacobian_det(v.chart_x, v.chart_y);
    Pulled pn = pull(numer_, v.chart_x, v.chart_y, strip_s, strip_t);
    Pulled pj = split_axes(J, strip_s, strip_t);
    std::vector<Pulled> pd;
    for (const auto& d : denoms_) pd.push_back(pull(d, v.chart_x, v.chart_y, strip_s, strip_t));

    long long s_ord = pn.as + pj.as, t_ord = pn.at + pj.at;
    for (const auto& p : pd) {
        s_ord -= p.as;
        t_ord -= p.at;
    }
    // local equations of the two divisors
    auto divisor_poly = [&](int d) -> BiPoly {
        if (d == -1) return BiPoly::var_x(K);
        if (d == -2) return BiPoly::var_y(K);
        return pd.at(d).reduced;
    };
    BiPoly f1 = divisor_poly(divA), f2 = divisor_poly(divB);
    if (!f1.eval(NFElem::zero(K), NFElem::zero(K)).is_zero() ||
        !f2.eval(NFElem::zero(K), NFElem::zero(K)).is_zero())
        throw std::runtime_error("res2_at: chosen divisor does not pass through the vertex");

    // Residue of [N/(D)] ds^dt at the crossing of f1, f2: divide the two
    // divisor factors out of the denominator and require everything else to be
    // a unit at the origin (pole orders must be exactly one).
    long long need_s = (divA == -1 ? 1 : 0) + (divB == -1 ? 1 : 0);
    long long need_t = (divA == -2 ? 1 : 0) + (divB == -2 ? 1 : 0);
    if (-s_ord > need_s || -t_ord > need_t)
        throw std::runtime_error("res2_at: pole order too deep at the requested crossing");
    if (-s_ord < need_s || -t_ord < need_t) return NFElem::zero(K); // no pole: residue vanishes

    NFElem num_val = pn.reduced.eval(NFElem::zero(K), NFElem::zero(K)) *
                     pj.reduced.eval(NFElem::zero(K), NFElem::zero(K));
    NFElem den_val = NFElem::one(K);
    int strictA = divA >= 0 ? divA : -1, strictB = divB >= 0 ? divB : -1;
    for (size_t i = 0; i < pd.size(); ++i) {
        if (static_cast<int>(i) == strictA || static_cast<int>(i) == strictB) continue;
        NFElem val = pd[i].reduced.eval(NFElem::zero(K), NFElem::zero(K));
        if (val.is_zero())
            throw std::runtime_error("res2_at: another polar divisor passes through the crossing");
        den_val *= val;
    }
    BiPoly Jf = jacobian_det(f1, f2);
    NFElem jval = Jf.eval(NFElem::zero(K), NFElem::zero(K));
    if (jval.is_zero()) throw std::runtime_error("res2_at: divisors are tangent at the crossing");
    if (num_val.is_zero()) return NFElem::zero(K);
    return num_val / (den_val * jval);
}

NFElem LocalFormCore::eta_value_on_strict(int vertex, int div) const {
    const auto& v = res_.vertex(vertex);
    const FieldPtr& K = numer_.field();
    const bool strip_s = v.div_x.has_value(), strip_t = v.div_y.has_value();
    BiPoly J = jacobian_det(v.chart_x, v.chart_y);
    Pulled pn = pull(numer_, v.chart_x, v.chart_y, strip_s, strip_t);
    Pulled pj = split_axes(J, strip_s, strip_t);
    std::vector<Pulled> pd;
    for (const auto& d : denoms_) pd.push_back(pull(d, v.chart_x, v.chart_y, strip_s, strip_t));
    long long s_ord = pn.as + pj.as, t_ord = pn.at + pj.at;
    for (const auto& p : pd) {
        s_ord -= p.as;
        t_ord -= p.at;
    }
    if (s_ord != 0 || t_ord != 0)
        throw std::runtime_error("eta_value_on_strict: residual axis pole at the vertex");
    const BiPoly& f = pd.at(div).reduced;
    if (!f.eval(NFElem::zero(K), NFElem::zero(K)).is_zero())
        throw std::runtime_error("eta_value_on_strict: divisor does not pass through the vertex");
    NFElem dfdt = f.dy().eval(NFElem::zero(K), NFElem::zero(K));
    if (dfdt.is_zero())
        throw std::runtime_error("eta_value_on_strict: strict transform tangent to the axis");
    NFElem num_val = pn.reduced.eval(NFElem::zero(K), NFElem::zero(K)) *
                     pj.reduced.eval(NFElem::zero(K), NFElem::zero(K));
    NFElem den_val = NFElem::one(K);
    for (size_t i = 0; i < pd.size(); ++i) {
        if (static_cast<int>(i) == div) continue;
        NFElem val = pd[i].reduced.eval(NFElem::zero(K), NFElem::zero(K));
        if (val.is_zero())
            throw std::runtime_error("eta_value_on_strict: another polar divisor at the vertex");
        den_val *= val;
    }
    return num_val / (den_val * dfdt);
}

// ---- global layer -----------------------------------------------------------

std::string LogCheckReport::text() const {
    std::ostringstream os;
    os << (logarithmic ? "logarithmic" : "NOT logarithmic") << "\n";
    for (const auto& e : entries)
        os << "  point#" << e.point << " E(v" << e.vertex << "): ord=" << e.ord
           << " k=" << e.k_disc << (e.ok ? " ok" : "  POLE TOO DEEP") << "\n";
    return os.str();
}

LocalFormCore local_core(const DerivedArrangement& D, const TwoForm& f, size_t point,
                         const std::set<std::string>& comps) {
    const Resolution& res = comps.empty() ? D.full_resolution_at(point) : D.resolution_at(point, comps);
    const ProjPoint& P = D.point_coords()[point];
    int chart = P.chart();
    // omega in the chart: +dx^dy for charts 0 and 2, -d(x)^d(y) for chart 1
    NFElem sign = chart == 1 ? -NFElem::one(D.field()) : NFElem::one(D.field());
    BiPoly numer = local_equation(f.numerator, P) * sign;
    std::vector<BiPoly> denoms;
    for (const auto& c : f.denominator) denoms.push_back(local_equation(D.equation_of(c), P));
    return LocalFormCore(res, std::move(numer), std::move(denoms));
}

LogCheckReport is_log_resolution_logarithmic(const DerivedArrangement& D, const TwoForm& f) {
    LogCheckReport rep;
    for (size_t pi = 0; pi < D.point_coords().size(); ++pi) {
        LocalFormCore core = local_core(D, f, pi);
        const Resolution& res = D.full_resolution_at(pi);
        for (const auto& v : res.vertices()) {
            if (!v.blown_up) continue;
            long long o = core.form_order(v.id);
            bool ok = o >= -1;
            rep.entries.push_back({pi, v.id, o, v.k_disc, -1, ok});
            rep.logarithmic = rep.logarithmic && ok;
        }
    }
    return rep;
}

NFElem res2_at_node(const DerivedArrangement& D, const TwoForm& f, size_t point,
                    const std::string& compA, const std::string& compB) {
    LocalFormCore core = local_core(D, f, point);
    int ia = -10, ib = -10;
    for (size_t i = 0; i < f.denominator.size(); ++i) {
        if (f.denominator[i] == compA) ia = static_cast<int>(i);
        if (f.denominator[i] == compB) ib = static_cast<int>(i);
    }
    if (ia < 0 || ib < 0) throw std::runtime_error("res2_at_node: components not in the denominator");
    return core.res2_at(0, ia, ib);
}

} // namespace logres
