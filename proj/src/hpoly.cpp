#include "logres/poly.hpp"

#include <sstream>

namespace logres {

void HPoly::set(int a, int b, int c, const NFElem& v) {
    if (a + b + c != deg_) throw std::runtime_error("HPoly::set: wrong degree");
    if (v.is_zero()) t_.erase({a, b, c});
    else t_[{a, b, c}] = v;
}

NFElem HPoly::coeff(int a, int b, int c) const {
    auto it = t_.find({a, b, c});
    if (it == t_.end()) return NFElem::zero(field_);
    return it->second;
}

HPoly HPoly::operator+(const HPoly& o) const {
    if (is_zero()) return o;
    if (o.is_zero()) return *this;
    if (deg_ != o.deg_) throw std::runtime_error("HPoly: degree mismatch in +");
    HPoly r = *this;
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

HPoly HPoly::operator-(const HPoly& o) const { return *this + (-o); }

HPoly HPoly::operator-() const {
    HPoly r = *this;
    for (auto& [k, v] : r.t_) v = -v;
    return r;
}

HPoly HPoly::operator*(const HPoly& o) const {
    HPoly r(field_, deg_ + o.deg_);
    if (is_zero() || o.is_zero()) { r.deg_ = deg_ + o.deg_; return r; }
    for (const auto& [ka, va] : t_)
        for (const auto& [kb, vb] : o.t_) {
            Key k{ka[0] + kb[0], ka[1] + kb[1], ka[2] + kb[2]};
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

HPoly HPoly::operator*(const NFElem& s) const {
    HPoly r(field_, deg_);
    if (s.is_zero()) return r;
    for (const auto& [k, v] : t_) r.t_[k] = v * s;
    return r;
}

HPoly HPoly::d(int var) const {
    HPoly r(field_, deg_ > 0 ? deg_ - 1 : 0);
    for (const auto& [k, v] : t_) {
        if (k[var] == 0) continue;
        Key nk = k;
        nk[var] -= 1;
        r.t_[nk] = Rational(k[var]) * v;
    }
    return r;
}

NFElem HPoly::eval(const NFElem& x, const NFElem& y, const NFElem& z) const {
    NFElem acc = NFElem::zero(field_);
    for (const auto& [k, v] : t_) acc += v * x.pow(k[0]) * y.pow(k[1]) * z.pow(k[2]);
    return acc;
}

BiPoly HPoly::dehomogenize(int chart) const {
    // chart 2 (Z=1): (x,y) = (X,Y); chart 0 (X=1): (x,y) = (Y,Z); chart 1 (Y=1): (x,y) = (X,Z).
    BiPoly r(field_);
    for (const auto& [k, v] : t_) {
        int i, j;
        if (chart == 2) { i = k[0]; j = k[1]; }
        else if (chart == 0) { i = k[1]; j = k[2]; }
        else { i = k[0]; j = k[2]; }
        r.set(i, j, r.coeff(i, j) + v);
    }
    return r;
}

HPoly HPoly::homogenize(const BiPoly& p, int chart, int degree) {
    HPoly r(p.field(), degree);
    for (const auto& [k, v] : p.terms()) {
        int rest = degree - k.first - k.second;
        if (rest < 0) throw std::runtime_error("homogenize: degree too small");
        Key key;
        if (chart == 2) key = {k.first, k.second, rest};
        else if (chart == 0) key = {rest, k.first, k.second};
        else key = {k.first, rest, k.second};
        r.t_[key] = r.coeff(key[0], key[1], key[2]) + v;
        if (r.t_[key].is_zero()) r.t_.erase(key);
    }
    return r;
}

std::string HPoly::str() const {
    if (t_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    const char* names[3] = {"x", "y", "z"};
    for (const auto& [k, v] : t_) {
        if (!first) os << " + ";
        bool printed = false;
        if (v.is_rational() && v.rational_value() == 1) {
            if (k[0] + k[1] + k[2] == 0) { os << "1"; printed = true; }
        } else {
            os << "(" << v.str() << ")";
            printed = true;
        }
        for (int i = 0; i < 3; ++i) {
            if (k[i] == 0) continue;
            if (printed) os << "*";
            os << names[i];
            if (k[i] > 1) os << "^" << k[i];
            printed = true;
        }
        first = false;
    }
    return os.str();
}

HPoly HPoly::det3(const std::array<HPoly, 9>& m) {
    auto minor2 = [&](int a, int b, int c, int d) { return m[a] * m[d] - m[b] * m[c]; };
    return m[0] * minor2(4, 5, 7, 8) - m[1] * minor2(3, 5, 6, 8) + m[2] * minor2(3, 4, 6, 7);
}

HPoly HPoly::jacobian(const HPoly& f, const HPoly& g, const HPoly& h) {
    return det3({f.d(0), f.d(1), f.d(2),
                 g.d(0), g.d(1), g.d(2),
                 h.d(0), h.d(1), h.d(2)});
}

std::vector<HPoly::Key> monomials_of_degree(int d) {
    std::vector<HPoly::Key> out;
    for (int a = d; a >= 0; --a)
        for (int b = d - a; b >= 0; --b)
            out.push_back({a, b, d - a - b});
    return out;
}

} // namespace logres
