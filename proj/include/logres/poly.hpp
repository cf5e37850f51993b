#pragma once

#include "logres/numberfield.hpp"

#include <array>
#include <map>
#include <optional>
#include <vector>

namespace logres {

// ---------------------------------------------------------------------------
// Univariate polynomials over Q(a), dense, constant term first.
// ---------------------------------------------------------------------------
class UPoly {
  public:
    UPoly() = default;
    explicit UPoly(FieldPtr f) : field_(std::move(f)) {}
    UPoly(FieldPtr f, std::vector<NFElem> c) : field_(std::move(f)), c_(std::move(c)) { trim(); }
    static UPoly constant(const NFElem& e);
    static UPoly monomial(const FieldPtr& f, int deg, const NFElem& c);

    const FieldPtr& field() const { return field_; }
    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; } // -1 for zero
    NFElem operator[](int i) const;
    const std::vector<NFElem>& coeffs() const { return c_; }
    NFElem lead() const;
    NFElem eval(const NFElem& x) const;

    UPoly operator+(const UPoly& o) const;
    UPoly operator-(const UPoly& o) const;
    UPoly operator*(const UPoly& o) const;
    UPoly operator*(const NFElem& s) const;
    UPoly operator-() const;
    bool operator==(const UPoly& o) const { return c_ == o.c_; }

    UPoly derivative() const;
    static std::pair<UPoly, UPoly> divmod(const UPoly& a, const UPoly& b);
    static UPoly gcd(UPoly a, UPoly b); // monic gcd
    UPoly monic() const;
    std::string str(const std::string& var = "t") const;

  private:
    void trim();
    FieldPtr field_ = NumberField::rationals();
    std::vector<NFElem> c_;
};

// All roots of p lying in the coefficient field, with multiplicity; the second
// member is the nonsplit cofactor (constant iff p splits into linear factors
// over the field). Complete for fields of degree <= 2; for higher degree only
// rational roots are detected and genuine field roots may be reported nonsplit.
struct RootReport {
    std::vector<std::pair<NFElem, int>> roots;
    UPoly nonsplit;
    bool fully_split() const { return nonsplit.degree() <= 0; }
};
RootReport field_roots(const UPoly& p);

// ---------------------------------------------------------------------------
// Bivariate polynomials over Q(a), sparse map (i,j) -> coeff for x^i y^j.
// ---------------------------------------------------------------------------
class BiPoly {
  public:
    using Key = std::pair<int, int>;
    BiPoly() = default;
    explicit BiPoly(FieldPtr f) : field_(std::move(f)) {}
    static BiPoly constant(const NFElem& e);
    static BiPoly var_x(const FieldPtr& f);
    static BiPoly var_y(const FieldPtr& f);
    static BiPoly monomial(const FieldPtr& f, int i, int j, const NFElem& c);

    const FieldPtr& field() const { return field_; }
    const std::map<Key, NFElem>& terms() const { return t_; }
    bool is_zero() const { return t_.empty(); }
    void set(int i, int j, const NFElem& c);
    NFElem coeff(int i, int j) const;
    int total_degree() const;
    // Multiplicity at the origin (min total degree of a term); -1 for zero poly.
    int order_at_origin() const;
    int degree_x() const;
    int degree_y() const;

    BiPoly operator+(const BiPoly& o) const;
    BiPoly operator-(const BiPoly& o) const;
    BiPoly operator*(const BiPoly& o) const;
    BiPoly operator*(const NFElem& s) const;
    BiPoly operator-() const;
    bool operator==(const BiPoly& o) const { return t_ == o.t_; }

    BiPoly dx() const;
    BiPoly dy() const;
    NFElem eval(const NFElem& x, const NFElem& y) const;
    UPoly eval_x(const NFElem& x) const; // substitute x, univariate in y
    UPoly eval_y(const NFElem& y) const; // substitute y, univariate in x
    BiPoly subst(const BiPoly& px, const BiPoly& py) const;
    // Exact division by x^i y^j; throws if not divisible.
    BiPoly shift_down(int i, int j) const;
    // Exact polynomial division; throws if not divisible.
    static BiPoly exact_div(const BiPoly& a, const BiPoly& b);
    static std::optional<BiPoly> try_div(const BiPoly& a, const BiPoly& b);
    // Terms of total degree < bound.
    BiPoly truncated(int bound) const;
    // Homogeneous part of lowest total degree.
    BiPoly lowest_part() const;
    // View as univariate in y with UPoly-in-x coefficients, and back.
    std::vector<UPoly> as_y_coeffs() const;
    static BiPoly from_y_coeffs(const FieldPtr& f, const std::vector<UPoly>& c);

    static BiPoly resultant_y(const BiPoly& a, const BiPoly& b); // in x
    static BiPoly gcd(const BiPoly& a, const BiPoly& b);
    bool is_squarefree() const;
    std::string str(const std::string& vx = "x", const std::string& vy = "y") const;

  private:
    FieldPtr field_ = NumberField::rationals();
    std::map<Key, NFElem> t_;
};

// ---------------------------------------------------------------------------
// Homogeneous trivariate polynomials over Q(a) in X,Y,Z.
// ---------------------------------------------------------------------------
class HPoly {
  public:
    using Key = std::array<int, 3>;
    HPoly() = default;
    HPoly(FieldPtr f, int deg) : field_(std::move(f)), deg_(deg) {}

    const FieldPtr& field() const { return field_; }
    int degree() const { return deg_; }
    bool is_zero() const { return t_.empty(); }
    const std::map<Key, NFElem>& terms() const { return t_; }
    void set(int a, int b, int c, const NFElem& v);
    NFElem coeff(int a, int b, int c) const;

    HPoly operator+(const HPoly& o) const;
    HPoly operator-(const HPoly& o) const;
    HPoly operator*(const HPoly& o) const;
    HPoly operator*(const NFElem& s) const;
    HPoly operator-() const;
    bool operator==(const HPoly& o) const { return deg_ == o.deg_ && t_ == o.t_; }

    HPoly d(int var) const; // partial derivative, var in {0,1,2}
    NFElem eval(const NFElem& x, const NFElem& y, const NFElem& z) const;
    // Dehomogenize in chart var=1; remaining vars keep their cyclic order:
    // chart 2 (z=1) -> (x,y); chart 0 (x=1) -> (y,z); chart 1 (y=1) -> (x,z).
    BiPoly dehomogenize(int chart) const;
    static HPoly homogenize(const BiPoly& p, int chart, int degree);
    std::string str() const;

    static HPoly det3(const std::array<HPoly, 9>& m); // row-major 3x3
    static HPoly jacobian(const HPoly& f, const HPoly& g, const HPoly& h);

  private:
    FieldPtr field_ = NumberField::rationals();
    int deg_ = 0;
    std::map<Key, NFElem> t_;
};

// Monomials of a given total degree in 3 variables, in a fixed (lex) order.
std::vector<HPoly::Key> monomials_of_degree(int d);

} // namespace logres
