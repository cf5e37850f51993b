#pragma once

#include "logres/rational.hpp"

#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

namespace logres {

struct FieldExtensionError : std::runtime_error {
    explicit FieldExtensionError(const std::string& what) : std::runtime_error(what) {}
};

// Q(a) with a monic irreducible minimal polynomial over Q. Degree 1 means plain Q.
// Irreducibility is decided exactly for degree <= 4; higher degrees need
// `attested = true` from the caller.
class NumberField {
  public:
    static std::shared_ptr<const NumberField> rationals();
    // min_poly holds the monic minimal polynomial, constant term first,
    // including the leading 1 (size = degree + 1).
    static std::shared_ptr<const NumberField> make(std::vector<Rational> min_poly,
                                                   bool attested = false);

    int degree() const { return static_cast<int>(min_poly_.size()) - 1; }
    const std::vector<Rational>& min_poly() const { return min_poly_; }
    bool is_rational() const { return degree() == 1; }
    std::string describe() const;

  private:
    explicit NumberField(std::vector<Rational> mp) : min_poly_(std::move(mp)) {}
    std::vector<Rational> min_poly_;
};

using FieldPtr = std::shared_ptr<const NumberField>;

// Element of Q(a): residue class polynomial with rational coefficients,
// constant term first, length = field degree.
class NFElem {
  public:
    NFElem() : field_(NumberField::rationals()), c_(1) {}
    NFElem(FieldPtr field, Rational constant);
    NFElem(FieldPtr field, std::vector<Rational> coeffs);

    static NFElem zero(const FieldPtr& f) { return NFElem(f, Rational(0)); }
    static NFElem one(const FieldPtr& f) { return NFElem(f, Rational(1)); }
    static NFElem generator(const FieldPtr& f);

    const FieldPtr& field() const { return field_; }
    const std::vector<Rational>& coeffs() const { return c_; }
    bool is_zero() const;
    bool is_rational() const;
    // Constant-term view; throws unless the element lies in Q.
    Rational rational_value() const;

    NFElem operator-() const;
    NFElem operator+(const NFElem& o) const;
    NFElem operator-(const NFElem& o) const;
    NFElem operator*(const NFElem& o) const;
    NFElem operator/(const NFElem& o) const;
    NFElem inverse() const;
    NFElem pow(long e) const;
    bool operator==(const NFElem& o) const;
    bool operator!=(const NFElem& o) const { return !(*this == o); }

    NFElem& operator+=(const NFElem& o) { return *this = *this + o; }
    NFElem& operator-=(const NFElem& o) { return *this = *this - o; }
    NFElem& operator*=(const NFElem& o) { return *this = *this * o; }

    // Deterministic rendering, e.g. "1/2*a + 3" or "-a^2".
    std::string str(const std::string& gen = "a") const;
    // Total order used for canonical sorting of points; not an algebraic order.
    static int cmp(const NFElem& a, const NFElem& b);

  private:
    void reduce();
    FieldPtr field_;
    std::vector<Rational> c_;
};

NFElem operator*(const Rational& r, const NFElem& e);

} // namespace logres
