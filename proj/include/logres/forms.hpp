#pragma once

#include "logres/derive.hpp"
#include "logres/resolve.hpp"

#include <optional>
#include <vector>

namespace logres {

// Rational function in one variable over the field.
struct RationalFn {
    UPoly num, den;
    bool is_zero() const { return num.is_zero(); }
    NFElem eval(const NFElem& w) const;
    // residue at a simple pole w0 (den(w0) = 0, den'(w0) != 0)
    NFElem residue(const NFElem& w0) const;
};

// A global rational 2-form  numerator * omega / (product of component
// equations); deg numerator + 3 = sum of denominator degrees.
struct TwoForm {
    HPoly numerator;
    std::vector<std::string> denominator; // component ids

    static TwoForm make(const DerivedArrangement& D, HPoly numerator,
                        std::vector<std::string> denominator);
};

// ---- local core -------------------------------------------------------------
// Pullbacks of a local 2-form  numer * dx^dy / (prod denoms)  through a germ
// resolution, with exact residue extraction.
class LocalFormCore {
  public:
    LocalFormCore(const Resolution& res, BiPoly numer, std::vector<BiPoly> denoms);

    // ord_{E_v} of the pulled-back form (numerator order + discrepancy - poles).
    long long form_order(int vertex) const;

    // Residue 1-form along E_v (v blown up), as a rational function of the
    // direction coordinate w in the standard blow-up chart at v; zero when the
    // form has no pole along E_v. Throws if the pole order exceeds one.
    RationalFn eta_along(int vertex) const;
    // direction coordinate of a child on E_v (nullopt for the infinity chart)
    std::optional<NFElem> child_direction(int vertex, int child) const;

    // Res^2 at the crossing of two local divisors at `vertex`'s origin.
    // A divisor is named by a denominator index (strict part at the vertex) or
    // by the axis marker -1 (divisor {s=0}) / -2 (divisor {t=0}).
    NFElem res2_at(int vertex, int divA, int divB) const;

    // Value at the origin of `vertex` of the residue 1-form along the strict
    // part of denominator `div`, measured against the first chart coordinate.
    NFElem eta_value_on_strict(int vertex, int div) const;

  private:
    struct Pulled {
        // F o Phi = s^as t^at * reduced, reduced not divisible by s or t
        BiPoly reduced;
        int as = 0, at = 0;
    };
    Pulled pull(const BiPoly& f, const BiPoly& cx, const BiPoly& cy, bool strip_s,
                bool strip_t) const;
    static Pulled split_axes(const BiPoly& g, bool strip_s, bool strip_t);
    const Resolution& res_;
    BiPoly numer_;
    std::vector<BiPoly> denoms_;
};

// ---- global layer -----------------------------------------------------------

struct LogDivisorEntry {
    size_t point;
    int vertex;          // resolution vertex (blown up) whose divisor is audited
    long long ord;       // pullback order of the form along the divisor
    long long k_disc;
    long long pole_bound; // ord >= -1 required
    bool ok;
};

struct LogCheckReport {
    bool logarithmic = true;
    std::vector<LogDivisorEntry> entries;
    std::string text() const;
};

// Checks log-resolution logarithmicity of the form via pullback orders at
// every exceptional divisor over every singular point of the arrangement.
LogCheckReport is_log_resolution_logarithmic(const DerivedArrangement& D, const TwoForm& f);

// Local core for a global form at one arrangement point, using the full-germ
// resolution (or a sub-germ one when `comps` is nonempty).
LocalFormCore local_core(const DerivedArrangement& D, const TwoForm& f, size_t point,
                         const std::set<std::string>& comps = {});

// Res^2 of the form at the transversal crossing of two components at a point
// where both are smooth (e.g. nodes and points at infinity); divisor order is
// the given one.
NFElem res2_at_node(const DerivedArrangement& D, const TwoForm& f, size_t point,
                    const std::string& compA, const std::string& compB);

} // namespace logres
