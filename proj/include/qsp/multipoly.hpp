#ifndef QSP_MULTIPOLY_HPP
#define QSP_MULTIPOLY_HPP

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "qsp/ext_field.hpp"
#include "qsp/ext_poly.hpp"

namespace qsp {

// Sparse multivariate polynomial over an extension field; a handful of
// variables and small degrees only (Semaev polynomials and their images).
class MultiPoly {
public:
    using Exponents = std::vector<unsigned>;

    MultiPoly(const ExtField& field, unsigned nvars) : field_(field), nvars_(nvars) {}

    static MultiPoly constant(const ExtField& field, unsigned nvars, const ExtElem& c);
    static MultiPoly variable(const ExtField& field, unsigned nvars, unsigned idx);

    const ExtField& field() const { return field_; }
    unsigned nvars() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }
    const std::map<Exponents, ExtElem>& terms() const { return terms_; }

    void add_term(const Exponents& e, const ExtElem& c);

    friend MultiPoly operator+(const MultiPoly& a, const MultiPoly& b);
    friend MultiPoly operator-(const MultiPoly& a, const MultiPoly& b);
    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
    friend bool operator==(const MultiPoly& a, const MultiPoly& b);

    ExtElem eval(const std::vector<ExtElem>& xs) const;
    // raise every coefficient to the p^i power
    MultiPoly coeff_frobenius(unsigned i) const;
    // substitute variable idx by a univariate polynomial in the same variable
    MultiPoly substitute(unsigned idx, const ExtPoly& g) const;
    // fix variable idx to a constant, dropping it from the support
    MultiPoly partial_eval(unsigned idx, const ExtElem& v) const;
    // collect into a univariate polynomial in variable idx; all other
    // variables must already be fixed (degree 0)
    ExtPoly to_univariate(unsigned idx) const;

    unsigned degree_in(unsigned idx) const;
    std::string to_string() const;

private:
    ExtField field_;
    unsigned nvars_;
    std::map<Exponents, ExtElem> terms_;
};

} // namespace qsp

#endif
