#ifndef QSP_EXT_POLY_HPP
#define QSP_EXT_POLY_HPP

#include <utility>
#include <vector>

#include <gmpxx.h>

#include "qsp/ext_field.hpp"

namespace qsp {

// Dense univariate polynomial with coefficients in an extension field.
// Only used at desk scale (root counting oracles, Semaev solving).
class ExtPoly {
public:
    explicit ExtPoly(const ExtField& field) : field_(field) {}
    ExtPoly(const ExtField& field, std::vector<ExtElem> coeffs);

    static ExtPoly from_fp_poly(const ExtField& field, const FpPoly& f);
    static ExtPoly x(const ExtField& field);
    static ExtPoly monomial(const ExtField& field, std::size_t k, const ExtElem& c);

    const ExtField& field() const { return field_; }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    ExtElem coeff(std::size_t i) const;
    const std::vector<ExtElem>& coeffs() const { return c_; }
    ExtElem eval(const ExtElem& x) const;

    friend ExtPoly operator+(const ExtPoly& a, const ExtPoly& b);
    friend ExtPoly operator-(const ExtPoly& a, const ExtPoly& b);
    friend ExtPoly operator*(const ExtPoly& a, const ExtPoly& b);
    friend bool operator==(const ExtPoly& a, const ExtPoly& b);

    static std::pair<ExtPoly, ExtPoly> divmod(const ExtPoly& f, const ExtPoly& g);
    ExtPoly monic() const;
    static ExtPoly gcd(ExtPoly a, ExtPoly b);
    static ExtPoly powmod(const ExtPoly& base, const mpz_class& e, const ExtPoly& mod);

private:
    void trim();
    ExtField field_;
    std::vector<ExtElem> c_;
};

} // namespace qsp

#endif
