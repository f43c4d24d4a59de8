#ifndef QSP_FP_POLY_HPP
#define QSP_FP_POLY_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "qsp/fp.hpp"

namespace qsp {

// Dense univariate polynomial over F_p, coefficients least degree first.
// Invariant: leading coefficient nonzero unless the polynomial is zero,
// every residue in [0, p).
class FpPoly {
public:
    FpPoly() : p_(2) {}
    explicit FpPoly(std::uint64_t p) : p_(check_p(p)) {}
    FpPoly(std::uint64_t p, std::vector<std::int64_t> coeffs);

    static FpPoly zero(std::uint64_t p) { return FpPoly(p); }
    static FpPoly one(std::uint64_t p);
    static FpPoly x(std::uint64_t p);
    // c * X^k
    static FpPoly monomial(std::uint64_t p, std::size_t k, std::uint64_t c = 1);
    // X^n - 1
    static FpPoly xn_minus_one(std::uint64_t p, std::size_t n);

    std::uint64_t p() const { return p_; }
    // degree of the zero polynomial is -1
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_one() const { return c_.size() == 1 && c_[0] == 1; }
    bool is_monic() const { return !c_.empty() && c_.back() == 1; }
    std::uint64_t coeff(std::size_t i) const { return i < c_.size() ? c_[i] : 0; }
    const std::vector<std::uint64_t>& coeffs() const { return c_; }
    std::uint64_t lead() const { return c_.empty() ? 0 : c_.back(); }

    void set_coeff(std::size_t i, std::uint64_t v);
    std::uint64_t eval(std::uint64_t x) const;

    // indices i >= 1 with nonzero coefficient (includes the leading index)
    std::vector<std::size_t> support_above_zero() const;

    FpPoly operator-() const;
    friend FpPoly operator+(const FpPoly& a, const FpPoly& b);
    friend FpPoly operator-(const FpPoly& a, const FpPoly& b);
    friend FpPoly operator*(const FpPoly& a, const FpPoly& b);
    friend bool operator==(const FpPoly& a, const FpPoly& b) {
        return a.p_ == b.p_ && a.c_ == b.c_;
    }
    friend bool operator!=(const FpPoly& a, const FpPoly& b) { return !(a == b); }

    FpPoly scaled(std::uint64_t k) const;

    // quotient and remainder; g must be nonzero
    static std::pair<FpPoly, FpPoly> divmod(const FpPoly& f, const FpPoly& g);
    friend FpPoly operator/(const FpPoly& a, const FpPoly& b) { return divmod(a, b).first; }
    friend FpPoly operator%(const FpPoly& a, const FpPoly& b) { return divmod(a, b).second; }

    FpPoly monic() const;
    static FpPoly gcd(FpPoly a, FpPoly b);            // monic gcd
    // g*u = gcd (mod f); used for modular inverse
    static FpPoly invmod(const FpPoly& g, const FpPoly& f);

    static FpPoly powmod(const FpPoly& base, const mpz_class& e, const FpPoly& mod);

    // f(X^k)
    FpPoly substitute_xk(std::size_t k) const;
    FpPoly derivative() const;

    bool is_irreducible() const;

    // Sparse descending text form, e.g. "X^16+X^4+X+1" or "2*X^2-X+3".
    std::string to_string() const;
    // Accepts the descending sparse form as well as "c0 + c1*X + ..." and
    // compact "[c0,c1,...]" lists. Throws std::invalid_argument with a
    // position diagnostic on bad input.
    static FpPoly parse(const std::string& text, std::uint64_t p);

private:
    static std::uint64_t check_p(std::uint64_t p);
    void trim();

    std::uint64_t p_;
    std::vector<std::uint64_t> c_;
};

} // namespace qsp

#endif
