#ifndef QSP_LINEARIZED_HPP
#define QSP_LINEARIZED_HPP

#include <cstdint>
#include <vector>

#include <gmpxx.h>

#include "qsp/config.hpp"
#include "qsp/ext_field.hpp"
#include "qsp/ext_matrix.hpp"
#include "qsp/fp_poly.hpp"
#include "qsp/fp_matrix.hpp"
#include "qsp/rational.hpp"

namespace qsp {

// L(X) = X^(p^n') - (a_ell X^(p^ell) + ... + a_1 X^p + a_0 X) over F_{p^n}.
// Stores the lambda-side coefficients a_0..a_ell; trailing zeros trimmed so
// the top stored coefficient defines ell. The zero lambda (subfield
// polynomial X^(p^n')) is representable with an empty coefficient list.
class LinearizedQsp {
public:
    LinearizedQsp(const ExtField& field, unsigned n_prime, std::vector<ExtElem> lambda_coeffs);

    // Exponent map: monic f = X^n' + c_{n'-1} X^(n'-1) + ... + c_0 gives
    // L_f = X^(p^n') + c_{n'-1} X^(p^(n'-1)) + ... + c_0 X, i.e. a_i = -c_i.
    static LinearizedQsp linearize(const ExtField& field, const FpPoly& f);
    // Inverse of the exponent map; requires prime-subfield coefficients.
    FpPoly de_linearize() const;

    const ExtField& field() const { return field_; }
    unsigned n_prime() const { return np_; }
    unsigned n() const { return field_.n(); }
    // index of the top nonzero lambda coefficient; 0 when lambda = a_0 X or 0
    unsigned ell() const;
    bool lambda_is_zero() const { return a_.empty(); }
    ExtElem a(unsigned i) const;   // lambda coefficient, zero beyond ell
    const std::vector<ExtElem>& lambda_coeffs() const { return a_; }
    bool prime_subfield_coeffs() const;

    ExtElem eval(const ExtElem& x) const;
    mpz_class poly_degree() const;   // p^n'

    // beta = ell*n/n'^2; throws std::domain_error when ell = 0 (subfield case)
    Rational beta() const;
    // same value without the ell >= 1 guard
    Rational beta_raw() const;

    std::string to_string() const;

private:
    ExtField field_;
    unsigned np_;
    std::vector<ExtElem> a_;
};

// f | X^n - 1 over F_p; f(0) != 0 required. Equivalent to "L_f splits
// completely over F_{p^n}".
bool split_test_div(const FpPoly& f, unsigned n);

// companion matrix of the conventional polynomial underlying L
ExtMatrix companion_matrix(const LinearizedQsp& L);
// A_L = C_L * C_L^sigma * ... * C_L^sigma^(n-1), sigma entrywise Frobenius
ExtMatrix frobenius_product(const LinearizedQsp& L);

// Number of roots of L in F_{p^n} as p^(n_1) with
// n_1 = n' - rank(A_L - I). Requires a_0 != 0.
mpz_class split_test_companion(const LinearizedQsp& L);
bool splits_completely_companion(const LinearizedQsp& L);

// deg gcd(L(X), X^(p^n) - X), computed with a powmod tower in the twisted
// polynomial ring; exact count of distinct roots of L in F_{p^n}.
mpz_class root_count_oracle(const LinearizedQsp& L);

// brute-force root count by full field enumeration (cap-guarded)
mpz_class root_count_enumerate(const LinearizedQsp& L, const Caps& caps = default_caps());

// the matrix of x -> L(x) as an F_p-linear map on F_{p^n} (n x n)
FpMatrix linear_map_matrix(const LinearizedQsp& L);
// all roots of L in F_{p^n}, i.e. the kernel of the linear map,
// enumerated from a kernel basis; size-guarded by caps
std::vector<ExtElem> root_set(const LinearizedQsp& L, const Caps& caps = default_caps());

// Lemma: complete splitting forces floor(n/n')*ell + (n mod n') >= n'.
bool lemma_mc_check(unsigned n, unsigned n_prime, unsigned ell);

// n' + (n'-ell)*floor((n'-1)/ell); requires 1 <= ell < n'
unsigned min_n(unsigned n_prime, unsigned ell);
bool low_bound_check(unsigned n, unsigned n_prime, unsigned ell);

// the theorem floor for completely splitting linearized QSPs
inline Rational theorem_beta_floor() { return Rational(3, 4); }

} // namespace qsp

#endif
