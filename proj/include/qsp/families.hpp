#ifndef QSP_FAMILIES_HPP
#define QSP_FAMILIES_HPP

#include <cstdint>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "qsp/fp_poly.hpp"
#include "qsp/rational.hpp"

namespace qsp {

// Deterministic primality: exact Miller-Rabin witnesses below 2^64, a fixed
// seeded witness schedule above.
bool is_prime_mpz(const mpz_class& n);

struct AdditiveFamilyMember {
    FpPoly f;
    unsigned n = 0;
    unsigned n_prime = 0;
    unsigned ell = 0;
    Rational beta;
};

// Type 1: h = X^(p_a) + ... + X^(p_0) + 1, p_i = 1 + q + ... + q^i, q = p^r,
// n = p_(a+1). r = 0 degenerates to the all-ones polynomial (Type 1bis).
AdditiveFamilyMember gen_type1(std::uint64_t p, unsigned r, unsigned a_index);

// Type 1bis: X^(n-1) + ... + X + 1 over F_p, splitting field exponent n.
AdditiveFamilyMember gen_type1bis(std::uint64_t p, unsigned n);

// Type 2: f_0 = sum X^(q^i - 1) or f_a = sum X^(q^i) + a (a != 0 in F_p),
// n = q^(d+1) - 1, q = p^r with r >= 1.
AdditiveFamilyMember gen_type2(std::uint64_t p, unsigned r, unsigned d, std::uint64_t a_param);

// Type 3: the inverse (X^n - 1)/f of a Type 1 or Type 2 member.
// For Type 1 the closed form X h^(q-1) - 1 is asserted; for Type 2 with
// q = p the product of the complementary f_b is asserted.
AdditiveFamilyMember gen_type3_of_type1(std::uint64_t p, unsigned r, unsigned a_index);
AdditiveFamilyMember gen_type3_of_type2(std::uint64_t p, unsigned r, unsigned d, std::uint64_t a_param);

// Multiplicative quasi-subfield polynomial X^(p^n') - X^a with
// r | p^n - 1, a = p^n' mod r, p^n' - a | p^n - 1.
struct MultiplicativeQsp {
    int family = 0;            // 1, 2 or 3
    mpz_class p;
    unsigned n = 0;
    unsigned n_prime = 0;
    mpz_class r;
    mpz_class a;
    mpz_class root_count;      // p^n' - a + 1
    double beta = 0.0;         // n log_p(a) / n'^2
    std::string note;
};

// family 1: p prime, k >= 2, i >= 1; n = 2ik, n' = i(2k-1),
//           r = (p^n - 1)/(p^(2i) - 1), closed form a = (p^n' + 1)/(p^i + 1)
MultiplicativeQsp gen_mult_family1(std::uint64_t p, unsigned i, unsigned k);
// family 2: p = k^n + k - 1 prime, n' = 1, r = (p - k)/(k - 1), a = k
MultiplicativeQsp gen_mult_family2(std::uint64_t k, unsigned n);
// family 3: p = k^n - k - (-1)^n prime, n > 2, n' = n - 1,
//           r = (p^n - 1)(k - (-1)^n) / ((k^n - k)(k^n - (-1)^n))
MultiplicativeQsp gen_mult_family3(std::uint64_t k, unsigned n);

// exact root count of X^(p^n') - X^a over F_{p^n}: 1 + gcd(p^n' - a, p^n - 1)
mpz_class mult_root_count(const mpz_class& p, unsigned n, unsigned n_prime, const mpz_class& a);

} // namespace qsp

#endif
