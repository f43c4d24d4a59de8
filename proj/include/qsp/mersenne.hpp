#ifndef QSP_MERSENNE_HPP
#define QSP_MERSENNE_HPP

#include <cstdint>
#include <vector>

#include <gmpxx.h>

#include "qsp/config.hpp"
#include "qsp/fp_poly.hpp"

namespace qsp {

// X^(2^k - 1) - 1 over F_2 factors as (X - 1) times all irreducible
// polynomials of degree k when 2^k - 1 is a Mersenne prime.
std::vector<FpPoly> mersenne_factors(unsigned k);

// N(k, n') = binom(floor(n/k), floor(n'/k)) when n' mod k is 0 or 1, else 0
mpz_class mersenne_divisor_count(unsigned k, unsigned n_prime);

// exhaustive count of degree-n' divisors of X^n - 1 over F_2
mpz_class mersenne_divisor_count_exhaustive(unsigned k, unsigned n_prime,
                                            const Caps& caps = default_caps());

struct SparseDivisor {
    FpPoly f;
    unsigned n_prime = 0;
    unsigned lambda_degree = 0;   // degree of f - X^n'
};

// All divisors of X^(2^k - 1) - 1 of shape X^n' - lambda(X) with
// 2 <= n' < n and deg lambda <= lambda_max.
std::vector<SparseDivisor> mersenne_sparse_enumerate(unsigned k, unsigned lambda_max,
                                                     const Caps& caps = default_caps());

struct HeuristicReport {
    double predicted_count = 0.0;   // N(k, n') * 2^(ell - n')
    bool exists_prediction = false; // ell > n' - (n'/k) log2(n/n')
    double threshold = 0.0;         // n' - (n'/k) log2(n/n')
};

HeuristicReport heuristic_density(unsigned n, unsigned n_prime, unsigned k, unsigned ell);

} // namespace qsp

#endif
