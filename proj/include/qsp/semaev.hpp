#ifndef QSP_SEMAEV_HPP
#define QSP_SEMAEV_HPP

#include "qsp/curve.hpp"
#include "qsp/linearized.hpp"
#include "qsp/multipoly.hpp"

namespace qsp {

// Third summation polynomial of a short Weierstrass curve:
// S_3(x1, x2, x3) = 0 iff some lifts (x_i, y_i) on E sum to the identity.
// Symmetric, degree 2 in each variable.
MultiPoly semaev_s3(const Curve& curve);

// Exhaustive validation of the S_3 closed form on a small curve: compares
// the vanishing locus with the lift-sum condition over every x-triple.
// Returns the number of mismatches (0 when valid); cap-guarded.
std::size_t semaev_s3_validate(const Curve& curve, const Caps& caps = default_caps());

// phi(f) = F^(n')(f)(lambda(x_1), ..., lambda(x_m)): coefficients raised to
// the p^n' power, variables substituted by lambda. On the root set V of the
// QSP, phi(f)(v) = f(v)^(p^n').
MultiPoly phi_map(const MultiPoly& f, const LinearizedQsp& qsp);
// same substitution rule for a multiplicative QSP, lambda = X^a
MultiPoly phi_map_mult(const MultiPoly& f, unsigned n_prime, const mpz_class& a);

} // namespace qsp

#endif
