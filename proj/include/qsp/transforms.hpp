#ifndef QSP_TRANSFORMS_HPP
#define QSP_TRANSFORMS_HPP

#include <cstdint>
#include <utility>

#include "qsp/fp_poly.hpp"
#include "qsp/linearized.hpp"
#include "qsp/rational.hpp"

namespace qsp {

struct Inversion {
    FpPoly g;          // (X^n - 1) / f
    Rational beta_g;   // 1 - (n'/(n-n'))^2 (1 - beta_f)
};

// Inversion of a completely splitting L_f over F_{p^n}; requires deg f < n
// and f | X^n - 1. Tolerates ell = 0 inputs (e.g. f = X - 1).
Inversion invert_qsp(const FpPoly& f, unsigned n);

// f(X^k); splitting field exponent kn, beta unchanged
FpPoly transform_substitute_xk(const FpPoly& f, unsigned k);

// alpha^(-n') f(alpha X) for alpha in F_p with alpha^n = 1
FpPoly transform_scale_alpha(const FpPoly& f, std::uint64_t alpha, unsigned n);

// gamma^(-p^n') L_f(gamma X) on the linearized form, gamma in F_{p^n}^*
LinearizedQsp transform_conjugate_gamma(const LinearizedQsp& L, const ExtElem& gamma);

// Degree reduction by the setwise gcd of support indices and n.
// Returns the reduced polynomial and its splitting field exponent.
std::pair<FpPoly, unsigned> canonical_representative(const FpPoly& f, unsigned n);

} // namespace qsp

#endif
