#include "qsp/transforms.hpp"

#include <numeric>
#include <stdexcept>

namespace qsp {

Inversion invert_qsp(const FpPoly& f, unsigned n) {
    const int np = f.degree();
    if (np < 1 || static_cast<unsigned>(np) >= n)
        throw std::invalid_argument("invert_qsp: need 1 <= deg f < n");
    const FpPoly xn1 = FpPoly::xn_minus_one(f.p(), n);
    auto [g, r] = FpPoly::divmod(xn1, f);
    if (!r.is_zero()) throw std::domain_error("invert_qsp: f does not divide X^n - 1");
    // beta_f without the ell >= 1 guard (f = X - 1 has ell = 0)
    unsigned ell_f = 0;
    for (int i = np - 1; i >= 1; --i)
        if (f.coeff(static_cast<std::size_t>(i)) != 0) { ell_f = static_cast<unsigned>(i); break; }
    const Rational beta_f(static_cast<std::int64_t>(ell_f) * n,
                          static_cast<std::int64_t>(np) * np);
    const std::int64_t m = static_cast<std::int64_t>(n) - np;
    const Rational one(1);
    const Rational ratio(static_cast<std::int64_t>(np) * np, m * m);
    Inversion inv{g, one - ratio * (one - beta_f)};
    // cross-check against the direct formula on g
    unsigned ell_g = 0;
    for (int i = g.degree() - 1; i >= 1; --i)
        if (g.coeff(static_cast<std::size_t>(i)) != 0) { ell_g = static_cast<unsigned>(i); break; }
    const Rational direct(static_cast<std::int64_t>(ell_g) * n, m * m);
    if (!(direct == inv.beta_g))
        throw std::logic_error("invert_qsp: beta formula mismatch");
    if (!split_test_div(g, n)) throw std::logic_error("invert_qsp: quotient does not split");
    return inv;
}

FpPoly transform_substitute_xk(const FpPoly& f, unsigned k) {
    if (k < 1) throw std::invalid_argument("transform_substitute_xk: k must be >= 1");
    return f.substitute_xk(k);
}

FpPoly transform_scale_alpha(const FpPoly& f, std::uint64_t alpha, unsigned n) {
    const std::uint64_t p = f.p();
    alpha %= p;
    if (alpha == 0) throw std::invalid_argument("transform_scale_alpha: alpha must be nonzero");
    if (fp_pow(alpha, n, p) != 1)
        throw std::invalid_argument("transform_scale_alpha: alpha^n != 1");
    const int np = f.degree();
    if (np < 1) throw std::invalid_argument("transform_scale_alpha: constant polynomial");
    // alpha^(-n') f(alpha X)
    const std::uint64_t scale = fp_inv(fp_pow(alpha, static_cast<std::uint64_t>(np), p), p);
    FpPoly out(p);
    std::uint64_t apow = 1;
    for (int i = 0; i <= np; ++i) {
        out.set_coeff(static_cast<std::size_t>(i),
                      fp_mul(fp_mul(f.coeff(static_cast<std::size_t>(i)), apow, p), scale, p));
        apow = fp_mul(apow, alpha, p);
    }
    return out;
}

LinearizedQsp transform_conjugate_gamma(const LinearizedQsp& L, const ExtElem& gamma) {
    if (gamma.is_zero())
        throw std::invalid_argument("transform_conjugate_gamma: gamma must be nonzero");
    if (!gamma.field().same(L.field()))
        throw std::invalid_argument("transform_conjugate_gamma: field mismatch");
    // gamma^(-p^n') L(gamma X): coefficient a_i becomes a_i gamma^(p^i - p^n')
    const ExtElem top = gamma.frobenius(L.n_prime());
    const ExtElem top_inv = top.inv();
    std::vector<ExtElem> lam;
    lam.reserve(L.lambda_coeffs().size());
    for (unsigned i = 0; i < L.lambda_coeffs().size(); ++i)
        lam.push_back(L.a(i) * gamma.frobenius(i) * top_inv);
    return LinearizedQsp(L.field(), L.n_prime(), std::move(lam));
}

std::pair<FpPoly, unsigned> canonical_representative(const FpPoly& f, unsigned n) {
    std::size_t d = n;
    for (std::size_t i : f.support_above_zero()) d = std::gcd(d, i);
    if (d <= 1) return {f, n};
    FpPoly reduced(f.p());
    for (int i = 0; i <= f.degree(); ++i) {
        const std::uint64_t c = f.coeff(static_cast<std::size_t>(i));
        if (c == 0) continue;
        reduced.set_coeff(static_cast<std::size_t>(i) / d, c);
    }
    return {reduced, static_cast<unsigned>(n / d)};
}

} // namespace qsp
