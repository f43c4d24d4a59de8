#include "qsp/semaev.hpp"

#include <stdexcept>

namespace qsp {

MultiPoly semaev_s3(const Curve& curve) {
    const ExtField& F = curve.field();
    if (F.p() < 5) throw std::invalid_argument("semaev_s3: p >= 5 required");
    const MultiPoly x1 = MultiPoly::variable(F, 3, 0);
    const MultiPoly x2 = MultiPoly::variable(F, 3, 1);
    const MultiPoly x3 = MultiPoly::variable(F, 3, 2);
    auto cnst = [&](const ExtElem& c) { return MultiPoly::constant(F, 3, c); };
    const MultiPoly A = cnst(curve.A());
    const MultiPoly B = cnst(curve.B());
    const MultiPoly two = cnst(F.from_int(2));
    const MultiPoly four = cnst(F.from_int(4));
    // (x1 - x2)^2 x3^2 - 2((x1 + x2)(x1 x2 + A) + 2B) x3
    //   + (x1 x2 - A)^2 - 4B(x1 + x2)
    const MultiPoly d12 = x1 - x2;
    const MultiPoly s12 = x1 + x2;
    const MultiPoly m12 = x1 * x2;
    return d12 * d12 * x3 * x3
         - two * (s12 * (m12 + A) + two * B) * x3
         + (m12 - A) * (m12 - A) - four * B * s12;
}

std::size_t semaev_s3_validate(const Curve& curve, const Caps& caps) {
    const ExtField& F = curve.field();
    if (2.0 * F.log2_order() > caps.pair_enum_log2)
        throw cap_exceeded("semaev_s3_validate: triple scan exceeds cap");
    const MultiPoly s3 = semaev_s3(curve);
    // Lifts live in the algebraic closure; for x-coordinates in F_q every
    // y^2 = f(x) solves over F_{q^2}, so the check runs on the curve base
    // changed to the quadratic extension.
    const ExtField F2(F.p(), 2 * F.n());
    const ExtElem root = find_embedding_root(F, F2, caps);
    const Curve E2(F2, embed(curve.A(), F2, root), embed(curve.B(), F2, root));
    const auto xs = F.all_elements(caps);
    std::vector<ExtElem> xs2;
    xs2.reserve(xs.size());
    for (const auto& x : xs) xs2.push_back(embed(x, F2, root));
    std::size_t mismatches = 0;
    for (std::size_t ia = 0; ia < xs.size(); ++ia) {
        const auto la = E2.lift_x(xs2[ia]);
        for (std::size_t ib = 0; ib < xs.size(); ++ib) {
            const auto lb = E2.lift_x(xs2[ib]);
            // x-coordinates reachable as -(Pa + Pb) over the extension
            std::vector<ExtElem> reach;
            for (const auto& Pa : la)
                for (const auto& Pb : lb) {
                    const CurvePoint S = E2.add(Pa, Pb);
                    if (!S.is_infinity()) reach.push_back(S.x());
                }
            for (std::size_t ic = 0; ic < xs.size(); ++ic) {
                const bool vanish = s3.eval({xs[ia], xs[ib], xs[ic]}).is_zero();
                bool lift_sum = false;
                for (const auto& rx : reach)
                    if (rx == xs2[ic]) { lift_sum = true; break; }
                if (vanish != lift_sum) ++mismatches;
            }
        }
    }
    return mismatches;
}

namespace {

ExtPoly lambda_poly(const LinearizedQsp& qsp) {
    const ExtField& F = qsp.field();
    ExtPoly lam(F);
    std::uint64_t pe = 1;
    for (unsigned i = 0; i <= qsp.ell(); ++i) {
        if (!qsp.a(i).is_zero())
            lam = lam + ExtPoly::monomial(F, static_cast<std::size_t>(pe), qsp.a(i));
        pe *= F.p();
        if (pe > (1ull << 24)) throw cap_exceeded("phi_map: lambda degree too large");
    }
    return lam;
}

} // namespace

MultiPoly phi_map(const MultiPoly& f, const LinearizedQsp& qsp) {
    if (!f.field().same(qsp.field())) throw std::invalid_argument("phi_map: field mismatch");
    const ExtPoly lam = lambda_poly(qsp);
    MultiPoly r = f.coeff_frobenius(qsp.n_prime());
    for (unsigned i = 0; i < f.nvars(); ++i) r = r.substitute(i, lam);
    return r;
}

MultiPoly phi_map_mult(const MultiPoly& f, unsigned n_prime, const mpz_class& a) {
    if (a < 1 || a > 4096) throw cap_exceeded("phi_map_mult: exponent outside desk range");
    const ExtField& F = f.field();
    const ExtPoly lam = ExtPoly::monomial(F, a.get_ui(), F.one());
    MultiPoly r = f.coeff_frobenius(n_prime);
    for (unsigned i = 0; i < f.nvars(); ++i) r = r.substitute(i, lam);
    return r;
}

} // namespace qsp
