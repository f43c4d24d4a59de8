#include "qsp/trinomial.hpp"

#include <stdexcept>

#include "qsp/linearized.hpp"

namespace qsp {

TrinomialReport trinomial_classification_check(std::uint64_t p, unsigned k, unsigned d,
                                               unsigned n_tilde, const Caps& caps) {
    if (k < 1 || d < 2 || n_tilde < 1)
        throw std::invalid_argument("trinomial_classification_check: need k >= 1, d >= 2, n~ >= 1");
    const ExtField F(p, k * n_tilde);
    if (2.0 * F.log2_order() > caps.pair_enum_log2)
        throw cap_exceeded("trinomial_classification_check: (a,b) scan exceeds cap");

    TrinomialReport rep;
    std::uint64_t q = 1;
    for (unsigned t = 0; t < k; ++t) q *= p;
    rep.q = q;
    rep.d = d;
    rep.n_tilde = n_tilde;

    mpz_class qz = static_cast<unsigned long>(q);
    // bullet 2 exponents
    mpz_class e_full = 0, qi = 1;
    for (unsigned i = 0; i <= (d - 1) * d; ++i) { e_full += qi; qi *= qz; }
    mpz_class e1 = 0;
    qi = 1;
    mpz_class qd;
    mpz_pow_ui(qd.get_mpz_t(), qz.get_mpz_t(), d);
    for (unsigned i = 0; i < d; ++i) { e1 += qi; qi *= qd; }
    const bool dm1_power_of_p = [&] {
        std::uint64_t v = d - 1;
        while (v % p == 0) v /= p;
        return v == 1;
    }();
    const ExtElem minus_one_pow = (d - 1) % 2 == 0 ? F.one() : -F.one();

    mpz_class degree;
    mpz_ui_pow_ui(degree.get_mpz_t(), static_cast<unsigned long>(p), k * d);

    const auto elems = F.all_elements(caps);
    for (const auto& a : elems) {
        for (const auto& b : elems) {
            if (b.is_zero()) continue;
            ++rep.pairs_scanned;
            // L = X^(q^d) - b X^q - a X as a p-linearized polynomial
            std::vector<ExtElem> lambda(k + 1, F.zero());
            lambda[0] = a;
            lambda[k] = b;
            const LinearizedQsp L(F, k * d, std::move(lambda));
            if (root_count_oracle(L) != degree) continue;
            SplittingTrinomial st{a, b, false};
            if (n_tilde == d * d - d + 1 && dm1_power_of_p) {
                const bool norm_ok = a.pow(e_full) == minus_one_pow;
                const bool b_ok = b == -(a.pow(e1 * qz));
                st.bullet2 = norm_ok && b_ok;
            }
            if (!st.bullet2) rep.classification_holds = false;
            rep.splitting.push_back(std::move(st));
        }
    }
    return rep;
}

} // namespace qsp
