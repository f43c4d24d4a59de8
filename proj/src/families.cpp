#include "qsp/families.hpp"

#include <cmath>
#include <stdexcept>

#include "qsp/linearized.hpp"

namespace qsp {

bool is_prime_mpz(const mpz_class& n) {
    if (n < 2) return false;
    if (mpz_fits_ulong_p(n.get_mpz_t())) {
        const unsigned long v = mpz_get_ui(n.get_mpz_t());
        return is_prime_u64(v);
    }
    // trial division by the small primes, then Miller-Rabin with the fixed
    // witness set plus a seeded schedule of pseudo-random bases
    static const unsigned long small[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
    for (unsigned long q : small) {
        if (mpz_divisible_ui_p(n.get_mpz_t(), q)) return n == q;
    }
    mpz_class d = n - 1;
    unsigned long s = 0;
    while (mpz_even_p(d.get_mpz_t())) { d /= 2; ++s; }
    auto witness = [&](const mpz_class& a) {
        mpz_class x;
        mpz_powm(x.get_mpz_t(), a.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
        if (x == 1 || x == n - 1) return false;
        for (unsigned long r = 1; r < s; ++r) {
            x = (x * x) % n;
            if (x == n - 1) return false;
        }
        return true;
    };
    for (unsigned long q : small)
        if (witness(mpz_class(q))) return false;
    // fixed-seed extra bases
    std::uint64_t state = 0x9e3779b97f4a7c15ull;
    for (int round = 0; round < 16; ++round) {
        state ^= state << 13; state ^= state >> 7; state ^= state << 17;
        mpz_class a = mpz_class(static_cast<unsigned long>(state % 0xffffffffull)) + 41;
        if (witness(a % (n - 3) + 2)) return false;
    }
    return true;
}

namespace {

mpz_class pow_mpz(const mpz_class& base, unsigned e) {
    mpz_class r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

double log_ratio(const mpz_class& a, const mpz_class& p) {
    // log_p(a) with enough precision for beta reporting
    signed long exp_a, exp_p;
    const double ma = mpz_get_d_2exp(&exp_a, a.get_mpz_t());
    const double mp = mpz_get_d_2exp(&exp_p, p.get_mpz_t());
    const double la = std::log2(ma) + static_cast<double>(exp_a);
    const double lp = std::log2(mp) + static_cast<double>(exp_p);
    return la / lp;
}

void verify_additive(AdditiveFamilyMember& m, std::uint64_t p) {
    // every generated member must divide X^n - 1
    if (!split_test_div(m.f, m.n))
        throw std::logic_error("family generator: member does not split");
    m.n_prime = static_cast<unsigned>(m.f.degree());
    m.ell = 0;
    for (int i = m.f.degree() - 1; i >= 1; --i)
        if (m.f.coeff(static_cast<std::size_t>(i)) != 0) { m.ell = static_cast<unsigned>(i); break; }
    const Rational direct(static_cast<std::int64_t>(m.ell) * m.n,
                          static_cast<std::int64_t>(m.n_prime) * m.n_prime);
    if (!(direct == m.beta))
        throw std::logic_error("family generator: beta closed form mismatch");
    (void)p;
}

} // namespace

AdditiveFamilyMember gen_type1(std::uint64_t p, unsigned r, unsigned a_index) {
    if (a_index < 2) throw std::invalid_argument("gen_type1: a_index must be >= 2");
    if (r == 0) {
        // q = 1 degenerates to the all-ones polynomial with n = a_index + 2
        return gen_type1bis(p, a_index + 2);
    }
    std::uint64_t q = 1;
    for (unsigned t = 0; t < r; ++t) q *= p;
    // p_i = 1 + q + ... + q^i
    std::vector<std::uint64_t> pi;
    std::uint64_t acc = 1, qp = 1;
    for (unsigned i = 0; i <= a_index + 1; ++i) {
        if (i > 0) { qp *= q; acc += qp; }
        pi.push_back(i == 0 ? 1 : acc);
    }
    const std::uint64_t np = pi[a_index];
    if (np > (1u << 24)) throw cap_exceeded("gen_type1: degree cap exceeded");
    FpPoly h(p);
    h.set_coeff(0, 1);
    for (unsigned i = 0; i <= a_index; ++i) h.set_coeff(static_cast<std::size_t>(pi[i]), 1);
    AdditiveFamilyMember m;
    m.f = h;
    m.n = static_cast<unsigned>(pi[a_index + 1]);
    // beta = ell*n/n'^2 with n' = p_a, ell = p_(a-1); equals the closed form
    // 1 - (1/p_a)(1 - 1/q + 1/(q p_a))
    m.beta = Rational(static_cast<std::int64_t>(pi[a_index - 1]) * m.n,
                      static_cast<std::int64_t>(np) * np);
    const Rational closed =
        Rational(1) - Rational(1, static_cast<std::int64_t>(np)) *
                          (Rational(1) - Rational(1, static_cast<std::int64_t>(q)) +
                           Rational(1, static_cast<std::int64_t>(q) * np));
    if (!(closed == m.beta))
        throw std::logic_error("gen_type1: closed-form beta mismatch");
    verify_additive(m, p);
    return m;
}

AdditiveFamilyMember gen_type1bis(std::uint64_t p, unsigned n) {
    if (n < 3) throw std::invalid_argument("gen_type1bis: n must be >= 3");
    FpPoly h(p);
    for (unsigned i = 0; i < n; ++i) h.set_coeff(i, 1);
    AdditiveFamilyMember m;
    m.f = h;
    m.n = n;
    const std::int64_t d = static_cast<std::int64_t>(n) - 1;
    m.beta = Rational(1) - Rational(1, d * d);
    verify_additive(m, p);
    return m;
}

AdditiveFamilyMember gen_type2(std::uint64_t p, unsigned r, unsigned d, std::uint64_t a_param) {
    if (r < 1) throw std::invalid_argument("gen_type2: r must be >= 1");
    if (d < 1) throw std::invalid_argument("gen_type2: d must be >= 1");
    a_param %= p;
    std::uint64_t q = 1;
    for (unsigned t = 0; t < r; ++t) q *= p;
    std::uint64_t qd1 = 1;
    for (unsigned t = 0; t <= d; ++t) qd1 *= q;
    if (qd1 > (1u << 24)) throw cap_exceeded("gen_type2: field cap exceeded");
    AdditiveFamilyMember m;
    FpPoly f(p);
    if (a_param == 0) {
        if (d < 2)
            throw std::invalid_argument("gen_type2: f_0 needs d >= 2 (d = 1 gives ell = 0)");
        std::uint64_t qi = 1;
        for (unsigned i = 0; i <= d; ++i) {
            f.set_coeff(static_cast<std::size_t>(qi - 1), 1);
            qi *= q;
        }
        m.f = f;
        m.n = static_cast<unsigned>(qd1 - 1);
        // beta = 1 - q^(d-1) / (1 + q + ... + q^(d-1))^2
        std::uint64_t qpow = 1, geo = 0;
        for (unsigned i = 0; i < d; ++i) { geo += qpow; qpow *= q; }
        m.beta = Rational(1) - Rational(static_cast<std::int64_t>(qpow / q),
                                        static_cast<std::int64_t>(geo) * static_cast<std::int64_t>(geo));
    } else {
        std::uint64_t qi = 1;
        f.set_coeff(0, a_param);
        for (unsigned i = 0; i <= d; ++i) {
            f.set_coeff(static_cast<std::size_t>(qi), 1);
            qi *= q;
        }
        m.f = f;
        m.n = static_cast<unsigned>(qd1 - 1);
        // beta = 1 - 1/q^(d+1)
        m.beta = Rational(1) - Rational(1, static_cast<std::int64_t>(qd1));
    }
    verify_additive(m, p);
    return m;
}

AdditiveFamilyMember gen_type3_of_type1(std::uint64_t p, unsigned r, unsigned a_index) {
    const AdditiveFamilyMember h = gen_type1(p, r, a_index);
    const FpPoly xn1 = FpPoly::xn_minus_one(p, h.n);
    auto [g, rem] = FpPoly::divmod(xn1, h.f);
    if (!rem.is_zero()) throw std::logic_error("gen_type3_of_type1: inexact division");
    // closed form X h^(q-1) - 1
    std::uint64_t q = 1;
    for (unsigned t = 0; t < r; ++t) q *= p;
    if (q >= 2) {
        FpPoly hq = FpPoly::one(p);
        for (std::uint64_t t = 0; t + 1 < q; ++t) hq = hq * h.f;
        const FpPoly closed = FpPoly::x(p) * hq - FpPoly::one(p);
        if (!(closed == g)) throw std::logic_error("gen_type3_of_type1: closed form mismatch");
    }
    AdditiveFamilyMember m;
    m.f = g;
    m.n = h.n;
    unsigned ell_g = 0;
    for (int i = g.degree() - 1; i >= 1; --i)
        if (g.coeff(static_cast<std::size_t>(i)) != 0) { ell_g = static_cast<unsigned>(i); break; }
    m.beta = Rational(static_cast<std::int64_t>(ell_g) * m.n,
                      static_cast<std::int64_t>(g.degree()) * g.degree());
    verify_additive(m, p);
    return m;
}

AdditiveFamilyMember gen_type3_of_type2(std::uint64_t p, unsigned r, unsigned d, std::uint64_t a_param) {
    const AdditiveFamilyMember f = gen_type2(p, r, d, a_param);
    const FpPoly xn1 = FpPoly::xn_minus_one(p, f.n);
    auto [g, rem] = FpPoly::divmod(xn1, f.f);
    if (!rem.is_zero()) throw std::logic_error("gen_type3_of_type2: inexact division");
    if (r == 1) {
        // with q = p the inverse is the product of the complementary f_b
        FpPoly prod = FpPoly::one(p);
        for (std::uint64_t b = 0; b < p; ++b) {
            if (b == a_param % p) continue;
            prod = prod * gen_type2(p, r, d, b).f;
        }
        if (!(prod == g)) throw std::logic_error("gen_type3_of_type2: product form mismatch");
    }
    AdditiveFamilyMember m;
    m.f = g;
    m.n = f.n;
    unsigned ell_g = 0;
    for (int i = g.degree() - 1; i >= 1; --i)
        if (g.coeff(static_cast<std::size_t>(i)) != 0) { ell_g = static_cast<unsigned>(i); break; }
    m.beta = Rational(static_cast<std::int64_t>(ell_g) * m.n,
                      static_cast<std::int64_t>(g.degree()) * g.degree());
    verify_additive(m, p);
    return m;
}

mpz_class mult_root_count(const mpz_class& p, unsigned n, unsigned n_prime, const mpz_class& a) {
    const mpz_class pn1 = pow_mpz(p, n) - 1;
    const mpz_class pnp = pow_mpz(p, n_prime);
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), mpz_class(pnp - a).get_mpz_t(), pn1.get_mpz_t());
    return g + 1;
}

namespace {

MultiplicativeQsp finish_mult(MultiplicativeQsp m) {
    const mpz_class pn1 = pow_mpz(m.p, m.n) - 1;
    const mpz_class pnp = pow_mpz(m.p, m.n_prime);
    if (m.r <= 0 || !mpz_divisible_p(pn1.get_mpz_t(), m.r.get_mpz_t()))
        throw std::logic_error("multiplicative family: r does not divide p^n - 1");
    if (m.a != pnp % m.r)
        throw std::logic_error("multiplicative family: a != p^n' mod r");
    const mpz_class diff = pnp - m.a;
    if (!mpz_divisible_p(pn1.get_mpz_t(), diff.get_mpz_t()))
        throw std::logic_error("multiplicative family: p^n' - a does not divide p^n - 1");
    m.root_count = diff + 1;
    if (mult_root_count(m.p, m.n, m.n_prime, m.a) != m.root_count)
        throw std::logic_error("multiplicative family: gcd root count mismatch");
    m.beta = static_cast<double>(m.n) * log_ratio(m.a, m.p) /
             (static_cast<double>(m.n_prime) * m.n_prime);
    if (m.beta > 1.0 + 1e-12)
        throw std::domain_error("multiplicative family: beta exceeds 1");
    return m;
}

} // namespace

MultiplicativeQsp gen_mult_family1(std::uint64_t p, unsigned i, unsigned k) {
    if (!is_prime_u64(p)) throw std::invalid_argument("gen_mult_family1: p must be prime");
    if (k < 2 || i < 1) throw std::invalid_argument("gen_mult_family1: need k >= 2, i >= 1");
    MultiplicativeQsp m;
    m.family = 1;
    m.p = static_cast<unsigned long>(p);
    m.n = 2 * i * k;
    m.n_prime = i * (2 * k - 1);
    const mpz_class p2i = pow_mpz(m.p, 2 * i);
    m.r = (pow_mpz(m.p, m.n) - 1) / (p2i - 1);
    m.a = pow_mpz(m.p, m.n_prime) % m.r;
    // closed form a = (p^(i(2k-1)) + 1)/(p^i + 1)
    const mpz_class pi = pow_mpz(m.p, i);
    const mpz_class closed_a = (pow_mpz(m.p, m.n_prime) + 1) / (pi + 1);
    if (m.a != closed_a) throw std::logic_error("gen_mult_family1: closed form a mismatch");
    // identity p^n' - a = (p^n - 1)/(p^i + 1)
    if (pow_mpz(m.p, m.n_prime) - m.a != (pow_mpz(m.p, m.n) - 1) / (pi + 1))
        throw std::logic_error("gen_mult_family1: divisor identity mismatch");
    return finish_mult(std::move(m));
}

MultiplicativeQsp gen_mult_family2(std::uint64_t k, unsigned n) {
    if (k < 2 || n < 2) throw std::invalid_argument("gen_mult_family2: need k >= 2, n >= 2");
    MultiplicativeQsp m;
    m.family = 2;
    mpz_class kz = static_cast<unsigned long>(k);
    m.p = pow_mpz(kz, n) + kz - 1;
    if (!is_prime_mpz(m.p)) {
        std::string note = "k^n + k - 1 is composite";
        if (n % 6 == 5) note += " (forced: k^2 - k + 1 divides k^n + k - 1 for n = 5 mod 6)";
        throw std::domain_error("gen_mult_family2: " + note);
    }
    m.n = n;
    m.n_prime = 1;
    m.r = (m.p - kz) / (kz - 1);
    m.a = m.p % m.r;
    if (m.a != kz) throw std::logic_error("gen_mult_family2: a != k");
    m.note = "p = k^n + k - 1, k = " + std::to_string(k);
    return finish_mult(std::move(m));
}

MultiplicativeQsp gen_mult_family3(std::uint64_t k, unsigned n) {
    if (k < 2 || n <= 2) throw std::invalid_argument("gen_mult_family3: need k >= 2, n > 2");
    MultiplicativeQsp m;
    m.family = 3;
    mpz_class kz = static_cast<unsigned long>(k);
    const int sign = (n % 2 == 0) ? 1 : -1;
    m.p = pow_mpz(kz, n) - kz - sign;
    if (!is_prime_mpz(m.p)) {
        std::string note = "k^n - k - (-1)^n is composite";
        if (n % 6 == 2) note += " (forced: k^2 - k + 1 divides k^n - k + 1 for n = 2 mod 6)";
        throw std::domain_error("gen_mult_family3: " + note);
    }
    m.n = n;
    m.n_prime = n - 1;
    const mpz_class kn = pow_mpz(kz, n);
    const mpz_class num = (pow_mpz(m.p, n) - 1) * (kz - sign);
    const mpz_class den = (kn - kz) * (kn - sign);
    if (!mpz_divisible_p(num.get_mpz_t(), den.get_mpz_t()))
        throw std::logic_error("gen_mult_family3: r is not an integer");
    m.r = num / den;
    m.a = pow_mpz(m.p, m.n_prime) % m.r;
    // closed forms from the appendix: even n: (p^(n-1) + 1)/(k^n - k),
    // odd n: (p^(n-1) k + 1)/(k^n + 1)
    mpz_class closed_a;
    if (n % 2 == 0)
        closed_a = (pow_mpz(m.p, n - 1) + 1) / (kn - kz);
    else
        closed_a = (pow_mpz(m.p, n - 1) * kz + 1) / (kn + 1);
    if (m.a != closed_a)
        throw std::domain_error("gen_mult_family3: closed form requires k^n >> 1 (a >= r here)");
    m.note = "p = k^n - k - (-1)^n, k = " + std::to_string(k);
    return finish_mult(std::move(m));
}

} // namespace qsp
