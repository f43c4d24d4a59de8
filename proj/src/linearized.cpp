#include "qsp/linearized.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "qsp/fp_matrix.hpp"

namespace qsp {

LinearizedQsp::LinearizedQsp(const ExtField& field, unsigned n_prime,
                             std::vector<ExtElem> lambda_coeffs)
    : field_(field), np_(n_prime), a_(std::move(lambda_coeffs)) {
    if (np_ < 1) throw std::invalid_argument("LinearizedQsp: n' must be >= 1");
    for (const auto& c : a_)
        if (!c.field().same(field_)) throw std::invalid_argument("LinearizedQsp: mixed fields");
    while (!a_.empty() && a_.back().is_zero()) a_.pop_back();
    if (a_.size() > np_)
        throw std::invalid_argument("LinearizedQsp: lambda degree must be below n'");
}

LinearizedQsp LinearizedQsp::linearize(const ExtField& field, const FpPoly& f) {
    if (!f.is_monic() || f.degree() < 1)
        throw std::invalid_argument("linearize: f must be monic of degree >= 1");
    if (f.p() != field.p()) throw std::invalid_argument("linearize: characteristic mismatch");
    const unsigned np = static_cast<unsigned>(f.degree());
    std::vector<ExtElem> lambda;
    lambda.reserve(np);
    for (unsigned i = 0; i < np; ++i)
        lambda.push_back(field.from_int(-static_cast<std::int64_t>(f.coeff(i))));
    return LinearizedQsp(field, np, std::move(lambda));
}

FpPoly LinearizedQsp::de_linearize() const {
    if (!prime_subfield_coeffs())
        throw std::domain_error("de_linearize: coefficients not in the prime subfield");
    std::vector<std::int64_t> cs(np_ + 1, 0);
    cs[np_] = 1;
    for (unsigned i = 0; i < a_.size(); ++i)
        cs[i] = -static_cast<std::int64_t>(a_[i].coeffs()[0]);
    return FpPoly(field_.p(), cs);
}

unsigned LinearizedQsp::ell() const {
    return a_.empty() ? 0u : static_cast<unsigned>(a_.size() - 1);
}

ExtElem LinearizedQsp::a(unsigned i) const {
    return i < a_.size() ? a_[i] : field_.zero();
}

bool LinearizedQsp::prime_subfield_coeffs() const {
    for (const auto& c : a_)
        if (!c.in_prime_field()) return false;
    return true;
}

ExtElem LinearizedQsp::eval(const ExtElem& x) const {
    // x^(p^i) iteratively; L(x) = x^(p^n') - sum a_i x^(p^i)
    ExtElem acc = field_.zero();
    ExtElem xpi = x;
    for (unsigned i = 0; i <= np_; ++i) {
        if (i < a_.size() && !a_[i].is_zero()) acc = acc + a_[i] * xpi;
        if (i < np_) xpi = xpi.frobenius(1);
    }
    return xpi - acc;
}

mpz_class LinearizedQsp::poly_degree() const {
    mpz_class d;
    mpz_ui_pow_ui(d.get_mpz_t(), static_cast<unsigned long>(field_.p()), np_);
    return d;
}

Rational LinearizedQsp::beta_raw() const {
    return Rational(static_cast<std::int64_t>(ell()) * field_.n(),
                    static_cast<std::int64_t>(np_) * np_);
}

Rational LinearizedQsp::beta() const {
    if (ell() == 0)
        throw std::domain_error("beta: subfield polynomial (ell = 0), out of scope");
    return beta_raw();
}

std::string LinearizedQsp::to_string() const {
    std::ostringstream os;
    os << "X^(" << field_.p() << "^" << np_ << ")";
    for (unsigned i = static_cast<unsigned>(a_.size()); i-- > 0;) {
        if (a_[i].is_zero()) continue;
        os << " - (" << a_[i].to_string() << ")*X";
        if (i > 0) os << "^(" << field_.p() << "^" << i << ")";
    }
    return os.str();
}

bool split_test_div(const FpPoly& f, unsigned n) {
    if (f.is_zero() || f.coeff(0) == 0)
        throw std::domain_error("split_test_div: f(0) must be nonzero");
    // (X^n - 1) mod f via powmod
    FpPoly xn = FpPoly::powmod(FpPoly::x(f.p()), mpz_class(n), f);
    return (xn - FpPoly::one(f.p())) % f == FpPoly::zero(f.p());
}

ExtMatrix companion_matrix(const LinearizedQsp& L) {
    const unsigned d = L.n_prime();
    ExtMatrix C(L.field(), d);
    for (unsigned i = 1; i < d; ++i) C.set(i, i - 1, L.field().one());
    // conventional f has coefficients c_i = -a_i, so the companion entries
    // -c_i equal the lambda coefficients
    for (unsigned i = 0; i < d; ++i) C.set(i, d - 1, L.a(i));
    return C;
}

ExtMatrix frobenius_product(const LinearizedQsp& L) {
    const ExtMatrix C = companion_matrix(L);
    ExtMatrix acc = C;
    ExtMatrix twisted = C;
    for (unsigned k = 1; k < L.n(); ++k) {
        twisted = twisted.frobenius(1);
        acc = acc * twisted;
    }
    return acc;
}

mpz_class split_test_companion(const LinearizedQsp& L) {
    if (L.a(0).is_zero())
        throw std::domain_error("split_test_companion: a_0 = 0 (0 is a multiple root)");
    const ExtMatrix A = frobenius_product(L);
    const ExtMatrix I = ExtMatrix::identity(L.field(), L.n_prime());
    const std::size_t n1 = L.n_prime() - (A - I).rank();
    mpz_class count;
    mpz_ui_pow_ui(count.get_mpz_t(), static_cast<unsigned long>(L.field().p()),
                  static_cast<unsigned long>(n1));
    return count;
}

bool splits_completely_companion(const LinearizedQsp& L) {
    if (L.a(0).is_zero()) return false;
    return frobenius_product(L).is_identity();
}

namespace {

// Twisted polynomials sum c_i tau^i with tau the p-Frobenius; tau*c = c^p*tau.
// Linearized polynomials correspond to twisted polynomials, and the greatest
// common right divisor tracks gcd of the underlying conventional polynomials
// of root spaces.
struct TauPoly {
    std::vector<ExtElem> c;

    int deg() const { return static_cast<int>(c.size()) - 1; }
    bool is_zero() const { return c.empty(); }
    void trim() {
        while (!c.empty() && c.back().is_zero()) c.pop_back();
    }
};

TauPoly tau_from_linearized(const LinearizedQsp& L) {
    TauPoly t;
    t.c.assign(L.n_prime() + 1, L.field().zero());
    t.c[L.n_prime()] = L.field().one();
    for (unsigned i = 0; i < L.n_prime(); ++i) t.c[i] = -L.a(i);
    t.trim();
    return t;
}

// remainder of right division a = q*b + r
TauPoly tau_mod(TauPoly a, const TauPoly& b) {
    if (b.is_zero()) throw std::domain_error("tau_mod: division by zero");
    const ExtElem blead = b.c.back();
    while (!a.is_zero() && a.deg() >= b.deg()) {
        const unsigned k = static_cast<unsigned>(a.deg() - b.deg());
        // (c tau^k)(b_j tau^j) = c*b_j^(p^k) tau^(k+j)
        const ExtElem c = a.c.back() * blead.frobenius(k).inv();
        for (std::size_t j = 0; j < b.c.size(); ++j) {
            if (b.c[j].is_zero()) continue;
            a.c[k + j] = a.c[k + j] - c * b.c[j].frobenius(k);
        }
        a.c.pop_back();
        a.trim();
    }
    return a;
}

TauPoly tau_gcrd(TauPoly a, TauPoly b) {
    while (!b.is_zero()) {
        TauPoly r = tau_mod(std::move(a), b);
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.is_zero() && !a.c.back().is_one()) {
        const ExtElem s = a.c.back().inv();
        for (auto& ci : a.c) ci = s * ci;
    }
    return a;
}

// tau^n mod L, computed by n shift-and-reduce steps
TauPoly tau_pow_mod(unsigned n, const TauPoly& L, const ExtField& F) {
    TauPoly t;
    t.c = {F.one()};
    const int dL = L.deg();
    for (unsigned step = 0; step < n; ++step) {
        // multiply by tau on the left: coefficients get Frobenius'd and shift up
        t.c.insert(t.c.begin(), F.zero());
        for (std::size_t j = 1; j < t.c.size(); ++j) t.c[j] = t.c[j].frobenius(1);
        if (t.deg() == dL) {
            const ExtElem top = t.c.back();
            if (!top.is_zero()) {
                // L monic: subtract top * L
                for (std::size_t j = 0; j < L.c.size(); ++j)
                    t.c[j] = t.c[j] - top * L.c[j];
            }
            t.c.pop_back();
            t.trim();
        }
    }
    return t;
}

} // namespace

mpz_class root_count_oracle(const LinearizedQsp& L) {
    const ExtField& F = L.field();
    TauPoly Lt = tau_from_linearized(L);
    TauPoly t = tau_pow_mod(F.n(), Lt, F);
    // tau^n - 1 mod L
    if (t.c.empty()) t.c.push_back(-F.one());
    else t.c[0] = t.c[0] - F.one();
    t.trim();
    TauPoly g = tau_gcrd(Lt, t);
    mpz_class count;
    mpz_ui_pow_ui(count.get_mpz_t(), static_cast<unsigned long>(F.p()),
                  static_cast<unsigned long>(g.deg() < 0 ? 0 : g.deg()));
    return count;
}

mpz_class root_count_enumerate(const LinearizedQsp& L, const Caps& caps) {
    mpz_class count = 0;
    for (const auto& x : L.field().all_elements(caps))
        if (L.eval(x).is_zero()) ++count;
    return count;
}

FpMatrix linear_map_matrix(const LinearizedQsp& L) {
    const ExtField& F = L.field();
    const unsigned n = F.n();
    FpMatrix M(F.p(), n);
    for (unsigned j = 0; j < n; ++j) {
        const ExtElem img = L.eval(F.from_poly(FpPoly::monomial(F.p(), j)));
        for (unsigned i = 0; i < n; ++i) M.at(i, j) = img.coeffs()[i];
    }
    return M;
}

std::vector<ExtElem> root_set(const LinearizedQsp& L, const Caps& caps) {
    const ExtField& F = L.field();
    const unsigned n = F.n();
    const std::uint64_t p = F.p();
    // kernel basis by Gaussian elimination on the map matrix
    FpMatrix M = linear_map_matrix(L);
    std::vector<std::uint64_t> m(n * n);
    for (unsigned i = 0; i < n; ++i)
        for (unsigned j = 0; j < n; ++j) m[i * n + j] = M.at(i, j);
    std::vector<int> pivot_col(n, -1);
    unsigned rank = 0;
    for (unsigned col = 0; col < n && rank < n; ++col) {
        unsigned piv = rank;
        while (piv < n && m[piv * n + col] == 0) ++piv;
        if (piv == n) continue;
        for (unsigned j = 0; j < n; ++j) std::swap(m[piv * n + j], m[rank * n + j]);
        const std::uint64_t inv = fp_inv(m[rank * n + col], p);
        for (unsigned j = 0; j < n; ++j) m[rank * n + j] = fp_mul(m[rank * n + j], inv, p);
        for (unsigned r = 0; r < n; ++r) {
            if (r == rank || m[r * n + col] == 0) continue;
            const std::uint64_t f = m[r * n + col];
            for (unsigned j = 0; j < n; ++j)
                m[r * n + j] = fp_sub(m[r * n + j], fp_mul(f, m[rank * n + j], p), p);
        }
        pivot_col[rank] = static_cast<int>(col);
        ++rank;
    }
    std::vector<bool> is_pivot(n, false);
    for (unsigned r = 0; r < rank; ++r) is_pivot[static_cast<unsigned>(pivot_col[r])] = true;
    std::vector<std::vector<std::uint64_t>> basis;
    for (unsigned free_col = 0; free_col < n; ++free_col) {
        if (is_pivot[free_col]) continue;
        std::vector<std::uint64_t> v(n, 0);
        v[free_col] = 1;
        for (unsigned r = 0; r < rank; ++r) {
            const unsigned pc = static_cast<unsigned>(pivot_col[r]);
            v[pc] = fp_neg(m[r * n + free_col], p);
        }
        basis.push_back(std::move(v));
    }
    const unsigned dim = static_cast<unsigned>(basis.size());
    if (dim * std::log2(static_cast<double>(p)) > caps.field_enum_log2)
        throw cap_exceeded("root_set: kernel too large to enumerate");
    std::uint64_t total = 1;
    for (unsigned i = 0; i < dim; ++i) total *= p;
    std::vector<ExtElem> roots;
    roots.reserve(total);
    std::vector<std::uint64_t> digits(dim, 0);
    for (std::uint64_t idx = 0; idx < total; ++idx) {
        std::vector<std::uint64_t> v(n, 0);
        for (unsigned b = 0; b < dim; ++b) {
            if (digits[b] == 0) continue;
            for (unsigned j = 0; j < n; ++j)
                v[j] = fp_add(v[j], fp_mul(digits[b], basis[b][j], p), p);
        }
        std::vector<std::int64_t> cs(v.begin(), v.end());
        roots.push_back(F.from_poly(FpPoly(p, cs)));
        unsigned b = 0;
        while (b < dim) {
            if (++digits[b] < p) break;
            digits[b] = 0;
            ++b;
        }
    }
    return roots;
}

bool lemma_mc_check(unsigned n, unsigned n_prime, unsigned ell) {
    if (n_prime < 1) throw std::invalid_argument("lemma_mc_check: n' must be >= 1");
    return (n / n_prime) * ell + (n % n_prime) >= n_prime;
}

unsigned min_n(unsigned n_prime, unsigned ell) {
    if (ell < 1 || ell >= n_prime)
        throw std::invalid_argument("min_n: need 1 <= ell < n'");
    return n_prime + (n_prime - ell) * ((n_prime - 1) / ell);
}

bool low_bound_check(unsigned n, unsigned n_prime, unsigned ell) {
    return n >= min_n(n_prime, ell);
}

} // namespace qsp
