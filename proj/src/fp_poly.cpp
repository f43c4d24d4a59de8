#include "qsp/fp_poly.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace qsp {

std::uint64_t FpPoly::check_p(std::uint64_t p) {
    if (p < 2 || p > (1ull << 31)) throw std::invalid_argument("FpPoly: p must be in [2, 2^31]");
    return p;
}

FpPoly::FpPoly(std::uint64_t p, std::vector<std::int64_t> coeffs) : p_(check_p(p)) {
    c_.reserve(coeffs.size());
    for (std::int64_t v : coeffs) c_.push_back(fp_reduce(v, p_));
    trim();
}

FpPoly FpPoly::one(std::uint64_t p) {
    FpPoly f(p);
    f.c_ = {1};
    return f;
}

FpPoly FpPoly::x(std::uint64_t p) {
    FpPoly f(p);
    f.c_ = {0, 1};
    return f;
}

FpPoly FpPoly::monomial(std::uint64_t p, std::size_t k, std::uint64_t c) {
    FpPoly f(p);
    if (c % p != 0) {
        f.c_.assign(k + 1, 0);
        f.c_[k] = c % p;
    }
    return f;
}

FpPoly FpPoly::xn_minus_one(std::uint64_t p, std::size_t n) {
    FpPoly f(p);
    f.c_.assign(n + 1, 0);
    f.c_[0] = p - 1;
    f.c_[n] = 1;
    if (n == 0) f.c_ = {};  // X^0 - 1 = 0
    f.trim();
    return f;
}

void FpPoly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

void FpPoly::set_coeff(std::size_t i, std::uint64_t v) {
    v %= p_;
    if (i >= c_.size()) {
        if (v == 0) return;
        c_.resize(i + 1, 0);
    }
    c_[i] = v;
    trim();
}

std::uint64_t FpPoly::eval(std::uint64_t x) const {
    x %= p_;
    std::uint64_t r = 0;
    for (std::size_t i = c_.size(); i-- > 0;) r = fp_add(fp_mul(r, x, p_), c_[i], p_);
    return r;
}

std::vector<std::size_t> FpPoly::support_above_zero() const {
    std::vector<std::size_t> s;
    for (std::size_t i = 1; i < c_.size(); ++i)
        if (c_[i] != 0) s.push_back(i);
    return s;
}

FpPoly FpPoly::operator-() const {
    FpPoly r(p_);
    r.c_.resize(c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i) r.c_[i] = fp_neg(c_[i], p_);
    return r;
}

static void require_same_p(const FpPoly& a, const FpPoly& b) {
    if (a.p() != b.p()) throw std::invalid_argument("FpPoly: mismatched characteristic");
}

FpPoly operator+(const FpPoly& a, const FpPoly& b) {
    require_same_p(a, b);
    FpPoly r(a.p_);
    r.c_.resize(std::max(a.c_.size(), b.c_.size()), 0);
    for (std::size_t i = 0; i < r.c_.size(); ++i)
        r.c_[i] = fp_add(a.coeff(i), b.coeff(i), a.p_);
    r.trim();
    return r;
}

FpPoly operator-(const FpPoly& a, const FpPoly& b) {
    require_same_p(a, b);
    FpPoly r(a.p_);
    r.c_.resize(std::max(a.c_.size(), b.c_.size()), 0);
    for (std::size_t i = 0; i < r.c_.size(); ++i)
        r.c_[i] = fp_sub(a.coeff(i), b.coeff(i), a.p_);
    r.trim();
    return r;
}

FpPoly operator*(const FpPoly& a, const FpPoly& b) {
    require_same_p(a, b);
    FpPoly r(a.p_);
    if (a.is_zero() || b.is_zero()) return r;
    r.c_.assign(a.c_.size() + b.c_.size() - 1, 0);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i] == 0) continue;
        unsigned __int128 ai = a.c_[i];
        for (std::size_t j = 0; j < b.c_.size(); ++j) {
            if (b.c_[j] == 0) continue;
            r.c_[i + j] = static_cast<std::uint64_t>((ai * b.c_[j] + r.c_[i + j]) % a.p_);
        }
    }
    r.trim();
    return r;
}

FpPoly FpPoly::scaled(std::uint64_t k) const {
    FpPoly r(p_);
    k %= p_;
    if (k == 0) return r;
    r.c_.resize(c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i) r.c_[i] = fp_mul(c_[i], k, p_);
    return r;
}

std::pair<FpPoly, FpPoly> FpPoly::divmod(const FpPoly& f, const FpPoly& g) {
    require_same_p(f, g);
    if (g.is_zero()) throw std::invalid_argument("FpPoly: division by zero polynomial");
    const std::uint64_t p = f.p_;
    FpPoly q(p), r = f;
    const int dg = g.degree();
    if (f.degree() < dg) return {q, r};
    q.c_.assign(static_cast<std::size_t>(f.degree() - dg) + 1, 0);
    const std::uint64_t inv_lead = fp_inv(g.lead(), p);
    for (int k = f.degree(); k >= dg; --k) {
        const std::uint64_t ck = r.c_[static_cast<std::size_t>(k)];
        if (ck == 0) continue;
        const std::uint64_t factor = fp_mul(ck, inv_lead, p);
        const std::size_t shift = static_cast<std::size_t>(k - dg);
        q.c_[shift] = factor;
        for (int j = 0; j <= dg; ++j) {
            std::uint64_t sub = fp_mul(factor, g.c_[static_cast<std::size_t>(j)], p);
            r.c_[shift + static_cast<std::size_t>(j)] =
                fp_sub(r.c_[shift + static_cast<std::size_t>(j)], sub, p);
        }
    }
    q.trim();
    r.trim();
    return {q, r};
}

FpPoly FpPoly::monic() const {
    if (is_zero() || c_.back() == 1) return *this;
    return scaled(fp_inv(c_.back(), p_));
}

FpPoly FpPoly::gcd(FpPoly a, FpPoly b) {
    require_same_p(a, b);
    while (!b.is_zero()) {
        FpPoly r = a % b;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

FpPoly FpPoly::invmod(const FpPoly& g, const FpPoly& f) {
    require_same_p(g, f);
    // extended Euclid: t*g == gcd (mod f)
    FpPoly r0 = f, r1 = g % f;
    FpPoly t0(f.p()), t1 = FpPoly::one(f.p());
    while (!r1.is_zero()) {
        auto [q, r2] = divmod(r0, r1);
        FpPoly t2 = t0 - q * t1;
        r0 = std::move(r1); r1 = std::move(r2);
        t0 = std::move(t1); t1 = std::move(t2);
    }
    if (r0.degree() != 0) throw std::domain_error("FpPoly::invmod: not invertible");
    return (t0.scaled(fp_inv(r0.coeff(0), f.p()))) % f;
}

FpPoly FpPoly::powmod(const FpPoly& base, const mpz_class& e, const FpPoly& mod) {
    require_same_p(base, mod);
    if (e < 0) throw std::invalid_argument("FpPoly::powmod: negative exponent");
    FpPoly r = FpPoly::one(base.p()) % mod;
    FpPoly b = base % mod;
    const mp_bitcnt_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
    if (e == 0) return r;
    for (mp_bitcnt_t i = bits; i-- > 0;) {
        r = (r * r) % mod;
        if (mpz_tstbit(e.get_mpz_t(), i)) r = (r * b) % mod;
    }
    return r;
}

FpPoly FpPoly::substitute_xk(std::size_t k) const {
    if (k == 0) throw std::invalid_argument("FpPoly::substitute_xk: k must be >= 1");
    FpPoly r(p_);
    if (is_zero()) return r;
    r.c_.assign((c_.size() - 1) * k + 1, 0);
    for (std::size_t i = 0; i < c_.size(); ++i) r.c_[i * k] = c_[i];
    r.trim();
    return r;
}

FpPoly FpPoly::derivative() const {
    FpPoly r(p_);
    if (c_.size() <= 1) return r;
    r.c_.resize(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) r.c_[i - 1] = fp_mul(c_[i], i % p_, p_);
    r.trim();
    return r;
}

bool FpPoly::is_irreducible() const {
    const int n = degree();
    if (n <= 0) return false;
    if (n == 1) return true;
    // f must have no factor of degree dividing a proper divisor of n,
    // and X^(p^n) == X mod f.
    const FpPoly xp = FpPoly::x(p_);
    FpPoly t = xp % *this;
    std::vector<FpPoly> tower;  // tower[i] = X^(p^(i+1)) mod f
    for (int i = 1; i <= n; ++i) {
        t = powmod(t, mpz_class(static_cast<unsigned long>(p_)), *this);
        tower.push_back(t);
    }
    if (!(tower[n - 1] == xp % *this)) return false;
    for (int i = 1; i < n; ++i) {
        if (n % i != 0) continue;
        FpPoly d = gcd(tower[i - 1] - xp, *this);
        if (d.degree() != 0) return false;
    }
    return true;
}

std::string FpPoly::to_string() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = c_.size(); i-- > 0;) {
        std::uint64_t v = c_[i];
        if (v == 0) continue;
        // print p-1 as "-1" so tables read like the reference output
        bool neg = (v == p_ - 1 && p_ > 2);
        if (first) {
            if (neg) os << '-';
            first = false;
        } else {
            os << (neg ? '-' : '+');
        }
        std::uint64_t shown = neg ? 1 : v;
        if (i == 0) {
            os << shown;
        } else {
            if (shown != 1) os << shown << '*';
            os << 'X';
            if (i > 1) os << '^' << i;
        }
    }
    return os.str();
}

namespace {

struct Parser {
    const std::string& s;
    std::size_t pos = 0;
    std::uint64_t p;

    [[noreturn]] void fail(const std::string& msg) const {
        throw std::invalid_argument("polynomial parse error at position " +
                                    std::to_string(pos) + ": " + msg);
    }
    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    bool eat(char c) {
        skip_ws();
        if (pos < s.size() && s[pos] == c) { ++pos; return true; }
        return false;
    }
    std::int64_t number() {
        skip_ws();
        std::size_t start = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (pos == start) fail("expected a number");
        return std::stoll(s.substr(start, pos - start));
    }

    FpPoly parse_list() {
        std::vector<std::int64_t> coeffs;
        if (!eat('[')) fail("expected '['");
        skip_ws();
        if (!eat(']')) {
            while (true) {
                bool neg = eat('-');
                std::int64_t v = number();
                coeffs.push_back(neg ? -v : v);
                if (eat(']')) break;
                if (!eat(',')) fail("expected ',' or ']'");
            }
        }
        skip_ws();
        if (pos != s.size()) fail("trailing characters");
        return FpPoly(p, coeffs);
    }

    FpPoly parse_sum() {
        FpPoly acc(p);
        bool first = true;
        while (true) {
            skip_ws();
            if (pos == s.size()) {
                if (first) fail("empty polynomial");
                break;
            }
            std::int64_t sign = 1;
            if (eat('+')) {
                if (first) fail("unexpected '+'");
            } else if (eat('-')) {
                sign = -1;
            } else if (!first) {
                fail("expected '+' or '-'");
            }
            skip_ws();
            std::int64_t coeff = 1;
            bool have_coeff = false;
            if (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
                coeff = number();
                have_coeff = true;
            }
            skip_ws();
            std::size_t expo = 0;
            bool star = have_coeff && eat('*');
            skip_ws();
            if (pos < s.size() && (s[pos] == 'X' || s[pos] == 'x')) {
                ++pos;
                expo = 1;
                if (eat('^')) {
                    std::int64_t e = number();
                    if (e < 0) fail("negative exponent");
                    expo = static_cast<std::size_t>(e);
                }
            } else if (star) {
                fail("expected 'X' after '*'");
            } else if (!have_coeff) {
                fail("expected a term");
            }
            FpPoly term = FpPoly::monomial(p, expo, fp_reduce(sign * coeff, p));
            acc = acc + term;
            first = false;
        }
        return acc;
    }
};

} // namespace

FpPoly FpPoly::parse(const std::string& text, std::uint64_t p) {
    Parser parser{text, 0, check_p(p)};
    parser.skip_ws();
    if (parser.pos < text.size() && text[parser.pos] == '[') return parser.parse_list();
    return parser.parse_sum();
}

} // namespace qsp
