#include "qsp/symbolic.hpp"

#include <sstream>
#include <stdexcept>

#include <gmpxx.h>

#include "qsp/linearized.hpp"

namespace qsp {

// Addition and multiplication tables over {0, 1, a., *}. Any sum of two
// nonzero-or-unknown symbols is unknown; products track the power-of-(-a_ell)
// class.
Sym sym_add(Sym x, Sym y) {
    if (x == Sym::Zero) return y;
    if (y == Sym::Zero) return x;
    return Sym::Star;
}

Sym sym_mul(Sym x, Sym y) {
    if (x == Sym::Zero || y == Sym::Zero) return Sym::Zero;
    if (x == Sym::One) return y;
    if (y == Sym::One) return x;
    if (x == Sym::APow && y == Sym::APow) return Sym::APow;
    return Sym::Star;
}

std::string sym_name(Sym s) {
    switch (s) {
        case Sym::Zero: return "0";
        case Sym::One: return "1";
        case Sym::APow: return "a^";
        case Sym::Star: return "*";
    }
    return "?";
}

SymMatrix operator*(const SymMatrix& a, const SymMatrix& b) {
    if (a.dim_ != b.dim_) throw std::invalid_argument("SymMatrix: dimension mismatch");
    const std::size_t n = a.dim_;
    SymMatrix c(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Sym acc = Sym::Zero;
            for (std::size_t k = 0; k < n; ++k)
                acc = sym_add(acc, sym_mul(a.at(i, k), b.at(k, j)));
            c.at(i, j) = acc;
        }
    return c;
}

std::string SymMatrix::to_string() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < dim_; ++i) {
        os << '[';
        for (std::size_t j = 0; j < dim_; ++j) {
            os << sym_name(at(i, j));
            if (j + 1 < dim_) os << ' ';
        }
        os << "]\n";
    }
    return os.str();
}

SymMatrix sym_companion(unsigned n_prime, unsigned ell) {
    if (ell < 1 || ell >= n_prime)
        throw std::invalid_argument("sym_companion: need 1 <= ell < n'");
    SymMatrix m(n_prime);
    for (unsigned i = 1; i < n_prime; ++i) m.at(i, i - 1) = Sym::One;
    for (unsigned i = 0; i < ell; ++i) m.at(i, n_prime - 1) = Sym::Star;
    m.at(ell, n_prime - 1) = Sym::APow;
    return m;
}

SymMatrix sym_pow(const SymMatrix& m, unsigned n) {
    if (n < 1) throw std::invalid_argument("sym_pow: n must be >= 1");
    SymMatrix acc = m;
    for (unsigned k = 1; k < n; ++k) acc = acc * m;
    return acc;
}

bool identity_representable(const SymMatrix& m) {
    for (std::size_t i = 0; i < m.dim(); ++i)
        for (std::size_t j = 0; j < m.dim(); ++j) {
            const Sym s = m.at(i, j);
            if (i == j) {
                if (s == Sym::Zero) return false;
            } else {
                if (s == Sym::One || s == Sym::APow) return false;
            }
        }
    return true;
}

namespace {

// multinomial(k_1 + ... + k_m; k_1, ..., k_m)
mpz_class multinomial(const std::vector<unsigned>& k) {
    unsigned total = 0;
    mpz_class r = 1;
    for (unsigned ki : k) {
        for (unsigned j = 1; j <= ki; ++j) {
            ++total;
            r *= total;
            mpz_divexact_ui(r.get_mpz_t(), r.get_mpz_t(), j);
        }
    }
    return r;
}

} // namespace

Sym chen_louck_entry(unsigned n_prime, unsigned ell, unsigned n, unsigned i, unsigned j) {
    if (i < 1 || i > n_prime || j < 1 || j > n_prime)
        throw std::invalid_argument("chen_louck_entry: index out of range");
    if (ell < 1 || ell >= n_prime)
        throw std::invalid_argument("chen_louck_entry: need 1 <= ell < n'");
    if (n < 1) throw std::invalid_argument("chen_louck_entry: n must be >= 1");
    if (n == i - j) return Sym::One;
    const long target = static_cast<long>(n) - static_cast<long>(i) + static_cast<long>(j);
    if (target < 0) return Sym::Zero;

    // Positions iota = 1..n' index the last-column entries read bottom-up:
    // iota in [1, n'-ell-1] -> 0, iota = n'-ell -> a., iota > n'-ell -> *.
    // Any k with weight on a zero position contributes nothing, so only
    // k_(n'-ell)..k_(n') are enumerated. Terms are folded with the symbol
    // sum table; a term with integer weight w >= 2 behaves like a sum of w
    // equal nonzero symbols, i.e. Star.
    const unsigned lo = n_prime - ell;
    std::vector<unsigned> k(n_prime + 1, 0);  // 1-based
    Sym acc = Sym::Zero;

    // DFS over k_lo..k_{n'} with sum constraint sum iota*k_iota = target.
    // Star absorbs under the symbol sum, so the walk stops once reached.
    auto rec = [&](auto&& self, unsigned iota, long remaining) -> void {
        if (acc == Sym::Star) return;
        if (iota > n_prime) {
            if (remaining != 0) return;
            // weight w_k = ((k_{n'-i+1} + ... + k_{n'}) / sum k) * multinomial
            unsigned long sumk = 0, partial = 0;
            for (unsigned t = lo; t <= n_prime; ++t) {
                sumk += k[t];
                if (t >= n_prime - i + 1) partial += k[t];
            }
            if (sumk == 0) return;  // only possible when target == 0, n == i-j
            std::vector<unsigned> parts(k.begin() + lo, k.begin() + n_prime + 1);
            mpz_class w = multinomial(parts);
            w *= static_cast<unsigned long>(partial);
            if (mpz_fdiv_q_ui(w.get_mpz_t(), w.get_mpz_t(), sumk) != 0)
                throw std::logic_error("chen_louck_entry: non-integral weight");
            if (w == 0) return;
            Sym term = k[lo] > 0 ? Sym::APow : Sym::One;
            unsigned star_weight = 0;
            for (unsigned t = lo + 1; t <= n_prime; ++t) star_weight += k[t];
            if (star_weight > 0) term = sym_mul(term, Sym::Star);
            if (w > 1) term = sym_add(term, term);  // w copies of a nonzero symbol
            acc = sym_add(acc, term);
            return;
        }
        for (long cnt = 0; cnt * static_cast<long>(iota) <= remaining; ++cnt) {
            k[iota] = static_cast<unsigned>(cnt);
            self(self, iota + 1, remaining - cnt * static_cast<long>(iota));
        }
        k[iota] = 0;
    };
    rec(rec, lo, target);
    return acc;
}

Witness witness_index(unsigned n, unsigned n_prime, unsigned ell) {
    if (ell < 1 || ell >= n_prime)
        throw std::invalid_argument("witness_index: need 1 <= ell < n'");
    if (n < 1) throw std::invalid_argument("witness_index: n must be >= 1");
    if (n < n_prime) return Witness{n + 1, Sym::One};
    if (n >= min_n(n_prime, ell))
        throw std::invalid_argument("witness_index: no witness claimed at or above min_n");
    const unsigned i_n = n - (n_prime - ell) * ((n - ell) / (n_prime - ell)) + 1;
    if (i_n < 2 || i_n > n_prime)
        throw std::logic_error("witness_index: row bound violated");
    return Witness{i_n, Sym::APow};
}

} // namespace qsp
