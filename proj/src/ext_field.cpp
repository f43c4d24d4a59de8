#include "qsp/ext_field.hpp"

#include <cmath>
#include <stdexcept>

namespace qsp {

struct ExtField::Rep {
    std::uint64_t p;
    unsigned n;
    FpPoly modulus;
    // reduction table: X^(n+k) mod modulus for k in [0, n-1], rows of n coeffs
    std::vector<std::uint64_t> red;
    // Frobenius matrix: column j holds (X^j)^p mod modulus, column-major n*n
    std::vector<std::uint64_t> frob;
};

namespace {

std::shared_ptr<const ExtField::Rep> build_rep(const FpPoly& modulus) {
    const std::uint64_t p = modulus.p();
    const int deg = modulus.degree();
    if (deg < 1) throw std::invalid_argument("ExtField: modulus must have degree >= 1");
    if (!modulus.is_monic()) throw std::invalid_argument("ExtField: modulus must be monic");
    if (!modulus.is_irreducible()) throw std::invalid_argument("ExtField: modulus is reducible");
    auto rep = std::make_shared<ExtField::Rep>();
    rep->p = p;
    rep->n = static_cast<unsigned>(deg);
    rep->modulus = modulus;
    const unsigned n = rep->n;

    rep->red.assign(static_cast<std::size_t>(n) * n, 0);
    FpPoly cur = FpPoly::monomial(p, n) % modulus;
    for (unsigned k = 0; k < n; ++k) {
        for (unsigned j = 0; j < n; ++j) rep->red[k * n + j] = cur.coeff(j);
        cur = (cur * FpPoly::x(p)) % modulus;
    }

    rep->frob.assign(static_cast<std::size_t>(n) * n, 0);
    const FpPoly xp = FpPoly::powmod(FpPoly::x(p), mpz_class(static_cast<unsigned long>(p)), modulus);
    FpPoly col = FpPoly::one(p);
    for (unsigned j = 0; j < n; ++j) {
        for (unsigned i = 0; i < n; ++i) rep->frob[j * n + i] = col.coeff(i);
        col = (col * xp) % modulus;
    }
    return rep;
}

FpPoly find_modulus(std::uint64_t p, unsigned n) {
    if (!is_prime_u64(p)) throw std::invalid_argument("ExtField: p must be prime");
    if (n < 1 || n > 512) throw std::invalid_argument("ExtField: n out of range");
    // scan coefficient vectors (c_0,...,c_{n-1}) in base-p counter order
    std::vector<std::uint64_t> digits(n, 0);
    while (true) {
        FpPoly f(p);
        std::vector<std::int64_t> cs(digits.begin(), digits.end());
        cs.push_back(1);
        f = FpPoly(p, cs);
        if (f.is_irreducible()) return f;
        unsigned i = 0;
        while (i < n) {
            if (++digits[i] < p) break;
            digits[i] = 0;
            ++i;
        }
        if (i == n) throw std::runtime_error("ExtField: no irreducible polynomial found");
    }
}

} // namespace

ExtField::ExtField(std::uint64_t p, unsigned n) : rep_(build_rep(find_modulus(p, n))) {}
ExtField::ExtField(const FpPoly& modulus) : rep_(build_rep(modulus)) {}

std::uint64_t ExtField::p() const { return rep_->p; }
unsigned ExtField::n() const { return rep_->n; }
const FpPoly& ExtField::modulus() const { return rep_->modulus; }

mpz_class ExtField::order() const {
    mpz_class q;
    mpz_ui_pow_ui(q.get_mpz_t(), static_cast<unsigned long>(rep_->p), rep_->n);
    return q;
}

double ExtField::log2_order() const {
    return rep_->n * std::log2(static_cast<double>(rep_->p));
}

ExtElem ExtField::zero() const { return ExtElem(*this, std::vector<std::uint64_t>(rep_->n, 0)); }

ExtElem ExtField::one() const { return from_int(1); }

ExtElem ExtField::from_int(std::int64_t a) const {
    std::vector<std::uint64_t> v(rep_->n, 0);
    v[0] = fp_reduce(a, rep_->p);
    return ExtElem(*this, std::move(v));
}

ExtElem ExtField::from_poly(const FpPoly& f) const {
    if (f.p() != rep_->p) throw std::invalid_argument("ExtField::from_poly: wrong characteristic");
    FpPoly r = f.degree() >= static_cast<int>(rep_->n) ? f % rep_->modulus : f;
    std::vector<std::uint64_t> v(rep_->n, 0);
    for (unsigned i = 0; i < rep_->n; ++i) v[i] = r.coeff(i);
    return ExtElem(*this, std::move(v));
}

ExtElem ExtField::from_index(const mpz_class& idx) const {
    if (idx < 0 || idx >= order()) throw std::invalid_argument("ExtField::from_index: out of range");
    std::vector<std::uint64_t> v(rep_->n, 0);
    mpz_class q = idx, r;
    for (unsigned i = 0; i < rep_->n && q != 0; ++i) {
        mpz_fdiv_qr_ui(q.get_mpz_t(), r.get_mpz_t(), q.get_mpz_t(), static_cast<unsigned long>(rep_->p));
        v[i] = r.get_ui();
    }
    return ExtElem(*this, std::move(v));
}

mpz_class ExtField::to_index(const ExtElem& x) const {
    mpz_class idx = 0;
    for (unsigned i = rep_->n; i-- > 0;) {
        idx *= static_cast<unsigned long>(rep_->p);
        idx += static_cast<unsigned long>(x.v_[i]);
    }
    return idx;
}

ExtElem ExtField::element_x() const { return from_poly(FpPoly::x(rep_->p)); }

bool ExtField::same(const ExtField& other) const {
    return rep_ == other.rep_ ||
           (rep_->p == other.rep_->p && rep_->modulus == other.rep_->modulus);
}

std::vector<ExtElem> ExtField::all_elements(const Caps& caps) const {
    if (log2_order() > caps.field_enum_log2)
        throw cap_exceeded("ExtField::all_elements: field size exceeds enumeration cap");
    const std::uint64_t count = mpz_get_ui(order().get_mpz_t());
    std::vector<ExtElem> out;
    out.reserve(count);
    std::vector<std::uint64_t> v(rep_->n, 0);
    for (std::uint64_t i = 0;; ++i) {
        out.push_back(ExtElem(*this, v));
        if (i + 1 == count) break;
        unsigned d = 0;
        while (true) {
            if (++v[d] < rep_->p) break;
            v[d] = 0;
            ++d;
        }
    }
    return out;
}

bool ExtElem::is_zero() const {
    for (auto c : v_) if (c != 0) return false;
    return true;
}

bool ExtElem::is_one() const {
    if (v_.empty() || v_[0] != 1) return false;
    for (std::size_t i = 1; i < v_.size(); ++i) if (v_[i] != 0) return false;
    return true;
}

FpPoly ExtElem::rep_poly() const {
    std::vector<std::int64_t> cs(v_.begin(), v_.end());
    return FpPoly(field_.p(), cs);
}

bool ExtElem::in_prime_field() const {
    for (std::size_t i = 1; i < v_.size(); ++i) if (v_[i] != 0) return false;
    return true;
}

static void require_same_field(const ExtElem& a, const ExtElem& b) {
    if (!a.field().same(b.field())) throw std::invalid_argument("ExtElem: mismatched fields");
}

ExtElem ExtElem::operator-() const {
    std::vector<std::uint64_t> v(v_.size());
    const std::uint64_t p = field_.p();
    for (std::size_t i = 0; i < v_.size(); ++i) v[i] = fp_neg(v_[i], p);
    return ExtElem(field_, std::move(v));
}

ExtElem operator+(const ExtElem& a, const ExtElem& b) {
    require_same_field(a, b);
    const std::uint64_t p = a.field_.p();
    std::vector<std::uint64_t> v(a.v_.size());
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = fp_add(a.v_[i], b.v_[i], p);
    return ExtElem(a.field_, std::move(v));
}

ExtElem operator-(const ExtElem& a, const ExtElem& b) {
    require_same_field(a, b);
    const std::uint64_t p = a.field_.p();
    std::vector<std::uint64_t> v(a.v_.size());
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = fp_sub(a.v_[i], b.v_[i], p);
    return ExtElem(a.field_, std::move(v));
}

ExtElem operator*(const ExtElem& a, const ExtElem& b) {
    require_same_field(a, b);
    const auto& rep = a.field_.rep();
    const std::uint64_t p = rep.p;
    const unsigned n = rep.n;
    if (n == 1) {
        return ExtElem(a.field_, {fp_mul(a.v_[0], b.v_[0], p)});
    }
    // schoolbook product then fold the top half through the reduction table
    std::vector<std::uint64_t> prod(2 * n - 1, 0);
    for (unsigned i = 0; i < n; ++i) {
        if (a.v_[i] == 0) continue;
        const unsigned __int128 ai = a.v_[i];
        for (unsigned j = 0; j < n; ++j) {
            if (b.v_[j] == 0) continue;
            prod[i + j] = static_cast<std::uint64_t>((ai * b.v_[j] + prod[i + j]) % p);
        }
    }
    std::vector<std::uint64_t> v(prod.begin(), prod.begin() + n);
    for (unsigned k = 0; k < n - 1; ++k) {
        const std::uint64_t c = prod[n + k];
        if (c == 0) continue;
        const unsigned __int128 cc = c;
        const std::uint64_t* row = &rep.red[static_cast<std::size_t>(k) * n];
        for (unsigned j = 0; j < n; ++j) {
            if (row[j] == 0) continue;
            v[j] = static_cast<std::uint64_t>((cc * row[j] + v[j]) % p);
        }
    }
    return ExtElem(a.field_, std::move(v));
}

ExtElem operator/(const ExtElem& a, const ExtElem& b) { return a * b.inv(); }

bool operator==(const ExtElem& a, const ExtElem& b) {
    return a.field_.same(b.field_) && a.v_ == b.v_;
}

ExtElem ExtElem::inv() const {
    if (is_zero()) throw std::domain_error("ExtElem::inv: zero has no inverse");
    const auto& rep = field_.rep();
    if (rep.n == 1) return ExtElem(field_, {fp_inv(v_[0], rep.p)});
    FpPoly u = FpPoly::invmod(rep_poly(), rep.modulus);
    return field_.from_poly(u);
}

ExtElem ExtElem::pow(const mpz_class& e) const {
    if (e < 0) return inv().pow(-e);
    ExtElem r = field_.one();
    if (e == 0) return r;
    const mp_bitcnt_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
    for (mp_bitcnt_t i = bits; i-- > 0;) {
        r = r * r;
        if (mpz_tstbit(e.get_mpz_t(), i)) r = r * *this;
    }
    return r;
}

ExtElem ExtElem::frobenius(unsigned i) const {
    const auto& rep = field_.rep();
    const unsigned n = rep.n;
    i %= n;
    std::vector<std::uint64_t> cur = v_;
    std::vector<std::uint64_t> next(n);
    for (unsigned step = 0; step < i; ++step) {
        for (unsigned r = 0; r < n; ++r) {
            unsigned __int128 acc = 0;
            for (unsigned j = 0; j < n; ++j) acc += static_cast<unsigned __int128>(rep.frob[j * n + r]) * cur[j];
            next[r] = static_cast<std::uint64_t>(acc % rep.p);
        }
        std::swap(cur, next);
    }
    return ExtElem(field_, std::move(cur));
}

int ExtElem::quadratic_character() const {
    if (is_zero()) return 0;
    if (field_.p() == 2) return 1;  // every element is a square in char 2
    mpz_class e = (field_.order() - 1) / 2;
    ExtElem r = pow(e);
    if (r.is_one()) return 1;
    return -1;
}

std::optional<ExtElem> ExtElem::sqrt() const {
    const std::uint64_t p = field_.p();
    if (is_zero()) return field_.zero();
    if (p == 2) {
        // squaring is a bijection in char 2
        return frobenius(field_.n() >= 1 ? field_.n() - 1 : 0);
    }
    if (quadratic_character() != 1) return std::nullopt;
    const mpz_class q = field_.order();
    // Tonelli-Shanks with deterministic non-residue scan
    mpz_class t = q - 1;
    unsigned long s = 0;
    while (mpz_even_p(t.get_mpz_t())) { t /= 2; ++s; }
    ExtElem z = field_.zero();
    for (mpz_class idx = 2; idx < q; ++idx) {
        z = field_.from_index(idx);
        if (z.quadratic_character() == -1) break;
    }
    ExtElem m_c = z.pow(t);
    ExtElem m_t = pow(t);
    ExtElem m_r = pow((t + 1) / 2);
    unsigned long m = s;
    while (!m_t.is_one()) {
        ExtElem probe = m_t;
        unsigned long i = 0;
        while (!probe.is_one()) { probe = probe * probe; ++i; }
        ExtElem b = m_c;
        for (unsigned long j = 0; j + i + 1 < m; ++j) b = b * b;
        m_r = m_r * b;
        m_c = b * b;
        m_t = m_t * m_c;
        m = i;
    }
    return m_r;
}

std::string ExtElem::to_string() const { return rep_poly().to_string(); }

ExtElem find_embedding_root(const ExtField& small, const ExtField& big, const Caps& caps) {
    if (small.p() != big.p() || big.n() % small.n() != 0)
        throw std::invalid_argument("find_embedding_root: no embedding");
    const FpPoly& m = small.modulus();
    for (const auto& r : big.all_elements(caps)) {
        // evaluate the F_p modulus at r
        ExtElem acc = big.zero();
        for (int i = m.degree(); i >= 0; --i)
            acc = acc * r + big.from_int(static_cast<std::int64_t>(m.coeff(static_cast<std::size_t>(i))));
        if (acc.is_zero()) return r;
    }
    throw std::logic_error("find_embedding_root: modulus has no root in the big field");
}

ExtElem embed(const ExtElem& x, const ExtField& big, const ExtElem& root) {
    ExtElem acc = big.zero();
    const auto& v = x.coeffs();
    for (std::size_t i = v.size(); i-- > 0;)
        acc = acc * root + big.from_int(static_cast<std::int64_t>(v[i]));
    return acc;
}

} // namespace qsp

