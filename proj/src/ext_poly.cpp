#include "qsp/ext_poly.hpp"

#include <stdexcept>

namespace qsp {

ExtPoly::ExtPoly(const ExtField& field, std::vector<ExtElem> coeffs)
    : field_(field), c_(std::move(coeffs)) {
    for (const auto& c : c_)
        if (!c.field().same(field_)) throw std::invalid_argument("ExtPoly: mixed fields");
    trim();
}

ExtPoly ExtPoly::from_fp_poly(const ExtField& field, const FpPoly& f) {
    std::vector<ExtElem> cs;
    cs.reserve(static_cast<std::size_t>(f.degree() + 1));
    for (int i = 0; i <= f.degree(); ++i)
        cs.push_back(field.from_int(static_cast<std::int64_t>(f.coeff(static_cast<std::size_t>(i)))));
    return ExtPoly(field, std::move(cs));
}

ExtPoly ExtPoly::x(const ExtField& field) {
    return ExtPoly(field, {field.zero(), field.one()});
}

ExtPoly ExtPoly::monomial(const ExtField& field, std::size_t k, const ExtElem& c) {
    if (c.is_zero()) return ExtPoly(field);
    std::vector<ExtElem> cs(k + 1, field.zero());
    cs[k] = c;
    return ExtPoly(field, std::move(cs));
}

ExtElem ExtPoly::coeff(std::size_t i) const {
    return i < c_.size() ? c_[i] : field_.zero();
}

ExtElem ExtPoly::eval(const ExtElem& x) const {
    ExtElem r = field_.zero();
    for (std::size_t i = c_.size(); i-- > 0;) r = r * x + c_[i];
    return r;
}

void ExtPoly::trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

static void require_same(const ExtPoly& a, const ExtPoly& b) {
    if (!a.field().same(b.field())) throw std::invalid_argument("ExtPoly: mismatched fields");
}

ExtPoly operator+(const ExtPoly& a, const ExtPoly& b) {
    require_same(a, b);
    std::vector<ExtElem> cs;
    const std::size_t m = std::max(a.c_.size(), b.c_.size());
    cs.reserve(m);
    for (std::size_t i = 0; i < m; ++i) cs.push_back(a.coeff(i) + b.coeff(i));
    return ExtPoly(a.field_, std::move(cs));
}

ExtPoly operator-(const ExtPoly& a, const ExtPoly& b) {
    require_same(a, b);
    std::vector<ExtElem> cs;
    const std::size_t m = std::max(a.c_.size(), b.c_.size());
    cs.reserve(m);
    for (std::size_t i = 0; i < m; ++i) cs.push_back(a.coeff(i) - b.coeff(i));
    return ExtPoly(a.field_, std::move(cs));
}

ExtPoly operator*(const ExtPoly& a, const ExtPoly& b) {
    require_same(a, b);
    if (a.is_zero() || b.is_zero()) return ExtPoly(a.field_);
    std::vector<ExtElem> cs(a.c_.size() + b.c_.size() - 1, a.field_.zero());
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j) {
            if (b.c_[j].is_zero()) continue;
            cs[i + j] = cs[i + j] + a.c_[i] * b.c_[j];
        }
    }
    return ExtPoly(a.field_, std::move(cs));
}

bool operator==(const ExtPoly& a, const ExtPoly& b) {
    if (!a.field_.same(b.field_) || a.c_.size() != b.c_.size()) return false;
    for (std::size_t i = 0; i < a.c_.size(); ++i)
        if (!(a.c_[i] == b.c_[i])) return false;
    return true;
}

std::pair<ExtPoly, ExtPoly> ExtPoly::divmod(const ExtPoly& f, const ExtPoly& g) {
    require_same(f, g);
    if (g.is_zero()) throw std::invalid_argument("ExtPoly: division by zero polynomial");
    ExtPoly q(f.field_), r = f;
    const int dg = g.degree();
    if (f.degree() < dg) return {q, r};
    q.c_.assign(static_cast<std::size_t>(f.degree() - dg) + 1, f.field_.zero());
    const ExtElem inv_lead = g.c_.back().inv();
    for (int k = f.degree(); k >= dg; --k) {
        const ExtElem ck = r.c_[static_cast<std::size_t>(k)];
        if (ck.is_zero()) continue;
        const ExtElem factor = ck * inv_lead;
        const std::size_t shift = static_cast<std::size_t>(k - dg);
        q.c_[shift] = factor;
        for (int j = 0; j <= dg; ++j)
            r.c_[shift + static_cast<std::size_t>(j)] =
                r.c_[shift + static_cast<std::size_t>(j)] - factor * g.c_[static_cast<std::size_t>(j)];
    }
    q.trim();
    r.trim();
    return {q, r};
}

ExtPoly ExtPoly::monic() const {
    if (is_zero() || c_.back().is_one()) return *this;
    const ExtElem s = c_.back().inv();
    std::vector<ExtElem> cs;
    cs.reserve(c_.size());
    for (const auto& c : c_) cs.push_back(c * s);
    return ExtPoly(field_, std::move(cs));
}

ExtPoly ExtPoly::gcd(ExtPoly a, ExtPoly b) {
    require_same(a, b);
    while (!b.is_zero()) {
        ExtPoly r = divmod(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

ExtPoly ExtPoly::powmod(const ExtPoly& base, const mpz_class& e, const ExtPoly& mod) {
    require_same(base, mod);
    if (e < 0) throw std::invalid_argument("ExtPoly::powmod: negative exponent");
    ExtPoly r = divmod(ExtPoly(base.field_, {base.field_.one()}), mod).second;
    if (e == 0) return r;
    ExtPoly b = divmod(base, mod).second;
    const mp_bitcnt_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
    for (mp_bitcnt_t i = bits; i-- > 0;) {
        r = divmod(r * r, mod).second;
        if (mpz_tstbit(e.get_mpz_t(), i)) r = divmod(r * b, mod).second;
    }
    return r;
}

} // namespace qsp
