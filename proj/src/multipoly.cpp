#include "qsp/multipoly.hpp"

#include <sstream>
#include <stdexcept>

namespace qsp {

MultiPoly MultiPoly::constant(const ExtField& field, unsigned nvars, const ExtElem& c) {
    MultiPoly m(field, nvars);
    m.add_term(Exponents(nvars, 0), c);
    return m;
}

MultiPoly MultiPoly::variable(const ExtField& field, unsigned nvars, unsigned idx) {
    if (idx >= nvars) throw std::invalid_argument("MultiPoly::variable: index out of range");
    MultiPoly m(field, nvars);
    Exponents e(nvars, 0);
    e[idx] = 1;
    m.add_term(e, field.one());
    return m;
}

void MultiPoly::add_term(const Exponents& e, const ExtElem& c) {
    if (e.size() != nvars_) throw std::invalid_argument("MultiPoly::add_term: arity mismatch");
    if (c.is_zero()) return;
    auto it = terms_.find(e);
    if (it == terms_.end()) {
        terms_.emplace(e, c);
    } else {
        ExtElem s = it->second + c;
        if (s.is_zero()) terms_.erase(it);
        else it->second = s;
    }
}

MultiPoly operator+(const MultiPoly& a, const MultiPoly& b) {
    MultiPoly r = a;
    for (const auto& [e, c] : b.terms_) r.add_term(e, c);
    return r;
}

MultiPoly operator-(const MultiPoly& a, const MultiPoly& b) {
    MultiPoly r = a;
    for (const auto& [e, c] : b.terms_) r.add_term(e, -c);
    return r;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    if (!a.field_.same(b.field_) || a.nvars_ != b.nvars_)
        throw std::invalid_argument("MultiPoly: mismatch");
    MultiPoly r(a.field_, a.nvars_);
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_) {
            MultiPoly::Exponents e(a.nvars_);
            for (unsigned i = 0; i < a.nvars_; ++i) e[i] = ea[i] + eb[i];
            r.add_term(e, ca * cb);
        }
    return r;
}

bool operator==(const MultiPoly& a, const MultiPoly& b) {
    if (!a.field_.same(b.field_) || a.nvars_ != b.nvars_) return false;
    if (a.terms_.size() != b.terms_.size()) return false;
    auto it = b.terms_.begin();
    for (const auto& [e, c] : a.terms_) {
        if (it->first != e || !(it->second == c)) return false;
        ++it;
    }
    return true;
}

ExtElem MultiPoly::eval(const std::vector<ExtElem>& xs) const {
    if (xs.size() != nvars_) throw std::invalid_argument("MultiPoly::eval: arity mismatch");
    ExtElem acc = field_.zero();
    for (const auto& [e, c] : terms_) {
        ExtElem t = c;
        for (unsigned i = 0; i < nvars_; ++i)
            for (unsigned k = 0; k < e[i]; ++k) t = t * xs[i];
        acc = acc + t;
    }
    return acc;
}

MultiPoly MultiPoly::coeff_frobenius(unsigned i) const {
    MultiPoly r(field_, nvars_);
    for (const auto& [e, c] : terms_) r.add_term(e, c.frobenius(i));
    return r;
}

MultiPoly MultiPoly::substitute(unsigned idx, const ExtPoly& g) const {
    if (idx >= nvars_) throw std::invalid_argument("MultiPoly::substitute: index out of range");
    MultiPoly r(field_, nvars_);
    // compute powers of g as MultiPoly in variable idx up to the needed degree
    const unsigned dmax = degree_in(idx);
    std::vector<MultiPoly> gpow;
    gpow.push_back(MultiPoly::constant(field_, nvars_, field_.one()));
    MultiPoly gm(field_, nvars_);
    for (int i = 0; i <= g.degree(); ++i) {
        Exponents e(nvars_, 0);
        e[idx] = static_cast<unsigned>(i);
        gm.add_term(e, g.coeff(static_cast<std::size_t>(i)));
    }
    for (unsigned d = 1; d <= dmax; ++d) gpow.push_back(gpow.back() * gm);
    for (const auto& [e, c] : terms_) {
        Exponents base = e;
        const unsigned d = base[idx];
        base[idx] = 0;
        MultiPoly term(field_, nvars_);
        term.add_term(base, c);
        r = r + term * gpow[d];
    }
    return r;
}

MultiPoly MultiPoly::partial_eval(unsigned idx, const ExtElem& v) const {
    MultiPoly r(field_, nvars_);
    for (const auto& [e, c] : terms_) {
        ExtElem t = c;
        for (unsigned k = 0; k < e[idx]; ++k) t = t * v;
        Exponents base = e;
        base[idx] = 0;
        r.add_term(base, t);
    }
    return r;
}

ExtPoly MultiPoly::to_univariate(unsigned idx) const {
    std::vector<ExtElem> cs(degree_in(idx) + 1, field_.zero());
    for (const auto& [e, c] : terms_) {
        for (unsigned i = 0; i < nvars_; ++i)
            if (i != idx && e[i] != 0)
                throw std::domain_error("MultiPoly::to_univariate: other variables present");
        cs[e[idx]] = cs[e[idx]] + c;
    }
    return ExtPoly(field_, std::move(cs));
}

unsigned MultiPoly::degree_in(unsigned idx) const {
    unsigned d = 0;
    for (const auto& [e, c] : terms_) {
        (void)c;
        if (e[idx] > d) d = e[idx];
    }
    return d;
}

std::string MultiPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        if (!first) os << " + ";
        os << "(" << c.to_string() << ")";
        for (unsigned i = 0; i < nvars_; ++i) {
            if (e[i] == 0) continue;
            os << "*x" << (i + 1);
            if (e[i] > 1) os << "^" << e[i];
        }
        first = false;
    }
    return os.str();
}

} // namespace qsp
