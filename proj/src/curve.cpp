#include "qsp/curve.hpp"

#include <cmath>
#include <stdexcept>
#include <unordered_map>

#include "qsp/families.hpp"

namespace qsp {

Curve::Curve(const ExtField& field, const ExtElem& A, const ExtElem& B)
    : field_(field), A_(A), B_(B) {
    if (field.p() < 5) throw std::invalid_argument("Curve: p >= 5 required");
    if (!A.field().same(field) || !B.field().same(field))
        throw std::invalid_argument("Curve: coefficient field mismatch");
    // nonsingular: 4A^3 + 27B^2 != 0
    const ExtElem disc = field.from_int(4) * A * A * A + field.from_int(27) * B * B;
    if (disc.is_zero()) throw std::invalid_argument("Curve: singular (4A^3 + 27B^2 = 0)");
}

bool Curve::on_curve(const CurvePoint& P) const {
    if (P.is_infinity()) return true;
    const ExtElem lhs = P.y() * P.y();
    const ExtElem rhs = P.x() * P.x() * P.x() + A_ * P.x() + B_;
    return lhs == rhs;
}

CurvePoint Curve::infinity() const { return CurvePoint::infinity(); }

CurvePoint Curve::make_point(const ExtElem& x, const ExtElem& y) const {
    CurvePoint P(x, y);
    if (!on_curve(P)) throw std::invalid_argument("Curve: point not on curve");
    return P;
}

std::vector<CurvePoint> Curve::lift_x(const ExtElem& x) const {
    const ExtElem rhs = x * x * x + A_ * x + B_;
    std::vector<CurvePoint> lifts;
    if (rhs.is_zero()) {
        lifts.emplace_back(x, field_.zero());
        return lifts;
    }
    const auto y = rhs.sqrt();
    if (!y) return lifts;
    lifts.emplace_back(x, *y);
    lifts.emplace_back(x, -*y);
    return lifts;
}

CurvePoint Curve::negate(const CurvePoint& P) const {
    if (P.is_infinity()) return P;
    return CurvePoint(P.x(), -P.y());
}

CurvePoint Curve::add(const CurvePoint& P, const CurvePoint& Q) const {
    if (P.is_infinity()) return Q;
    if (Q.is_infinity()) return P;
    if (P.x() == Q.x()) {
        if (!(P.y() == Q.y()) || P.y().is_zero()) return infinity();
        // doubling
        const ExtElem three = field_.from_int(3);
        const ExtElem two = field_.from_int(2);
        const ExtElem slope = (three * P.x() * P.x() + A_) / (two * P.y());
        const ExtElem x3 = slope * slope - P.x() - Q.x();
        const ExtElem y3 = slope * (P.x() - x3) - P.y();
        return CurvePoint(x3, y3);
    }
    const ExtElem slope = (Q.y() - P.y()) / (Q.x() - P.x());
    const ExtElem x3 = slope * slope - P.x() - Q.x();
    const ExtElem y3 = slope * (P.x() - x3) - P.y();
    return CurvePoint(x3, y3);
}

CurvePoint Curve::scalar_mul(const mpz_class& k, const CurvePoint& P) const {
    mpz_class e = k;
    CurvePoint base = P;
    if (e < 0) { e = -e; base = negate(base); }
    CurvePoint acc = infinity();
    const mp_bitcnt_t bits = e == 0 ? 0 : mpz_sizeinbase(e.get_mpz_t(), 2);
    for (mp_bitcnt_t i = bits; i-- > 0;) {
        acc = add(acc, acc);
        if (mpz_tstbit(e.get_mpz_t(), i)) acc = add(acc, base);
    }
    return acc;
}

mpz_class Curve::point_count(const Caps& caps) const {
    if (field_.log2_order() > caps.point_scan_log2)
        throw cap_exceeded("Curve::point_count: field exceeds scan cap");
    mpz_class count = 1;  // infinity
    for (const auto& x : field_.all_elements(caps)) {
        const ExtElem rhs = x * x * x + A_ * x + B_;
        count += 1 + rhs.quadratic_character();
    }
    // Hasse interval sanity check
    const double q = std::exp2(field_.log2_order());
    const double margin = 2.0 * std::sqrt(q);
    const double c = count.get_d();
    if (c < q + 1 - margin - 1e-9 || c > q + 1 + margin + 1e-9)
        throw std::logic_error("Curve::point_count: outside the Hasse interval");
    return count;
}

std::vector<CurvePoint> Curve::all_points(const Caps& caps) const {
    if (field_.log2_order() > caps.point_scan_log2)
        throw cap_exceeded("Curve::all_points: field exceeds scan cap");
    std::vector<CurvePoint> pts;
    pts.push_back(infinity());
    for (const auto& x : field_.all_elements(caps))
        for (const auto& P : lift_x(x)) pts.push_back(P);
    return pts;
}

DemoCurve find_prime_order_curve(const ExtField& field, const Caps& caps) {
    const mpz_class q = field.order();
    for (mpz_class ai = 0; ai < q; ++ai) {
        for (mpz_class bi = 0; bi < q; ++bi) {
            const ExtElem A = field.from_index(ai);
            const ExtElem B = field.from_index(bi);
            const ExtElem disc = field.from_int(4) * A * A * A + field.from_int(27) * B * B;
            if (disc.is_zero()) continue;
            Curve curve(field, A, B);
            const mpz_class N = curve.point_count(caps);
            if (!is_prime_mpz(N)) continue;
            // first liftable x in index order gives the generator
            for (mpz_class xi = 0; xi < q; ++xi) {
                const auto lifts = curve.lift_x(field.from_index(xi));
                if (lifts.empty()) continue;
                return DemoCurve{curve, lifts.front(), N};
            }
        }
    }
    throw std::runtime_error("find_prime_order_curve: no curve found");
}

mpz_class bsgs(const Curve& curve, const CurvePoint& P, const CurvePoint& Q, const mpz_class& N) {
    if (N < 1 || N > (mpz_class(1) << 40)) throw cap_exceeded("bsgs: order outside supported range");
    if (Q.is_infinity()) return 0;
    const unsigned long m = static_cast<unsigned long>(std::ceil(std::sqrt(N.get_d())));
    std::unordered_map<std::string, unsigned long> table;
    auto key = [&](const CurvePoint& pt) {
        if (pt.is_infinity()) return std::string("inf");
        return pt.x().to_string() + "|" + pt.y().to_string();
    };
    CurvePoint baby = curve.infinity();
    for (unsigned long j = 0; j < m; ++j) {
        table.emplace(key(baby), j);
        baby = curve.add(baby, P);
    }
    const CurvePoint stride = curve.negate(curve.scalar_mul(mpz_class(m), P));
    CurvePoint giant = Q;
    for (unsigned long i = 0; i <= m; ++i) {
        const auto it = table.find(key(giant));
        if (it != table.end()) {
            mpz_class k = mpz_class(i) * m + it->second;
            k %= N;
            if (!(curve.scalar_mul(k, P) == Q))
                throw std::domain_error("bsgs: no solution (Q not in <P>?)");
            return k;
        }
        giant = curve.add(giant, stride);
    }
    throw std::domain_error("bsgs: Q not in the group generated by P");
}

} // namespace qsp
