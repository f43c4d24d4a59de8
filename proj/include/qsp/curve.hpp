#ifndef QSP_CURVE_HPP
#define QSP_CURVE_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include <gmpxx.h>

#include "qsp/config.hpp"
#include "qsp/ext_field.hpp"

namespace qsp {

class CurvePoint;

// Short Weierstrass curve y^2 = x^3 + Ax + B over F_{p^n}, p >= 5.
class Curve {
public:
    Curve(const ExtField& field, const ExtElem& A, const ExtElem& B);

    const ExtField& field() const { return field_; }
    const ExtElem& A() const { return A_; }
    const ExtElem& B() const { return B_; }

    bool on_curve(const CurvePoint& P) const;
    CurvePoint infinity() const;
    CurvePoint make_point(const ExtElem& x, const ExtElem& y) const;
    // the (0, 1 or 2) points with the given x-coordinate
    std::vector<CurvePoint> lift_x(const ExtElem& x) const;

    CurvePoint add(const CurvePoint& P, const CurvePoint& Q) const;
    CurvePoint negate(const CurvePoint& P) const;
    CurvePoint scalar_mul(const mpz_class& k, const CurvePoint& P) const;

    // |E| by x-scan with the quadratic character; cap-guarded.
    mpz_class point_count(const Caps& caps = default_caps()) const;
    std::vector<CurvePoint> all_points(const Caps& caps = default_caps()) const;

private:
    ExtField field_;
    ExtElem A_, B_;
};

class CurvePoint {
public:
    static CurvePoint infinity() { return CurvePoint(); }
    CurvePoint(const ExtElem& x, const ExtElem& y) : inf_(false), x_(x), y_(y) {}

    bool is_infinity() const { return inf_; }
    const ExtElem& x() const { return *x_; }
    const ExtElem& y() const { return *y_; }

    friend bool operator==(const CurvePoint& a, const CurvePoint& b) {
        if (a.inf_ || b.inf_) return a.inf_ == b.inf_;
        return *a.x_ == *b.x_ && *a.y_ == *b.y_;
    }
    friend bool operator!=(const CurvePoint& a, const CurvePoint& b) { return !(a == b); }

private:
    CurvePoint() : inf_(true) {}
    bool inf_;
    std::optional<ExtElem> x_, y_;
};

// Deterministic demo curve: first (A, B) in index order with nonsingular
// curve of prime order, plus a fixed generator (first liftable x).
struct DemoCurve {
    Curve curve;
    CurvePoint generator;
    mpz_class order;          // prime group order
};
DemoCurve find_prime_order_curve(const ExtField& field, const Caps& caps = default_caps());

// Baby-step giant-step discrete log: k with Q = kP in a group of order N.
mpz_class bsgs(const Curve& curve, const CurvePoint& P, const CurvePoint& Q, const mpz_class& N);

} // namespace qsp

#endif
