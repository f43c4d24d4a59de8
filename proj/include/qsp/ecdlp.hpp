#ifndef QSP_ECDLP_HPP
#define QSP_ECDLP_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qsp/curve.hpp"
#include "qsp/linearized.hpp"
#include "qsp/multipoly.hpp"

namespace qsp {

// Factor base of an index-calculus run: V the root set of the QSP,
// F all curve points with x in V. F is closed under negation.
class FactorBase {
public:
    FactorBase(const Curve& curve, const LinearizedQsp& qsp, const Caps& caps = default_caps());

    const Curve& curve() const { return curve_; }
    const std::vector<ExtElem>& roots() const { return V_; }
    const std::vector<CurvePoint>& points() const { return F_; }
    bool x_in_base(const ExtElem& x) const;
    // index of a point in the base, or nullopt
    std::optional<std::size_t> index_of(const CurvePoint& P) const;
    // fraction of V that lifts to exactly two points
    double two_lift_fraction() const;

private:
    Curve curve_;
    std::vector<ExtElem> V_;
    std::vector<CurvePoint> F_;
    std::map<std::string, std::size_t> index_;
    std::size_t two_lift_ = 0;
};

enum class DecomposeMode { Semaev, Direct };

// One decomposition R = P_1 + ... + P_m with all P_i in the base.
using Decomposition = std::vector<std::size_t>;

// Find one decomposition, or nullopt. Semaev mode requires m = 2 and scans
// x1 over V solving S_3(x_R, x1, x2) = 0 as a quadratic in x2; direct mode
// enumerates F^m tuples under a cap.
std::optional<Decomposition> decompose(const CurvePoint& R, const FactorBase& fb, unsigned m,
                                       DecomposeMode mode, const Caps& caps = default_caps());

// All decompositions of R into unordered pairs from the base (m = 2).
std::vector<Decomposition> decompose_all_pairs(const CurvePoint& R, const FactorBase& fb,
                                               DecomposeMode mode,
                                               const Caps& caps = default_caps());

struct Relation {
    mpz_class a, b;                      // a P + b Q = sum of base points
    std::vector<std::size_t> points;     // indices with multiplicity
};

struct RelationStats {
    std::uint64_t trials = 0;
    std::uint64_t successes = 0;         // trials with >= 1 decomposition
    std::uint64_t relations = 0;
};

// Collect at least target_count verified relations a_j P + b_j Q = sum P_i
// with seeded randomness; every decomposition of a trial point is harvested.
std::vector<Relation> gather_relations(const Curve& curve, const CurvePoint& P,
                                       const CurvePoint& Q, const mpz_class& N,
                                       const FactorBase& fb,
                                       unsigned m, std::size_t target_count,
                                       std::uint64_t seed, DecomposeMode mode,
                                       RelationStats* stats = nullptr,
                                       std::uint64_t trial_budget = 1u << 20,
                                       const Caps& caps = default_caps());

// Solve for k with Q = kP from the relation system by Gaussian elimination
// mod the prime group order N. Throws std::domain_error when the system
// leaves k undetermined (caller should gather more relations).
mpz_class solve_dlog(const Curve& curve, const CurvePoint& P, const CurvePoint& Q,
                     const std::vector<Relation>& relations, std::size_t base_size,
                     const mpz_class& N);

struct EcdlpReport {
    std::string curve_a, curve_b;
    mpz_class group_order;
    std::size_t v_size = 0;
    std::size_t f_size = 0;
    double two_lift_fraction = 0.0;
    RelationStats stats;
    mpz_class k_recovered;
    mpz_class k_bsgs;
    bool agree = false;
    double wall_seconds = 0.0;
};

// Full demo pipeline: factor base from the QSP, relations, linear algebra,
// BSGS cross-check.
EcdlpReport ecdlp_demo(const Curve& curve, const CurvePoint& P, const mpz_class& N,
                       const LinearizedQsp& qsp, const mpz_class& k_secret,
                       unsigned m, std::uint64_t seed, DecomposeMode mode,
                       std::uint64_t trial_budget = 1u << 20,
                       const Caps& caps = default_caps());

} // namespace qsp

#endif
