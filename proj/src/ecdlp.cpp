#include "qsp/ecdlp.hpp"

#include <algorithm>
#include <chrono>
#include <random>
#include <set>
#include <stdexcept>

#include "qsp/families.hpp"
#include "qsp/semaev.hpp"

namespace qsp {

namespace {

std::string point_key(const CurvePoint& P) {
    if (P.is_infinity()) return "inf";
    return P.x().to_string() + "|" + P.y().to_string();
}

} // namespace

FactorBase::FactorBase(const Curve& curve, const LinearizedQsp& qsp, const Caps& caps)
    : curve_(curve) {
    if (!curve.field().same(qsp.field()))
        throw std::invalid_argument("FactorBase: curve and QSP fields differ");
    V_ = root_set(qsp, caps);
    std::sort(V_.begin(), V_.end(), [&](const ExtElem& a, const ExtElem& b) {
        return curve_.field().to_index(a) < curve_.field().to_index(b);
    });
    for (const auto& x : V_) {
        const auto lifts = curve_.lift_x(x);
        if (lifts.size() == 2) ++two_lift_;
        for (const auto& P : lifts) {
            index_.emplace(point_key(P), F_.size());
            F_.push_back(P);
        }
    }
    // closure under negation holds by construction: lifts come in +/- pairs
    for (const auto& P : F_)
        if (!index_.count(point_key(curve_.negate(P))))
            throw std::logic_error("FactorBase: not closed under negation");
}

bool FactorBase::x_in_base(const ExtElem& x) const {
    const auto lifts = curve_.lift_x(x);
    return !lifts.empty() && index_.count(point_key(lifts.front())) > 0;
}

std::optional<std::size_t> FactorBase::index_of(const CurvePoint& P) const {
    const auto it = index_.find(point_key(P));
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

double FactorBase::two_lift_fraction() const {
    return V_.empty() ? 0.0 : static_cast<double>(two_lift_) / static_cast<double>(V_.size());
}

namespace {

// solve a x^2 + b x + c = 0 over the field; at most two roots
std::vector<ExtElem> solve_quadratic(const ExtElem& a, const ExtElem& b, const ExtElem& c) {
    const ExtField& F = a.field();
    std::vector<ExtElem> roots;
    if (a.is_zero()) {
        if (!b.is_zero()) roots.push_back(-(c / b));
        return roots;
    }
    const ExtElem disc = b * b - F.from_int(4) * a * c;
    const auto s = disc.sqrt();
    if (!s) return roots;
    const ExtElem inv2a = (F.from_int(2) * a).inv();
    roots.push_back((-b + *s) * inv2a);
    if (!s->is_zero()) roots.push_back((-b - *s) * inv2a);
    return roots;
}

// unordered pairs {i, j} with F[i] + F[j] = R, found through S_3
std::vector<Decomposition> semaev_pairs(const CurvePoint& R, const FactorBase& fb) {
    std::vector<Decomposition> out;
    if (R.is_infinity()) {
        // S_3 needs an affine x(R); pairs summing to the identity are the
        // negation pairs, read off the base directly
        const Curve& curve = fb.curve();
        for (std::size_t i = 0; i < fb.points().size(); ++i) {
            const auto j = fb.index_of(curve.negate(fb.points()[i]));
            if (j && *j >= i) out.push_back({i, *j});
        }
        return out;
    }
    const Curve& curve = fb.curve();
    const MultiPoly s3 = semaev_s3(curve);
    const MultiPoly s3_r = s3.partial_eval(0, R.x());
    std::set<std::pair<std::size_t, std::size_t>> seen;
    for (const auto& x1 : fb.roots()) {
        const MultiPoly slice = s3_r.partial_eval(1, x1);
        const ExtPoly quad = slice.to_univariate(2);
        const auto roots = solve_quadratic(quad.coeff(2), quad.coeff(1), quad.coeff(0));
        for (const auto& x2 : roots) {
            if (!fb.x_in_base(x2)) continue;
            // resolve the y-signs so the pair sums to R exactly
            for (const auto& P1 : curve.lift_x(x1)) {
                for (const auto& P2 : curve.lift_x(x2)) {
                    if (!(curve.add(P1, P2) == R)) continue;
                    const auto i = fb.index_of(P1);
                    const auto j = fb.index_of(P2);
                    if (!i || !j) continue;
                    auto pr = std::minmax(*i, *j);
                    if (seen.insert({pr.first, pr.second}).second)
                        out.push_back({pr.first, pr.second});
                }
            }
        }
    }
    return out;
}

std::vector<Decomposition> direct_pairs(const CurvePoint& R, const FactorBase& fb) {
    std::vector<Decomposition> out;
    const auto& F = fb.points();
    for (std::size_t i = 0; i < F.size(); ++i)
        for (std::size_t j = i; j < F.size(); ++j)
            if (fb.curve().add(F[i], F[j]) == R) out.push_back({i, j});
    return out;
}

} // namespace

std::vector<Decomposition> decompose_all_pairs(const CurvePoint& R, const FactorBase& fb,
                                               DecomposeMode mode, const Caps& caps) {
    (void)caps;
    return mode == DecomposeMode::Semaev ? semaev_pairs(R, fb) : direct_pairs(R, fb);
}

std::optional<Decomposition> decompose(const CurvePoint& R, const FactorBase& fb, unsigned m,
                                       DecomposeMode mode, const Caps& caps) {
    if (mode == DecomposeMode::Semaev) {
        if (m != 2) throw std::invalid_argument("decompose: Semaev mode supports m = 2 only");
        auto pairs = semaev_pairs(R, fb);
        if (pairs.empty()) return std::nullopt;
        return pairs.front();
    }
    // direct mode: enumerate m-tuples with nondecreasing indices
    const auto& F = fb.points();
    const double work = m * std::log2(static_cast<double>(F.size() ? F.size() : 1));
    if (work > caps.pair_enum_log2)
        throw cap_exceeded("decompose: direct enumeration exceeds cap");
    std::vector<std::size_t> idx(m, 0);
    // simple odometer over nondecreasing tuples
    auto sum_from = [&](const Decomposition& tuple) {
        CurvePoint acc = fb.curve().infinity();
        for (std::size_t t : tuple) acc = fb.curve().add(acc, F[t]);
        return acc;
    };
    while (true) {
        if (sum_from(idx) == R) return idx;
        // advance
        int pos = static_cast<int>(m) - 1;
        while (pos >= 0) {
            if (++idx[static_cast<std::size_t>(pos)] < F.size()) {
                for (std::size_t t = static_cast<std::size_t>(pos) + 1; t < m; ++t)
                    idx[t] = idx[static_cast<std::size_t>(pos)];
                break;
            }
            --pos;
        }
        if (pos < 0) return std::nullopt;
    }
}

std::vector<Relation> gather_relations(const Curve& curve, const CurvePoint& P,
                                       const CurvePoint& Q, const mpz_class& N,
                                       const FactorBase& fb,
                                       unsigned m, std::size_t target_count,
                                       std::uint64_t seed, DecomposeMode mode,
                                       RelationStats* stats, std::uint64_t trial_budget,
                                       const Caps& caps) {
    std::mt19937_64 rng(seed);
    if (!mpz_fits_ulong_p(N.get_mpz_t()))
        throw cap_exceeded("gather_relations: group order outside desk range");
    std::uniform_int_distribution<std::uint64_t> dist(0, mpz_get_ui(N.get_mpz_t()) - 1);
    std::vector<Relation> rels;
    RelationStats local;
    while (rels.size() < target_count) {
        if (local.trials >= trial_budget)
            throw std::runtime_error("gather_relations: trial budget exhausted");
        ++local.trials;
        const mpz_class a = static_cast<unsigned long>(dist(rng));
        const mpz_class b = static_cast<unsigned long>(dist(rng));
        const CurvePoint R = curve.add(curve.scalar_mul(a, P), curve.scalar_mul(b, Q));
        if (R.is_infinity()) {
            if (b != 0) {
                ++local.successes;
                ++local.relations;
                rels.push_back(Relation{a, b, {}});
            }
            continue;
        }
        std::vector<Decomposition> found;
        if (m == 2) {
            found = decompose_all_pairs(R, fb, mode, caps);
        } else {
            auto one = decompose(R, fb, m, mode, caps);
            if (one) found.push_back(*one);
        }
        if (found.empty()) continue;
        ++local.successes;
        for (auto& dec : found) {
            // verify by direct point arithmetic before accepting
            CurvePoint sum = curve.infinity();
            for (std::size_t t : dec) sum = curve.add(sum, fb.points()[t]);
            if (!(sum == R)) throw std::logic_error("gather_relations: unverified relation");
            rels.push_back(Relation{a, b, dec});
            ++local.relations;
            if (rels.size() >= target_count) break;
        }
    }
    if (stats) *stats = local;
    return rels;
}

mpz_class solve_dlog(const Curve& curve, const CurvePoint& P, const CurvePoint& Q,
                     const std::vector<Relation>& relations, std::size_t base_size,
                     const mpz_class& N) {
    (void)curve;
    // unknowns: u_0..u_(B-1) (logs of base points), then k; equations
    // sum u_i - b_j k = a_j  (mod N)
    const std::size_t cols = base_size + 2;  // unknowns + rhs
    std::vector<std::vector<mpz_class>> M;
    M.reserve(relations.size());
    for (const auto& rel : relations) {
        std::vector<mpz_class> row(cols, 0);
        for (std::size_t t : rel.points) row[t] += 1;
        row[base_size] = (N - rel.b % N) % N;
        row[cols - 1] = rel.a % N;
        for (auto& v : row) v %= N;
        M.push_back(std::move(row));
    }
    // Gauss-Jordan over Z_N (prime)
    std::size_t rank = 0;
    for (std::size_t col = 0; col < base_size + 1 && rank < M.size(); ++col) {
        std::size_t piv = rank;
        while (piv < M.size() && M[piv][col] == 0) ++piv;
        if (piv == M.size()) continue;
        std::swap(M[piv], M[rank]);
        mpz_class inv;
        if (!mpz_invert(inv.get_mpz_t(), M[rank][col].get_mpz_t(), N.get_mpz_t()))
            throw std::logic_error("solve_dlog: non-invertible pivot (N not prime?)");
        for (auto& v : M[rank]) v = (v * inv) % N;
        for (std::size_t r = 0; r < M.size(); ++r) {
            if (r == rank || M[r][col] == 0) continue;
            const mpz_class f = M[r][col];
            for (std::size_t cc = col; cc < cols; ++cc)
                M[r][cc] = ((M[r][cc] - f * M[rank][cc]) % N + N) % N;
        }
        ++rank;
    }
    // a row with a lone k-column pivot yields k
    for (const auto& row : M) {
        bool only_k = row[base_size] != 0;
        for (std::size_t c = 0; c < base_size && only_k; ++c) only_k = (row[c] == 0);
        if (only_k) {
            mpz_class inv;
            mpz_invert(inv.get_mpz_t(), row[base_size].get_mpz_t(), N.get_mpz_t());
            mpz_class k = (row[cols - 1] * inv) % N;
            if (!(curve.scalar_mul(k, P) == Q))
                throw std::logic_error("solve_dlog: recovered k fails verification");
            return k;
        }
    }
    throw std::domain_error("solve_dlog: system leaves k undetermined; gather more relations");
}

EcdlpReport ecdlp_demo(const Curve& curve, const CurvePoint& P, const mpz_class& N,
                       const LinearizedQsp& qsp, const mpz_class& k_secret,
                       unsigned m, std::uint64_t seed, DecomposeMode mode,
                       std::uint64_t trial_budget, const Caps& caps) {
    const auto t0 = std::chrono::steady_clock::now();
    if (!is_prime_mpz(N)) throw std::invalid_argument("ecdlp_demo: group order must be prime");
    EcdlpReport rep;
    rep.curve_a = curve.A().to_string();
    rep.curve_b = curve.B().to_string();
    rep.group_order = N;
    const CurvePoint Q = curve.scalar_mul(k_secret, P);
    FactorBase fb(curve, qsp, caps);
    rep.v_size = fb.roots().size();
    rep.f_size = fb.points().size();
    rep.two_lift_fraction = fb.two_lift_fraction();
    const std::size_t target = fb.points().size() + 10;
    std::vector<Relation> rels =
        gather_relations(curve, P, Q, N, fb, m, target, seed, mode, &rep.stats, trial_budget, caps);
    mpz_class k;
    for (int attempt = 0;; ++attempt) {
        try {
            k = solve_dlog(curve, P, Q, rels, fb.points().size(), N);
            break;
        } catch (const std::domain_error&) {
            if (attempt >= 8) throw;
            RelationStats extra_stats;
            auto extra = gather_relations(curve, P, Q, N, fb, m, 10, seed + 1000 + attempt, mode,
                                          &extra_stats, trial_budget, caps);
            rep.stats.trials += extra_stats.trials;
            rep.stats.successes += extra_stats.successes;
            rep.stats.relations += extra_stats.relations;
            for (auto& r : extra) rels.push_back(std::move(r));
        }
    }
    rep.k_recovered = k;
    rep.k_bsgs = bsgs(curve, P, Q, N);
    rep.agree = (rep.k_recovered == rep.k_bsgs) && (rep.k_recovered == k_secret % N);
    rep.wall_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return rep;
}

} // namespace qsp
