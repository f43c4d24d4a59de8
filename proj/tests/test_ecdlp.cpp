#include <doctest.h>

#include <algorithm>
#include <random>

#include "qsp/ecdlp.hpp"

using namespace qsp;

namespace {

struct Demo {
    ExtField F;
    DemoCurve dc;
    LinearizedQsp qsp;
    FactorBase fb;
    Demo()
        : F(5, 3),
          dc(find_prime_order_curve(F)),
          qsp(LinearizedQsp::linearize(F, FpPoly::parse("X^2+X+1", 5))),
          fb(dc.curve, qsp) {}
};

Demo& demo() {
    static Demo d;
    return d;
}

} // namespace

TEST_CASE("factor base structure") {
    auto& d = demo();
    CHECK(d.fb.roots().size() == 25);
    CHECK(d.fb.points().size() >= 15);
    // F is closed under negation and consists of points with x in V
    for (const auto& P : d.fb.points()) {
        CHECK(d.fb.index_of(P).has_value());
        CHECK(d.fb.index_of(d.dc.curve.negate(P)).has_value());
        CHECK(d.qsp.eval(P.x()).is_zero());
    }
}

TEST_CASE("decompose finds sums of base points") {
    auto& d = demo();
    std::mt19937_64 rng(31);
    const auto& F = d.fb.points();
    for (int t = 0; t < 15; ++t) {
        const auto& P1 = F[rng() % F.size()];
        const auto& P2 = F[rng() % F.size()];
        const CurvePoint R = d.dc.curve.add(P1, P2);
        if (R.is_infinity()) continue;
        const auto dec = decompose(R, d.fb, 2, DecomposeMode::Semaev);
        REQUIRE(dec.has_value());
        const CurvePoint sum = d.dc.curve.add(F[(*dec)[0]], F[(*dec)[1]]);
        CHECK(sum == R);
    }
}

TEST_CASE("semaev and direct modes agree on every group element") {
    auto& d = demo();
    CurvePoint R = d.dc.curve.infinity();
    const unsigned long N = mpz_get_ui(d.dc.order.get_mpz_t());
    for (unsigned long i = 0; i < N; ++i) {
        R = d.dc.curve.add(R, d.dc.generator);
        auto a = decompose_all_pairs(R, d.fb, DecomposeMode::Semaev);
        auto b = decompose_all_pairs(R, d.fb, DecomposeMode::Direct);
        std::sort(a.begin(), a.end());
        std::sort(b.begin(), b.end());
        CHECK(a == b);
    }
}

TEST_CASE("relations re-verify and are deterministic under a seed") {
    auto& d = demo();
    const CurvePoint Q = d.dc.curve.scalar_mul(mpz_class(77), d.dc.generator);
    RelationStats s1, s2;
    const auto r1 = gather_relations(d.dc.curve, d.dc.generator, Q, d.dc.order, d.fb, 2, 30,
                                     99, DecomposeMode::Semaev, &s1);
    const auto r2 = gather_relations(d.dc.curve, d.dc.generator, Q, d.dc.order, d.fb, 2, 30,
                                     99, DecomposeMode::Semaev, &s2);
    REQUIRE(r1.size() == r2.size());
    CHECK(s1.trials == s2.trials);
    for (std::size_t i = 0; i < r1.size(); ++i) {
        CHECK(r1[i].a == r2[i].a);
        CHECK(r1[i].b == r2[i].b);
        CHECK(r1[i].points == r2[i].points);
        CurvePoint sum = d.dc.curve.infinity();
        for (std::size_t t : r1[i].points) sum = d.dc.curve.add(sum, d.fb.points()[t]);
        const CurvePoint R = d.dc.curve.add(d.dc.curve.scalar_mul(r1[i].a, d.dc.generator),
                                            d.dc.curve.scalar_mul(r1[i].b, Q));
        CHECK(sum == R);
    }
}

TEST_CASE("end-to-end recovery matches bsgs across seeds") {
    auto& d = demo();
    std::mt19937_64 rng(515);
    for (int t = 0; t < 5; ++t) {
        const mpz_class k = static_cast<unsigned long>(
            1 + rng() % (mpz_get_ui(d.dc.order.get_mpz_t()) - 1));
        const auto rep = ecdlp_demo(d.dc.curve, d.dc.generator, d.dc.order, d.qsp, k, 2,
                                    1000 + t, DecomposeMode::Semaev);
        CHECK(rep.agree);
        CHECK(rep.k_recovered == k);
    }
}

TEST_CASE("k = 1 instance") {
    auto& d = demo();
    const auto rep =
        ecdlp_demo(d.dc.curve, d.dc.generator, d.dc.order, d.qsp, 1, 2, 4, DecomposeMode::Semaev);
    CHECK(rep.k_recovered == 1);
}

TEST_CASE("direct mode with m = 3") {
    auto& d = demo();
    const auto& F = d.fb.points();
    const CurvePoint R =
        d.dc.curve.add(d.dc.curve.add(F[0], F[3]), F[5]);
    if (!R.is_infinity()) {
        const auto dec = decompose(R, d.fb, 3, DecomposeMode::Direct);
        REQUIRE(dec.has_value());
        CurvePoint sum = d.dc.curve.infinity();
        for (std::size_t t : *dec) sum = d.dc.curve.add(sum, F[t]);
        CHECK(sum == R);
    }
}

TEST_CASE("solve_dlog rejects an underdetermined system") {
    auto& d = demo();
    const CurvePoint Q = d.dc.curve.scalar_mul(mpz_class(5), d.dc.generator);
    // relations with b = 0 never pin k
    std::vector<Relation> rels;
    const auto all = gather_relations(d.dc.curve, d.dc.generator, Q, d.dc.order, d.fb, 2, 40,
                                      7, DecomposeMode::Semaev);
    for (const auto& r : all)
        if (r.b == 0) rels.push_back(r);
    CHECK_THROWS_AS(solve_dlog(d.dc.curve, d.dc.generator, Q, rels, d.fb.points().size(),
                               d.dc.order),
                    std::domain_error);
}
