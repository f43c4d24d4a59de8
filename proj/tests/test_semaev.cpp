#include <doctest.h>

#include <random>

#include "qsp/semaev.hpp"

using namespace qsp;

TEST_CASE("s3 shape") {
    ExtField F(7, 1);
    Curve E(F, F.from_int(2), F.from_int(3));
    const MultiPoly s3 = semaev_s3(E);
    CHECK(s3.degree_in(0) == 2);
    CHECK(s3.degree_in(1) == 2);
    CHECK(s3.degree_in(2) == 2);
    // symmetry under all permutations, checked pointwise
    const auto xs = F.all_elements();
    for (const auto& a : xs)
        for (const auto& b : xs)
            for (const auto& c : xs) {
                const ExtElem v = s3.eval({a, b, c});
                CHECK(v == s3.eval({a, c, b}));
                CHECK(v == s3.eval({b, a, c}));
                CHECK(v == s3.eval({c, b, a}));
            }
}

TEST_CASE("s3 exhaustive validation on small curves") {
    ExtField F7(7, 1);
    CHECK(semaev_s3_validate(Curve(F7, F7.from_int(1), F7.from_int(3))) == 0);
    ExtField F25(5, 2);
    CHECK(semaev_s3_validate(Curve(F25, F25.from_int(1), F25.element_x() + F25.one())) == 0);
}

TEST_CASE("phi map evaluation identity on the root set") {
    // phi(f)(v) = f(v)^(p^n') for v in V^m
    ExtField F(5, 3);
    const auto qsp = LinearizedQsp::linearize(F, FpPoly::parse("X^2+X+1", 5));
    const auto V = root_set(qsp);
    Curve E(F, F.from_int(1), F.from_int(2));
    const MultiPoly s3 = semaev_s3(E);
    const MultiPoly s3_fixed = s3.partial_eval(0, F.from_int(3));
    const MultiPoly phi = phi_map(s3_fixed, qsp);
    const mpz_class pn = qsp.poly_degree();
    std::mt19937_64 rng(17);
    for (int t = 0; t < 60; ++t) {
        const ExtElem v1 = V[rng() % V.size()];
        const ExtElem v2 = V[rng() % V.size()];
        const ExtElem lhs = phi.eval({F.zero(), v1, v2});
        const ExtElem rhs = s3_fixed.eval({F.zero(), v1, v2}).pow(pn);
        CHECK(lhs == rhs);
    }
}

TEST_CASE("phi map basics") {
    ExtField F(5, 3);
    const auto qsp = LinearizedQsp::linearize(F, FpPoly::parse("X^2+X+1", 5));
    // constants map to their p^n' power
    const ExtElem c = F.from_index(57);
    MultiPoly cc = MultiPoly::constant(F, 2, c);
    CHECK(phi_map(cc, qsp).eval({F.zero(), F.zero()}) == c.pow(qsp.poly_degree()));
    // a bare variable maps to lambda
    MultiPoly x1 = MultiPoly::variable(F, 2, 0);
    const MultiPoly im = phi_map(x1, qsp);
    std::mt19937_64 rng(23);
    for (int t = 0; t < 10; ++t) {
        const ExtElem v = F.from_index(static_cast<unsigned long>(rng() % 125));
        // lambda(v) = v^(p^n') - L(v)
        const ExtElem lam = v.pow(qsp.poly_degree()) - qsp.eval(v);
        CHECK(im.eval({v, F.zero()}) == lam);
    }
}

TEST_CASE("phi map for the multiplicative substitution") {
    ExtField F(5, 2);
    MultiPoly f = MultiPoly::variable(F, 1, 0);
    const MultiPoly im = phi_map_mult(f, 1, mpz_class(3));
    const ExtElem v = F.from_index(7);
    CHECK(im.eval({v}) == v * v * v);
}
