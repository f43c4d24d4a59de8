#include <doctest.h>

#include "qsp/transforms.hpp"

using namespace qsp;

TEST_CASE("inversion of the reference rows") {
    auto inv = invert_qsp(FpPoly::parse("X^4+X^2+X+1", 2), 7);
    CHECK(inv.g == FpPoly::parse("X^3+X+1", 2));
    CHECK(inv.beta_g == Rational(7, 9));
    // involution
    CHECK(invert_qsp(inv.g, 7).g == FpPoly::parse("X^4+X^2+X+1", 2));
}

TEST_CASE("inversion of X-1 gives the all-ones polynomial") {
    for (unsigned n : {4u, 6u, 9u}) {
        auto inv = invert_qsp(FpPoly::parse("X-1", 5), n);
        CHECK(inv.g.degree() == static_cast<int>(n) - 1);
        for (unsigned i = 0; i < n; ++i) CHECK(inv.g.coeff(i) == 1);
        const std::int64_t d = static_cast<std::int64_t>(n) - 1;
        CHECK(inv.beta_g == Rational(1) - Rational(1, d * d));
    }
}

TEST_CASE("inversion beta matches the direct formula and splits") {
    for (auto [s, p, n] : {std::tuple<const char*, std::uint64_t, unsigned>{"X^3+X+1", 2, 7},
                           {"X^3+X+1", 3, 8},
                           {"X^4+X+1", 2, 15}}) {
        const FpPoly f = FpPoly::parse(s, p);
        auto inv = invert_qsp(f, n);
        CHECK(split_test_div(inv.g, n));
    }
    CHECK_THROWS_AS(invert_qsp(FpPoly::parse("X^2+X+1", 2), 4), std::domain_error);
}

TEST_CASE("substitution transform") {
    const FpPoly f = FpPoly::parse("X^2+X+1", 2);
    const FpPoly g = transform_substitute_xk(f, 2);
    CHECK(g == FpPoly::parse("X^4+X^2+1", 2));
    CHECK(split_test_div(g, 6));
    // beta unchanged: 6*2/16 = 3/4
    CHECK(Rational(2 * 6, 16) == Rational(3, 4));
}

TEST_CASE("alpha scaling") {
    // alpha = 1 is the identity
    const FpPoly f = FpPoly::parse("X^2+X+3", 5);
    CHECK(transform_scale_alpha(f, 1, 4) == f);
    // the alpha-orbit of X^2+X+3 over F_5 at n = 4 stays split
    for (std::uint64_t alpha = 1; alpha < 5; ++alpha) {
        const FpPoly g = transform_scale_alpha(f, alpha, 4);
        CHECK(split_test_div(g, 4));
    }
    CHECK(transform_scale_alpha(f, 2, 4) == FpPoly::parse("X^2+3*X+2", 5));
    CHECK_THROWS_AS(transform_scale_alpha(f, 2, 3), std::invalid_argument);  // 2^3 != 1
}

TEST_CASE("gamma conjugation and its inverse") {
    ExtField F(3, 4);
    auto L = LinearizedQsp::linearize(F, FpPoly::parse("X^2+X+1", 3));
    const ExtElem gamma = F.from_index(7);
    const auto Lc = transform_conjugate_gamma(L, gamma);
    const auto Lcc = transform_conjugate_gamma(Lc, gamma.inv());
    CHECK(Lcc.lambda_coeffs().size() == L.lambda_coeffs().size());
    for (unsigned i = 0; i < L.lambda_coeffs().size(); ++i) CHECK(Lcc.a(i) == L.a(i));
    // conjugation preserves the root count
    CHECK(root_count_oracle(Lc) == root_count_oracle(L));
    CHECK_THROWS_AS(transform_conjugate_gamma(L, F.zero()), std::invalid_argument);
}

TEST_CASE("canonical representative") {
    auto [r1, n1] = canonical_representative(FpPoly::parse("X^4+X^2+1", 2), 6);
    CHECK(r1 == FpPoly::parse("X^2+X+1", 2));
    CHECK(n1 == 3);
    auto [r2, n2] = canonical_representative(FpPoly::parse("X^3+X+1", 2), 7);
    CHECK(r2 == FpPoly::parse("X^3+X+1", 2));
    CHECK(n2 == 7);
    auto [r3, n3] = canonical_representative(FpPoly::parse("X^6+X^3+1", 2), 9);
    CHECK(r3 == FpPoly::parse("X^2+X+1", 2));
    CHECK(n3 == 3);
    CHECK(split_test_div(FpPoly::parse("X^6+X^3+1", 2), 9));
}
