#include <doctest.h>

#include "qsp/fp_poly.hpp"

using namespace qsp;

TEST_CASE("gcd over F_2") {
    // X^3 - 1 = (X - 1)(X^2 + X + 1)
    FpPoly f = FpPoly::parse("X^2+X+1", 2);
    FpPoly g = FpPoly::parse("X^3-1", 2);
    CHECK(FpPoly::gcd(f, g) == f);
}

TEST_CASE("char-2 square") {
    FpPoly f = FpPoly::parse("X+1", 2);
    CHECK(f * f == FpPoly::parse("X^2+1", 2));
}

TEST_CASE("powmod X^(2^7) matches 7 repeated squarings") {
    const FpPoly mod = FpPoly::parse("X^3+X+1", 2);
    FpPoly t = FpPoly::x(2) % mod;
    for (int i = 0; i < 7; ++i) t = (t * t) % mod;
    CHECK(FpPoly::powmod(FpPoly::x(2), mpz_class(128), mod) == t);
}

TEST_CASE("divmod is exact division semantics") {
    FpPoly f = FpPoly::parse("X^5+2*X^3+X+4", 7);
    FpPoly g = FpPoly::parse("X^2+3", 7);
    auto [q, r] = FpPoly::divmod(f, g);
    CHECK(q * g + r == f);
    CHECK(r.degree() < g.degree());
    CHECK_THROWS_AS(FpPoly::divmod(f, FpPoly::zero(7)), std::invalid_argument);
}

TEST_CASE("mismatched characteristic is a usage error") {
    CHECK_THROWS_AS(FpPoly::parse("X", 2) * FpPoly::parse("X", 3), std::invalid_argument);
}

TEST_CASE("frobenius composition property") {
    // powmod(X, p^e, f) equals e-fold application of powmod(., p, f)
    for (std::uint64_t p : {2ull, 3ull, 5ull}) {
        const FpPoly f = FpPoly::parse("X^4+X+1", p).coeff(0) != 0
                             ? FpPoly::parse("X^4+X+1", p)
                             : FpPoly::parse("X^4+X+2", p);
        mpz_class pe = 1;
        FpPoly iterated = FpPoly::x(p) % f;
        for (int e = 0; e <= 5; ++e) {
            CHECK(FpPoly::powmod(FpPoly::x(p), pe, f) == iterated);
            pe *= static_cast<unsigned long>(p);
            iterated = FpPoly::powmod(iterated, mpz_class(static_cast<unsigned long>(p)), f);
        }
    }
}

TEST_CASE("parse accepts the forms used by the CLI") {
    CHECK(FpPoly::parse("X^16+X^4+X+1", 2).degree() == 16);
    CHECK(FpPoly::parse("[1,1,0,1]", 2) == FpPoly::parse("X^3+X+1", 2));
    CHECK(FpPoly::parse("1 + 1*X + 1*X^2", 2) == FpPoly::parse("X^2+X+1", 2));
    CHECK(FpPoly::parse("2*X^2-X+3", 5) == FpPoly(5, {3, -1, 2}));
    CHECK(FpPoly::parse("-1", 3) == FpPoly(3, {2}));
    CHECK_THROWS_WITH_AS(FpPoly::parse("X^2+?", 2), doctest::Contains("position"),
                         std::invalid_argument);
}

TEST_CASE("print round trip") {
    for (const char* s : {"X^5-X^3-X^2+X-1", "X^9+X^3+X+1", "2*X^2+X+3"}) {
        FpPoly f = FpPoly::parse(s, 7);
        CHECK(FpPoly::parse(f.to_string(), 7) == f);
    }
}

TEST_CASE("irreducibility") {
    CHECK(FpPoly::parse("X^3+X+1", 2).is_irreducible());
    CHECK(!FpPoly::parse("X^3+1", 2).is_irreducible());
    CHECK(FpPoly::parse("X^2+1", 3).is_irreducible());
    CHECK(!FpPoly::parse("X^2+X+1", 3).is_irreducible());  // (X-1)^2
}
