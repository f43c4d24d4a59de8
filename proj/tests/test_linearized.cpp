#include <doctest.h>

#include <random>

#include "qsp/linearized.hpp"

using namespace qsp;

TEST_CASE("beta values") {
    ExtField F7(2, 3);
    auto L = LinearizedQsp::linearize(F7, FpPoly::parse("X^2+X+1", 2));
    CHECK(L.beta() == Rational(3, 4));
    ExtField F27(2, 7);
    CHECK(LinearizedQsp::linearize(F27, FpPoly::parse("X^3+X+1", 2)).beta() == Rational(7, 9));
    ExtField F15(2, 15);
    CHECK(LinearizedQsp::linearize(F15, FpPoly::parse("X^4+X+1", 2)).beta() == Rational(15, 16));
    // subfield polynomial is rejected
    ExtField F(2, 4);
    LinearizedQsp sub(F, 2, {F.one()});
    CHECK_THROWS_AS(sub.beta(), std::domain_error);
}

TEST_CASE("linearize round trip") {
    ExtField F(3, 4);
    for (const char* s : {"X^3+X+1", "X^2+2*X+1", "X^4+X^3+2"}) {
        const FpPoly f = FpPoly::parse(s, 3);
        CHECK(LinearizedQsp::linearize(F, f).de_linearize() == f);
    }
    CHECK_THROWS_AS(LinearizedQsp::linearize(F, FpPoly::parse("2*X^2+1", 3)),
                    std::invalid_argument);
}

TEST_CASE("divisibility split test") {
    CHECK(split_test_div(FpPoly::parse("X^2+X+1", 2), 3));
    CHECK(!split_test_div(FpPoly::parse("X^2+X+1", 2), 4));
    // X - 1 divides X^n - 1 for every n
    for (unsigned n = 1; n < 12; ++n) CHECK(split_test_div(FpPoly::parse("X-1", 5), n));
    CHECK_THROWS_AS(split_test_div(FpPoly::parse("X^2+X", 2), 3), std::domain_error);
}

TEST_CASE("companion split test on reference rows") {
    ExtField F8(2, 3);
    auto L = LinearizedQsp::linearize(F8, FpPoly::parse("X^2+X+1", 2));
    CHECK(split_test_companion(L) == 4);
    CHECK(splits_completely_companion(L));
    ExtField F16(2, 4);
    auto L4 = LinearizedQsp::linearize(F16, FpPoly::parse("X^2+X+1", 2));
    CHECK(split_test_companion(L4) == root_count_oracle(L4));
    CHECK(!splits_completely_companion(L4));
    LinearizedQsp bad(F8, 2, {F8.zero(), F8.one()});
    CHECK_THROWS_AS(split_test_companion(bad), std::domain_error);
}

TEST_CASE("prime-subfield coefficients make A_L = C_L^n") {
    ExtField F(3, 5);
    auto L = LinearizedQsp::linearize(F, FpPoly::parse("X^3+X+1", 3));
    const ExtMatrix C = companion_matrix(L);
    ExtMatrix Cn = C;
    for (unsigned k = 1; k < F.n(); ++k) Cn = Cn * C;
    CHECK(frobenius_product(L) == Cn);
}

TEST_CASE("three-way split agreement, exhaustive small") {
    // p in {2, 3}, deg f <= 4, every n <= 30:
    // divisibility vs companion vs gcd oracle
    for (std::uint64_t p : {2ull, 3ull}) {
        for (unsigned n = 2; n <= 30; ++n) {
            ExtField F(p, n);
            for (unsigned np = 2; np <= 4; ++np) {
                std::uint64_t count = 1;
                for (unsigned i = 0; i < np; ++i) count *= p;
                for (std::uint64_t mask = 0; mask < count; ++mask) {
                    std::vector<std::int64_t> cs(np + 1, 0);
                    cs[np] = 1;
                    std::uint64_t v = mask;
                    for (unsigned i = 0; i < np; ++i) {
                        cs[i] = static_cast<std::int64_t>(v % p);
                        v /= p;
                    }
                    FpPoly f(p, cs);
                    if (f.coeff(0) == 0) continue;
                    auto L = LinearizedQsp::linearize(F, f);
                    const bool div = split_test_div(f, n);
                    const mpz_class comp = split_test_companion(L);
                    const mpz_class oracle = root_count_oracle(L);
                    CHECK(comp == oracle);
                    CHECK(div == (oracle == L.poly_degree()));
                }
            }
        }
    }
}

TEST_CASE("oracle vs enumeration on random extension coefficients") {
    std::mt19937_64 rng(2024);
    for (auto [p, n] : {std::pair<std::uint64_t, unsigned>{2, 6}, {3, 4}, {5, 3}}) {
        ExtField F(p, n);
        const std::uint64_t q = mpz_get_ui(F.order().get_mpz_t());
        for (int t = 0; t < 25; ++t) {
            const unsigned np = 2 + static_cast<unsigned>(rng() % 3);
            std::vector<ExtElem> lam;
            for (unsigned i = 0; i < np; ++i)
                lam.push_back(F.from_index(static_cast<unsigned long>(rng() % q)));
            LinearizedQsp L(F, np, std::move(lam));
            CHECK(root_count_oracle(L) == root_count_enumerate(L));
            if (!L.a(0).is_zero()) CHECK(split_test_companion(L) == root_count_oracle(L));
        }
    }
}

TEST_CASE("subfield polynomial root counts") {
    // X^(p^n') - X with n' | n has p^n' roots
    ExtField F(2, 6);
    LinearizedQsp L(F, 3, {F.one()});
    CHECK(root_count_oracle(L) == 8);
    CHECK(root_set(L).size() == 8);
}

TEST_CASE("root set is the kernel") {
    ExtField F(5, 3);
    auto L = LinearizedQsp::linearize(F, FpPoly::parse("X^2+X+1", 5));
    const auto V = root_set(L);
    CHECK(V.size() == 25);
    for (const auto& v : V) CHECK(L.eval(v).is_zero());
}

TEST_CASE("parameter bounds") {
    CHECK(min_n(2, 1) == 3);
    CHECK(min_n(3, 1) == 7);
    CHECK(min_n(4, 1) == 13);  // d^2 - d + 1 at ell = 1
    CHECK_THROWS_AS(min_n(3, 0), std::invalid_argument);
    CHECK_THROWS_AS(min_n(3, 3), std::invalid_argument);
    CHECK(lemma_mc_check(3, 2, 1));
    CHECK(!lemma_mc_check(4, 2, 0));
    CHECK(lemma_mc_check(7, 3, 1));
    CHECK(low_bound_check(3, 2, 1));
    CHECK(!low_bound_check(6, 3, 1));
}
